#pragma once

// Reduced homotopies between simplicial maps, their equivalence with ordinary
// homotopies through the simplicial interval, and the one-level coskeletal
// extension of truncated reduced homotopies.

#include <string>
#include <vector>

#include "proetale/simplicial.hpp"

namespace proetale {

// Family r[n][i] : X_n -> Y_n for 0 <= i <= n+1, n <= dim, with r[n][0] = f_n
// and r[n][n+1] = g_n.
struct ReducedHomotopy {
    SimpMap f, g;
    std::vector<std::vector<std::vector<int>>> r;

    static ReducedHomotopy constant(const TruncSimp& x, const SimpMap& f);
};

// Verifies the boundary conditions together with
//   d_j r_i = r_{i-1} d_j (i > j),  r_i d_j (i <= j)
//   s_j r_i = r_{i+1} s_j (i > j),  r_i s_j (i <= j)
// and reports the first violation with (n, i, j).
ValidationReport check_reduced_homotopy(const TruncSimp& x, const TruncSimp& y,
                                        const ReducedHomotopy& rh);

// A homotopy X x Delta[1] -> Y with its endpoint data; restriction along the
// two inclusions recovers f and g.
struct Homotopy {
    SimpMap h;  // defined on product_with_interval(x).object
    SimpMap f, g;
};

ValidationReport check_homotopy(const TruncSimp& x, const TruncSimp& y, const Homotopy& h);

// h_n(x, c) = r^c_n(x) where c counts the zeros of the interval coordinate.
Homotopy reduced_to_homotopy(const TruncSimp& x, const TruncSimp& y, const ReducedHomotopy& rh);
ReducedHomotopy homotopy_to_reduced(const TruncSimp& x, const TruncSimp& y, const Homotopy& h);

// Extension of an n-truncated reduced homotopy to level n+1 on the
// n-coskeleta: the new component of a compatible family applies r^{i-1} to
// faces with index below i and r^i to the others.  Fails loudly when the
// produced family is incompatible.
struct ExtendedReducedHomotopy {
    TruncSimp cx, cy;  // cosk_n of the inputs through dimension n+1
    CoskResult cx_data, cy_data;
    ReducedHomotopy rh;  // between cosk_n(f) and cosk_n(g), levels 0..n+1
};
ExtendedReducedHomotopy extend_reduced_homotopy(const TruncSimp& x, const TruncSimp& y,
                                                const ReducedHomotopy& rh);

// All reduced homotopies between f and g by constraint-pruned backtracking
// (small instances; used by the enumeration suites).
std::vector<ReducedHomotopy> enumerate_reduced_homotopies(const TruncSimp& x, const TruncSimp& y,
                                                          const SimpMap& f, const SimpMap& g,
                                                          long long cap = 5000000);

}  // namespace proetale
