#pragma once

// Exact integer linear algebra: Smith normal form with transform tracking,
// lattice solves and subquotient presentations of finitely generated abelian
// groups. Everything runs on arbitrary-precision integers.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "proetale/errors.hpp"

namespace proetale {

using Int = boost::multiprecision::cpp_int;

class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    IntMat operator*(const IntMat& other) const;
    bool operator==(const IntMat& other) const = default;
    IntMat transposed() const;
    IntMat col(int c) const;
    IntMat cols_slice(int from, int to) const;  // columns [from, to)
    IntMat rows_slice(int from, int to) const;  // rows [from, to)
    IntMat hconcat(const IntMat& other) const;
    IntMat scaled_columns(const std::vector<Int>& factors) const;
    bool is_zero() const;

    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// M = U * D * V with U, V unimodular and D diagonal with a divisibility chain
// d_1 | d_2 | ... (nonnegative).  Inverses are tracked so that
// Uinv * M * Vinv = D.  Every invocation self-checks the product identity and
// the tracked determinants of the transforms.
struct SmithForm {
    IntMat D, U, V, Uinv, Vinv;
    int rank = 0;
    std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const IntMat& m);

// Integer solution X of B * X = G; nullopt when no integral solution exists.
std::optional<IntMat> solve_integer(const IntMat& b, const IntMat& g);

// Canonical structure of a finitely generated abelian group.
struct AbelianGroup {
    std::vector<Int> torsion;  // invariant factors > 1, divisibility chain
    int free_rank = 0;

    bool operator==(const AbelianGroup& other) const = default;
    bool is_trivial() const { return torsion.empty() && free_rank == 0; }
    Int order() const;  // 0 when infinite
    std::string str() const;  // e.g. "Z/2 + Z/6 + Z^2", "0"
};

// Presentation of the subquotient L / K of an ambient lattice Z^k, where
// L has basis the columns of `basis` and K is spanned by the columns of
// `subgens` (which must lie inside L).  Keeps enough data to push group
// elements through ambient-level linear maps.
class Subquotient {
  public:
    // basis: k x m with linearly independent columns; subgens: k x s inside L.
    Subquotient(IntMat basis, IntMat subgens);

    // Variant with an explicit left inverse of the basis: coordinates of an
    // ambient vector v are diag(1/divisors) * (pre * v), with exact division
    // doubling as the membership test.
    static Subquotient with_inverse(IntMat basis, IntMat pre, std::vector<Int> divisors,
                                    const IntMat& subgens);

    const AbelianGroup& group() const { return group_; }
    int ncyclic() const { return int(cyclic_moduli_.size()); }
    // Ambient representative of the i-th cyclic generator (modulus may be 1).
    IntMat generator(int i) const;
    const Int& modulus(int i) const { return cyclic_moduli_[i]; }  // 0 = free
    // Coordinates of an ambient vector (must lie in L) w.r.t. the cyclic
    // generators, reduced modulo the moduli.
    std::vector<Int> coordinates(const IntMat& ambient_vector) const;

  private:
    Subquotient() = default;
    void finish(const IntMat& coords_of_subgens);
    std::vector<Int> lattice_coordinates(const IntMat& ambient_vector) const;

    IntMat basis_;  // k x m
    IntMat u_;      // m x m; ambient rep of generator i is basis * u_.col(i)
    IntMat coord_;  // m x m, maps basis coordinates to generator coordinates
    std::optional<IntMat> pre_;       // explicit left inverse data
    std::vector<Int> divisors_;
    std::vector<Int> cyclic_moduli_;  // per generator; 0 = infinite, 1 = dead
    AbelianGroup group_;
};

// Homomorphism between subquotients induced by an ambient matrix T with
// T(L1) <= L2 and T(K1) <= K2, expressed on cyclic generators.
struct InducedMap {
    // entry (j, i): coefficient of target generator j in the image of source
    // generator i, reduced mod target moduli.
    IntMat matrix;
};

InducedMap induced_map(const Subquotient& src, const Subquotient& dst, const IntMat& ambient);

// A surjectivity test for an induced map (cokernel triviality); combined with
// equal canonical structures this certifies an isomorphism.
bool induced_map_surjective(const Subquotient& dst, const InducedMap& map);
bool induced_map_is_isomorphism(const Subquotient& src, const Subquotient& dst, const InducedMap& map);

// Kernel lattice of M (columns form a basis).
IntMat kernel_basis(const IntMat& m);

// Structure of coker(M) = Z^rows / col(M).
AbelianGroup cokernel(const IntMat& m);

}  // namespace proetale
