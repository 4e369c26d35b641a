#include "proetale/exact.hpp"

#include <algorithm>
#include <sstream>

namespace proetale {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& other) const {
    if (cols_ != other.rows_) throw ValidationError("matrix product shape mismatch");
    IntMat out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                if (other.at(k, j) == 0) continue;
                out.at(i, j) += v * other.at(k, j);
            }
        }
    return out;
}

IntMat IntMat::transposed() const {
    IntMat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntMat IntMat::col(int c) const {
    IntMat out(rows_, 1);
    for (int i = 0; i < rows_; ++i) out.at(i, 0) = at(i, c);
    return out;
}

IntMat IntMat::cols_slice(int from, int to) const {
    IntMat out(rows_, to - from);
    for (int i = 0; i < rows_; ++i)
        for (int j = from; j < to; ++j) out.at(i, j - from) = at(i, j);
    return out;
}

IntMat IntMat::rows_slice(int from, int to) const {
    IntMat out(to - from, cols_);
    for (int i = from; i < to; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i - from, j) = at(i, j);
    return out;
}

IntMat IntMat::scaled_columns(const std::vector<Int>& factors) const {
    if (int(factors.size()) != cols_) throw ValidationError("scaled_columns: factor count mismatch");
    IntMat out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) * factors[j];
    return out;
}

IntMat IntMat::hconcat(const IntMat& other) const {
    if (rows_ != other.rows_) throw ValidationError("hconcat shape mismatch");
    IntMat out(rows_, cols_ + other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (int j = 0; j < other.cols_; ++j) out.at(i, cols_ + j) = other.at(i, j);
    }
    return out;
}

bool IntMat::is_zero() const {
    for (const Int& v : a_)
        if (v != 0) return false;
    return true;
}

std::string IntMat::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 < cols_ ? " " : "");
        os << "\n";
    }
    return os.str();
}

std::vector<Int> SmithForm::diagonal() const {
    std::vector<Int> d;
    int n = std::min(D.rows(), D.cols());
    for (int i = 0; i < n; ++i) d.push_back(D.at(i, i));
    return d;
}

namespace {

// Elementary operations applied to the working matrix A are mirrored into the
// transform accumulators so that M = U * A * V and Uinv * M * Vinv = A hold
// throughout.
struct SnfWorker {
    IntMat A, U, V, Uinv, Vinv;
    int det_sign_u = 1, det_sign_v = 1;

    explicit SnfWorker(const IntMat& m)
        : A(m),
          U(IntMat::identity(m.rows())),
          V(IntMat::identity(m.cols())),
          Uinv(IntMat::identity(m.rows())),
          Vinv(IntMat::identity(m.cols())) {}

    void row_swap(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < A.cols(); ++c) std::swap(A.at(i, c), A.at(j, c));
        for (int c = 0; c < U.cols(); ++c) std::swap(U.at(c, i), U.at(c, j));
        for (int c = 0; c < Uinv.cols(); ++c) std::swap(Uinv.at(i, c), Uinv.at(j, c));
        det_sign_u = -det_sign_u;
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < A.rows(); ++r) std::swap(A.at(r, i), A.at(r, j));
        for (int r = 0; r < V.rows(); ++r) std::swap(V.at(i, r), V.at(j, r));
        for (int r = 0; r < Vinv.rows(); ++r) std::swap(Vinv.at(r, i), Vinv.at(r, j));
        det_sign_v = -det_sign_v;
    }
    // row i += q * row j
    void row_add(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < A.cols(); ++c) A.at(i, c) += q * A.at(j, c);
        for (int c = 0; c < U.cols(); ++c) U.at(c, j) -= q * U.at(c, i);
        for (int c = 0; c < Uinv.cols(); ++c) Uinv.at(i, c) += q * Uinv.at(j, c);
    }
    // col i += q * col j
    void col_add(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int r = 0; r < A.rows(); ++r) A.at(r, i) += q * A.at(r, j);
        for (int r = 0; r < V.rows(); ++r) V.at(j, r) -= q * V.at(i, r);
        for (int r = 0; r < Vinv.rows(); ++r) Vinv.at(r, i) += q * Vinv.at(r, j);
    }
    void row_negate(int i) {
        for (int c = 0; c < A.cols(); ++c) A.at(i, c) = -A.at(i, c);
        for (int c = 0; c < U.cols(); ++c) U.at(c, i) = -U.at(c, i);
        for (int c = 0; c < Uinv.cols(); ++c) Uinv.at(i, c) = -Uinv.at(i, c);
        det_sign_u = -det_sign_u;
    }
};

Int abs_val(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

SmithForm smith_normal_form(const IntMat& m) {
    SnfWorker w(m);
    const int rows = m.rows(), cols = m.cols();
    const int steps = std::min(rows, cols);

    int t = 0;
    for (; t < steps; ++t) {
        // Smallest nonzero pivot in the remaining block keeps growth down.
        int pr = -1, pc = -1;
        bool unit_pivot = false;
        for (int i = t; i < rows && !unit_pivot; ++i)
            for (int j = t; j < cols; ++j) {
                const Int& v = w.A.at(i, j);
                if (v == 0) continue;
                if (pr < 0 || abs_val(v) < abs_val(w.A.at(pr, pc))) {
                    pr = i;
                    pc = j;
                }
                if (v == 1 || v == -1) {
                    unit_pivot = true;
                    break;
                }
            }
        if (pr < 0) break;
        w.row_swap(t, pr);
        w.col_swap(t, pc);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (w.A.at(i, t) == 0) continue;
                Int q = w.A.at(i, t) / w.A.at(t, t);
                w.row_add(i, t, -q);
                if (w.A.at(i, t) != 0) {
                    w.row_swap(t, i);  // remainder is strictly smaller
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (w.A.at(t, j) == 0) continue;
                Int q = w.A.at(t, j) / w.A.at(t, t);
                w.col_add(j, t, -q);
                if (w.A.at(t, j) != 0) {
                    w.col_swap(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Enforce that the pivot divides the rest of the block.
            bool divides = true;
            for (int i = t + 1; i < rows && divides; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (w.A.at(i, j) % w.A.at(t, t) != 0) {
                        w.row_add(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (w.A.at(t, t) < 0) w.row_negate(t);
    }

    SmithForm out;
    out.rank = t;
    out.D = w.A;
    out.U = w.U;
    out.V = w.V;
    out.Uinv = w.Uinv;
    out.Vinv = w.Vinv;

    // Self-check on every invocation: product identity and unimodularity of
    // the tracked transforms (elementary operations, determinant +-1).
    if (!(w.U * (w.A * w.V) == m)) throw ValidationError("smith_normal_form: U*D*V != M");
    if (w.det_sign_u != 1 && w.det_sign_u != -1) throw ValidationError("smith_normal_form: U not unimodular");
    if (w.det_sign_v != 1 && w.det_sign_v != -1) throw ValidationError("smith_normal_form: V not unimodular");
    if (rows <= 512 && !(w.U * w.Uinv == IntMat::identity(rows)))
        throw ValidationError("smith_normal_form: U inverse inconsistent");
    if (cols <= 512 && !(w.Vinv * w.V == IntMat::identity(cols)))
        throw ValidationError("smith_normal_form: V inverse inconsistent");
    return out;
}

std::optional<IntMat> solve_integer(const IntMat& b, const IntMat& g) {
    if (b.rows() != g.rows()) throw ValidationError("solve_integer shape mismatch");
    SmithForm s = smith_normal_form(b);
    IntMat y = s.Uinv * g;
    IntMat wmat(b.cols(), g.cols());
    for (int c = 0; c < g.cols(); ++c) {
        for (int i = 0; i < b.rows(); ++i) {
            Int d = (i < std::min(b.rows(), b.cols())) ? s.D.at(i, i) : Int(0);
            if (d == 0) {
                if (y.at(i, 0 + c) != 0) return std::nullopt;
            } else {
                if (y.at(i, c) % d != 0) return std::nullopt;
                if (i < b.cols()) wmat.at(i, c) = y.at(i, c) / d;
            }
        }
    }
    return s.Vinv * wmat;
}

Int AbelianGroup::order() const {
    if (free_rank > 0) return 0;
    Int o = 1;
    for (const Int& t : torsion) o *= t;
    return o;
}

std::string AbelianGroup::str() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Int& t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    if (free_rank == 1) os << (first ? "Z" : " + Z");
    else if (free_rank > 1) os << (first ? "" : " + ") << "Z^" << free_rank;
    return os.str();
}

void Subquotient::finish(const IntMat& x) {
    const int m = basis_.cols();
    SmithForm s = smith_normal_form(x);
    // L/K in basis coordinates is Z^m / col(X) = Z^m / col(U D); generator i
    // is the class of column i of U with modulus D(i,i).
    u_ = s.U;
    coord_ = s.Uinv;
    cyclic_moduli_.resize(m);
    for (int i = 0; i < m; ++i)
        cyclic_moduli_[i] = (i < std::min(x.rows(), x.cols())) ? s.D.at(i, i) : Int(0);
    for (int i = 0; i < m; ++i) {
        if (cyclic_moduli_[i] == 0) group_.free_rank++;
        else if (cyclic_moduli_[i] > 1) group_.torsion.push_back(cyclic_moduli_[i]);
    }
}

Subquotient::Subquotient(IntMat basis, IntMat subgens) : basis_(std::move(basis)) {
    const int m = basis_.cols();
    IntMat x(m, subgens.cols());
    if (subgens.cols() > 0) {
        auto sol = solve_integer(basis_, subgens);
        if (!sol) throw ValidationError("Subquotient: subgroup generators not inside the lattice");
        x = *sol;
    }
    finish(x);
}

Subquotient Subquotient::with_inverse(IntMat basis, IntMat pre, std::vector<Int> divisors,
                                      const IntMat& subgens) {
    Subquotient out;
    out.basis_ = std::move(basis);
    out.pre_ = std::move(pre);
    out.divisors_ = std::move(divisors);
    IntMat x(out.basis_.cols(), subgens.cols());
    if (subgens.cols() > 0) {
        IntMat raw = (*out.pre_) * subgens;
        for (int i = 0; i < raw.rows(); ++i)
            for (int j = 0; j < raw.cols(); ++j) {
                if (raw.at(i, j) % out.divisors_[i] != 0)
                    throw ValidationError("Subquotient: subgroup generators not inside the lattice");
                x.at(i, j) = raw.at(i, j) / out.divisors_[i];
            }
    }
    out.finish(x);
    return out;
}

IntMat Subquotient::generator(int i) const { return basis_ * u_.col(i); }

std::vector<Int> Subquotient::lattice_coordinates(const IntMat& ambient_vector) const {
    if (pre_) {
        IntMat raw = (*pre_) * ambient_vector;
        std::vector<Int> out(raw.rows());
        for (int i = 0; i < raw.rows(); ++i) {
            if (raw.at(i, 0) % divisors_[i] != 0)
                throw ValidationError("Subquotient::coordinates: vector outside the lattice");
            out[i] = raw.at(i, 0) / divisors_[i];
        }
        return out;
    }
    auto in_basis = solve_integer(basis_, ambient_vector);
    if (!in_basis) throw ValidationError("Subquotient::coordinates: vector outside the lattice");
    std::vector<Int> out(in_basis->rows());
    for (int i = 0; i < in_basis->rows(); ++i) out[i] = in_basis->at(i, 0);
    return out;
}

std::vector<Int> Subquotient::coordinates(const IntMat& ambient_vector) const {
    auto in_basis = lattice_coordinates(ambient_vector);
    IntMat v(int(in_basis.size()), 1);
    for (size_t i = 0; i < in_basis.size(); ++i) v.at(int(i), 0) = in_basis[i];
    IntMat y = coord_ * v;
    std::vector<Int> out(y.rows());
    for (int i = 0; i < y.rows(); ++i) {
        out[i] = y.at(i, 0);
        const Int& q = cyclic_moduli_[i];
        if (q != 0) {
            out[i] %= q;
            if (out[i] < 0) out[i] += q;
        }
    }
    return out;
}

InducedMap induced_map(const Subquotient& src, const Subquotient& dst, const IntMat& ambient) {
    IntMat mat(dst.ncyclic(), src.ncyclic());
    for (int i = 0; i < src.ncyclic(); ++i) {
        IntMat image = ambient * src.generator(i);
        auto coords = dst.coordinates(image);
        for (int j = 0; j < dst.ncyclic(); ++j) mat.at(j, i) = coords[j];
    }
    return InducedMap{mat};
}

bool induced_map_surjective(const Subquotient& dst, const InducedMap& map) {
    // coker of [map | diag(moduli)] on the target coordinates must vanish.
    IntMat rel(dst.ncyclic(), map.matrix.cols() + dst.ncyclic());
    for (int j = 0; j < dst.ncyclic(); ++j) {
        for (int i = 0; i < map.matrix.cols(); ++i) rel.at(j, i) = map.matrix.at(j, i);
        rel.at(j, map.matrix.cols() + j) = dst.modulus(j);
    }
    return cokernel(rel).is_trivial();
}

bool induced_map_is_isomorphism(const Subquotient& src, const Subquotient& dst, const InducedMap& map) {
    // Equal canonical structure plus surjectivity suffices (f.g. abelian
    // groups are Hopfian).
    return src.group() == dst.group() && induced_map_surjective(dst, map);
}

IntMat kernel_basis(const IntMat& m) {
    SmithForm s = smith_normal_form(m);
    return s.Vinv.cols_slice(s.rank, m.cols());
}

AbelianGroup cokernel(const IntMat& m) {
    SmithForm s = smith_normal_form(m);
    AbelianGroup g;
    int n = std::min(m.rows(), m.cols());
    for (int i = 0; i < n; ++i) {
        const Int& d = s.D.at(i, i);
        if (d > 1) g.torsion.push_back(d);
    }
    g.free_rank = m.rows() - s.rank;
    return g;
}

}  // namespace proetale
