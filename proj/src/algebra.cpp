#include "temperley/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace temperley {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::BadDocument: return "BadDocument";
        case Errc::NotConnected: return "NotConnected";
        case Errc::HasSelfLoop: return "HasSelfLoop";
        case Errc::HasBridge: return "HasBridge";
        case Errc::RootNotOnOuterFace: return "RootNotOnOuterFace";
        case Errc::AmbiguousRotation: return "AmbiguousRotation";
        case Errc::AmbiguousOuterFace: return "AmbiguousOuterFace";
        case Errc::NonPlanarRotation: return "NonPlanarRotation";
        case Errc::UnknownVertex: return "UnknownVertex";
        case Errc::NotACycle: return "NotACycle";
        case Errc::NotSquare: return "NotSquare";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::InfiniteCokernelCoordinate: return "InfiniteCokernelCoordinate";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::TooLarge: return "TooLarge";
        case Errc::BadReferenceDegree: return "BadReferenceDegree";
        case Errc::NotQConnected: return "NotQConnected";
        case Errc::NotKasteleyn: return "NotKasteleyn";
        case Errc::NotInImage: return "NotInImage";
        case Errc::WrongReferenceOrientation: return "WrongReferenceOrientation";
        case Errc::NoPreimage: return "NoPreimage";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return IntegerMatrix(0, 0);
    IntegerMatrix m(int(rows.size()), int(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        require(int(rows[i].size()) == m.cols(), Errc::DimensionMismatch, "ragged row list");
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> IntegerMatrix::row(int i) const {
    std::vector<Int> out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    require(cols_ == rhs.rows_, Errc::DimensionMismatch, "matrix product shape");
    IntegerMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<Int> SmithDecomposition::diagonal() const {
    std::vector<Int> out;
    int n = std::min(d.rows(), d.cols());
    for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

std::vector<Int> SmithDecomposition::nontrivial_factors() const {
    std::vector<Int> out;
    for (const Int& x : diagonal())
        if (x > 1) out.push_back(x);
    return out;
}

namespace {

void swap_rows(IntegerMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntegerMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row(a) -= q * row(b)
void row_axpy(IntegerMatrix& m, int a, int b, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

void col_axpy(IntegerMatrix& m, int a, int b, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

void negate_row(IntegerMatrix& m, int a) {
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

} // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& input) {
    SmithDecomposition s{IntegerMatrix::identity(input.rows()), input,
                         IntegerMatrix::identity(input.cols())};
    IntegerMatrix& a = s.d;
    const int nr = a.rows(), nc = a.cols();
    const int steps = std::min(nr, nc);

    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // Deterministic pivot: smallest |entry| in the trailing block,
            // ties broken by row then column.
            int pi = -1, pj = -1;
            Int best;
            for (int i = t; i < nr; ++i)
                for (int j = t; j < nc; ++j) {
                    if (a.at(i, j) == 0) continue;
                    Int mag = abs(a.at(i, j));
                    if (pi < 0 || mag < best) {
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) goto done; // trailing block all zero

            swap_rows(a, t, pi);
            swap_rows(s.u, t, pi);
            swap_cols(a, t, pj);
            swap_cols(s.v, t, pj);

            bool residue = false;
            for (int i = t + 1; i < nr; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = a.at(i, t) / a.at(t, t); // truncated: |remainder| < |pivot|
                row_axpy(a, i, t, q);
                row_axpy(s.u, i, t, q);
                if (a.at(i, t) != 0) residue = true;
            }
            for (int j = t + 1; j < nc; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = a.at(t, j) / a.at(t, t);
                col_axpy(a, j, t, q);
                col_axpy(s.v, j, t, q);
                if (a.at(t, j) != 0) residue = true;
            }
            if (residue) continue; // strictly smaller entries exist; re-pivot

            // Divisibility sweep: pivot must divide the trailing block.
            int bad = -1;
            for (int i = t + 1; i < nr && bad < 0; ++i)
                for (int j = t + 1; j < nc; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad >= 0) {
                row_axpy(a, t, bad, Int(-1)); // row(t) += row(bad)
                row_axpy(s.u, t, bad, Int(-1));
                continue;
            }
            break;
        }
        if (a.at(t, t) < 0) {
            negate_row(a, t);
            negate_row(s.u, t);
        }
    }
done:
    return s;
}

Int determinant(const IntegerMatrix& input) {
    require(input.rows() == input.cols(), Errc::NotSquare, "determinant of non-square matrix");
    const int n = input.rows();
    if (n == 0) return 1;
    IntegerMatrix a = input;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            swap_rows(a, k, swap);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

bool CokernelClass::is_zero() const {
    return std::all_of(residues.begin(), residues.end(), [](const Int& r) { return r == 0; });
}

CokernelClass CokernelClass::operator+(const CokernelClass& rhs) const {
    require(moduli == rhs.moduli, Errc::DimensionMismatch, "cokernel classes from different lattices");
    CokernelClass out{*this};
    for (size_t i = 0; i < residues.size(); ++i) {
        out.residues[i] += rhs.residues[i];
        if (out.residues[i] >= moduli[i]) out.residues[i] -= moduli[i];
    }
    return out;
}

CokernelClass CokernelClass::operator-(const CokernelClass& rhs) const {
    return *this + (-rhs);
}

CokernelClass CokernelClass::operator-() const {
    CokernelClass out{*this};
    for (size_t i = 0; i < residues.size(); ++i)
        if (out.residues[i] != 0) out.residues[i] = moduli[i] - out.residues[i];
    return out;
}

std::string CokernelClass::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < residues.size(); ++i)
        os << (i ? "," : "") << residues[i].get_str() << " mod " << moduli[i].get_str();
    os << ")";
    return os.str();
}

RelationLattice::RelationLattice(IntegerMatrix relations)
    : relations_(std::move(relations)), snf_(smith_normal_form(relations_)),
      moduli_(snf_.nontrivial_factors()) {}

Int RelationLattice::torsion_order() const {
    Int order = 1;
    for (const Int& d : snf_.diagonal())
        if (d != 0) order *= d;
    return order;
}

namespace {

// Coordinates of v in the Smith column basis: c = V^T v, so that
// v in rowspan(L) iff d_i | c_i on diagonal coordinates and c_i = 0 beyond.
std::vector<Int> smith_coordinates(const SmithDecomposition& s, const std::vector<Int>& v) {
    const IntegerMatrix& vm = s.v;
    require(int(v.size()) == vm.rows(), Errc::DimensionMismatch, "vector length vs lattice columns");
    std::vector<Int> c(vm.cols());
    for (int j = 0; j < vm.cols(); ++j)
        for (int i = 0; i < vm.rows(); ++i)
            if (v[i] != 0) c[j] += v[i] * vm.at(i, j);
    return c;
}

} // namespace

bool RelationLattice::contains(const std::vector<Int>& v, std::vector<Int>* witness) const {
    std::vector<Int> c = smith_coordinates(snf_, v);
    const int diag = std::min(snf_.d.rows(), snf_.d.cols());
    std::vector<Int> y(snf_.d.rows());
    for (int j = 0; j < int(c.size()); ++j) {
        const Int d = j < diag ? snf_.d.at(j, j) : Int(0);
        if (d == 0) {
            if (c[j] != 0) return false;
        } else {
            if (c[j] % d != 0) return false;
            y[j] = c[j] / d;
        }
    }
    if (witness) {
        // x = U^T y satisfies x^T * relations = v.
        witness->assign(relations_.rows(), Int(0));
        for (int i = 0; i < snf_.u.rows(); ++i)
            if (y[i] != 0)
                for (int j = 0; j < snf_.u.cols(); ++j) (*witness)[j] += y[i] * snf_.u.at(i, j);
    }
    return true;
}

CokernelClass RelationLattice::reduce(const std::vector<Int>& v) const {
    std::vector<Int> c = smith_coordinates(snf_, v);
    const int diag = std::min(snf_.d.rows(), snf_.d.cols());
    CokernelClass out;
    out.moduli = moduli_;
    for (int j = 0; j < int(c.size()); ++j) {
        const Int d = j < diag ? snf_.d.at(j, j) : Int(0);
        if (d == 0) {
            require(c[j] == 0, Errc::InfiniteCokernelCoordinate,
                    "vector has a nonzero free coordinate in this quotient");
        } else if (d > 1) {
            Int r = c[j] % d;
            if (r < 0) r += d;
            out.residues.push_back(r);
        }
    }
    return out;
}

bool lattice_membership(const std::vector<Int>& v, const IntegerMatrix& lattice_rows) {
    return RelationLattice(lattice_rows).contains(v);
}

CokernelClass canonical_class(const std::vector<Int>& v, const IntegerMatrix& lattice_rows) {
    return RelationLattice(lattice_rows).reduce(v);
}

} // namespace temperley
