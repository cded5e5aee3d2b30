#pragma once

// Exact integer matrix arithmetic: determinants, Smith normal form and
// canonical coordinates in finitely generated abelian quotients.  All
// entries are arbitrary-precision (GMP) — normal-form intermediates can
// outgrow machine words even on small graphs.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "temperley/errors.hpp"

namespace temperley {

using Int = mpz_class;

class IntegerMatrix {
  public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(size_t(rows) * cols) {}

    static IntegerMatrix identity(int n);
    static IntegerMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return entries_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return entries_[size_t(i) * cols_ + j]; }

    std::vector<Int> row(int i) const;

    IntegerMatrix transposed() const;
    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    bool operator==(const IntegerMatrix& rhs) const = default;

    // Row-major "[[a,b],[c,d]]" rendering used in reports.
    std::string to_string() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> entries_;
};

// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... | dk >= 0.
struct SmithDecomposition {
    IntegerMatrix u;
    IntegerMatrix d;
    IntegerMatrix v;

    std::vector<Int> diagonal() const;
    // Invariant factors > 1, i.e. the moduli of the torsion part.
    std::vector<Int> nontrivial_factors() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntegerMatrix& m);

// Canonical residue tuple in (+) Z/d_i over the nontrivial invariant factors
// of a fixed relation lattice.
struct CokernelClass {
    std::vector<Int> residues; // 0 <= r_i < d_i
    std::vector<Int> moduli;   // d_i > 1, divisibility chain

    bool is_zero() const;
    CokernelClass operator+(const CokernelClass& rhs) const;
    CokernelClass operator-(const CokernelClass& rhs) const;
    CokernelClass operator-() const;
    bool operator==(const CokernelClass& rhs) const = default;

    std::string to_string() const;
};

// The sublattice of Z^cols spanned by the rows of a relation matrix, with a
// fixed Smith basis so that quotient coordinates are canonical.
class RelationLattice {
  public:
    explicit RelationLattice(IntegerMatrix relations);

    const IntegerMatrix& relations() const { return relations_; }
    const SmithDecomposition& snf() const { return snf_; }
    const std::vector<Int>& moduli() const { return moduli_; }

    // Group order of the torsion quotient (product of all invariant factors).
    Int torsion_order() const;

    // True iff v is an integer combination of the rows; when a witness is
    // requested, fills it with coefficients x such that x^T * relations = v.
    bool contains(const std::vector<Int>& v, std::vector<Int>* witness = nullptr) const;

    // Canonical class of v in Z^cols / rowspan(relations).  Throws
    // InfiniteCokernelCoordinate if v has a nonzero free coordinate.
    CokernelClass reduce(const std::vector<Int>& v) const;

  private:
    IntegerMatrix relations_;
    SmithDecomposition snf_;
    std::vector<Int> moduli_; // nontrivial factors, cached
};

bool lattice_membership(const std::vector<Int>& v, const IntegerMatrix& lattice_rows);
CokernelClass canonical_class(const std::vector<Int>& v, const IntegerMatrix& lattice_rows);

} // namespace temperley
