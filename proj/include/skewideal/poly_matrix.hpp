#ifndef SKEWIDEAL_POLY_MATRIX_HPP
#define SKEWIDEAL_POLY_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "skewideal/poly.hpp"

namespace skewideal {

/// Dense rectangular matrix over F_q[z], row-major.
class PolyMatrix {
   public:
    PolyMatrix() = default;
    PolyMatrix(const FiniteField* field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), e_(rows * cols, Poly::zero(field)) {}

    static PolyMatrix identity(const FiniteField* field, std::size_t n);

    const FiniteField* field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Poly& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Poly& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    PolyMatrix transpose() const;
    PolyMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
    bool is_zero() const;

   private:
    const FiniteField* field_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Poly> e_;
};

PolyMatrix stack_rows(const PolyMatrix& top, const PolyMatrix& bottom);

/// Exact determinant by Laplace expansion; intended for desk-scale sizes
/// (minor degrees, unimodularity checks, test oracles).
Poly determinant(const PolyMatrix& m);

/// P*M*Q = H with H diagonal, nonzero invariant factors normalized (units
/// rescaled to 1, non-constant factors monic) and d_i | d_{i+1}; P and Q are
/// unimodular and q_inv is maintained alongside Q.
struct SmithDecomposition {
    PolyMatrix h;
    PolyMatrix p;
    PolyMatrix q;
    PolyMatrix q_inv;
    std::size_t rank = 0;
};

/// Pivot rule: minimal-degree nonzero entry of the working submatrix, ties
/// broken by smallest (row, col). Deterministic across runs.
SmithDecomposition smith_normal_form(const PolyMatrix& m);

/// True iff every nonzero invariant factor equals 1.
bool is_basic(const SmithDecomposition& d);

/// Unique row echelon form over F_q[z]: monic pivots, entries above each
/// pivot reduced to lower degree, zero rows last. Canonical for row-space
/// comparison.
PolyMatrix hermite_row_form(const PolyMatrix& m);

/// Equality of F_q[z]-row spaces via Hermite forms.
bool same_row_space(const PolyMatrix& a, const PolyMatrix& b);

/// Maximum degree over all k x k minors; -1 when every minor vanishes.
int max_minor_degree(const PolyMatrix& m, std::size_t k);

}  // namespace skewideal

#endif
