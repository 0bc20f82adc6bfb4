#include "skewideal/fq_linalg.hpp"

#include <stdexcept>

namespace skewideal {

FqMatrix FqMatrix::identity(const FiniteField* field, std::size_t n) {
    FqMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    FqMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElement& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + a * o.at(k, j);
        }
    return r;
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
    FqMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] + o.e_[i];
    return r;
}

std::vector<FieldElement> FqMatrix::apply(const std::vector<FieldElement>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<FieldElement> r(rows_, field_->zero());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + at(i, j) * v[j];
    return r;
}

namespace {

// reduces w in place to row echelon form, returns pivot columns
std::vector<std::size_t> echelonize(FqMatrix& w) {
    const FiniteField* field = w.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < w.cols() && row < w.rows(); ++col) {
        std::size_t pr = row;
        while (pr < w.rows() && w.at(pr, col).is_zero()) ++pr;
        if (pr == w.rows()) continue;
        for (std::size_t c = 0; c < w.cols(); ++c) std::swap(w.at(pr, c), w.at(row, c));
        const FieldElement d = field->inv(w.at(row, col));
        for (std::size_t c = 0; c < w.cols(); ++c) w.at(row, c) = w.at(row, c) * d;
        for (std::size_t r = 0; r < w.rows(); ++r) {
            if (r == row || w.at(r, col).is_zero()) continue;
            const FieldElement f = w.at(r, col);
            for (std::size_t c = 0; c < w.cols(); ++c) w.at(r, c) = w.at(r, c) - f * w.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t FqMatrix::rank() const {
    FqMatrix w = *this;
    return echelonize(w).size();
}

std::optional<FqMatrix> FqMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    FqMatrix w(field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) w.at(i, j) = at(i, j);
        w.at(i, cols_ + i) = field_->one();
    }
    const auto pivots = echelonize(w);
    // pivots that spill into the augmented half mean the left block is singular
    if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
    FqMatrix inv(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = w.at(i, cols_ + j);
    return inv;
}

std::vector<std::vector<FieldElement>> FqMatrix::left_kernel_basis() const {
    // left kernel of M = kernel of M^T
    FqMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    FqMatrix w = t;
    const auto pivots = echelonize(w);
    std::vector<bool> is_pivot(rows_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free_col = 0; free_col < rows_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElement> v(rows_, field_->zero());
        v[free_col] = field_->one();
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            v[pivots[pi]] = -w.at(pi, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<FieldElement>> FqMatrix::solve(const std::vector<FieldElement>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("right-hand side length mismatch");
    FqMatrix w(field_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) w.at(i, j) = at(i, j);
        w.at(i, cols_) = b[i];
    }
    const auto pivots = echelonize(w);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<FieldElement> x(cols_, field_->zero());
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = w.at(pi, cols_);
    return x;
}

bool FqMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const FieldElement expect = i == j ? field_->one() : field_->zero();
            if (at(i, j) != expect) return false;
        }
    return true;
}

}  // namespace skewideal
