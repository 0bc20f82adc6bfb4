#ifndef SKEWIDEAL_FQ_LINALG_HPP
#define SKEWIDEAL_FQ_LINALG_HPP

#include <optional>
#include <vector>

#include "skewideal/finite_field.hpp"

namespace skewideal {

/// Dense matrix over a finite field, row-major.
class FqMatrix {
   public:
    FqMatrix() = default;
    FqMatrix(const FiniteField* field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), e_(rows * cols, field->zero()) {}

    static FqMatrix identity(const FiniteField* field, std::size_t n);

    const FiniteField* field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    FqMatrix operator*(const FqMatrix& o) const;
    FqMatrix operator+(const FqMatrix& o) const;
    bool operator==(const FqMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const FqMatrix& o) const { return !(*this == o); }

    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;  // matrix * column

    std::size_t rank() const;
    std::optional<FqMatrix> inverse() const;  // nullopt when singular
    /// Basis of { v : v * M = 0 }.
    std::vector<std::vector<FieldElement>> left_kernel_basis() const;
    /// One solution x of M x = b, nullopt when inconsistent.
    std::optional<std::vector<FieldElement>> solve(const std::vector<FieldElement>& b) const;

    bool is_identity() const;

   private:
    const FiniteField* field_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElement> e_;
};

}  // namespace skewideal

#endif
