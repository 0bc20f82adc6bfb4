#include "skewideal/poly_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewideal {

PolyMatrix PolyMatrix::identity(const FiniteField* field, std::size_t n) {
    PolyMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::one(field);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    PolyMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Poly& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
    PolyMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] + o.e_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
    PolyMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_) throw std::invalid_argument("submatrix out of range");
    PolyMatrix r(field_, nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

bool PolyMatrix::is_zero() const {
    for (const Poly& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix stack_rows(const PolyMatrix& top, const PolyMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("column count mismatch");
    PolyMatrix r(top.field(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) r.at(i, j) = top.at(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < bottom.cols(); ++j) r.at(top.rows() + i, j) = bottom.at(i, j);
    return r;
}

namespace {

Poly det_expand(const PolyMatrix& m, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols) {
    const FiniteField* field = m.field();
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    Poly acc = Poly::zero(field);
    const std::size_t top = rows[0];
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        const Poly& pivot = m.at(top, cols[ci]);
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t cj = 0; cj < cols.size(); ++cj)
            if (cj != ci) sub_cols.push_back(cols[cj]);
        Poly minor = det_expand(m, sub_rows, sub_cols);
        Poly term = pivot * minor;
        if (ci % 2 == 1) term = -term;
        acc = acc + term;
    }
    return acc;
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return Poly::one(m.field());
    std::vector<std::size_t> rows(m.rows()), cols(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = i;
    for (std::size_t j = 0; j < m.cols(); ++j) cols[j] = j;
    return det_expand(m, rows, cols);
}

namespace {

// Elementary operation tracker for the Smith reduction. Column operations on
// the working matrix are mirrored on q and inverted on q_inv; row operations
// are mirrored on p.
struct SmithWork {
    PolyMatrix w, p, q, q_inv;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w.at(a, j), w.at(b, j));
        for (std::size_t j = 0; j < p.cols(); ++j) std::swap(p.at(a, j), p.at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < w.rows(); ++i) std::swap(w.at(i, a), w.at(i, b));
        for (std::size_t i = 0; i < q.rows(); ++i) std::swap(q.at(i, a), q.at(i, b));
        for (std::size_t j = 0; j < q_inv.cols(); ++j) std::swap(q_inv.at(a, j), q_inv.at(b, j));
    }
    // row[dst] -= c * row[src]
    void row_sub(std::size_t dst, std::size_t src, const Poly& c) {
        if (c.is_zero()) return;
        for (std::size_t j = 0; j < w.cols(); ++j) w.at(dst, j) = w.at(dst, j) - c * w.at(src, j);
        for (std::size_t j = 0; j < p.cols(); ++j) p.at(dst, j) = p.at(dst, j) - c * p.at(src, j);
    }
    // col[dst] -= c * col[src]
    void col_sub(std::size_t dst, std::size_t src, const Poly& c) {
        if (c.is_zero()) return;
        for (std::size_t i = 0; i < w.rows(); ++i) w.at(i, dst) = w.at(i, dst) - c * w.at(i, src);
        for (std::size_t i = 0; i < q.rows(); ++i) q.at(i, dst) = q.at(i, dst) - c * q.at(i, src);
        // inverse op on q_inv: row[src] += c * row[dst]
        for (std::size_t j = 0; j < q_inv.cols(); ++j)
            q_inv.at(src, j) = q_inv.at(src, j) + c * q_inv.at(dst, j);
    }
    void scale_col(std::size_t col, const FieldElement& u) {
        const Poly s = Poly::constant(u);
        const Poly s_inv = Poly::constant(u.field->inv(u));
        for (std::size_t i = 0; i < w.rows(); ++i) w.at(i, col) = w.at(i, col) * s;
        for (std::size_t i = 0; i < q.rows(); ++i) q.at(i, col) = q.at(i, col) * s;
        for (std::size_t j = 0; j < q_inv.cols(); ++j) q_inv.at(col, j) = q_inv.at(col, j) * s_inv;
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const PolyMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("empty matrix");
    const FiniteField* field = m.field();
    SmithWork s{m, PolyMatrix::identity(field, m.rows()), PolyMatrix::identity(field, m.cols()),
                PolyMatrix::identity(field, m.cols())};

    const std::size_t bound = std::min(m.rows(), m.cols());
    std::size_t d = 0;
    for (; d < bound; ++d) {
        // minimal-degree pivot in the trailing submatrix, ties by (row, col)
        std::size_t pr = 0, pc = 0;
        int best = -1;
        for (std::size_t i = d; i < m.rows(); ++i)
            for (std::size_t j = d; j < m.cols(); ++j) {
                const Poly& e = s.w.at(i, j);
                if (e.is_zero()) continue;
                if (best < 0 || e.degree() < best) {
                    best = e.degree();
                    pr = i;
                    pc = j;
                }
            }
        if (best < 0) break;
        s.swap_rows(d, pr);
        s.swap_cols(d, pc);

        for (;;) {
            // clear the pivot column, re-picking a smaller pivot when a
            // nonzero remainder shows up
            bool touched = true;
            while (touched) {
                touched = false;
                for (std::size_t i = d + 1; i < m.rows(); ++i) {
                    if (s.w.at(i, d).is_zero()) continue;
                    const auto [quot, rem] = euclidean_divide(s.w.at(i, d), s.w.at(d, d));
                    s.row_sub(i, d, quot);
                    if (!rem.is_zero()) {
                        s.swap_rows(d, i);
                        touched = true;
                    }
                }
                for (std::size_t j = d + 1; j < m.cols(); ++j) {
                    if (s.w.at(d, j).is_zero()) continue;
                    const auto [quot, rem] = euclidean_divide(s.w.at(d, j), s.w.at(d, d));
                    s.col_sub(j, d, quot);
                    if (!rem.is_zero()) {
                        s.swap_cols(d, j);
                        touched = true;
                    }
                }
            }
            // pivot must divide the whole trailing submatrix
            bool fixed = false;
            for (std::size_t i = d + 1; i < m.rows() && !fixed; ++i)
                for (std::size_t j = d + 1; j < m.cols() && !fixed; ++j) {
                    if (s.w.at(i, j).is_zero()) continue;
                    if (!(s.w.at(i, j) % s.w.at(d, d)).is_zero()) {
                        s.row_sub(d, i, -Poly::one(field));  // row[d] += row[i]
                        fixed = true;
                    }
                }
            if (!fixed) break;
        }
        s.scale_col(d, field->inv(s.w.at(d, d).leading()));
    }

    SmithDecomposition out{std::move(s.w), std::move(s.p), std::move(s.q), std::move(s.q_inv), d};
    for (std::size_t i = 0; i + 1 < d; ++i)
        if (!(out.h.at(i + 1, i + 1) % out.h.at(i, i)).is_zero())
            throw std::logic_error("invariant factor chain broken");
    if (out.p * m * out.q != out.h) throw std::logic_error("smith decomposition identity failed");
    if (out.q * out.q_inv != PolyMatrix::identity(field, m.cols()) ||
        out.q_inv * out.q != PolyMatrix::identity(field, m.cols()))
        throw std::logic_error("smith column transform inverse failed");
    return out;
}

bool is_basic(const SmithDecomposition& d) {
    for (std::size_t i = 0; i < d.rank; ++i)
        if (!d.h.at(i, i).is_one()) return false;
    return true;
}

PolyMatrix hermite_row_form(const PolyMatrix& m) {
    PolyMatrix w = m;
    const FiniteField* field = m.field();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < w.cols() && pivot_row < w.rows(); ++col) {
        // gcd of the column below pivot_row by repeated minimal-degree reduction
        for (;;) {
            std::size_t best_row = w.rows();
            for (std::size_t i = pivot_row; i < w.rows(); ++i) {
                if (w.at(i, col).is_zero()) continue;
                if (best_row == w.rows() || w.at(i, col).degree() < w.at(best_row, col).degree()) best_row = i;
            }
            if (best_row == w.rows()) break;  // column empty below
            if (best_row != pivot_row)
                for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w.at(best_row, j), w.at(pivot_row, j));
            bool reduced_all = true;
            for (std::size_t i = pivot_row + 1; i < w.rows(); ++i) {
                if (w.at(i, col).is_zero()) continue;
                const Poly quot = w.at(i, col) / w.at(pivot_row, col);
                for (std::size_t j = 0; j < w.cols(); ++j) w.at(i, j) = w.at(i, j) - quot * w.at(pivot_row, j);
                if (!w.at(i, col).is_zero()) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (w.at(pivot_row, col).is_zero()) continue;
        // monic pivot, reduce entries above
        const FieldElement inv_lead = field->inv(w.at(pivot_row, col).leading());
        for (std::size_t j = 0; j < w.cols(); ++j) w.at(pivot_row, j) = w.at(pivot_row, j) * inv_lead;
        for (std::size_t i = 0; i < pivot_row; ++i) {
            if (w.at(i, col).is_zero()) continue;
            const Poly quot = w.at(i, col) / w.at(pivot_row, col);
            for (std::size_t j = 0; j < w.cols(); ++j) w.at(i, j) = w.at(i, j) - quot * w.at(pivot_row, j);
        }
        ++pivot_row;
    }
    return w;
}

bool same_row_space(const PolyMatrix& a, const PolyMatrix& b) {
    const PolyMatrix ha = hermite_row_form(a);
    const PolyMatrix hb = hermite_row_form(b);
    const PolyMatrix hs = hermite_row_form(stack_rows(a, b));
    auto nonzero_rows_equal = [](const PolyMatrix& x, const PolyMatrix& y) {
        std::size_t rx = x.rows(), ry = y.rows();
        while (rx > 0) {
            bool zero = true;
            for (std::size_t j = 0; j < x.cols(); ++j)
                if (!x.at(rx - 1, j).is_zero()) zero = false;
            if (!zero) break;
            --rx;
        }
        while (ry > 0) {
            bool zero = true;
            for (std::size_t j = 0; j < y.cols(); ++j)
                if (!y.at(ry - 1, j).is_zero()) zero = false;
            if (!zero) break;
            --ry;
        }
        if (rx != ry) return false;
        for (std::size_t i = 0; i < rx; ++i)
            for (std::size_t j = 0; j < x.cols(); ++j)
                if (x.at(i, j) != y.at(i, j)) return false;
        return true;
    };
    return nonzero_rows_equal(hs, ha) && nonzero_rows_equal(hs, hb);
}

int max_minor_degree(const PolyMatrix& m, std::size_t k) {
    if (k == 0 || k > std::min(m.rows(), m.cols())) throw std::invalid_argument("minor size out of range");
    std::vector<std::size_t> row_sel(k), col_sel(k);
    int best = -1;

    auto next_combination = [](std::vector<std::size_t>& sel, std::size_t limit) {
        const std::size_t k2 = sel.size();
        std::size_t i = k2;
        while (i > 0) {
            --i;
            if (sel[i] + (k2 - i) < limit + 0) {
                ++sel[i];
                for (std::size_t j = i + 1; j < k2; ++j) sel[j] = sel[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    for (std::size_t i = 0; i < k; ++i) row_sel[i] = i;
    do {
        for (std::size_t j = 0; j < k; ++j) col_sel[j] = j;
        do {
            PolyMatrix sub(m.field(), k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(row_sel[i], col_sel[j]);
            best = std::max(best, determinant(sub).degree());
        } while (next_combination(col_sel, m.cols()));
    } while (next_combination(row_sel, m.rows()));
    return best;
}

}  // namespace skewideal
