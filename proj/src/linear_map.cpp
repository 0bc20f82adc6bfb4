#include "skewideal/linear_map.hpp"

#include <stdexcept>

namespace skewideal {

namespace {

FqMatrix matrix_from_columns(const Algebra& a, const std::vector<AlgebraElement>& columns) {
    const std::size_t n = a.dim();
    if (columns.size() != n) throw std::invalid_argument("need one image per basis element");
    FqMatrix m(a.field(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (columns[j].alg != &a) throw std::invalid_argument("column owner mismatch");
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = columns[j].coords[i];
    }
    return m;
}

AlgebraElement apply_matrix(const Algebra& a, const FqMatrix& m, const AlgebraElement& x) {
    return {&a, m.apply(x.coords)};
}

void validate_automorphism(const Algebra& a, const FqMatrix& m) {
    const std::size_t n = a.dim();
    if (apply_matrix(a, m, a.unit()) != a.unit()) throw std::invalid_argument("automorphism must fix 1");
    if (m.rank() != n) throw std::invalid_argument("automorphism matrix is singular");
    for (std::size_t i = 0; i < n; ++i) {
        const AlgebraElement si = apply_matrix(a, m, a.basis_element(i));
        for (std::size_t j = 0; j < n; ++j) {
            const AlgebraElement sj = apply_matrix(a, m, a.basis_element(j));
            const AlgebraElement vivj = {&a, {a.basis_product(i, j), a.basis_product(i, j) + n}};
            if (apply_matrix(a, m, vivj) != si * sj)
                throw std::invalid_argument("multiplicativity fails at basis pair (" + std::to_string(i) +
                                            ", " + std::to_string(j) + ")");
        }
    }
}

void validate_sigma_derivation(const Algebra& a, const FqMatrix& d, const FqMatrix& s) {
    const std::size_t n = a.dim();
    if (!apply_matrix(a, d, a.unit()).is_zero())
        throw std::invalid_argument("sigma-derivation must annihilate 1");
    for (std::size_t i = 0; i < n; ++i) {
        const AlgebraElement vi = a.basis_element(i);
        const AlgebraElement di = apply_matrix(a, d, vi);
        for (std::size_t j = 0; j < n; ++j) {
            const AlgebraElement vj = a.basis_element(j);
            const AlgebraElement vivj = {&a, {a.basis_product(i, j), a.basis_product(i, j) + n}};
            const AlgebraElement lhs = apply_matrix(a, d, vivj);
            const AlgebraElement rhs = di * apply_matrix(a, s, vj) + vi * apply_matrix(a, d, vj);
            if (lhs != rhs)
                throw std::invalid_argument("derivation rule fails at basis pair (" + std::to_string(i) +
                                            ", " + std::to_string(j) + ")");
        }
    }
}

}  // namespace

LinearMap LinearMap::identity(const Algebra& a) {
    return LinearMap(&a, FqMatrix::identity(a.field(), a.dim()), Kind::automorphism);
}

LinearMap LinearMap::automorphism_from_columns(const Algebra& a, const std::vector<AlgebraElement>& columns) {
    FqMatrix m = matrix_from_columns(a, columns);
    validate_automorphism(a, m);
    return LinearMap(&a, std::move(m), Kind::automorphism);
}

LinearMap LinearMap::inner_automorphism(const Algebra& a, const AlgebraElement& u) {
    const auto u_inv = a.inverse(u);
    if (!u_inv) throw std::invalid_argument("inner automorphism needs an invertible element");
    std::vector<AlgebraElement> columns;
    columns.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) columns.push_back(u * a.basis_element(i) * *u_inv);
    FqMatrix m = matrix_from_columns(a, columns);
    validate_automorphism(a, m);
    return LinearMap(&a, std::move(m), Kind::automorphism);
}

LinearMap LinearMap::generator_automorphism(const Algebra& a, const AlgebraElement& image) {
    if (a.spec().kind != AlgebraSpec::Kind::quotient)
        throw std::invalid_argument("generator images only define maps on quotient algebras");
    if (image.alg != &a) throw std::invalid_argument("image owner mismatch");
    // well-definedness: the modulus must vanish on the image
    const Poly& f = a.spec().quotient_modulus;
    AlgebraElement value = a.zero();
    AlgebraElement pw = a.unit();
    for (int i = 0; i <= f.degree(); ++i) {
        value = value + f.coeff(i) * pw;
        pw = pw * image;
    }
    if (!value.is_zero())
        throw std::invalid_argument("generator image does not satisfy the quotient modulus");
    std::vector<AlgebraElement> columns;
    columns.reserve(a.dim());
    AlgebraElement acc = a.unit();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        columns.push_back(acc);
        acc = acc * image;
    }
    FqMatrix m = matrix_from_columns(a, columns);
    validate_automorphism(a, m);
    return LinearMap(&a, std::move(m), Kind::automorphism);
}

LinearMap LinearMap::sigma_derivation_from_columns(const Algebra& a, const std::vector<AlgebraElement>& columns,
                                                   const LinearMap& sigma) {
    if (sigma.kind() != Kind::automorphism || sigma.algebra() != &a)
        throw std::invalid_argument("derivation needs a validated automorphism of the same algebra");
    FqMatrix m = matrix_from_columns(a, columns);
    validate_sigma_derivation(a, m, sigma.matrix());
    LinearMap d(&a, std::move(m), Kind::sigma_derivation);
    d.sigma_ = std::make_shared<LinearMap>(sigma);
    return d;
}

LinearMap LinearMap::zero_derivation(const Algebra& a, const LinearMap& sigma) {
    std::vector<AlgebraElement> zeros(a.dim(), a.zero());
    return sigma_derivation_from_columns(a, zeros, sigma);
}

LinearMap LinearMap::plain_from_matrix(const Algebra& a, FqMatrix m) {
    if (m.rows() != a.dim() || m.cols() != a.dim()) throw std::invalid_argument("matrix size mismatch");
    return LinearMap(&a, std::move(m), Kind::plain);
}

AlgebraElement LinearMap::operator()(const AlgebraElement& x) const {
    if (x.alg != alg_) throw std::invalid_argument("map applied to foreign element");
    return apply_matrix(*alg_, m_, x);
}

LinearMap LinearMap::compose(const LinearMap& other) const {
    if (alg_ != other.alg_) throw std::invalid_argument("composition across algebras");
    return LinearMap(alg_, m_ * other.m_, Kind::plain);
}

LinearMap LinearMap::power(int e) const {
    if (e < 0) throw std::invalid_argument("negative map power");
    LinearMap acc = LinearMap(alg_, FqMatrix::identity(alg_->field(), alg_->dim()), Kind::plain);
    for (int i = 0; i < e; ++i) acc = acc.compose(*this);
    return acc;
}

bool LinearMap::is_zero_map() const {
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j < m_.cols(); ++j)
            if (!m_.at(i, j).is_zero()) return false;
    return true;
}

int map_order(const LinearMap& sigma) {
    if (sigma.kind() != LinearMap::Kind::automorphism)
        throw std::invalid_argument("order is defined for automorphisms");
    constexpr int limit = 1 << 20;
    FqMatrix acc = sigma.matrix();
    for (int m = 1; m <= limit; ++m) {
        if (acc.is_identity()) return m;
        acc = acc * sigma.matrix();
    }
    throw std::logic_error("automorphism order exceeds the search limit");
}

BlockAction block_action(const LinearMap& sigma, const BlockDecomposition& blocks) {
    if (sigma.kind() != LinearMap::Kind::automorphism)
        throw std::invalid_argument("block action is defined for automorphisms");
    const std::size_t m = blocks.blocks.size();
    BlockAction out;
    out.permutation.assign(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        const AlgebraElement image = sigma(blocks.blocks[i].idempotent);
        std::size_t target = m;
        for (std::size_t j = 0; j < m; ++j)
            if (image == blocks.blocks[j].idempotent) {
                target = j;
                break;
            }
        if (target == m)
            throw std::invalid_argument("automorphism image of idempotent " + std::to_string(i) +
                                        " is not in the idempotent list");
        out.permutation[i] = target;
    }
    std::vector<bool> seen(m, false);
    for (std::size_t start = 0; start < m; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> orbit;
        std::size_t cur = start;
        while (!seen[cur]) {
            seen[cur] = true;
            orbit.push_back(cur);
            cur = out.permutation[cur];
        }
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

}  // namespace skewideal
