#include "skewideal/ore.hpp"

#include <stdexcept>

namespace skewideal {

OreRing::OreRing(const Algebra* a, LinearMap sigma)
    : alg_(a), sigma_(std::move(sigma)), delta_(LinearMap::zero_derivation(*a, sigma_)), has_delta_(false) {
    if (sigma_.kind() != LinearMap::Kind::automorphism || sigma_.algebra() != a)
        throw std::invalid_argument("ore ring needs a validated automorphism of its coefficient algebra");
}

OreRing::OreRing(const Algebra* a, LinearMap sigma, LinearMap delta)
    : alg_(a), sigma_(std::move(sigma)), delta_(std::move(delta)), has_delta_(true) {
    if (sigma_.kind() != LinearMap::Kind::automorphism || sigma_.algebra() != a)
        throw std::invalid_argument("ore ring needs a validated automorphism of its coefficient algebra");
    if (delta_.kind() != LinearMap::Kind::sigma_derivation || delta_.algebra() != a)
        throw std::invalid_argument("ore ring needs a validated sigma-derivation");
    if (delta_.paired_sigma() == nullptr || delta_.paired_sigma()->matrix() != sigma_.matrix())
        throw std::invalid_argument("derivation was validated against a different sigma");
    if (delta_.is_zero_map()) has_delta_ = false;
}

OrePolynomial::OrePolynomial(const OreRing* ring, std::vector<AlgebraElement> coeffs)
    : ring_(ring), c_(std::move(coeffs)) {
    for (const AlgebraElement& a : c_)
        if (a.alg != ring_->algebra()) throw std::invalid_argument("coefficient from a different algebra");
    normalize();
}

OrePolynomial OrePolynomial::one(const OreRing* ring) { return constant(ring, ring->algebra()->unit()); }

OrePolynomial OrePolynomial::constant(const OreRing* ring, const AlgebraElement& a) {
    return OrePolynomial(ring, {a});
}

OrePolynomial OrePolynomial::z(const OreRing* ring) {
    return OrePolynomial(ring, {ring->algebra()->zero(), ring->algebra()->unit()});
}

AlgebraElement OrePolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return ring_->algebra()->zero();
    return c_[static_cast<std::size_t>(i)];
}

void OrePolynomial::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

OrePolynomial OrePolynomial::operator+(const OrePolynomial& o) const {
    if (ring_ != o.ring_) throw std::invalid_argument("ore polynomial owner mismatch");
    OrePolynomial r(ring_);
    const std::size_t len = std::max(c_.size(), o.c_.size());
    r.c_.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        AlgebraElement a = i < c_.size() ? c_[i] : ring_->algebra()->zero();
        if (i < o.c_.size()) a = a + o.c_[i];
        r.c_.push_back(std::move(a));
    }
    r.normalize();
    return r;
}

OrePolynomial OrePolynomial::operator-(const OrePolynomial& o) const { return *this + (-o); }

OrePolynomial OrePolynomial::operator-() const {
    OrePolynomial r = *this;
    for (AlgebraElement& a : r.c_) a = -a;
    return r;
}

OrePolynomial OrePolynomial::operator*(const OrePolynomial& o) const {
    if (ring_ != o.ring_) throw std::invalid_argument("ore polynomial owner mismatch");
    const Algebra& alg = *ring_->algebra();
    if (is_zero() || o.is_zero()) return OrePolynomial(ring_);

    // word[j][m]: the linear map sending a to the z^m coefficient of a z^j,
    // built from the recurrence a z^j = z * (sigma(a) z^(j-1)) + delta(a) z^(j-1)
    const int dg = o.degree();
    const FqMatrix& s = ring_->sigma().matrix();
    const FqMatrix& d = ring_->delta().matrix();
    std::vector<std::vector<FqMatrix>> word(static_cast<std::size_t>(dg) + 1);
    word[0] = {FqMatrix::identity(alg.field(), alg.dim())};
    for (int j = 1; j <= dg; ++j) {
        word[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(j) + 1,
                                                 FqMatrix(alg.field(), alg.dim(), alg.dim()));
        for (int m = 0; m <= j; ++m) {
            FqMatrix acc(alg.field(), alg.dim(), alg.dim());
            if (m > 0) acc = acc + word[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(m - 1)] * s;
            if (m < j && ring_->has_delta())
                acc = acc + word[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(m)] * d;
            word[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] = std::move(acc);
        }
    }

    OrePolynomial r(ring_);
    r.c_.assign(c_.size() + o.c_.size() - 1, alg.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            for (std::size_t m = 0; m <= j; ++m) {
                const FqMatrix& op = word[j][m];
                const AlgebraElement moved = {&alg, op.apply(c_[i].coords)};
                if (moved.is_zero()) continue;
                r.c_[i + m] = r.c_[i + m] + moved * o.c_[j];
            }
        }
    }
    r.normalize();
    return r;
}

std::vector<Poly> vectorize(const OrePolynomial& f) {
    const Algebra& alg = *f.ring()->algebra();
    const FiniteField* field = alg.field();
    std::vector<Poly> row;
    row.reserve(alg.dim());
    for (std::size_t j = 0; j < alg.dim(); ++j) {
        std::vector<FieldElement> coeffs;
        for (int i = 0; i <= f.degree(); ++i) coeffs.push_back(f.coeff(i).coords[j]);
        row.emplace_back(field, std::move(coeffs));
    }
    return row;
}

OrePolynomial devectorize(const OreRing& ring, const std::vector<Poly>& row) {
    const Algebra& alg = *ring.algebra();
    if (row.size() != alg.dim()) throw std::invalid_argument("coordinate row length mismatch");
    int deg = -1;
    for (const Poly& p : row) deg = std::max(deg, p.degree());
    std::vector<AlgebraElement> coeffs;
    for (int i = 0; i <= deg; ++i) {
        AlgebraElement a = alg.zero();
        for (std::size_t j = 0; j < alg.dim(); ++j) a.coords[j] = row[j].coeff(i);
        coeffs.push_back(std::move(a));
    }
    return OrePolynomial(&ring, std::move(coeffs));
}

}  // namespace skewideal
