#ifndef SKEWIDEAL_ORE_HPP
#define SKEWIDEAL_ORE_HPP

#include <optional>

#include "skewideal/linear_map.hpp"
#include "skewideal/poly_matrix.hpp"

namespace skewideal {

/// The skew polynomial ring A[z; sigma, delta] with right coefficients and
/// commutation rule a z = z sigma(a) + delta(a).
class OreRing {
   public:
    OreRing(const Algebra* a, LinearMap sigma);
    OreRing(const Algebra* a, LinearMap sigma, LinearMap delta);

    const Algebra* algebra() const noexcept { return alg_; }
    const LinearMap& sigma() const noexcept { return sigma_; }
    const LinearMap& delta() const noexcept { return delta_; }
    bool has_delta() const noexcept { return has_delta_; }

   private:
    const Algebra* alg_;
    LinearMap sigma_;
    LinearMap delta_;
    bool has_delta_;
};

/// Skew polynomial sum_i z^i a_i, coefficient of z^i at index i, no trailing
/// zero coefficient.
class OrePolynomial {
   public:
    OrePolynomial() = default;
    explicit OrePolynomial(const OreRing* ring) : ring_(ring) {}
    OrePolynomial(const OreRing* ring, std::vector<AlgebraElement> coeffs);

    static OrePolynomial zero(const OreRing* ring) { return OrePolynomial(ring); }
    static OrePolynomial one(const OreRing* ring);
    static OrePolynomial constant(const OreRing* ring, const AlgebraElement& a);
    static OrePolynomial z(const OreRing* ring);

    const OreRing* ring() const noexcept { return ring_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    AlgebraElement coeff(int i) const;
    const std::vector<AlgebraElement>& coeffs() const noexcept { return c_; }

    OrePolynomial operator+(const OrePolynomial& o) const;
    OrePolynomial operator-(const OrePolynomial& o) const;
    OrePolynomial operator-() const;
    /// Product under the commutation rule; a z^j is expanded through the
    /// mixed sigma/delta composition matrices, memoized per call.
    OrePolynomial operator*(const OrePolynomial& o) const;

    bool operator==(const OrePolynomial& o) const { return ring_ == o.ring_ && c_ == o.c_; }
    bool operator!=(const OrePolynomial& o) const { return !(*this == o); }

   private:
    void normalize();
    const OreRing* ring_ = nullptr;
    std::vector<AlgebraElement> c_;
};

/// Coordinate row of f over F_q[z]: entry j collects the v_j-coordinates of
/// all coefficients of f.
std::vector<Poly> vectorize(const OrePolynomial& f);

/// Inverse of vectorize: reassemble sum_j f_j(z) v_j with right coefficients.
OrePolynomial devectorize(const OreRing& ring, const std::vector<Poly>& row);

}  // namespace skewideal

#endif
