#ifndef SKEWIDEAL_POLY_HPP
#define SKEWIDEAL_POLY_HPP

#include <utility>
#include <vector>

#include "skewideal/finite_field.hpp"

namespace skewideal {

/// Univariate polynomial over a finite field, ascending coefficients with no
/// trailing zeros; the zero polynomial has an empty coefficient sequence.
class Poly {
   public:
    Poly() = default;
    explicit Poly(const FiniteField* field) : field_(field) {}
    Poly(const FiniteField* field, std::vector<FieldElement> coeffs);

    static Poly zero(const FiniteField* field) { return Poly(field); }
    static Poly one(const FiniteField* field);
    static Poly constant(const FieldElement& c);
    static Poly monomial(const FiniteField* field, int deg, const FieldElement& c);
    static Poly variable(const FiniteField* field) { return monomial(field, 1, field->one()); }
    /// Coefficients given as raw field-element encodings, ascending.
    static Poly from_reps(const FiniteField* field, const std::vector<std::uint32_t>& reps);

    const FiniteField* field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const;
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const;
    FieldElement coeff(int i) const;
    FieldElement leading() const;
    const std::vector<FieldElement>& coeffs() const noexcept { return c_; }

    FieldElement eval(const FieldElement& x) const;
    Poly monic() const;
    Poly shifted(int by) const;  // multiply by x^by

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElement& s) const;
    Poly operator/(const Poly& o) const;
    Poly operator%(const Poly& o) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

   private:
    void normalize();
    const FiniteField* field_ = nullptr;
    std::vector<FieldElement> c_;
};

/// Quotient q and remainder r with a = q*b + r, deg r < deg b.
std::pair<Poly, Poly> euclidean_divide(const Poly& a, const Poly& b);

Poly derivative(const Poly& a);

/// Monic gcd.
Poly gcd(Poly a, Poly b);

struct XgcdResult {
    Poly g;  // monic gcd
    Poly u;
    Poly v;  // u*a + v*b = g
};
XgcdResult xgcd(const Poly& a, const Poly& b);

Poly pow_mod(const Poly& base, long long e, const Poly& modulus);

/// Deterministic ordering used for factor lists: degree first, then the
/// coefficient sequence by encoding value, constant term first.
bool poly_order_less(const Poly& a, const Poly& b);

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by poly_order_less. Berlekamp kernel splitting after a squarefree
/// reduction, deterministic for small fields.
std::vector<std::pair<Poly, int>> berlekamp_factor(const Poly& f);

/// CRT idempotents of F_q[x]/(f) for squarefree f: e_i = 1 mod f_i and
/// e_i = 0 mod f_j, listed in the factor order.
std::vector<Poly> quotient_idempotents(const Poly& f);

/// Normal dual bases of the field K = F_q[x]/(modulus) over F_q, for an
/// irreducible modulus. Elements are returned as reduced polynomials; the
/// first normal element in coordinate order is taken, with the same digit
/// enumeration as normal_dual_bases for plain fields.
std::pair<std::vector<Poly>, std::vector<Poly>> normal_dual_bases_mod(const Poly& modulus);

}  // namespace skewideal

#endif
