#ifndef SKEWIDEAL_FINITE_FIELD_HPP
#define SKEWIDEAL_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace skewideal {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// Element of F_{p^k}. `rep` is the base-p encoding of the coefficient
/// vector with respect to the power basis of the field modulus, least
/// significant coordinate first.
struct FieldElement {
    const FiniteField* field = nullptr;
    std::uint32_t rep = 0;

    bool is_zero() const noexcept { return rep == 0; }
    bool operator==(const FieldElement& o) const noexcept {
        return field == o.field && rep == o.rep;
    }
    bool operator!=(const FieldElement& o) const noexcept { return !(*this == o); }
};

/// Exact arithmetic in F_{p^k} with eagerly built discrete-log tables.
/// Immutable after construction; all operations are const and thread-safe.
class FiniteField {
   public:
    /// Field sizes are capped so log/exp tables stay trivial.
    static constexpr std::uint32_t max_size = 1u << 16;

    FiniteField(long p, int k, std::vector<int> modulus = {});

    long characteristic() const noexcept { return p_; }
    int extension_degree() const noexcept { return k_; }
    std::uint32_t size() const noexcept { return q_; }
    /// Monic irreducible modulus, ascending coefficients, length k+1.
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    FieldElement zero() const noexcept { return {this, 0}; }
    FieldElement one() const noexcept { return {this, 1}; }
    /// Class of the modulus variable; for degree one it reduces to the
    /// constant root of the modulus.
    FieldElement generator() const noexcept {
        if (k_ == 1) return {this, static_cast<std::uint32_t>((p_ - modulus_[0]) % p_)};
        return {this, static_cast<std::uint32_t>(p_)};
    }
    FieldElement primitive_element() const noexcept { return {this, primitive_}; }

    FieldElement from_rep(std::uint32_t rep) const;
    FieldElement from_coords(const std::vector<int>& coords) const;
    std::vector<int> coords(const FieldElement& a) const;
    /// primitive_element^e (e may be negative).
    FieldElement from_power(long long e) const;
    /// Discrete log base the primitive element; throws on zero.
    long log(const FieldElement& a) const;

    // Raw-representation arithmetic, used by hot loops.
    std::uint32_t add_rep(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_rep(std::uint32_t a) const;
    std::uint32_t sub_rep(std::uint32_t a, std::uint32_t b) const { return add_rep(a, neg_rep(b)); }
    std::uint32_t mul_rep(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        long e = log_[a] + log_[b];
        if (e >= static_cast<long>(q_) - 1) e -= q_ - 1;
        return exp_[e];
    }
    std::uint32_t inv_rep(std::uint32_t a) const;
    std::uint32_t pow_rep(std::uint32_t a, long long e) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const { return {this, add_rep(own(a), own(b))}; }
    FieldElement sub(const FieldElement& a, const FieldElement& b) const { return {this, sub_rep(own(a), own(b))}; }
    FieldElement neg(const FieldElement& a) const { return {this, neg_rep(own(a))}; }
    FieldElement mul(const FieldElement& a, const FieldElement& b) const { return {this, mul_rep(own(a), own(b))}; }
    FieldElement div(const FieldElement& a, const FieldElement& b) const { return {this, mul_rep(own(a), inv_rep(own(b)))}; }
    FieldElement inv(const FieldElement& a) const { return {this, inv_rep(own(a))}; }
    FieldElement pow(const FieldElement& a, long long e) const { return {this, pow_rep(own(a), e)}; }
    /// The constant c·1 for an integer c (reduced mod p).
    FieldElement from_int(long c) const;

    /// True when q_sub = p^j with j dividing k, so F_{q_sub} sits inside.
    bool has_subfield(long q_sub) const noexcept;
    /// Extension degree t with q_sub^t = p^k; throws if not a subfield order.
    int extension_degree_over(long q_sub) const;
    /// a lies in the subfield of order q_sub.
    bool in_subfield(const FieldElement& a, long q_sub) const;

   private:
    std::uint32_t own(const FieldElement& a) const {
        if (a.field != this) throw std::invalid_argument("field element belongs to a different field");
        return a.rep;
    }

    long p_;
    int k_;
    std::uint32_t q_;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = rep of primitive^i, i < q-1
    std::vector<long> log_;           // log_[rep]; log_[0] = -1
    std::uint32_t primitive_;
};

FieldPtr make_field(long p, int k, const std::vector<int>& modulus = {});

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return a.field->add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a.field->sub(a, b); }
inline FieldElement operator-(const FieldElement& a) { return a.field->neg(a); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return a.field->mul(a, b); }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a.field->div(a, b); }

/// a^(base_q^h) where base_q is a subfield order.
FieldElement frobenius_power(const FieldElement& a, long base_q, long h);

/// Trace down to the subfield of order q_sub: sum of a^(q_sub^i).
FieldElement trace(const FieldElement& a, long subfield_order);

/// Normal basis {a, a^q, ..., a^(q^(t-1))} of the field over its subfield of
/// order q, together with the dual normal basis {b, b^q, ...} satisfying
/// Tr(a^(q^i) b^(q^j)) = delta_ij. The first normal element in coordinate
/// order (power-basis tuples, digits enumerated 0, 1, g, g^2, ...) is taken.
std::pair<std::vector<FieldElement>, std::vector<FieldElement>>
normal_dual_bases(const FiniteField& field, long subfield_order);

}  // namespace skewideal

#endif
