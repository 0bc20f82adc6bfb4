#include "skewideal/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "skewideal/fq_linalg.hpp"

namespace skewideal {

Poly::Poly(const FiniteField* field, std::vector<FieldElement> coeffs)
    : field_(field), c_(std::move(coeffs)) {
    for (const FieldElement& e : c_)
        if (e.field != field_) throw std::invalid_argument("polynomial coefficient from a different field");
    normalize();
}

Poly Poly::one(const FiniteField* field) { return constant(field->one()); }

Poly Poly::constant(const FieldElement& c) {
    Poly r(c.field);
    if (!c.is_zero()) r.c_.push_back(c);
    return r;
}

Poly Poly::monomial(const FiniteField* field, int deg, const FieldElement& c) {
    Poly r(field);
    if (!c.is_zero()) {
        r.c_.assign(static_cast<std::size_t>(deg) + 1, field->zero());
        r.c_.back() = c;
    }
    return r;
}

Poly Poly::from_reps(const FiniteField* field, const std::vector<std::uint32_t>& reps) {
    std::vector<FieldElement> c;
    c.reserve(reps.size());
    for (std::uint32_t r : reps) c.push_back(field->from_rep(r));
    return Poly(field, std::move(c));
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == field_->one(); }

bool Poly::is_monic() const { return !c_.empty() && c_.back() == field_->one(); }

FieldElement Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
    return c_[static_cast<std::size_t>(i)];
}

FieldElement Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

FieldElement Poly::eval(const FieldElement& x) const {
    FieldElement acc = field_->zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * field_->inv(c_.back());
}

Poly Poly::shifted(int by) const {
    if (is_zero() || by == 0) return *this;
    if (by < 0) throw std::invalid_argument("negative shift");
    Poly r(field_);
    r.c_.assign(c_.size() + static_cast<std::size_t>(by), field_->zero());
    std::copy(c_.begin(), c_.end(), r.c_.begin() + by);
    return r;
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), field_->zero());
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        FieldElement a = i < c_.size() ? c_[i] : field_->zero();
        FieldElement b = i < o.c_.size() ? o.c_[i] : field_->zero();
        r.c_[i] = a + b;
    }
    r.normalize();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (FieldElement& e : r.c_) e = -e;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(field_);
    Poly r(field_);
    r.c_.assign(c_.size() + o.c_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.normalize();
    return r;
}

Poly Poly::operator*(const FieldElement& s) const {
    Poly r = *this;
    for (FieldElement& e : r.c_) e = e * s;
    r.normalize();
    return r;
}

Poly Poly::operator/(const Poly& o) const { return euclidean_divide(*this, o).first; }

Poly Poly::operator%(const Poly& o) const { return euclidean_divide(*this, o).second; }

bool Poly::operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }

std::pair<Poly, Poly> euclidean_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const FiniteField* field = a.field();
    Poly q(field), r = a;
    const FieldElement lead_inv = field->inv(b.leading());
    std::vector<FieldElement> qc;
    if (r.degree() >= b.degree()) qc.assign(static_cast<std::size_t>(r.degree() - b.degree()) + 1, field->zero());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int shift = r.degree() - b.degree();
        const FieldElement c = r.leading() * lead_inv;
        qc[static_cast<std::size_t>(shift)] = c;
        r = r - (b * c).shifted(shift);
    }
    return {Poly(field, std::move(qc)), r};
}

Poly derivative(const Poly& a) {
    const FiniteField* field = a.field();
    std::vector<FieldElement> c;
    for (int i = 1; i <= a.degree(); ++i) c.push_back(a.coeff(i) * field->from_int(i));
    return Poly(field, std::move(c));
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

XgcdResult xgcd(const Poly& a, const Poly& b) {
    const FiniteField* field = a.field();
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("xgcd of two zero polynomials");
    if (a == b) {
        // convention for equal inputs: take the first argument alone
        FieldElement s = field->inv(a.leading());
        return {a.monic(), Poly::constant(s), Poly::zero(field)};
    }
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::one(field), u1 = Poly::zero(field);
    Poly v0 = Poly::zero(field), v1 = Poly::one(field);
    while (!r1.is_zero()) {
        auto [q, r2] = euclidean_divide(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        Poly u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        Poly v2 = v0 - q * v1;
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    const FieldElement s = field->inv(r0.leading());
    XgcdResult out{r0 * s, u0 * s, v0 * s};
#ifndef NDEBUG
    if (out.u * a + out.v * b != out.g) throw std::logic_error("bezout identity lost");
#endif
    return out;
}

Poly pow_mod(const Poly& base, long long e, const Poly& modulus) {
    Poly acc = Poly::one(base.field());
    Poly b = base % modulus;
    while (e > 0) {
        if (e & 1) acc = acc * b % modulus;
        b = b * b % modulus;
        e >>= 1;
    }
    return acc;
}

bool poly_order_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i).rep != b.coeff(i).rep) return a.coeff(i).rep < b.coeff(i).rep;
    }
    return false;
}

namespace {

// distinct irreducible factors of a squarefree monic polynomial
std::vector<Poly> berlekamp_squarefree(const Poly& f) {
    const FiniteField* field = f.field();
    const int n = f.degree();
    if (n == 1) return {f};
    const std::uint32_t q = field->size();

    // Berlekamp matrix: row i = coefficients of x^(iq) mod f
    FqMatrix m(field, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    const Poly xq = pow_mod(Poly::variable(field), q, f);
    Poly row = Poly::one(field);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = row.coeff(j);
        row = row * xq % f;
    }
    for (int i = 0; i < n; ++i)
        m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) =
            m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) - field->one();
    // kernel vectors of (Q - I)^T: v with v*(Q-I) = 0, i.e. v(x)^q = v(x) mod f
    const std::vector<std::vector<FieldElement>> kernel = m.left_kernel_basis();
    const std::size_t r = kernel.size();
    std::vector<Poly> factors = {f};
    if (r <= 1) return factors;

    for (const auto& vec : kernel) {
        if (factors.size() == r) break;
        Poly v(field, vec);
        if (v.is_constant()) continue;
        std::vector<Poly> next;
        for (const Poly& u : factors) {
            if (u.degree() == 1) {
                next.push_back(u);
                continue;
            }
            Poly rest = u;
            for (std::uint32_t s = 0; s < q && !rest.is_one(); ++s) {
                Poly g = gcd(rest, v - Poly::constant(field->from_rep(s)));
                if (g.degree() >= 1) {
                    rest = rest / g;
                    next.push_back(std::move(g));
                }
            }
            if (!rest.is_one()) next.push_back(rest);
        }
        factors = std::move(next);
    }
    if (factors.size() != r) throw std::logic_error("incomplete Berlekamp split");
    return factors;
}

// f(x) = u(x^p) for a p-th power; returns the p-th root of f
Poly pth_root(const Poly& f) {
    const FiniteField* field = f.field();
    const long p = field->characteristic();
    const long long root_exp = static_cast<long long>(field->size()) / p;
    std::vector<FieldElement> c;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p))
        c.push_back(field->pow(f.coeff(i), root_exp));
    return Poly(field, std::move(c));
}

void factor_into(const Poly& f, int outer_mult, std::map<std::vector<std::uint32_t>, std::pair<Poly, int>>& acc) {
    const FiniteField* field = f.field();
    Poly g = f.monic();
    if (g.degree() < 1) return;
    const Poly gp = derivative(g);
    if (gp.is_zero()) {
        factor_into(pth_root(g), outer_mult * static_cast<int>(field->characteristic()), acc);
        return;
    }
    const Poly w = g / gcd(g, gp);  // squarefree, missing factors with multiplicity divisible by p
    for (const Poly& h : berlekamp_squarefree(w)) {
        int mult = 0;
        while ((g % h).is_zero()) {
            g = g / h;
            ++mult;
        }
        std::vector<std::uint32_t> key;
        for (const FieldElement& e : h.coeffs()) key.push_back(e.rep);
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(std::move(key), std::make_pair(h, mult * outer_mult));
        else
            it->second.second += mult * outer_mult;
    }
    factor_into(g, outer_mult, acc);
}

}  // namespace

std::vector<std::pair<Poly, int>> berlekamp_factor(const Poly& f) {
    if (f.is_zero() || f.degree() < 1) throw std::invalid_argument("factorization needs degree >= 1");
    std::map<std::vector<std::uint32_t>, std::pair<Poly, int>> acc;
    factor_into(f, 1, acc);
    std::vector<std::pair<Poly, int>> out;
    for (auto& [key, val] : acc) out.push_back(std::move(val));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return poly_order_less(a.first, b.first); });
    return out;
}

std::vector<Poly> quotient_idempotents(const Poly& f) {
    const auto factors = berlekamp_factor(f);
    for (const auto& [h, mult] : factors)
        if (mult > 1) throw std::invalid_argument("quotient idempotents need a squarefree modulus");
    const Poly fm = f.monic();
    std::vector<Poly> out;
    for (const auto& [h, mult] : factors) {
        const Poly cofactor = fm / h;
        const XgcdResult bez = xgcd(cofactor, h);
        if (!bez.g.is_one()) throw std::logic_error("factors are not coprime");
        out.push_back(bez.u * cofactor % fm);
    }
    return out;
}

std::pair<std::vector<Poly>, std::vector<Poly>> normal_dual_bases_mod(const Poly& modulus) {
    const FiniteField* field = modulus.field();
    const int t = modulus.degree();
    if (t < 1) throw std::invalid_argument("modulus must have degree >= 1");
    const std::uint32_t q = field->size();

    auto frob = [&](const Poly& a) { return pow_mod(a, q, modulus); };
    auto trace_mod = [&](Poly a) {
        Poly acc = Poly::zero(field);
        for (int i = 0; i < t; ++i) {
            acc = acc + a;
            a = frob(a);
        }
        if (!acc.is_constant()) throw std::logic_error("trace left the base field");
        return acc.coeff(0);
    };

    // digits in discrete-log order of the coefficient field
    std::vector<FieldElement> digit(q, field->zero());
    for (std::uint32_t i = 1; i < q; ++i)
        digit[i] = q == 2 ? field->one() : field->from_power(i - 1);

    std::uint64_t total = 1;
    for (int i = 0; i < t; ++i) total *= q;

    for (std::uint64_t m = 1; m < total; ++m) {
        std::vector<FieldElement> coords;
        std::uint64_t enc = m;
        for (int i = 0; i < t; ++i) {
            coords.push_back(digit[static_cast<std::size_t>(enc % q)]);
            enc /= q;
        }
        const Poly a(field, std::move(coords));

        std::vector<Poly> basis(static_cast<std::size_t>(t));
        basis[0] = a;
        for (int i = 1; i < t; ++i) basis[i] = frob(basis[i - 1]);

        FqMatrix gram(field, static_cast<std::size_t>(t), static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                gram.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    trace_mod(basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(j)] % modulus);
        auto inv = gram.inverse();
        if (!inv) continue;

        Poly b = Poly::zero(field);
        for (int j = 0; j < t; ++j)
            b = b + basis[static_cast<std::size_t>(j)] * inv->at(static_cast<std::size_t>(j), 0);
        std::vector<Poly> dual(static_cast<std::size_t>(t));
        dual[0] = b % modulus;
        for (int i = 1; i < t; ++i) dual[i] = frob(dual[i - 1]);

        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) {
                FieldElement tr = trace_mod(basis[static_cast<std::size_t>(i)] * dual[static_cast<std::size_t>(j)] % modulus);
                FieldElement expect = i == j ? field->one() : field->zero();
                if (tr != expect) throw std::logic_error("dual basis verification failed");
            }
        return {basis, dual};
    }
    throw std::logic_error("no normal element found");
}

}  // namespace skewideal
