#include <doctest.h>

#include <random>

#include "skewideal/format.hpp"
#include "skewideal/poly.hpp"

using namespace skewideal;

namespace {

FieldPtr f4() { return make_field(2, 2, {1, 1, 1}); }

Poly rand_poly(const FiniteField* f, int max_deg, std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(-1, max_deg);
    std::uniform_int_distribution<std::uint32_t> rep(0, f->size() - 1);
    const int d = deg(rng);
    std::vector<FieldElement> c;
    for (int i = 0; i <= d; ++i) c.push_back(f->from_rep(rep(rng)));
    return Poly(f, std::move(c));
}

}  // namespace

TEST_CASE("euclidean division") {
    const FieldPtr f = f4();
    const Poly a = parse_poly(*f, "x^5 + 1", "x");
    const Poly b = parse_poly(*f, "x + 1", "x");
    const auto [q, r] = euclidean_divide(a, b);
    CHECK(q == parse_poly(*f, "x^4 + x^3 + x^2 + x + 1", "x"));
    CHECK(r.is_zero());

    const Poly any = parse_poly(*f, "a x^2 + a^2", "x");
    const auto [q1, r1] = euclidean_divide(any, Poly::one(f.get()));
    CHECK(q1 == any);
    CHECK(r1.is_zero());

    const auto [q2, r2] =
        euclidean_divide(parse_poly(*f, "x^2 + a x + 1", "x"), parse_poly(*f, "x^2 + a^2 x + 1", "x"));
    CHECK(q2 == Poly::one(f.get()));
    CHECK(r2 == parse_poly(*f, "x", "x"));  // (a + a^2) x = x

    CHECK_THROWS_AS(euclidean_divide(any, Poly::zero(f.get())), std::domain_error);
}

TEST_CASE("extended gcd") {
    const FieldPtr f = f4();
    const Poly x1 = parse_poly(*f, "x + 1", "x");
    const auto eq = xgcd(x1, x1);
    CHECK(eq.g == x1);
    CHECK(eq.u == Poly::one(f.get()));
    CHECK(eq.v.is_zero());

    const Poly k1 = parse_poly(*f, "x^2 + a x + 1", "x");
    const auto co = xgcd(x1, k1);
    CHECK(co.g.is_one());
    CHECK(co.u * x1 + co.v * k1 == co.g);

    const auto zb = xgcd(Poly::zero(f.get()), parse_poly(*f, "a x^2 + x", "x"));
    CHECK(zb.g == parse_poly(*f, "x^2 + a^2 x", "x"));
    CHECK(zb.u.is_zero());
    CHECK(zb.v == Poly::constant(f->inv(f->primitive_element())));

    std::mt19937 rng(21);
    for (int i = 0; i < 200; ++i) {
        Poly a = rand_poly(f.get(), 6, rng), b = rand_poly(f.get(), 6, rng);
        if (a.is_zero() && b.is_zero()) continue;
        const auto r = xgcd(a, b);
        CHECK(r.u * a + r.v * b == r.g);
        if (!a.is_zero()) CHECK((a % r.g).is_zero());
        if (!b.is_zero()) CHECK((b % r.g).is_zero());
    }
}

TEST_CASE("factorization of x^5 - 1 over F_4") {
    const FieldPtr f = f4();
    const auto factors = berlekamp_factor(parse_poly(*f, "x^5 + 1", "x"));
    REQUIRE(factors.size() == 3);
    CHECK(factors[0].first == parse_poly(*f, "x + 1", "x"));
    CHECK(factors[0].second == 1);
    CHECK(factors[1].first == parse_poly(*f, "x^2 + a x + 1", "x"));
    CHECK(factors[1].second == 1);
    CHECK(factors[2].first == parse_poly(*f, "x^2 + a^2 x + 1", "x"));
    CHECK(factors[2].second == 1);
}

TEST_CASE("factorization edge cases") {
    const FieldPtr f2 = make_field(2, 1);
    const auto lin = berlekamp_factor(parse_poly(*f2, "x + 1", "x"));
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].first == parse_poly(*f2, "x + 1", "x"));
    CHECK(lin[0].second == 1);

    // x^2 + 1 = (x + 1)^2 in characteristic 2 (derivative vanishes)
    const auto sq = berlekamp_factor(parse_poly(*f2, "x^2 + 1", "x"));
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].first == parse_poly(*f2, "x + 1", "x"));
    CHECK(sq[0].second == 2);

    // x^8 + x = product of all monic irreducibles of degree dividing 3
    const auto all3 = berlekamp_factor(parse_poly(*f2, "x^8 + x", "x"));
    REQUIRE(all3.size() == 4);
    CHECK(all3[0].first == parse_poly(*f2, "x", "x"));
    CHECK(all3[1].first == parse_poly(*f2, "x + 1", "x"));
    // within a degree, ordering is by ascending coefficient sequence
    CHECK(all3[2].first == parse_poly(*f2, "x^3 + x^2 + 1", "x"));
    CHECK(all3[3].first == parse_poly(*f2, "x^3 + x + 1", "x"));

    CHECK_THROWS_AS(berlekamp_factor(Poly::zero(f2.get())), std::invalid_argument);
}

TEST_CASE("factor product reassembles the input") {
    std::mt19937 rng(5);
    for (const FieldPtr& f : {make_field(2, 1), f4(), make_field(2, 3, {1, 1, 0, 1})}) {
        for (int i = 0; i < 70; ++i) {
            Poly p = rand_poly(f.get(), 8, rng);
            if (p.degree() < 1) continue;
            Poly prod = Poly::one(f.get());
            for (const auto& [h, mult] : berlekamp_factor(p)) {
                CHECK(h.is_monic());
                for (int m = 0; m < mult; ++m) prod = prod * h;
            }
            CHECK(prod == p.monic());
        }
    }
}

TEST_CASE("quotient idempotents") {
    const FieldPtr f = f4();
    const Poly mod = parse_poly(*f, "x^5 + 1", "x");
    const auto es = quotient_idempotents(mod);
    REQUIRE(es.size() == 3);
    CHECK(es[0] == parse_poly(*f, "x^4 + x^3 + x^2 + x + 1", "x"));
    Poly sum = Poly::zero(f.get());
    for (std::size_t i = 0; i < es.size(); ++i) {
        CHECK((es[i] * es[i] % mod) == es[i]);
        for (std::size_t j = 0; j < es.size(); ++j)
            if (i != j) CHECK((es[i] * es[j] % mod).is_zero());
        sum = sum + es[i];
    }
    CHECK((sum % mod).is_one());

    const FieldPtr f2 = make_field(2, 1);
    const auto e2 = quotient_idempotents(parse_poly(*f2, "x^2 + x", "x"));
    REQUIRE(e2.size() == 2);
    CHECK(e2[0] == parse_poly(*f2, "x + 1", "x"));
    CHECK(e2[1] == parse_poly(*f2, "x", "x"));

    CHECK(quotient_idempotents(parse_poly(*f2, "x^3 + x + 1", "x")) ==
          std::vector<Poly>{Poly::one(f2.get())});

    CHECK_THROWS_AS(quotient_idempotents(parse_poly(*f2, "x^2 + 1", "x")), std::invalid_argument);
}

TEST_CASE("odd characteristic arithmetic") {
    const FieldPtr f3 = make_field(3, 1);
    const auto roots = berlekamp_factor(parse_poly(*f3, "x^3 + a x", "x"));  // x^3 - x
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].first == parse_poly(*f3, "x", "x"));
    // remaining factors are x + 1 and x + 2
    CHECK(roots[1].first.degree() == 1);
    CHECK(roots[2].first.degree() == 1);

    const FieldPtr f9 = make_field(3, 2);
    std::mt19937 rng(61);
    std::uniform_int_distribution<std::uint32_t> rep(0, 8);
    for (int i = 0; i < 50; ++i) {
        std::vector<FieldElement> ca, cb;
        for (int d = 0; d < 4; ++d) {
            ca.push_back(f9->from_rep(rep(rng)));
            cb.push_back(f9->from_rep(rep(rng)));
        }
        const Poly a(f9.get(), ca), b(f9.get(), cb);
        if (b.is_zero()) continue;
        const auto [q, r] = euclidean_divide(a, b);
        CHECK(q * b + r == a);
        if (!r.is_zero()) CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("normal dual bases of quotient fields") {
    const FieldPtr f = f4();
    // degree-one block: {1} is self-dual
    const auto [b0, d0] = normal_dual_bases_mod(parse_poly(*f, "x + 1", "x"));
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].is_one());
    CHECK(d0[0].is_one());

    // degree-two block over F_4
    const auto [b1, d1] = normal_dual_bases_mod(parse_poly(*f, "x^2 + a x + 1", "x"));
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == parse_poly(*f, "x", "x"));
    CHECK(b1[1] == parse_poly(*f, "x + a", "x"));  // x^4 reduced
    CHECK(d1[0] == parse_poly(*f, "a x", "x"));
    CHECK(d1[1] == parse_poly(*f, "a x + a^2", "x"));  // (a x)^4 reduced
}
