// End-to-end acceptance suite. Each criterion prints one pass/fail line;
// the exit status is the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>

#include "worked_examples.hpp"
#include "skewideal/config.hpp"
#include "skewideal/distances.hpp"
#include "skewideal/format.hpp"

using namespace skewideal;
using Clock = std::chrono::steady_clock;

namespace {

struct Harness {
    int failed = 0;

    void run(int idx, const std::string& name, double time_limit_s,
             const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        const auto start = Clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (time_limit_s > 0 && secs > time_limit_s) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("time limit exceeded");
        }
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", idx, name.c_str(), secs,
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failed;
    }
};

bool expect(bool cond, const std::string& what, std::string& detail) {
    if (!cond && detail.empty()) detail = what;
    return cond;
}

OreTensorElement lifted(const Job& job) {
    const LinearMap* delta = job.ring->has_delta() ? &job.ring->delta() : nullptr;
    return lift_to_ore(build_separability(*job.algebra, job.ring->sigma(), delta, job.strategy), *job.ring);
}

bool commutative_end_to_end(std::string& detail) {
    const Job job = load_config_file(worked_examples::fixture_path("ccc_f4_x5.json"));
    const IdealCode code = compute_idempotent(job.generators, lifted(job));
    bool ok = expect(code.basic, "smith form not basic", detail);
    ok = expect(code.k == 3, "k != 3", detail) && ok;
    ok = expect(job.algebra->dim() == 5, "n != 5", detail) && ok;
    ok = expect(code_degree(basic_encoder(code)) == 2, "degree != 2", detail) && ok;
    const OrePolynomial& e = code.idempotent;
    ok = expect(e * e == e, "e^2 != e", detail) && ok;
    for (const auto& g : code.generators)
        ok = expect((g * code.complement).is_zero(), "g(1-e) != 0", detail) && ok;
    ok = expect(same_row_space(generator_matrix({e}), code.generator_mat), "Re != I", detail) && ok;
    const OrePolynomial e_ref = parse_ore_polynomial(*job.ring, worked_examples::commutative_e);
    ok = expect(e_ref * e_ref == e_ref, "reference e not idempotent", detail) && ok;
    ok = expect(same_row_space(generator_matrix({e_ref}), code.generator_mat),
                "reference e spans a different ideal", detail) &&
         ok;
    return ok;
}

bool commutative_distances(std::string& detail) {
    const Job job = load_config_file(worked_examples::fixture_path("ccc_f4_x5.json"));
    const IdealCode code = compute_idempotent(job.generators, lifted(job));
    const CodeProfile prof = free_distance(basic_encoder(code), 4);
    bool ok = expect(prof.column_distances == std::vector<int>{3, 4, 5}, "column distances wrong", detail);
    ok = expect(prof.singleton_bound == 5, "singleton bound != 5", detail) && ok;
    ok = expect(prof.certificate == CodeProfile::Certificate::mds, "certificate is not MDS", detail) && ok;
    ok = expect(prof.certified() && prof.free_distance() == 5, "free distance != 5", detail) && ok;
    return ok;
}

bool matrix_end_to_end(std::string& detail) {
    const Job job = load_config_file(worked_examples::fixture_path("m2f8.json"));
    const PolyMatrix mg = generator_matrix(job.generators);
    bool ok = expect(mg == parse_poly_matrix(*job.field, worked_examples::matrix_mg),
                     "generator matrix differs from the reference", detail);

    // reference transforms satisfy P M(g) Q = diag(1, 1, 0, 0)
    const PolyMatrix p_ref = parse_poly_matrix(*job.field, worked_examples::matrix_p);
    const PolyMatrix q_ref = parse_poly_matrix(*job.field, worked_examples::matrix_q);
    PolyMatrix h(job.field.get(), 4, 4);
    h.at(0, 0) = Poly::one(job.field.get());
    h.at(1, 1) = Poly::one(job.field.get());
    ok = expect(p_ref * mg * q_ref == h, "reference decomposition identity fails", detail) && ok;

    const IdealCode code = compute_idempotent(job.generators, lifted(job));
    ok = expect(code.basic && code.k == 2 && job.algebra->dim() == 4, "(n, k) != (4, 2)", detail) && ok;
    ok = expect(code.idempotent * code.idempotent == code.idempotent, "e^2 != e", detail) && ok;
    for (const auto& g : code.generators)
        ok = expect((g * code.complement).is_zero(), "g(1-e) != 0", detail) && ok;
    ok = expect(same_row_space(generator_matrix({code.idempotent}), code.generator_mat), "Re != I",
                detail) &&
         ok;
    const OrePolynomial e_ref = parse_ore_polynomial(*job.ring, worked_examples::matrix_e);
    ok = expect(e_ref * e_ref == e_ref, "reference e not idempotent", detail) && ok;
    ok = expect(same_row_space(generator_matrix({e_ref}), code.generator_mat),
                "reference e spans a different ideal", detail) &&
         ok;

    const CodeProfile prof = free_distance(basic_encoder(code), 4);
    ok = expect(prof.column_distances == std::vector<int>{1, 3, 4}, "column distances wrong", detail) && ok;
    ok = expect(!prof.row_distances.empty() && prof.row_distances[0] == 4, "d^r_0 != 4", detail) && ok;
    ok = expect(prof.certificate == CodeProfile::Certificate::sandwich, "certificate is not sandwich",
                detail) &&
         ok;
    ok = expect(prof.certified() && prof.free_distance() == 4, "free distance != 4", detail) && ok;
    return ok;
}

bool separability_constructions(std::string& detail) {
    // (a) automatic construction on the commutative example, term for term
    const auto ex = worked_examples::make_commutative();
    const TensorElement p = build_separability(*ex.algebra, ex.ring->sigma(), nullptr, {});
    const auto expected = worked_examples::commutative_sep_terms();
    bool ok = expect(p.pairs.size() == expected.size(), "commutative term count", detail);
    for (std::size_t i = 0; ok && i < expected.size(); ++i) {
        ok = expect(p.pairs[i].first == parse_algebra_element(*ex.algebra, expected[i].first) &&
                        p.pairs[i].second == parse_algebra_element(*ex.algebra, expected[i].second),
                    "commutative term " + std::to_string(i) + " differs", detail) &&
             ok;
    }

    // (b) averaging on the matrix algebra, term for term
    const auto mx = worked_examples::make_matrix_example();
    StrategyOptions avg;
    avg.strategy = Strategy::average;
    avg.seed = Strategy::matrix_units;
    const TensorElement pm = build_separability(*mx.algebra, mx.ring->sigma(), nullptr, avg);
    const auto expected_m = worked_examples::matrix_sep_terms();
    ok = expect(pm.pairs.size() == expected_m.size(), "matrix term count", detail) && ok;
    for (std::size_t i = 0; ok && i < expected_m.size(); ++i) {
        ok = expect(pm.pairs[i].first == worked_examples::elem(*mx.algebra, expected_m[i].first) &&
                        pm.pairs[i].second == worked_examples::elem(*mx.algebra, expected_m[i].second),
                    "matrix term " + std::to_string(i) + " differs", detail) &&
             ok;
    }

    // (c) both pass the separability, invariance and annihilation checks
    for (const TensorElement* t : {&p, &pm})
        ok = expect(check_separability(*t).passed(), "separability check fails", detail) && ok;
    ok = expect(tensor_sigma_twist(p, ex.ring->sigma()) == p, "commutative element not invariant", detail) && ok;
    ok = expect(tensor_sigma_twist(pm, mx.ring->sigma()) == pm, "matrix element not invariant", detail) && ok;
    const LinearMap z1 = LinearMap::zero_derivation(*ex.algebra, ex.ring->sigma());
    const LinearMap z2 = LinearMap::zero_derivation(*mx.algebra, mx.ring->sigma());
    ok = expect(tensor_delta_twist(p, ex.ring->sigma(), z1).is_zero(), "delta twist nonzero", detail) && ok;
    ok = expect(tensor_delta_twist(pm, mx.ring->sigma(), z2).is_zero(), "delta twist nonzero", detail) && ok;
    return ok;
}

bool counterexample_regression(std::string& detail) {
    const auto sw = worked_examples::make_swap_example();
    const OreRing& ring = *sw.ring;
    const Algebra& a = *sw.algebra;
    const OrePolynomial alpha = OrePolynomial(&ring, {a.unit(), a.basis_element(0)});
    const OrePolynomial v0 = OrePolynomial::constant(&ring, a.basis_element(0));
    const OrePolynomial v1 = OrePolynomial::constant(&ring, a.basis_element(1));
    const OrePolynomial z = OrePolynomial::z(&ring);

    bool ok = expect((v0 * alpha).is_zero(), "(1,0) alpha != 0", detail);
    ok = expect(v1 * alpha == alpha, "(0,1) alpha != alpha", detail) && ok;
    const OrePolynomial za = z * alpha;
    ok = expect(za == OrePolynomial(&ring, {a.zero(), a.unit(), a.basis_element(0)}),
                "z alpha != z^2 (1,0) + z", detail) &&
         ok;
    ok = expect(!za.is_zero(), "z alpha vanished", detail) && ok;
    ok = expect((v1 * za).is_zero(), "(0,1) z alpha != 0", detail) && ok;
    return ok;
}

bool property_suites(std::string& detail) {
    std::mt19937 rng(2024);
    bool ok = true;

    // Smith decompositions of random matrices
    for (const FieldPtr& f :
         {make_field(2, 1), make_field(2, 2, {1, 1, 1}), make_field(2, 3, {1, 1, 0, 1})}) {
        std::uniform_int_distribution<std::size_t> size(1, 6);
        std::uniform_int_distribution<int> deg(-1, 4);
        std::uniform_int_distribution<std::uint32_t> rep(0, f->size() - 1);
        for (int t = 0; t < 100; ++t) {
            PolyMatrix m(f.get(), size(rng), size(rng));
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) {
                    const int d = deg(rng);
                    std::vector<FieldElement> coeffs;
                    for (int i = 0; i <= d; ++i) coeffs.push_back(f->from_rep(rep(rng)));
                    m.at(r, c) = Poly(f.get(), std::move(coeffs));
                }
            const SmithDecomposition dec = smith_normal_form(m);
            ok = expect(dec.p * m * dec.q == dec.h, "smith identity fails", detail) && ok;
            const Poly dp = determinant(dec.p);
            const Poly dq = determinant(dec.q);
            ok = expect(dp.degree() == 0 && dq.degree() == 0, "transform not unimodular", detail) && ok;
            ok = expect(dec.q * dec.q_inv == PolyMatrix::identity(f.get(), m.cols()),
                        "q inverse fails", detail) &&
                 ok;
            for (std::size_t i = 0; i + 1 < dec.rank; ++i)
                ok = expect((dec.h.at(i + 1, i + 1) % dec.h.at(i, i)).is_zero(),
                            "divisibility chain fails", detail) &&
                     ok;
            if (!ok) return ok;
        }
    }

    // Ore associativity across the three twisted rings
    const auto commutative = worked_examples::make_commutative();
    const auto matrix = worked_examples::make_matrix_example();
    const auto swap = worked_examples::make_swap_example();
    for (const OreRing* ring : {commutative.ring.get(), matrix.ring.get(), swap.ring.get()}) {
        const Algebra& alg = *ring->algebra();
        std::uniform_int_distribution<int> deg(-1, 3);
        std::uniform_int_distribution<std::uint32_t> rep(0, alg.field()->size() - 1);
        auto rand_ore = [&] {
            const int d = deg(rng);
            std::vector<AlgebraElement> c;
            for (int i = 0; i <= d; ++i) {
                std::vector<FieldElement> coords;
                for (std::size_t j = 0; j < alg.dim(); ++j)
                    coords.push_back(alg.field()->from_rep(rep(rng)));
                c.push_back(alg.from_coords(std::move(coords)));
            }
            return OrePolynomial(ring, std::move(c));
        };
        for (int t = 0; t < 200; ++t) {
            const OrePolynomial f = rand_ore(), g = rand_ore(), h = rand_ore();
            ok = expect((f * g) * h == f * (g * h), "ore associativity fails", detail) && ok;
            if (!ok) return ok;
        }
    }

    // algebra associativity for every constructor on random triples
    const FieldPtr f4 = make_field(2, 2, {1, 1, 1});
    const AlgebraPtr group_alg =
        construct_algebra(f4.get(), AlgebraSpec::group({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
    const AlgebraPtr raw_alg = [&] {
        const FieldElement o = f4->one(), zr = f4->zero();
        std::vector<std::vector<FieldElement>> t = {{o, zr}, {zr, o}, {zr, o}, {o, o}};
        return construct_algebra(f4.get(), AlgebraSpec::raw(2, t, {o, zr}));
    }();
    for (const Algebra* alg : {commutative.algebra.get(), matrix.algebra.get(), swap.algebra.get(),
                               group_alg.get(), raw_alg.get()}) {
        std::uniform_int_distribution<std::uint32_t> rep(0, alg->field()->size() - 1);
        auto rand_elem = [&] {
            std::vector<FieldElement> c;
            for (std::size_t j = 0; j < alg->dim(); ++j) c.push_back(alg->field()->from_rep(rep(rng)));
            return alg->from_coords(std::move(c));
        };
        for (int t = 0; t < 200; ++t) {
            const AlgebraElement x = rand_elem(), y = rand_elem(), z = rand_elem();
            ok = expect((x * y) * z == x * (y * z), "algebra associativity fails", detail) && ok;
            if (!ok) return ok;
        }
    }

    // dual-basis identity for binary towers
    for (int t = 1; t <= 6; ++t) {
        const FieldPtr f = make_field(2, t);
        const auto [nb, db] = normal_dual_bases(*f, 2);
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) {
                const FieldElement tr = trace(nb[i] * db[j], 2);
                ok = expect(tr == (i == j ? f->one() : f->zero()), "dual basis identity fails", detail) && ok;
            }
        if (!ok) return ok;
    }

    // twisting a separability element yields a separability element
    const TensorElement p = build_separability(*commutative.algebra, commutative.ring->sigma(), nullptr, {});
    TensorElement moved = p;
    for (int i = 0; i < 4; ++i) {
        moved = tensor_sigma_twist(moved, commutative.ring->sigma());
        ok = expect(check_separability(moved).passed(), "twist is not a separability element", detail) && ok;
    }

    // group elements for the cyclic groups; the even-order group is refused
    StrategyOptions grp;
    grp.strategy = Strategy::group;
    ok = expect(check_separability(
                    build_separability(*group_alg, LinearMap::identity(*group_alg), nullptr, grp))
                    .passed(),
                "C_3 group element fails", detail) &&
         ok;
    std::vector<std::vector<int>> c5(5, std::vector<int>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) c5[i][j] = (i + j) % 5;
    const AlgebraPtr a5 = construct_algebra(f4.get(), AlgebraSpec::group(c5));
    ok = expect(
             check_separability(build_separability(*a5, LinearMap::identity(*a5), nullptr, grp)).passed(),
             "C_5 group element fails", detail) &&
         ok;
    auto s3_mul = [](int x, int y) {
        const int rx = x % 3, sx = x / 3, ry = y % 3, sy = y / 3;
        return ((sx + sy) % 2) * 3 + (((sy ? -rx : rx) + ry) % 3 + 3) % 3;
    };
    std::vector<std::vector<int>> s3(6, std::vector<int>(6));
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) s3[x][y] = s3_mul(x, y);
    const AlgebraPtr a6 = construct_algebra(f4.get(), AlgebraSpec::group(s3));
    bool threw = false;
    try {
        build_separability(*a6, LinearMap::identity(*a6), nullptr, grp);
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    ok = expect(threw, "even group order was not refused", detail) && ok;
    return ok;
}

bool negative_path(std::string& detail) {
    const Job job = load_config_file(worked_examples::fixture_path("nonbasic.json"));
    const IdealCode code = compute_idempotent(job.generators, lifted(job));
    bool ok = expect(!code.basic, "degenerate ideal was reported basic", detail);
    ok = expect(code.idempotent.is_zero(), "an idempotent was produced anyway", detail) && ok;
    bool threw = false;
    try {
        parity_check_matrix(code);
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    ok = expect(threw, "parity check did not refuse", detail) && ok;
    return ok;
}

}  // namespace

int main() {
    Harness h;
    h.run(1, "commutative example end to end", 10.0, commutative_end_to_end);
    h.run(2, "commutative example distances", 30.0, commutative_distances);
    h.run(3, "matrix example end to end", 60.0, matrix_end_to_end);
    h.run(4, "separability constructions", 0.0, separability_constructions);
    h.run(5, "twisted split-ring regression", 0.0, counterexample_regression);
    h.run(6, "randomized property suites", 0.0, property_suites);
    h.run(7, "non-basic inputs are refused", 0.0, negative_path);
    if (h.failed == 0) std::puts("all criteria passed");
    return h.failed;
}
