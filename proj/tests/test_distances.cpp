#include <doctest.h>

#include "worked_examples.hpp"
#include "skewideal/distances.hpp"
#include "skewideal/ideal_code.hpp"

using namespace skewideal;

namespace {

// Fully independent column-distance oracle: expand the truncated message ->
// codeword map as one F_q-linear matrix and enumerate every message tuple.
int column_distance_oracle(const PolyMatrix& encoder, int j) {
    const FiniteField& f = *encoder.field();
    const std::size_t k = encoder.rows(), n = encoder.cols();
    const std::size_t rows = k * static_cast<std::size_t>(j + 1);
    const std::size_t cols = n * static_cast<std::size_t>(j + 1);
    // sliding block matrix: block (s, t) is the z^(t-s) coefficient matrix
    std::vector<std::vector<FieldElement>> big(rows, std::vector<FieldElement>(cols, f.zero()));
    for (int s = 0; s <= j; ++s)
        for (int t = s; t <= j; ++t)
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    big[s * k + r][t * n + c] = encoder.at(r, c).coeff(t - s);

    std::uint64_t qk = 1;
    for (std::size_t i = 0; i < k; ++i) qk *= f.size();
    std::uint64_t total = 1;
    for (int i = 0; i <= j; ++i) total *= qk;
    REQUIRE(total <= (1ull << 16) * qk);

    int best = INT_MAX;
    for (std::uint64_t msg = 1; msg < total; ++msg) {
        std::vector<FieldElement> u(rows, f.zero());
        std::uint64_t enc = msg;
        for (std::size_t i = 0; i < rows; ++i) {
            u[i] = f.from_rep(static_cast<std::uint32_t>(enc % f.size()));
            enc /= f.size();
        }
        bool head_zero = true;
        for (std::size_t i = 0; i < k; ++i)
            if (!u[i].is_zero()) head_zero = false;
        if (head_zero) continue;
        int w = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            FieldElement acc = f.zero();
            for (std::size_t r = 0; r < rows; ++r)
                if (!u[r].is_zero() && !big[r][c].is_zero()) acc = acc + u[r] * big[r][c];
            if (!acc.is_zero()) ++w;
        }
        best = std::min(best, w);
    }
    return best;
}

}  // namespace

TEST_CASE("identity encoder distances") {
    const FieldPtr f = make_field(2, 2, {1, 1, 1});
    const PolyMatrix id = PolyMatrix::identity(f.get(), 3);
    CHECK(code_degree(id) == 0);
    CHECK(column_distance(id, 0) == 1);
    CHECK(column_distance_serial(id, 0) == 1);
    CHECK(row_distance(id, 0) == 1);
    const CodeProfile prof = free_distance(id, 4);
    CHECK(prof.certificate == CodeProfile::Certificate::sandwich);
    CHECK(prof.free_distance() == 1);
    CHECK(prof.column_distances.size() == 1);  // settled at j = 0
}

TEST_CASE("rank-deficient encoders are rejected") {
    const FieldPtr f = make_field(2, 1);
    PolyMatrix m(f.get(), 2, 3);
    m.at(0, 0) = Poly::one(f.get());
    m.at(1, 0) = Poly::one(f.get());
    CHECK_THROWS_AS(code_degree(m), std::invalid_argument);
}

TEST_CASE("search caps bound the enumeration") {
    const FieldPtr f = make_field(2, 2, {1, 1, 1});
    const PolyMatrix id = PolyMatrix::identity(f.get(), 4);
    CHECK_THROWS_AS(column_distance(id, 8, /*cap=*/1024), std::invalid_argument);
    CHECK_THROWS_AS(row_distance(id, 8, /*cap=*/1024), std::invalid_argument);
}

TEST_CASE("commutative example profile") {
    const auto ex = worked_examples::make_commutative();
    const auto sep = lift_to_ore(build_separability(*ex.algebra, ex.ring->sigma(), nullptr, {}), *ex.ring);
    const IdealCode code = compute_idempotent({ex.g}, sep);
    const PolyMatrix& enc = basic_encoder(code);

    CHECK(code_degree(enc) == 2);
    CHECK(generalized_singleton_bound(5, 3, 2) == 5);
    CHECK(column_distance(enc, 0) == 3);
    CHECK(column_distance(enc, 1) == 4);
    CHECK(column_distance(enc, 2) == 5);
    CHECK(row_distance(enc, 0) >= 5);

    const CodeProfile prof = free_distance(enc, 4);
    CHECK(prof.certificate == CodeProfile::Certificate::mds);
    CHECK(prof.free_distance() == 5);
    CHECK(prof.singleton_bound == 5);
    CHECK(prof.degree == 2);
    CHECK(prof.column_distances == std::vector<int>{3, 4, 5});
}

TEST_CASE("matrix example profile") {
    const auto ex = worked_examples::make_matrix_example();
    StrategyOptions opt;
    opt.strategy = Strategy::average;
    const auto sep = lift_to_ore(build_separability(*ex.algebra, ex.ring->sigma(), nullptr, opt), *ex.ring);
    const IdealCode code = compute_idempotent({ex.g}, sep);
    const PolyMatrix& enc = basic_encoder(code);

    CHECK(column_distance(enc, 0) == 1);
    CHECK(column_distance(enc, 1) == 3);
    CHECK(column_distance(enc, 2) == 4);
    CHECK(row_distance(enc, 0) == 4);

    const int degree = code_degree(enc);
    const int bound = generalized_singleton_bound(4, 2, degree);
    CHECK(4 <= bound);

    const CodeProfile prof = free_distance(enc, 4);
    CHECK(prof.certificate == CodeProfile::Certificate::sandwich);
    CHECK(prof.free_distance() == 4);
    CHECK(prof.column_distances == std::vector<int>{1, 3, 4});
    CHECK(prof.row_distances == std::vector<int>{4});
}

TEST_CASE("serial reference and stratified kernel agree") {
    const auto ex = worked_examples::make_commutative();
    const auto sep = lift_to_ore(build_separability(*ex.algebra, ex.ring->sigma(), nullptr, {}), *ex.ring);
    const PolyMatrix enc = basic_encoder(compute_idempotent({ex.g}, sep));
    for (int j = 0; j <= 2; ++j) {
        CHECK(column_distance(enc, j) == column_distance_serial(enc, j));
        CHECK(row_distance(enc, j) == row_distance_serial(enc, j));
    }

    const auto mx = worked_examples::make_matrix_example();
    StrategyOptions opt;
    opt.strategy = Strategy::average;
    const auto sep2 = lift_to_ore(build_separability(*mx.algebra, mx.ring->sigma(), nullptr, opt), *mx.ring);
    const PolyMatrix enc2 = basic_encoder(compute_idempotent({mx.g}, sep2));
    for (int j = 0; j <= 2; ++j) {
        CHECK(column_distance(enc2, j) == column_distance_serial(enc2, j));
        CHECK(row_distance(enc2, j) == row_distance_serial(enc2, j));
    }
}

TEST_CASE("column distances agree with the sliding-matrix oracle") {
    const auto ex = worked_examples::make_commutative();
    const auto sep = lift_to_ore(build_separability(*ex.algebra, ex.ring->sigma(), nullptr, {}), *ex.ring);
    const PolyMatrix enc = basic_encoder(compute_idempotent({ex.g}, sep));
    for (int j = 0; j <= 1; ++j) CHECK(column_distance(enc, j) == column_distance_oracle(enc, j));

    const auto mx = worked_examples::make_matrix_example();
    StrategyOptions opt;
    opt.strategy = Strategy::average;
    const auto sep2 = lift_to_ore(build_separability(*mx.algebra, mx.ring->sigma(), nullptr, opt), *mx.ring);
    const PolyMatrix enc2 = basic_encoder(compute_idempotent({mx.g}, sep2));
    for (int j = 0; j <= 1; ++j) CHECK(column_distance(enc2, j) == column_distance_oracle(enc2, j));

    const FieldPtr f = make_field(2, 2, {1, 1, 1});
    const PolyMatrix id = PolyMatrix::identity(f.get(), 3);
    CHECK(column_distance(id, 1) == column_distance_oracle(id, 1));
}

TEST_CASE("distance monotonicity on the worked examples") {
    const auto ex = worked_examples::make_commutative();
    const auto sep = lift_to_ore(build_separability(*ex.algebra, ex.ring->sigma(), nullptr, {}), *ex.ring);
    const PolyMatrix enc = basic_encoder(compute_idempotent({ex.g}, sep));
    int prev_c = 0;
    int prev_r = INT_MAX;
    for (int j = 0; j <= 2; ++j) {
        const int dc = column_distance(enc, j);
        const int dr = row_distance(enc, j);
        CHECK(dc >= prev_c);
        CHECK(dr <= prev_r);
        CHECK(dc <= dr);
        prev_c = dc;
        prev_r = dr;
    }
}
