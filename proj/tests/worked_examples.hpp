// Worked reference data for the two fully computed examples used across the
// test suites: a sigma-cyclic code over F_4[x]/(x^5 - 1) and an ideal code
// over M_2(F_8). All values are transcribed fixtures; tests check the
// library against them.
#ifndef SKEWIDEAL_TESTS_WORKED_EXAMPLES_HPP
#define SKEWIDEAL_TESTS_WORKED_EXAMPLES_HPP

#include <string>
#include <vector>

#include "skewideal/config.hpp"
#include "skewideal/format.hpp"

namespace worked_examples {

using namespace skewideal;

inline std::string fixture_path(const std::string& name) {
    return std::string(SKEWIDEAL_FIXTURE_DIR) + "/" + name;
}

// ---- commutative example: F_4[x]/(x^5 - 1), sigma(x) = x^4 + a^2 x^3 + a x^2 + x

struct CommutativeExample {
    FieldPtr field;  // F_4 = F_2[a]/(a^2 + a + 1)
    AlgebraPtr algebra;
    std::shared_ptr<const OreRing> ring;
    OrePolynomial g;
};

inline CommutativeExample make_commutative() {
    CommutativeExample ex;
    ex.field = make_field(2, 2, {1, 1, 1});
    const FiniteField* f = ex.field.get();
    ex.algebra = construct_algebra(f, AlgebraSpec::quotient(parse_poly(*f, "x^5 + 1", "x")));
    const LinearMap sigma = LinearMap::generator_automorphism(
        *ex.algebra, parse_algebra_element(*ex.algebra, "x^4 + a^2 x^3 + a x^2 + x"));
    ex.ring = std::make_shared<const OreRing>(ex.algebra.get(), sigma);
    ex.g = parse_ore_polynomial(
        *ex.ring,
        "z^2 (a^2 x^4 + a x^3 + a x^2 + a^2 x) + z (x^4 + x^3 + x^2 + x) + (a^2 x^4 + a x^3 + a x^2 + a^2 x + 1)");
    return ex;
}

inline const char* commutative_mg =
    "[1, a^2 z^2 + z + a^2, a z^2 + z + a, a z^2 + z + a, a^2 z^2 + z + a^2]\n"
    "[a^2 z^2 + z + a^2, 1, a^2 z^2 + a^2 z + a^2, a z^2 + a z + a, a z^2 + a]\n"
    "[a z^2 + z + a, a^2 z^2 + a^2 z + a^2, 1, a^2 z^2 + a^2, a z^2 + a z + a]\n"
    "[a z^2 + z + a, a z^2 + a z + a, a^2 z^2 + a^2, 1, a^2 z^2 + a^2 z + a^2]\n"
    "[a^2 z^2 + z + a^2, a z^2 + a, a z^2 + a z + a, a^2 z^2 + a^2 z + a^2, 1]";

inline const char* commutative_q =
    "[1, a^2 z^2 + z + a^2, a z^3 + a z^2 + z + a, z^2 + a^2 z + a, a^2 z^3 + z^2 + a z]\n"
    "[0, 1, a z + a^2, a z^2 + 1, z^3 + z^2 + z + 1]\n"
    "[0, 0, z + a, a z^2 + z + 1, z^3 + a z^2 + a z + a^2]\n"
    "[0, 0, a^2 z + a, z^2 + a z + a, a^2 z^3 + a z^2 + z + a^2]\n"
    "[0, 0, 0, 0, 1]";

inline const char* commutative_m =
    "[0, 0, a^2 z^3 + a^2, z^3 + z^2 + a^2 z + a^2, a^2 z^3 + z^2 + a z]\n"
    "[0, 0, z^3 + a^2 z^2 + a^2 z + a, a z^3 + a^2 z^2 + z + a, z^3 + z^2 + z + 1]\n"
    "[0, 0, z^3 + z + a, a z^3 + a z^2 + a^2 z + a, z^3 + a z^2 + a z + a^2]\n"
    "[0, 0, a^2 z^3 + a^2 z^2 + a z + a^2, z^3 + z + a^2, a^2 z^3 + a z^2 + z + a^2]\n"
    "[0, 0, 0, 0, 1]";

inline const char* commutative_ms = "[0, 0, a^2 z + a, z + a, 0]\n[0, 0, 0, 0, 1]";

inline const char* commutative_f =
    "z^3 (a^2 x^4 + a^2 x^3 + x^2 + 1) + z^2 (a x^4 + x^2 + a^2 x) + z (a x^4 + x^3 + a x^2 + 1) + "
    "(a^2 x^4 + a x^3 + a x^2 + a^2 x)";

inline const char* commutative_e =
    "z^3 (a^2 x^4 + a^2 x^3 + x^2 + 1) + z^2 (a x^4 + x^2 + a^2 x) + z (a x^4 + x^3 + a x^2 + 1) + "
    "(a^2 x^4 + a x^3 + a x^2 + a^2 x + 1)";

inline const char* commutative_mf =
    "[z^3 + z, a^2 z^2 + a^2, z^3 + z^2 + a z + a, a^2 z^3 + z + a, a^2 z^3 + a z^2 + a z + a^2]\n"
    "[z^3 + a z^2 + z + a^2, a^2 z^3 + a^2 z, a^2 z^3 + a^2 z^2 + a z + a^2, z^3 + z^2 + a^2 z + a, a^2 z + a]\n"
    "[a^2 z^3 + a, z^3 + a z^2 + a^2, 0, z^3 + a^2 z^2 + a^2 z + a^2, a^2 z^3 + z^2 + a^2 z + a]\n"
    "[z^2 + a z + a, z^3 + a^2 z + a, a^2 z^3 + a z^2 + z + a^2, a^2 z^3 + a^2 z, z^3 + a^2 z^2 + a^2 z + a^2]\n"
    "[a^2 z^3 + a^2 z^2 + a z + a^2, a^2 z^3 + z^2 + a, z^3 + z + a, a z^2 + a z + a^2, z^3 + z]";

// five tensor terms, left and right components as reduced polynomials in x
inline std::vector<std::pair<std::string, std::string>> commutative_sep_terms() {
    return {
        {"x^4 + x^3 + x^2 + x + 1", "x^4 + x^3 + x^2 + x + 1"},
        {"a^2 x^4 + a^2 x^3 + a x^2 + a", "x^4 + x^3 + a^2 x^2 + a^2"},
        {"a x^3 + a^2 x^2 + a^2 x + a", "a^2 x^3 + x^2 + x + a^2"},
        {"a^2 x^4 + a^2 x^2 + a x + a", "x^4 + x^2 + a^2 x + a^2"},
        {"a x^4 + a^2 x^3 + a^2 x + a", "a^2 x^4 + x^3 + x + a^2"},
    };
}

// ---- matrix example: M_2(F_8), sigma = conjugation by [[a^4, 1], [1, a]]

struct MatrixExample {
    FieldPtr field;  // F_8 = F_2[a]/(a^3 + a + 1)
    AlgebraPtr algebra;
    std::shared_ptr<const OreRing> ring;
    OrePolynomial g;
};

inline AlgebraElement elem(const Algebra& alg, const std::vector<std::string>& coords) {
    std::vector<FieldElement> c;
    for (const std::string& s : coords) c.push_back(parse_field_element(*alg.field(), s));
    return alg.from_coords(std::move(c));
}

inline MatrixExample make_matrix_example() {
    MatrixExample ex;
    ex.field = make_field(2, 3, {1, 1, 0, 1});
    const FiniteField* f = ex.field.get();
    ex.algebra = construct_algebra(f, AlgebraSpec::matrix(2));
    const LinearMap sigma =
        LinearMap::inner_automorphism(*ex.algebra, elem(*ex.algebra, {"a^4", "1", "1", "a"}));
    ex.ring = std::make_shared<const OreRing>(ex.algebra.get(), sigma);
    std::vector<AlgebraElement> coeffs = {elem(*ex.algebra, {"1", "0", "a^6", "0"}),
                                          elem(*ex.algebra, {"a^5", "a^4", "a", "0"}),
                                          elem(*ex.algebra, {"a^5", "a^6", "0", "0"})};
    ex.g = OrePolynomial(ex.ring.get(), std::move(coeffs));
    return ex;
}

inline const char* matrix_mg =
    "[a^6 z^2 + a^5 z + 1, z^2 + a^5 z, a^5 z^2 + a z, a^6 z^2 + a z]\n"
    "[a^2 z^2 + a^6, a^3 z^2 + a^4 z, a z^2, a^2 z^2 + z]\n"
    "[a^5 z^2 + a z, a^6 z^2 + a z, a^2 z^2 + a^2 z + 1, a^3 z^2 + a^2 z]\n"
    "[a z^2, a^2 z^2 + z, a^5 z^2 + a^6, a^6 z^2 + a z]";

inline const char* matrix_q =
    "[1, a^5 z, a^4 z^2 + a^4 z, a^2 z^3 + z^2 + a z]\n"
    "[0, a^4 z + a^2, a^3 z^2 + a z + a^6, a z^3 + a z^2 + a^3 z]\n"
    "[0, a, z, a^5 z^2 + a^2 z]\n"
    "[0, 0, 0, 1]";

inline const char* matrix_p =
    "[a^6 z + a^2, a^3 z + 1, 0, 0]\n"
    "[a^6 z, a^3 z, a^6, 0]\n"
    "[z^2 + 1, a^4 z^2 + a^6 z + a, a z, 0]\n"
    "[a^4 z^3 + z^2 + a^6 z, a z^3 + a^6 z^2 + a^3 z, a^5 z^2 + a z + a^6, 1]";

inline const char* matrix_m =
    "[0, a^5 z^2 + a^5 z, a z^3 + a^5 z^2 + a^6 z, a^2 z^3 + z^2 + a z]\n"
    "[0, a^4 z^2 + a^2 z + 1, z^3 + a, a z^3 + a z^2 + a^3 z]\n"
    "[0, a z, a^4 z^2 + a^2 z, a^5 z^2 + a^2 z]\n"
    "[0, 0, 0, 1]";

inline const char* matrix_ms = "[0, a, a^4 z + a^2, 0]\n[0, 0, 0, 1]";

inline const char* matrix_e =
    "z^3 (a^6 E22 + a^5 E21 + E12 + a^6 E11) + z^2 (a^6 E22 + a^2 E21 + a^2 E12 + a^3 E11) + "
    "z (a^4 E12 + a^4 E11 + E21) + (a^6 E21 + E11)";

inline const char* matrix_f =
    "z^3 (a^6 E22 + a^5 E21 + E12 + a^6 E11) + z^2 (a^6 E22 + a^2 E21 + a^2 E12 + a^3 E11) + "
    "z (a^4 E12 + a^4 E11 + E21) + (E22 + a^6 E21)";

// six tensor terms, matrix coordinates [E11, E12, E21, E22]
inline std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> matrix_sep_terms() {
    return {
        {{"1", "0", "0", "0"}, {"1", "0", "0", "0"}},
        {{"0", "0", "1", "0"}, {"0", "1", "0", "0"}},
        {{"a", "1", "a^4", "a^3"}, {"a", "1", "a^4", "a^3"}},
        {{"a^4", "a^3", "a^5", "a^4"}, {"1", "a^4", "a^3", "1"}},
        {{"a", "a^4", "1", "a^3"}, {"a", "a^4", "1", "a^3"}},
        {{"1", "a^3", "a^4", "1"}, {"a^4", "a^5", "a^3", "a^4"}},
    };
}

// ---- two isomorphic matrix blocks: A = M_2(F_4) (+) M_2(F_4),
//      tau = conjugation by [[a^2, a^2], [a, a^2]], sigma(b1, b2) = (tau(b2), tau(b1))

struct DoubleMatrixExample {
    FieldPtr field;  // F_4
    AlgebraPtr algebra;
    LinearMap sigma;
};

inline DoubleMatrixExample make_double_matrix() {
    FieldPtr field = make_field(2, 2, {1, 1, 1});
    const FiniteField* f = field.get();
    AlgebraPtr block = construct_algebra(f, AlgebraSpec::matrix(2));
    const LinearMap tau = LinearMap::inner_automorphism(*block, elem(*block, {"a^2", "a^2", "a", "a^2"}));
    AlgebraPtr a =
        construct_algebra(f, AlgebraSpec::direct_sum({AlgebraSpec::matrix(2), AlgebraSpec::matrix(2)}));
    // sigma swaps the blocks and twists by tau
    std::vector<AlgebraElement> columns;
    for (std::size_t i = 0; i < 8; ++i) {
        const std::size_t block_idx = i / 4, inner = i % 4;
        const AlgebraElement tb = tau(block->basis_element(inner));
        AlgebraElement col = a->zero();
        const std::size_t dst = block_idx == 0 ? 4 : 0;
        for (std::size_t c = 0; c < 4; ++c) col.coords[dst + c] = tb.coords[c];
        columns.push_back(std::move(col));
    }
    LinearMap sigma = LinearMap::automorphism_from_columns(*a, columns);
    return {std::move(field), std::move(a), std::move(sigma)};
}

// four tensor terms, coordinates [block0 E11..E22, block1 E11..E22]
inline std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> double_matrix_sep_terms() {
    return {
        {{"1", "0", "0", "0", "0", "0", "0", "0"}, {"1", "0", "0", "0", "0", "0", "0", "0"}},
        {{"0", "0", "1", "0", "0", "0", "0", "0"}, {"0", "1", "0", "0", "0", "0", "0", "0"}},
        {{"0", "0", "0", "0", "a^2", "a^2", "a", "a"}, {"0", "0", "0", "0", "a^2", "a^2", "a", "a"}},
        {{"0", "0", "0", "0", "a^2", "a^2", "a^2", "a^2"}, {"0", "0", "0", "0", "a", "a^2", "1", "a"}},
    };
}

// ---- F_2 x F_2 with the swap automorphism and delta(a, b) = (a + b, 0)

struct SwapExample {
    FieldPtr field;  // F_2
    AlgebraPtr algebra;
    std::shared_ptr<const OreRing> ring;
};

inline SwapExample make_swap_example() {
    SwapExample ex;
    ex.field = make_field(2, 1);
    const FiniteField* f = ex.field.get();
    ex.algebra = construct_algebra(
        f, AlgebraSpec::direct_sum({AlgebraSpec::quotient(parse_poly(*f, "x + 1", "x")),
                                    AlgebraSpec::quotient(parse_poly(*f, "x + 1", "x"))}));
    const LinearMap sigma = LinearMap::automorphism_from_columns(
        *ex.algebra, {ex.algebra->basis_element(1), ex.algebra->basis_element(0)});
    const LinearMap delta = LinearMap::sigma_derivation_from_columns(
        *ex.algebra, {ex.algebra->basis_element(0), ex.algebra->basis_element(0)}, sigma);
    ex.ring = std::make_shared<const OreRing>(ex.algebra.get(), sigma, delta);
    return ex;
}

}  // namespace worked_examples

#endif
