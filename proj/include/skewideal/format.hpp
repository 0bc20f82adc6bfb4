#ifndef SKEWIDEAL_FORMAT_HPP
#define SKEWIDEAL_FORMAT_HPP

#include <string>

#include "skewideal/ideal_code.hpp"

namespace skewideal {

/// Textual element forms: field elements as 0 | 1 | a^k (powers of the
/// primitive element), algebra elements as basis-label combinations in
/// descending basis order, skew polynomials as z^i (coefficient) + ...
/// descending in z with right coefficients, matrices one row per line.
/// parse(format(x)) round-trips for every kind.

std::string format_field_element(const FieldElement& x);
std::string format_poly(const Poly& p, const std::string& var = "z");
std::string format_algebra_element(const AlgebraElement& x);
std::string format_ore_polynomial(const OrePolynomial& f);
std::string format_poly_matrix(const PolyMatrix& m, const std::string& var = "z");

FieldElement parse_field_element(const FiniteField& field, const std::string& text);
Poly parse_poly(const FiniteField& field, const std::string& text, const std::string& var = "z");
AlgebraElement parse_algebra_element(const Algebra& algebra, const std::string& text);
OrePolynomial parse_ore_polynomial(const OreRing& ring, const std::string& text);
PolyMatrix parse_poly_matrix(const FiniteField& field, const std::string& text, const std::string& var = "z");

}  // namespace skewideal

#endif
