#include "skewideal/format.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewideal {

namespace {

std::vector<std::string> split_terms(const std::string& text) {
    // split on " + " at parenthesis depth zero
    std::vector<std::string> terms;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (depth == 0 && text.compare(i, 3, " + ") == 0) {
            terms.push_back(text.substr(start, i - start));
            start = i + 3;
            i += 2;
        }
    }
    terms.push_back(text.substr(start));
    return terms;
}

std::string power_term(const std::string& var, int i) {
    if (i == 0) return "";
    if (i == 1) return var;
    return var + "^" + std::to_string(i);
}

long parse_exponent(const std::string& s) {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument("bad exponent '" + s + "'");
    return v;
}

}  // namespace

std::string format_field_element(const FieldElement& x) {
    if (x.is_zero()) return "0";
    const long e = x.field->log(x);
    if (e == 0) return "1";
    if (e == 1) return "a";
    return "a^" + std::to_string(e);
}

FieldElement parse_field_element(const FiniteField& field, const std::string& text) {
    if (text == "0") return field.zero();
    if (text == "1") return field.one();
    if (text == "a") return field.primitive_element();
    if (text.rfind("a^", 0) == 0) return field.from_power(parse_exponent(text.substr(2)));
    throw std::invalid_argument("bad field element '" + text + "'");
}

std::string format_poly(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const FieldElement c = p.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string cs = format_field_element(c);
        const std::string ps = power_term(var, i);
        if (ps.empty())
            out += cs;
        else if (cs == "1")
            out += ps;
        else
            out += cs + " " + ps;
    }
    return out;
}

Poly parse_poly(const FiniteField& field, const std::string& text, const std::string& var) {
    if (text == "0") return Poly::zero(&field);
    Poly acc = Poly::zero(&field);
    for (const std::string& term : split_terms(text)) {
        std::string coef = "1";
        std::string power = term;
        const std::size_t space = term.find(' ');
        if (space != std::string::npos) {
            coef = term.substr(0, space);
            power = term.substr(space + 1);
        }
        int deg = 0;
        if (power == var)
            deg = 1;
        else if (power.rfind(var + "^", 0) == 0)
            deg = static_cast<int>(parse_exponent(power.substr(var.size() + 1)));
        else if (space == std::string::npos) {
            coef = term;
            deg = 0;
        } else {
            throw std::invalid_argument("bad polynomial term '" + term + "'");
        }
        acc = acc + Poly::monomial(&field, deg, parse_field_element(field, coef));
    }
    return acc;
}

std::string format_algebra_element(const AlgebraElement& x) {
    const Algebra& a = *x.alg;
    if (x.is_zero()) return "0";
    std::string out;
    for (std::size_t idx = a.dim(); idx-- > 0;) {
        const FieldElement c = x.coords[idx];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string& label = a.basis_label(idx);
        const std::string cs = format_field_element(c);
        if (label == "1")
            out += cs;
        else if (cs == "1")
            out += label;
        else
            out += cs + " " + label;
    }
    return out;
}

AlgebraElement parse_algebra_element(const Algebra& algebra, const std::string& text) {
    AlgebraElement acc = algebra.zero();
    if (text == "0") return acc;
    // longest labels first so "x" never shadows "x^2"
    std::vector<std::pair<std::string, std::size_t>> labels;
    for (std::size_t i = 0; i < algebra.dim(); ++i) labels.emplace_back(algebra.basis_label(i), i);
    std::sort(labels.begin(), labels.end(),
              [](const auto& l, const auto& r) { return l.first.size() > r.first.size(); });

    for (const std::string& term : split_terms(text)) {
        bool matched = false;
        for (const auto& [label, idx] : labels) {
            if (term == label) {
                acc.coords[idx] = acc.coords[idx] + algebra.field()->one();
                matched = true;
                break;
            }
            if (term.size() > label.size() + 1 &&
                term.compare(term.size() - label.size(), label.size(), label) == 0 &&
                term[term.size() - label.size() - 1] == ' ') {
                const std::string coef = term.substr(0, term.size() - label.size() - 1);
                acc.coords[idx] = acc.coords[idx] + parse_field_element(*algebra.field(), coef);
                matched = true;
                break;
            }
        }
        if (!matched) {
            // constant term on the unit label
            std::size_t unit_idx = algebra.dim();
            for (std::size_t i = 0; i < algebra.dim(); ++i)
                if (algebra.basis_label(i) == "1") unit_idx = i;
            if (unit_idx == algebra.dim())
                throw std::invalid_argument("bad algebra element term '" + term + "'");
            acc.coords[unit_idx] = acc.coords[unit_idx] + parse_field_element(*algebra.field(), term);
        }
    }
    return acc;
}

std::string format_ore_polynomial(const OrePolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const AlgebraElement c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string zs = power_term("z", i);
        if (zs.empty())
            out += "(" + format_algebra_element(c) + ")";
        else
            out += zs + " (" + format_algebra_element(c) + ")";
    }
    return out;
}

OrePolynomial parse_ore_polynomial(const OreRing& ring, const std::string& text) {
    if (text == "0") return OrePolynomial::zero(&ring);
    const Algebra& alg = *ring.algebra();
    std::vector<AlgebraElement> coeffs;
    auto set_coeff = [&](int deg, const AlgebraElement& c) {
        if (static_cast<std::size_t>(deg) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(deg) + 1, alg.zero());
        coeffs[static_cast<std::size_t>(deg)] = coeffs[static_cast<std::size_t>(deg)] + c;
    };
    for (const std::string& term : split_terms(text)) {
        const std::size_t open = term.find('(');
        if (open == std::string::npos || term.back() != ')')
            throw std::invalid_argument("bad skew polynomial term '" + term + "'");
        const std::string inner = term.substr(open + 1, term.size() - open - 2);
        std::string head = term.substr(0, open);
        while (!head.empty() && head.back() == ' ') head.pop_back();
        int deg = 0;
        if (head.empty())
            deg = 0;
        else if (head == "z")
            deg = 1;
        else if (head.rfind("z^", 0) == 0)
            deg = static_cast<int>(parse_exponent(head.substr(2)));
        else
            throw std::invalid_argument("bad skew polynomial term '" + term + "'");
        set_coeff(deg, parse_algebra_element(alg, inner));
    }
    return OrePolynomial(&ring, std::move(coeffs));
}

std::string format_poly_matrix(const PolyMatrix& m, const std::string& var) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out += ", ";
            out += format_poly(m.at(r, c), var);
        }
        out += "]";
        if (r + 1 < m.rows()) out += "\n";
    }
    return out;
}

PolyMatrix parse_poly_matrix(const FiniteField& field, const std::string& text, const std::string& var) {
    std::vector<std::vector<Poly>> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;
        if (line.front() != '[' || line.back() != ']')
            throw std::invalid_argument("matrix rows must be bracketed");
        line = line.substr(1, line.size() - 2);
        std::vector<Poly> row;
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t comma = line.find(", ", start);
            if (comma == std::string::npos) comma = line.size();
            row.push_back(parse_poly(field, line.substr(start, comma - start), var));
            start = comma + 2;
            if (comma == line.size()) break;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix text");
    PolyMatrix m(&field, rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

}  // namespace skewideal
