#include "skewideal/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "skewideal/format.hpp"

namespace skewideal {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError(path + ": " + what);
}

FieldElement parse_element(const FiniteField& field, const json& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return parse_field_element(field, j.get<std::string>());
        } catch (const std::exception& e) {
            fail(path, e.what());
        }
    }
    if (j.is_number_integer()) {
        const long v = j.get<long>();
        if (v != 0 && v != 1) fail(path, "bare integers other than 0 and 1 are ambiguous; use a coordinate array or a power string");
        return v == 0 ? field.zero() : field.one();
    }
    if (j.is_array()) {
        if (j.size() > static_cast<std::size_t>(field.extension_degree()))
            fail(path, "coordinate vector longer than the field degree");
        std::vector<int> coords(static_cast<std::size_t>(field.extension_degree()), 0);
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (!j[i].is_number_integer()) fail(path + "[" + std::to_string(i) + "]", "coordinate must be an integer");
            const long c = j[i].get<long>();
            if (c < 0 || c >= field.characteristic())
                fail(path + "[" + std::to_string(i) + "]", "coordinate out of range");
            coords[i] = static_cast<int>(c);
        }
        return field.from_coords(coords);
    }
    fail(path, "field element must be a string, coordinate array, or 0/1");
}

Poly parse_poly_array(const FiniteField& field, const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of field elements");
    std::vector<FieldElement> coeffs;
    for (std::size_t i = 0; i < j.size(); ++i)
        coeffs.push_back(parse_element(field, j[i], path + "[" + std::to_string(i) + "]"));
    return Poly(&field, std::move(coeffs));
}

AlgebraElement parse_algebra_coords(const Algebra& alg, const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected a coordinate array over the algebra basis");
    if (j.size() != alg.dim())
        fail(path, "expected " + std::to_string(alg.dim()) + " coordinates, got " + std::to_string(j.size()));
    std::vector<FieldElement> coords;
    for (std::size_t i = 0; i < j.size(); ++i)
        coords.push_back(parse_element(*alg.field(), j[i], path + "[" + std::to_string(i) + "]"));
    return alg.from_coords(std::move(coords));
}

AlgebraSpec parse_algebra_spec(const FiniteField& field, const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    if (!j.contains("type")) fail(path, "missing 'type'");
    const std::string type = j["type"].get<std::string>();
    if (type == "quotient") {
        if (!j.contains("modulus")) fail(path, "quotient algebra needs 'modulus'");
        return AlgebraSpec::quotient(parse_poly_array(field, j["modulus"], path + ".modulus"));
    }
    if (type == "matrix") {
        if (!j.contains("size")) fail(path, "matrix algebra needs 'size'");
        std::optional<Poly> ext;
        if (j.contains("extension_modulus") && !j["extension_modulus"].is_null())
            ext = parse_poly_array(field, j["extension_modulus"], path + ".extension_modulus");
        return AlgebraSpec::matrix(j["size"].get<int>(), std::move(ext));
    }
    if (type == "group") {
        if (!j.contains("table")) fail(path, "group algebra needs 'table'");
        std::vector<std::vector<int>> table;
        for (const auto& row : j["table"]) table.push_back(row.get<std::vector<int>>());
        return AlgebraSpec::group(std::move(table));
    }
    if (type == "direct_sum") {
        if (!j.contains("summands")) fail(path, "direct sum needs 'summands'");
        std::vector<AlgebraSpec> parts;
        for (std::size_t i = 0; i < j["summands"].size(); ++i)
            parts.push_back(parse_algebra_spec(field, j["summands"][i],
                                               path + ".summands[" + std::to_string(i) + "]"));
        return AlgebraSpec::direct_sum(std::move(parts));
    }
    if (type == "raw") {
        if (!j.contains("dim") || !j.contains("constants") || !j.contains("unit"))
            fail(path, "raw algebra needs 'dim', 'constants' and 'unit'");
        const std::size_t dim = j["dim"].get<std::size_t>();
        std::vector<std::vector<FieldElement>> constants;
        if (!j["constants"].is_array() || j["constants"].size() != dim)
            fail(path + ".constants", "expected one row list per basis element");
        for (std::size_t i = 0; i < dim; ++i) {
            const json& row = j["constants"][i];
            if (!row.is_array() || row.size() != dim) fail(path + ".constants", "table must be dim x dim");
            for (std::size_t jj = 0; jj < dim; ++jj) {
                std::vector<FieldElement> coords;
                const json& cell = row[jj];
                if (!cell.is_array() || cell.size() != dim)
                    fail(path + ".constants", "each product needs dim coordinates");
                for (std::size_t c = 0; c < dim; ++c)
                    coords.push_back(parse_element(field, cell[c], path + ".constants"));
                constants.push_back(std::move(coords));
            }
        }
        std::vector<FieldElement> unit;
        for (std::size_t c = 0; c < j["unit"].size(); ++c)
            unit.push_back(parse_element(field, j["unit"][c], path + ".unit"));
        return AlgebraSpec::raw(dim, std::move(constants), std::move(unit));
    }
    fail(path + ".type", "unknown algebra type '" + type + "'");
}

LinearMap parse_sigma(const Algebra& alg, const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    if (!j.contains("type")) fail(path, "missing 'type'");
    const std::string type = j["type"].get<std::string>();
    try {
        if (type == "identity") return LinearMap::identity(alg);
        if (type == "inner") {
            if (!j.contains("unit")) fail(path, "inner automorphism needs 'unit'");
            return LinearMap::inner_automorphism(alg, parse_algebra_coords(alg, j["unit"], path + ".unit"));
        }
        if (type == "generator_image") {
            if (!j.contains("image")) fail(path, "generator_image needs 'image'");
            return LinearMap::generator_automorphism(alg, parse_algebra_coords(alg, j["image"], path + ".image"));
        }
        if (type == "matrix") {
            if (!j.contains("columns")) fail(path, "matrix map needs 'columns'");
            std::vector<AlgebraElement> cols;
            for (std::size_t i = 0; i < j["columns"].size(); ++i)
                cols.push_back(parse_algebra_coords(alg, j["columns"][i],
                                                    path + ".columns[" + std::to_string(i) + "]"));
            return LinearMap::automorphism_from_columns(alg, cols);
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        fail(path, e.what());
    }
    fail(path + ".type", "unknown map type '" + type + "'");
}

LinearMap parse_delta(const Algebra& alg, const LinearMap& sigma, const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("type")) fail(path, "expected an object with 'type'");
    const std::string type = j["type"].get<std::string>();
    try {
        if (type == "matrix") {
            if (!j.contains("columns")) fail(path, "matrix map needs 'columns'");
            std::vector<AlgebraElement> cols;
            for (std::size_t i = 0; i < j["columns"].size(); ++i)
                cols.push_back(parse_algebra_coords(alg, j["columns"][i],
                                                    path + ".columns[" + std::to_string(i) + "]"));
            return LinearMap::sigma_derivation_from_columns(alg, cols, sigma);
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        fail(path, e.what());
    }
    fail(path + ".type", "unknown derivation type '" + type + "'");
}

Strategy parse_strategy_name(const std::string& name, const std::string& path) {
    if (name == "auto") return Strategy::automatic;
    if (name == "group") return Strategy::group;
    if (name == "normal-dual") return Strategy::normal_dual;
    if (name == "matrix-units") return Strategy::matrix_units;
    if (name == "average") return Strategy::average;
    if (name == "orbit-lift") return Strategy::orbit_lift;
    if (name == "block-sum") return Strategy::block_sum;
    fail(path, "unknown strategy '" + name + "'");
}

}  // namespace

Strategy parse_strategy(const std::string& name) { return parse_strategy_name(name, "strategy"); }

Job parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config is not well-formed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config root must be an object");

    Job job;

    if (!doc.contains("field") || !doc["field"].is_object()) fail("field", "missing field description");
    const json& jf = doc["field"];
    if (!jf.contains("p") || !jf.contains("k")) fail("field", "needs 'p' and 'k'");
    std::vector<int> modulus;
    if (jf.contains("modulus") && !jf["modulus"].is_null()) modulus = jf["modulus"].get<std::vector<int>>();
    try {
        job.field = make_field(jf["p"].get<long>(), jf["k"].get<int>(), modulus);
    } catch (const std::exception& e) {
        fail("field", e.what());
    }

    if (!doc.contains("algebra")) fail("algebra", "missing algebra description");
    try {
        job.algebra = construct_algebra(job.field.get(), parse_algebra_spec(*job.field, doc["algebra"], "algebra"));
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        fail("algebra", e.what());
    }

    if (!doc.contains("sigma")) fail("sigma", "missing automorphism description");
    LinearMap sigma = parse_sigma(*job.algebra, doc["sigma"], "sigma");

    if (doc.contains("delta") && !doc["delta"].is_null()) {
        LinearMap delta = parse_delta(*job.algebra, sigma, doc["delta"], "delta");
        job.ring = std::make_shared<const OreRing>(job.algebra.get(), std::move(sigma), std::move(delta));
    } else {
        job.ring = std::make_shared<const OreRing>(job.algebra.get(), std::move(sigma));
    }

    if (doc.contains("separability") && !doc["separability"].is_null()) {
        const json& js = doc["separability"];
        if (!js.is_object()) fail("separability", "expected an object");
        if (js.contains("pairs")) {
            std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
            for (std::size_t i = 0; i < js["pairs"].size(); ++i) {
                const json& jp = js["pairs"][i];
                const std::string path = "separability.pairs[" + std::to_string(i) + "]";
                if (!jp.is_array() || jp.size() != 2) fail(path, "expected a pair [a, b]");
                pairs.emplace_back(parse_algebra_coords(*job.algebra, jp[0], path + "[0]"),
                                   parse_algebra_coords(*job.algebra, jp[1], path + "[1]"));
            }
            job.explicit_pairs = std::move(pairs);
        }
        if (js.contains("strategy"))
            job.strategy.strategy = parse_strategy_name(js["strategy"].get<std::string>(), "separability.strategy");
        if (js.contains("seed"))
            job.strategy.seed = parse_strategy_name(js["seed"].get<std::string>(), "separability.seed");
        if (js.contains("column")) job.strategy.matrix_column = js["column"].get<int>();
    }

    if (!doc.contains("generators") || !doc["generators"].is_array())
        fail("generators", "missing generator list");
    if (doc["generators"].empty()) fail("generators", "generators must be nonempty");
    for (std::size_t gi = 0; gi < doc["generators"].size(); ++gi) {
        const json& jg = doc["generators"][gi];
        const std::string path = "generators[" + std::to_string(gi) + "]";
        if (!jg.is_array() || jg.empty()) fail(path, "generator must be a nonempty array of coefficients");
        std::vector<AlgebraElement> coeffs;
        for (std::size_t ci = 0; ci < jg.size(); ++ci)
            coeffs.push_back(parse_algebra_coords(*job.algebra, jg[ci], path + "[" + std::to_string(ci) + "]"));
        OrePolynomial g(job.ring.get(), std::move(coeffs));
        if (g.is_zero()) fail(path, "generator must be nonzero");
        job.generators.push_back(std::move(g));
    }

    return job;
}

Job load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace skewideal
