#ifndef SKEWIDEAL_CONFIG_HPP
#define SKEWIDEAL_CONFIG_HPP

#include <stdexcept>
#include <string>

#include "skewideal/ideal_code.hpp"

namespace skewideal {

/// Schema or element-encoding violation, with a path-qualified message.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A fully resolved job: field, algebra, Ore extension, generators and the
/// separability strategy. Owns the field/algebra/ring objects the elements
/// point into.
struct Job {
    FieldPtr field;
    AlgebraPtr algebra;
    std::shared_ptr<const OreRing> ring;
    std::vector<OrePolynomial> generators;
    StrategyOptions strategy;
    std::optional<std::vector<std::pair<AlgebraElement, AlgebraElement>>> explicit_pairs;
};

Job parse_config(const std::string& json_text);
Job load_config_file(const std::string& path);

Strategy parse_strategy(const std::string& name);

}  // namespace skewideal

#endif
