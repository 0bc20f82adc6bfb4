#ifndef SKEWIDEAL_SEPARABILITY_HPP
#define SKEWIDEAL_SEPARABILITY_HPP

#include "skewideal/ore.hpp"

namespace skewideal {

/// Formal sum of a_i (x) b_i in A (x) A over F_q. Pair lists are
/// presentation; equality and all checks go through the canonical
/// n^2-coordinate form (coefficient of v_i (x) v_j at index i*n+j).
struct TensorElement {
    const Algebra* alg = nullptr;
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    std::vector<FieldElement> canonical;

    bool operator==(const TensorElement& o) const { return alg == o.alg && canonical == o.canonical; }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }
    bool is_zero() const;
};

TensorElement make_tensor(const Algebra& a, std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs);
TensorElement tensor_add(const TensorElement& a, const TensorElement& b);

struct SeparabilityReport {
    bool mu_one = false;                    // sum a_i b_i = 1
    std::vector<std::size_t> violations;    // basis indices k with v_k p != p v_k
    bool passed() const { return mu_one && violations.empty(); }
};

/// Verifies mu(p) = 1 and v_k p = p v_k in canonical form for every basis
/// element; failures are collected, not thrown.
SeparabilityReport check_separability(const TensorElement& p);

/// sigma^(x): a (x) b -> sigma(a) (x) sigma(b).
TensorElement tensor_sigma_twist(const TensorElement& p, const LinearMap& sigma);
/// delta^(x): a (x) b -> delta(a) (x) sigma(b) + a (x) delta(b).
TensorElement tensor_delta_twist(const TensorElement& p, const LinearMap& sigma, const LinearMap& delta);

struct TwistResult {
    TensorElement sigma_part;
    std::optional<TensorElement> delta_part;
};
TwistResult tensor_twist(const TensorElement& p, const LinearMap& sigma, const LinearMap* delta = nullptr);

enum class Strategy {
    automatic,     // group -> commutative quotient -> direct-sum-of-matrix, in that order
    group,         // |G|^{-1} sum g (x) g^{-1}
    normal_dual,   // dual normal bases of a field presented as an irreducible quotient
    matrix_units,  // sum_i E_{ij} (x) E_{ji} for a fixed column j
    average,       // |sigma|^{-1} sum of sigma-power twists of a seed element
    orbit_lift,    // per-orbit representatives summed with their sigma translates
    block_sum,     // per-summand natural elements of a direct sum, no twisting
};

struct StrategyOptions {
    Strategy strategy = Strategy::automatic;
    std::optional<Strategy> seed;  // average: where the seed comes from (default: natural)
    int matrix_column = 1;         // matrix-units column j, 1-based
};

/// Builds a separability element for F_q inside A that is sigma-invariant
/// and (when delta is given) delta-annihilated. Every construction is
/// re-verified; failures throw with the violated condition named.
TensorElement build_separability(const Algebra& a, const LinearMap& sigma, const LinearMap* delta,
                                 const StrategyOptions& options = {});

/// Separability element for F_q[z] inside A[z; sigma, delta]: the same pair
/// list with entries as degree-0 skew polynomials.
struct OreTensorElement {
    const OreRing* ring = nullptr;
    std::vector<std::pair<OrePolynomial, OrePolynomial>> pairs;
};

/// Re-verifies sigma-invariance and delta-annihilation, then transports the
/// pair list into the Ore extension.
OreTensorElement lift_to_ore(const TensorElement& p, const OreRing& ring);

}  // namespace skewideal

#endif
