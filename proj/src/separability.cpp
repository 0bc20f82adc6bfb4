#include "skewideal/separability.hpp"

#include <stdexcept>

namespace skewideal {

namespace {

std::vector<FieldElement> canonical_of(const Algebra& a,
                                       const std::vector<std::pair<AlgebraElement, AlgebraElement>>& pairs) {
    const std::size_t n = a.dim();
    std::vector<FieldElement> c(n * n, a.field()->zero());
    for (const auto& [x, y] : pairs) {
        if (x.alg != &a || y.alg != &a) throw std::invalid_argument("tensor pair owner mismatch");
        for (std::size_t i = 0; i < n; ++i) {
            if (x.coords[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y.coords[j].is_zero()) continue;
                c[i * n + j] = c[i * n + j] + x.coords[i] * y.coords[j];
            }
        }
    }
    return c;
}

// canonical form of v_k * p and p * v_k
std::vector<FieldElement> left_mul_canonical(const Algebra& a, std::size_t k, const TensorElement& p) {
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    const AlgebraElement vk = a.basis_element(k);
    pairs.reserve(p.pairs.size());
    for (const auto& [x, y] : p.pairs) pairs.emplace_back(vk * x, y);
    return canonical_of(a, pairs);
}

std::vector<FieldElement> right_mul_canonical(const Algebra& a, std::size_t k, const TensorElement& p) {
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    const AlgebraElement vk = a.basis_element(k);
    pairs.reserve(p.pairs.size());
    for (const auto& [x, y] : p.pairs) pairs.emplace_back(x, y * vk);
    return canonical_of(a, pairs);
}

}  // namespace

bool TensorElement::is_zero() const {
    for (const FieldElement& c : canonical)
        if (!c.is_zero()) return false;
    return true;
}

TensorElement make_tensor(const Algebra& a, std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs) {
    TensorElement t;
    t.alg = &a;
    t.canonical = canonical_of(a, pairs);
    t.pairs = std::move(pairs);
    return t;
}

TensorElement tensor_add(const TensorElement& a, const TensorElement& b) {
    if (a.alg != b.alg) throw std::invalid_argument("tensor owner mismatch");
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs = a.pairs;
    pairs.insert(pairs.end(), b.pairs.begin(), b.pairs.end());
    return make_tensor(*a.alg, std::move(pairs));
}

SeparabilityReport check_separability(const TensorElement& p) {
    const Algebra& a = *p.alg;
    SeparabilityReport rep;
    AlgebraElement mu = a.zero();
    for (const auto& [x, y] : p.pairs) mu = mu + x * y;
    rep.mu_one = mu == a.unit();
    for (std::size_t k = 0; k < a.dim(); ++k)
        if (left_mul_canonical(a, k, p) != right_mul_canonical(a, k, p)) rep.violations.push_back(k);
    return rep;
}

TensorElement tensor_sigma_twist(const TensorElement& p, const LinearMap& sigma) {
    if (sigma.kind() != LinearMap::Kind::automorphism || sigma.algebra() != p.alg)
        throw std::invalid_argument("tensor twist needs an automorphism of the same algebra");
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    pairs.reserve(p.pairs.size());
    for (const auto& [x, y] : p.pairs) pairs.emplace_back(sigma(x), sigma(y));
    return make_tensor(*p.alg, std::move(pairs));
}

TensorElement tensor_delta_twist(const TensorElement& p, const LinearMap& sigma, const LinearMap& delta) {
    if (delta.kind() != LinearMap::Kind::sigma_derivation || delta.algebra() != p.alg)
        throw std::invalid_argument("tensor twist needs a sigma-derivation of the same algebra");
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    pairs.reserve(2 * p.pairs.size());
    for (const auto& [x, y] : p.pairs) {
        pairs.emplace_back(delta(x), sigma(y));
        pairs.emplace_back(x, delta(y));
    }
    return make_tensor(*p.alg, std::move(pairs));
}

TwistResult tensor_twist(const TensorElement& p, const LinearMap& sigma, const LinearMap* delta) {
    TwistResult r{tensor_sigma_twist(p, sigma), std::nullopt};
    if (delta != nullptr) r.delta_part = tensor_delta_twist(p, sigma, *delta);
    return r;
}

namespace {

// natural element of a matrix summand placed at block offset: sum_i E_{i(col)} (x) E_{(col)i}
TensorElement matrix_units_at(const Algebra& a, const AlgebraSpec& summand, std::size_t offset, int column) {
    const int m = summand.matrix_size;
    const int s = summand.matrix_extension ? summand.matrix_extension->degree() : 1;
    if (column < 1 || column > m) throw std::invalid_argument("matrix-units column out of range");
    const int j = column - 1;
    auto unit_at = [&](int r, int c) {
        AlgebraElement e = a.zero();
        e.coords[offset + (static_cast<std::size_t>(r) * m + c) * s] = a.field()->one();
        return e;
    };
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    for (int i = 0; i < m; ++i) pairs.emplace_back(unit_at(i, j), unit_at(j, i));
    return make_tensor(a, std::move(pairs));
}

// dual normal bases of a quotient-field block, embedded through its idempotent
TensorElement normal_dual_at_block(const Algebra& a, const Block& block) {
    const auto [basis, dual] = normal_dual_bases_mod(block.factor);
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        pairs.emplace_back(a.from_poly(basis[i]) * block.idempotent,
                           a.from_poly(dual[i]) * block.idempotent);
    return make_tensor(a, std::move(pairs));
}

// representative separability element supported on one block
TensorElement block_representative(const Algebra& a, const Block& block, int matrix_column) {
    if (block.kind == Block::Kind::quotient_field) return normal_dual_at_block(a, block);
    const AlgebraSpec& spec = a.spec();
    if (spec.kind == AlgebraSpec::Kind::matrix)
        return matrix_units_at(a, spec, 0, matrix_column);
    if (spec.kind == AlgebraSpec::Kind::direct_sum) {
        const AlgebraSpec& part = spec.summands[block.summand_index];
        const std::size_t offset = a.summand_offsets()[block.summand_index];
        if (part.kind == AlgebraSpec::Kind::matrix)
            return matrix_units_at(a, part, offset, matrix_column);
        if (part.kind == AlgebraSpec::Kind::quotient) {
            const auto factors = berlekamp_factor(part.quotient_modulus);
            if (factors.size() == 1 && factors[0].second == 1) {
                const auto [basis, dual] = normal_dual_bases_mod(part.quotient_modulus);
                std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
                auto embed = [&](const Poly& p) {
                    AlgebraElement e = a.zero();
                    for (int i = 0; i <= p.degree(); ++i)
                        e.coords[offset + static_cast<std::size_t>(i)] = p.coeff(i);
                    return e;
                };
                for (std::size_t i = 0; i < basis.size(); ++i)
                    pairs.emplace_back(embed(basis[i]), embed(dual[i]));
                return make_tensor(a, std::move(pairs));
            }
        }
    }
    throw std::invalid_argument("no natural separability element for this block construction");
}

TensorElement build_group_element(const Algebra& a) {
    if (a.spec().kind != AlgebraSpec::Kind::group)
        throw std::invalid_argument("group strategy needs a group algebra");
    const std::size_t n = a.dim();
    const long p = a.field()->characteristic();
    if (static_cast<long>(n % p) == 0)
        throw std::invalid_argument("group strategy needs |G| coprime to the characteristic");
    const FieldElement scale = a.field()->inv(a.field()->from_int(static_cast<long>(n)));
    const auto& table = a.spec().group_table;
    std::size_t id = 0;
    for (std::size_t e = 0; e < n; ++e)
        if (a.unit().coords[e] == a.field()->one()) id = e;
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    for (std::size_t g = 0; g < n; ++g) {
        std::size_t ginv = n;
        for (std::size_t h = 0; h < n; ++h)
            if (table[g][h] == static_cast<int>(id)) {
                ginv = h;
                break;
            }
        if (ginv == n) throw std::invalid_argument("group table has no inverse for element " + std::to_string(g));
        pairs.emplace_back(scale * a.basis_element(g), a.basis_element(ginv));
    }
    return make_tensor(a, std::move(pairs));
}

TensorElement build_normal_dual_element(const Algebra& a) {
    if (a.spec().kind != AlgebraSpec::Kind::quotient)
        throw std::invalid_argument("normal-dual strategy needs a quotient algebra");
    const auto factors = berlekamp_factor(a.spec().quotient_modulus);
    if (factors.size() != 1 || factors[0].second != 1)
        throw std::invalid_argument("normal-dual strategy needs an irreducible quotient modulus");
    const auto [basis, dual] = normal_dual_bases_mod(a.spec().quotient_modulus);
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        pairs.emplace_back(a.from_poly(basis[i]), a.from_poly(dual[i]));
    return make_tensor(a, std::move(pairs));
}

TensorElement build_matrix_units_element(const Algebra& a, int column) {
    if (a.spec().kind != AlgebraSpec::Kind::matrix)
        throw std::invalid_argument("matrix-units strategy needs a matrix algebra");
    return matrix_units_at(a, a.spec(), 0, column);
}

TensorElement build_seed(const Algebra& a, Strategy seed, int matrix_column) {
    switch (seed) {
        case Strategy::group: return build_group_element(a);
        case Strategy::normal_dual: return build_normal_dual_element(a);
        case Strategy::matrix_units: return build_matrix_units_element(a, matrix_column);
        default: throw std::invalid_argument("unsupported seed strategy");
    }
}

Strategy natural_seed(const Algebra& a) {
    switch (a.spec().kind) {
        case AlgebraSpec::Kind::group: return Strategy::group;
        case AlgebraSpec::Kind::matrix: return Strategy::matrix_units;
        case AlgebraSpec::Kind::quotient: return Strategy::normal_dual;
        default: throw std::invalid_argument("no natural seed for this construction; specify one");
    }
}

TensorElement build_average_element(const Algebra& a, const LinearMap& sigma, const StrategyOptions& options) {
    const int order = map_order(sigma);
    const long p = a.field()->characteristic();
    if (order % p == 0)
        throw std::invalid_argument("average strategy needs the order of sigma coprime to the characteristic");
    const Strategy seed_kind = options.seed.value_or(natural_seed(a));
    const TensorElement seed = build_seed(a, seed_kind, options.matrix_column);
    const FieldElement scale = a.field()->inv(a.field()->from_int(order));
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    TensorElement twisted = seed;
    for (int i = 0; i < order; ++i) {
        for (const auto& [x, y] : twisted.pairs) pairs.emplace_back(scale * x, y);
        twisted = tensor_sigma_twist(twisted, sigma);
    }
    return make_tensor(a, std::move(pairs));
}

// orbit representatives with their sigma translates, in orbit order:
// all representatives first, then the translates
TensorElement build_orbit_lift_element(const Algebra& a, const LinearMap& sigma, int matrix_column) {
    const BlockDecomposition blocks = block_decomposition(a);
    const BlockAction action = block_action(sigma, blocks);

    std::vector<TensorElement> reps;
    for (const auto& orbit : action.orbits)
        reps.push_back(block_representative(a, blocks.blocks[orbit.front()], matrix_column));
    // invariance of each representative under the orbit composite
    for (std::size_t oi = 0; oi < action.orbits.size(); ++oi) {
        TensorElement moved = reps[oi];
        for (std::size_t step = 0; step < action.orbits[oi].size(); ++step)
            moved = tensor_sigma_twist(moved, sigma);
        if (moved != reps[oi])
            throw std::invalid_argument("orbit representative is not invariant under the orbit composite");
    }

    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    for (const TensorElement& rep : reps)
        pairs.insert(pairs.end(), rep.pairs.begin(), rep.pairs.end());
    for (std::size_t oi = 0; oi < action.orbits.size(); ++oi) {
        TensorElement moved = reps[oi];
        for (std::size_t step = 1; step < action.orbits[oi].size(); ++step) {
            moved = tensor_sigma_twist(moved, sigma);
            pairs.insert(pairs.end(), moved.pairs.begin(), moved.pairs.end());
        }
    }
    return make_tensor(a, std::move(pairs));
}

TensorElement build_block_sum_element(const Algebra& a, int matrix_column) {
    const BlockDecomposition blocks = block_decomposition(a);
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    for (const Block& b : blocks.blocks) {
        const TensorElement part = block_representative(a, b, matrix_column);
        pairs.insert(pairs.end(), part.pairs.begin(), part.pairs.end());
    }
    return make_tensor(a, std::move(pairs));
}

// dispatch order: group formula, then the orbit lift (per-block dual normal
// bases for commutative quotients, matrix units for matrix summands)
TensorElement build_automatic(const Algebra& a, const LinearMap& sigma, const StrategyOptions& options) {
    switch (a.spec().kind) {
        case AlgebraSpec::Kind::group: return build_group_element(a);
        case AlgebraSpec::Kind::quotient:
        case AlgebraSpec::Kind::matrix:
        case AlgebraSpec::Kind::direct_sum:
            return build_orbit_lift_element(a, sigma, options.matrix_column);
        default:
            throw std::invalid_argument("no automatic separability construction for this algebra");
    }
}

}  // namespace

TensorElement build_separability(const Algebra& a, const LinearMap& sigma, const LinearMap* delta,
                                 const StrategyOptions& options) {
    if (sigma.kind() != LinearMap::Kind::automorphism || sigma.algebra() != &a)
        throw std::invalid_argument("separability construction needs an automorphism of the algebra");
    TensorElement p;
    switch (options.strategy) {
        case Strategy::automatic: p = build_automatic(a, sigma, options); break;
        case Strategy::group: p = build_group_element(a); break;
        case Strategy::normal_dual: p = build_normal_dual_element(a); break;
        case Strategy::matrix_units: p = build_matrix_units_element(a, options.matrix_column); break;
        case Strategy::average: p = build_average_element(a, sigma, options); break;
        case Strategy::orbit_lift: p = build_orbit_lift_element(a, sigma, options.matrix_column); break;
        case Strategy::block_sum: p = build_block_sum_element(a, options.matrix_column); break;
    }

    const SeparabilityReport rep = check_separability(p);
    if (!rep.mu_one)
        throw std::runtime_error("constructed element fails mu(p) = 1");
    if (!rep.violations.empty())
        throw std::runtime_error("constructed element fails r p = p r at basis index " +
                                 std::to_string(rep.violations.front()));
    if (tensor_sigma_twist(p, sigma) != p)
        throw std::runtime_error("constructed element is not sigma-invariant");
    if (delta != nullptr && !tensor_delta_twist(p, sigma, *delta).is_zero())
        throw std::runtime_error("constructed element is not delta-annihilated");
    return p;
}

OreTensorElement lift_to_ore(const TensorElement& p, const OreRing& ring) {
    if (p.alg != ring.algebra()) throw std::invalid_argument("tensor element owner mismatch");
    if (tensor_sigma_twist(p, ring.sigma()) != p)
        throw std::invalid_argument("lift needs a sigma-invariant separability element");
    if (ring.has_delta() && !tensor_delta_twist(p, ring.sigma(), ring.delta()).is_zero())
        throw std::invalid_argument("lift needs a delta-annihilated separability element");
    OreTensorElement out;
    out.ring = &ring;
    for (const auto& [x, y] : p.pairs)
        out.pairs.emplace_back(OrePolynomial::constant(&ring, x), OrePolynomial::constant(&ring, y));
    return out;
}

}  // namespace skewideal
