#ifndef SKEWIDEAL_LINEAR_MAP_HPP
#define SKEWIDEAL_LINEAR_MAP_HPP

#include <memory>

#include "skewideal/algebra.hpp"
#include "skewideal/fq_linalg.hpp"

namespace skewideal {

/// F_q-linear endomorphism of an algebra, stored as the matrix whose column
/// i is the image of basis element v_i. The kind tag is established by
/// exhaustive validation over basis pairs at construction.
class LinearMap {
   public:
    enum class Kind { automorphism, sigma_derivation, plain };

    static LinearMap identity(const Algebra& a);
    /// Validated automorphism from explicit basis images.
    static LinearMap automorphism_from_columns(const Algebra& a, const std::vector<AlgebraElement>& columns);
    /// x -> u x u^{-1} for an invertible u.
    static LinearMap inner_automorphism(const Algebra& a, const AlgebraElement& u);
    /// Quotient algebras: extend x -> image multiplicatively over the power
    /// basis; well-definedness (modulus maps to zero) is checked explicitly.
    static LinearMap generator_automorphism(const Algebra& a, const AlgebraElement& image);
    /// Validated sigma-derivation from explicit basis images.
    static LinearMap sigma_derivation_from_columns(const Algebra& a, const std::vector<AlgebraElement>& columns,
                                                   const LinearMap& sigma);
    static LinearMap zero_derivation(const Algebra& a, const LinearMap& sigma);
    static LinearMap plain_from_matrix(const Algebra& a, FqMatrix m);

    Kind kind() const noexcept { return kind_; }
    const Algebra* algebra() const noexcept { return alg_; }
    const FqMatrix& matrix() const noexcept { return m_; }
    /// For sigma-derivations, the automorphism they pair with.
    const LinearMap* paired_sigma() const noexcept { return sigma_.get(); }

    AlgebraElement operator()(const AlgebraElement& x) const;
    /// this after other (matrix product), returned untagged.
    LinearMap compose(const LinearMap& other) const;
    LinearMap power(int e) const;
    bool is_identity() const { return m_.is_identity(); }
    bool is_zero_map() const;
    bool operator==(const LinearMap& o) const { return alg_ == o.alg_ && m_ == o.m_; }
    bool operator!=(const LinearMap& o) const { return !(*this == o); }

   private:
    LinearMap(const Algebra* a, FqMatrix m, Kind k) : alg_(a), m_(std::move(m)), kind_(k) {}

    const Algebra* alg_;
    FqMatrix m_;
    Kind kind_;
    std::shared_ptr<const LinearMap> sigma_;
};

/// Least m >= 1 with sigma^m = id.
int map_order(const LinearMap& sigma);

/// The permutation induced on a central idempotent list by an automorphism,
/// with its orbit partition in cyclic order (each orbit starts at its
/// smallest index and follows the permutation).
struct BlockAction {
    std::vector<std::size_t> permutation;        // sigma(e_i) = e_{permutation[i]}
    std::vector<std::vector<std::size_t>> orbits;
};

BlockAction block_action(const LinearMap& sigma, const BlockDecomposition& blocks);

}  // namespace skewideal

#endif
