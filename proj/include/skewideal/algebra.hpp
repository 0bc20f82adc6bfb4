#ifndef SKEWIDEAL_ALGEBRA_HPP
#define SKEWIDEAL_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewideal/poly.hpp"

namespace skewideal {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Construction descriptor for a finite-dimensional F_q-algebra.
struct AlgebraSpec {
    enum class Kind { quotient, matrix, group, direct_sum, raw };
    Kind kind = Kind::quotient;

    Poly quotient_modulus;  // quotient: basis {1, x, ..., x^(deg-1)}

    int matrix_size = 0;                   // matrix: M_m(K)
    std::optional<Poly> matrix_extension;  // K = F_q[w]/(ext); absent: K = F_q

    std::vector<std::vector<int>> group_table;  // group: Cayley table of indices

    std::vector<AlgebraSpec> summands;  // direct_sum

    // raw: constants[i*n+j] = coordinates of v_i * v_j
    std::vector<std::vector<FieldElement>> raw_constants;
    std::vector<FieldElement> raw_unit;
    std::size_t raw_dim = 0;

    static AlgebraSpec quotient(Poly modulus);
    static AlgebraSpec matrix(int size, std::optional<Poly> extension = std::nullopt);
    static AlgebraSpec group(std::vector<std::vector<int>> table);
    static AlgebraSpec direct_sum(std::vector<AlgebraSpec> parts);
    static AlgebraSpec raw(std::size_t dim, std::vector<std::vector<FieldElement>> constants,
                           std::vector<FieldElement> unit);
};

/// Element given by its coordinate vector over the fixed algebra basis.
struct AlgebraElement {
    const Algebra* alg = nullptr;
    std::vector<FieldElement> coords;

    bool is_zero() const;
    bool operator==(const AlgebraElement& o) const { return alg == o.alg && coords == o.coords; }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }
};

/// Finite-dimensional associative unital F_q-algebra given by structure
/// constants. Associativity and the unit law are verified exhaustively at
/// construction. Immutable afterwards.
class Algebra {
   public:
    static constexpr std::size_t max_dim = 64;

    Algebra(const FiniteField* field, AlgebraSpec spec);

    const FiniteField* field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return n_; }
    const AlgebraSpec& spec() const noexcept { return spec_; }
    const std::string& basis_label(std::size_t i) const { return labels_[i]; }

    AlgebraElement zero() const;
    AlgebraElement unit() const { return {this, unit_}; }
    AlgebraElement basis_element(std::size_t i) const;
    AlgebraElement from_coords(std::vector<FieldElement> coords) const;
    /// v_i * v_j as a coordinate vector (row of the structure-constant table).
    const FieldElement* basis_product(std::size_t i, std::size_t j) const {
        return table_.data() + (i * n_ + j) * n_;
    }

    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement neg(const AlgebraElement& a) const;
    AlgebraElement scale(const AlgebraElement& a, const FieldElement& s) const;
    /// Two-sided inverse; nullopt when not a unit.
    std::optional<AlgebraElement> inverse(const AlgebraElement& a) const;

    /// Quotient algebras: view an element as the reduced polynomial.
    Poly to_poly(const AlgebraElement& a) const;
    AlgebraElement from_poly(const Poly& p) const;

   private:
    void build_quotient();
    void build_matrix();
    void build_group();
    void build_direct_sum();
    void build_raw();
    void verify_axioms() const;

    const FiniteField* field_;
    std::size_t n_ = 0;
    std::vector<FieldElement> table_;  // n*n*n, basis_product layout
    std::vector<FieldElement> unit_;
    std::vector<std::string> labels_;
    AlgebraSpec spec_;
    std::vector<std::size_t> summand_offsets_;  // direct_sum: start of each block

   public:
    const std::vector<std::size_t>& summand_offsets() const noexcept { return summand_offsets_; }
};

AlgebraPtr construct_algebra(const FiniteField* field, AlgebraSpec spec);

inline AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) { return a.alg->add(a, b); }
inline AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a.alg->sub(a, b); }
inline AlgebraElement operator-(const AlgebraElement& a) { return a.alg->neg(a); }
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return a.alg->multiply(a, b); }
inline AlgebraElement operator*(const FieldElement& s, const AlgebraElement& a) { return a.alg->scale(a, s); }

/// One block A*e of a central decomposition.
struct Block {
    enum class Kind { quotient_field, summand };
    AlgebraElement idempotent;
    std::size_t dim = 0;
    Kind kind = Kind::summand;
    Poly factor;                    // quotient blocks: the irreducible factor
    std::size_t summand_index = 0;  // direct_sum blocks
};

struct BlockDecomposition {
    std::vector<Block> blocks;
};

/// Central orthogonal idempotents summing to 1. Supported constructions:
/// commutative quotients with squarefree modulus (CRT idempotents in factor
/// order), direct sums (block units), and matrix algebras (single block).
BlockDecomposition block_decomposition(const Algebra& a);

/// Validates a user-supplied idempotent list against the axioms.
BlockDecomposition block_decomposition_from(const Algebra& a, std::vector<AlgebraElement> idempotents);

}  // namespace skewideal

#endif
