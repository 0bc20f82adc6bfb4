#ifndef SKEWIDEAL_IDEAL_CODE_HPP
#define SKEWIDEAL_IDEAL_CODE_HPP

#include "skewideal/separability.hpp"

namespace skewideal {

/// Result of the idempotent computation for a left ideal given by
/// generators. When the Smith form of the generator matrix is not basic the
/// ideal is not a direct summand and no idempotent exists; `basic` is false
/// and only the matrix data is populated.
struct IdealCode {
    const OreRing* ring = nullptr;
    std::vector<OrePolynomial> generators;
    PolyMatrix generator_mat;  // tn x n
    SmithDecomposition smith;
    bool basic = false;
    std::size_t k = 0;          // code dimension
    OrePolynomial idempotent;   // e with I = Re, when basic
    OrePolynomial complement;   // f = 1 - e
    PolyMatrix encoder;         // first k rows of Q^{-1}
};

/// Rows are the coordinate rows of v_i g_j, generator-major, basis-minor.
PolyMatrix generator_matrix(const std::vector<OrePolynomial>& generators);

/// Computes the generating idempotent of the left ideal spanned by the
/// generators, using a separability element of F_q[z] inside the ring.
/// Every invariant (e^2 = e, g(1-e) = 0, equal row spaces, basic encoder)
/// is verified on the result; verification failure throws.
IdealCode compute_idempotent(const std::vector<OrePolynomial>& generators, const OreTensorElement& sep);

/// The coordinate matrix of right multiplication by f = 1 - e; a row vector
/// r lies in the code iff r times this matrix vanishes.
PolyMatrix parity_check_matrix(const IdealCode& code);

/// Full-rank basic generator matrix of the code (the first k rows of Q^{-1}).
const PolyMatrix& basic_encoder(const IdealCode& code);

}  // namespace skewideal

#endif
