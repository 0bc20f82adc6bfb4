#include "skewideal/ideal_code.hpp"

#include <stdexcept>

namespace skewideal {

PolyMatrix generator_matrix(const std::vector<OrePolynomial>& generators) {
    if (generators.empty()) throw std::invalid_argument("generator list must be nonempty");
    const OreRing* ring = generators.front().ring();
    const Algebra& alg = *ring->algebra();
    const std::size_t n = alg.dim();
    for (const OrePolynomial& g : generators) {
        if (g.ring() != ring) throw std::invalid_argument("generator owner mismatch");
        if (g.is_zero()) throw std::invalid_argument("generators must be nonzero");
    }
    PolyMatrix m(alg.field(), generators.size() * n, n);
    for (std::size_t gj = 0; gj < generators.size(); ++gj)
        for (std::size_t i = 0; i < n; ++i) {
            const OrePolynomial row_poly =
                OrePolynomial::constant(ring, alg.basis_element(i)) * generators[gj];
            const std::vector<Poly> row = vectorize(row_poly);
            for (std::size_t j = 0; j < n; ++j) m.at(gj * n + i, j) = row[j];
        }
    return m;
}

IdealCode compute_idempotent(const std::vector<OrePolynomial>& generators, const OreTensorElement& sep) {
    const OreRing* ring = generators.empty() ? nullptr : generators.front().ring();
    if (ring == nullptr || sep.ring != ring)
        throw std::invalid_argument("separability element and generators must share the ring");
    const Algebra& alg = *ring->algebra();
    const std::size_t n = alg.dim();

    IdealCode code;
    code.ring = ring;
    code.generators = generators;
    code.generator_mat = generator_matrix(generators);
    code.smith = smith_normal_form(code.generator_mat);
    code.basic = is_basic(code.smith);
    code.k = code.smith.rank;
    if (!code.basic) return code;

    // M = (last n-k columns of Q) * (last n-k rows of Q^{-1})
    const std::size_t co = n - code.k;
    const PolyMatrix mh = code.smith.q.submatrix(0, code.k, n, co);
    const PolyMatrix ms = code.smith.q_inv.submatrix(code.k, 0, co, n);
    const PolyMatrix m = mh * ms;

    OrePolynomial f = OrePolynomial::zero(ring);
    for (const auto& [a_i, b_i] : sep.pairs) {
        std::vector<Poly> row = vectorize(b_i);
        PolyMatrix row_mat(alg.field(), 1, n);
        for (std::size_t j = 0; j < n; ++j) row_mat.at(0, j) = std::move(row[j]);
        const PolyMatrix image = row_mat * m;
        std::vector<Poly> image_row(n);
        for (std::size_t j = 0; j < n; ++j) image_row[j] = image.at(0, j);
        f = f + a_i * devectorize(*ring, image_row);
    }
    code.complement = f;
    code.idempotent = OrePolynomial::one(ring) - f;
    code.encoder = code.smith.q_inv.submatrix(0, 0, code.k, n);

    // mandatory verification
    const OrePolynomial& e = code.idempotent;
    if (e * e != e) throw std::logic_error("computed element is not idempotent");
    for (const OrePolynomial& g : generators)
        if (!(g * f).is_zero()) throw std::logic_error("a generator does not annihilate 1 - e");
    PolyMatrix me = generator_matrix({e});
    if (!same_row_space(me, code.generator_mat))
        throw std::logic_error("idempotent does not generate the ideal's row space");
    if (!same_row_space(code.encoder, code.generator_mat))
        throw std::logic_error("encoder row space mismatch");
    return code;
}

PolyMatrix parity_check_matrix(const IdealCode& code) {
    if (!code.basic) throw std::invalid_argument("not an ideal code: no parity check matrix");
    if (code.complement.is_zero()) return PolyMatrix(code.ring->algebra()->field(),
                                                     code.ring->algebra()->dim(),
                                                     code.ring->algebra()->dim());
    return generator_matrix({code.complement});
}

const PolyMatrix& basic_encoder(const IdealCode& code) {
    if (!code.basic) throw std::invalid_argument("not an ideal code: no encoder");
    return code.encoder;
}

}  // namespace skewideal
