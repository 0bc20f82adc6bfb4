#ifndef SKEWIDEAL_DISTANCES_HPP
#define SKEWIDEAL_DISTANCES_HPP

#include <cstdint>

#include "skewideal/poly_matrix.hpp"

namespace skewideal {

/// Default cap on exhaustive-search candidates.
inline constexpr std::uint64_t default_search_cap = 1ull << 26;

/// Code degree of a full-rank k x n polynomial encoder: the maximum degree
/// over its k x k minors. Throws on rank deficiency.
int code_degree(const PolyMatrix& encoder);

/// d_free <= (n-k)(floor(delta/k)+1) + delta + 1.
int generalized_singleton_bound(std::size_t n, std::size_t k, int degree);

/// j-th column distance: minimum over messages (u_0,...,u_j) with u_0 != 0
/// of the symbol weight of the first j+1 blocks of u(z) * encoder.
///
/// The plain serial enumeration is the reference implementation; the
/// unsuffixed kernel stratifies the search over u_0 across OpenMP threads
/// with a deterministic min-reduction and prunes on partial weights. Both
/// return identical values.
int column_distance(const PolyMatrix& encoder, int j, std::uint64_t cap = default_search_cap);
int column_distance_serial(const PolyMatrix& encoder, int j, std::uint64_t cap = default_search_cap);

/// j-th row distance: minimum over nonzero u(z) of degree <= j (normalized
/// to u_0 != 0 by shift invariance) of the full symbol weight of
/// u(z) * encoder.
int row_distance(const PolyMatrix& encoder, int j, std::uint64_t cap = default_search_cap);
int row_distance_serial(const PolyMatrix& encoder, int j, std::uint64_t cap = default_search_cap);

struct CodeProfile {
    std::size_t n = 0;
    std::size_t k = 0;
    int degree = 0;
    int singleton_bound = 0;
    std::vector<int> column_distances;  // d^c_j for j = 0..
    std::vector<int> row_distances;     // the d^r_j actually computed

    enum class Certificate { mds, sandwich, exhausted };
    Certificate certificate = Certificate::exhausted;
    int free_lower = 0;  // certified value when certificate != exhausted
    int free_upper = 0;

    bool certified() const { return certificate != Certificate::exhausted; }
    int free_distance() const;
};

/// Grows j until d^c_j hits the Singleton bound (MDS) or the minimum of the
/// computed row distances (sandwich); otherwise reports the bracket
/// [max d^c, min d^r] as exhausted. Monotonicity of the distance profiles is
/// asserted along the way.
CodeProfile free_distance(const PolyMatrix& encoder, int max_j, std::uint64_t cap = default_search_cap);

}  // namespace skewideal

#endif
