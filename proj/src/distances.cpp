#include "skewideal/distances.hpp"

#include <climits>
#include <stdexcept>

namespace skewideal {

int code_degree(const PolyMatrix& encoder) {
    const int deg = max_minor_degree(encoder, encoder.rows());
    if (deg < 0) throw std::invalid_argument("encoder is rank deficient");
    return deg;
}

int generalized_singleton_bound(std::size_t n, std::size_t k, int degree) {
    return static_cast<int>(n - k) * (degree / static_cast<int>(k) + 1) + degree + 1;
}

namespace {

// Encoder coefficient blocks in raw-representation layout: block[t][r*n+c]
// is the z^t coefficient of entry (r, c).
struct EncoderTable {
    const FiniteField* field;
    std::size_t k, n;
    int dmax;
    std::vector<std::vector<std::uint32_t>> block;

    explicit EncoderTable(const PolyMatrix& encoder)
        : field(encoder.field()), k(encoder.rows()), n(encoder.cols()), dmax(0) {
        if (k == 0 || n == 0) throw std::invalid_argument("empty encoder");
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < n; ++c) dmax = std::max(dmax, encoder.at(r, c).degree());
        block.assign(static_cast<std::size_t>(dmax) + 1, std::vector<std::uint32_t>(k * n, 0));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < n; ++c)
                for (int t = 0; t <= encoder.at(r, c).degree(); ++t)
                    block[static_cast<std::size_t>(t)][r * n + c] = encoder.at(r, c).coeff(t).rep;
    }
};

// saturates well above any usable cap so oversized searches fail the cap
// check instead of wrapping
std::uint64_t pow_u64(std::uint64_t base, int e) {
    constexpr std::uint64_t limit = 1ull << 62;
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > limit / base) return limit;
        r *= base;
    }
    return r;
}

// decode a message block index into k symbol representations
inline void decode_block(std::uint64_t idx, std::uint32_t q, std::size_t k, std::uint32_t* out) {
    for (std::size_t i = 0; i < k; ++i) {
        out[i] = static_cast<std::uint32_t>(idx % q);
        idx /= q;
    }
}

// weight of output block t for the message blocks u[0..jmax]
inline int block_weight(const EncoderTable& enc, const std::vector<std::uint32_t>& u, int jmax, int t) {
    const FiniteField& f = *enc.field;
    int w = 0;
    for (std::size_t c = 0; c < enc.n; ++c) {
        std::uint32_t acc = 0;
        const int lo = std::max(0, t - enc.dmax);
        const int hi = std::min(jmax, t);
        for (int l = lo; l <= hi; ++l) {
            const std::vector<std::uint32_t>& e = enc.block[static_cast<std::size_t>(t - l)];
            for (std::size_t r = 0; r < enc.k; ++r) {
                const std::uint32_t s = u[static_cast<std::size_t>(l) * enc.k + r];
                if (s == 0) continue;
                acc = f.add_rep(acc, f.mul_rep(s, e[r * enc.n + c]));
            }
        }
        if (acc != 0) ++w;
    }
    return w;
}

void check_cap(std::uint64_t qk, int j, std::uint64_t cap) {
    std::uint64_t candidates = qk - 1;
    for (int i = 0; i < j; ++i) {
        if (candidates > cap / qk + 1) {
            candidates = cap + 1;
            break;
        }
        candidates *= qk;
    }
    if (candidates > cap) throw std::invalid_argument("distance search space exceeds the configured cap");
}

}  // namespace

int column_distance_serial(const PolyMatrix& encoder, int j, std::uint64_t cap) {
    if (j < 0) throw std::invalid_argument("column distance index must be >= 0");
    const EncoderTable enc(encoder);
    const std::uint32_t q = enc.field->size();
    const std::uint64_t qk = pow_u64(q, static_cast<int>(enc.k));
    check_cap(qk, j, cap);
    const std::uint64_t tails = pow_u64(qk, j);

    int best = INT_MAX;
    std::vector<std::uint32_t> u(static_cast<std::size_t>(j + 1) * enc.k, 0);
    for (std::uint64_t head = 1; head < qk; ++head) {
        decode_block(head, q, enc.k, u.data());
        for (std::uint64_t tail = 0; tail < tails; ++tail) {
            std::uint64_t rest = tail;
            for (int l = 1; l <= j; ++l) {
                decode_block(rest % qk, q, enc.k, u.data() + static_cast<std::size_t>(l) * enc.k);
                rest /= qk;
            }
            int w = 0;
            for (int t = 0; t <= j; ++t) w += block_weight(enc, u, j, t);
            if (w < best) best = w;
        }
    }
    return best;
}

int column_distance(const PolyMatrix& encoder, int j, std::uint64_t cap) {
    if (j < 0) throw std::invalid_argument("column distance index must be >= 0");
    const EncoderTable enc(encoder);
    const std::uint32_t q = enc.field->size();
    const std::uint64_t qk = pow_u64(q, static_cast<int>(enc.k));
    check_cap(qk, j, cap);
    const std::uint64_t tails = pow_u64(qk, j);

    int best = INT_MAX;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (long long head = 1; head < static_cast<long long>(qk); ++head) {
        std::vector<std::uint32_t> u(static_cast<std::size_t>(j + 1) * enc.k, 0);
        decode_block(static_cast<std::uint64_t>(head), q, enc.k, u.data());
        for (std::uint64_t tail = 0; tail < tails; ++tail) {
            std::uint64_t rest = tail;
            for (int l = 1; l <= j; ++l) {
                decode_block(rest % qk, q, enc.k, u.data() + static_cast<std::size_t>(l) * enc.k);
                rest /= qk;
            }
            int w = 0;
            for (int t = 0; t <= j && w < best; ++t) w += block_weight(enc, u, j, t);
            if (w < best) best = w;
        }
    }
    return best;
}

int row_distance_serial(const PolyMatrix& encoder, int j, std::uint64_t cap) {
    if (j < 0) throw std::invalid_argument("row distance index must be >= 0");
    const EncoderTable enc(encoder);
    const std::uint32_t q = enc.field->size();
    const std::uint64_t qk = pow_u64(q, static_cast<int>(enc.k));
    check_cap(qk, j, cap);
    const std::uint64_t tails = pow_u64(qk, j);
    const int tmax = j + enc.dmax;

    int best = INT_MAX;
    std::vector<std::uint32_t> u(static_cast<std::size_t>(j + 1) * enc.k, 0);
    for (std::uint64_t head = 1; head < qk; ++head) {
        decode_block(head, q, enc.k, u.data());
        for (std::uint64_t tail = 0; tail < tails; ++tail) {
            std::uint64_t rest = tail;
            for (int l = 1; l <= j; ++l) {
                decode_block(rest % qk, q, enc.k, u.data() + static_cast<std::size_t>(l) * enc.k);
                rest /= qk;
            }
            int w = 0;
            for (int t = 0; t <= tmax; ++t) w += block_weight(enc, u, j, t);
            if (w < best) best = w;
        }
    }
    return best;
}

int row_distance(const PolyMatrix& encoder, int j, std::uint64_t cap) {
    if (j < 0) throw std::invalid_argument("row distance index must be >= 0");
    const EncoderTable enc(encoder);
    const std::uint32_t q = enc.field->size();
    const std::uint64_t qk = pow_u64(q, static_cast<int>(enc.k));
    check_cap(qk, j, cap);
    const std::uint64_t tails = pow_u64(qk, j);
    const int tmax = j + enc.dmax;

    int best = INT_MAX;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (long long head = 1; head < static_cast<long long>(qk); ++head) {
        std::vector<std::uint32_t> u(static_cast<std::size_t>(j + 1) * enc.k, 0);
        decode_block(static_cast<std::uint64_t>(head), q, enc.k, u.data());
        for (std::uint64_t tail = 0; tail < tails; ++tail) {
            std::uint64_t rest = tail;
            for (int l = 1; l <= j; ++l) {
                decode_block(rest % qk, q, enc.k, u.data() + static_cast<std::size_t>(l) * enc.k);
                rest /= qk;
            }
            int w = 0;
            for (int t = 0; t <= tmax && w < best; ++t) w += block_weight(enc, u, j, t);
            if (w < best) best = w;
        }
    }
    return best;
}

int CodeProfile::free_distance() const {
    if (!certified()) throw std::logic_error("free distance was not certified");
    return free_lower;
}

CodeProfile free_distance(const PolyMatrix& encoder, int max_j, std::uint64_t cap) {
    if (max_j < 0) throw std::invalid_argument("max_j must be >= 0");
    CodeProfile prof;
    prof.k = encoder.rows();
    prof.n = encoder.cols();
    prof.degree = code_degree(encoder);
    prof.singleton_bound = generalized_singleton_bound(prof.n, prof.k, prof.degree);

    auto check_monotone = [&prof]() {
        for (std::size_t i = 1; i < prof.column_distances.size(); ++i)
            if (prof.column_distances[i] < prof.column_distances[i - 1])
                throw std::logic_error("column distances are not nondecreasing");
        for (std::size_t i = 1; i < prof.row_distances.size(); ++i)
            if (prof.row_distances[i] > prof.row_distances[i - 1])
                throw std::logic_error("row distances are not nonincreasing");
        for (int dc : prof.column_distances)
            for (int dr : prof.row_distances)
                if (dc > dr) throw std::logic_error("a column distance exceeds a row distance");
    };

    prof.row_distances.push_back(row_distance(encoder, 0, cap));
    int min_dr = prof.row_distances[0];
    for (int j = 0; j <= max_j; ++j) {
        prof.column_distances.push_back(column_distance(encoder, j, cap));
        check_monotone();
        const int dc = prof.column_distances.back();
        if (dc > prof.singleton_bound) throw std::logic_error("column distance exceeds the Singleton bound");
        // when both certificates hold at once the sandwich names the tighter witness
        if (dc == min_dr) {
            prof.certificate = CodeProfile::Certificate::sandwich;
            prof.free_lower = prof.free_upper = dc;
            return prof;
        }
        if (dc == prof.singleton_bound) {
            prof.certificate = CodeProfile::Certificate::mds;
            prof.free_lower = prof.free_upper = dc;
            return prof;
        }
    }
    // exhausted: tighten the bracket with the remaining row distances
    for (int j = 1; j <= max_j; ++j) {
        prof.row_distances.push_back(row_distance(encoder, j, cap));
        check_monotone();
        min_dr = std::min(min_dr, prof.row_distances.back());
        if (prof.column_distances.back() == min_dr) {
            prof.certificate = CodeProfile::Certificate::sandwich;
            prof.free_lower = prof.free_upper = min_dr;
            return prof;
        }
    }
    prof.certificate = CodeProfile::Certificate::exhausted;
    prof.free_lower = prof.column_distances.back();
    prof.free_upper = min_dr;
    return prof;
}

}  // namespace skewideal
