#include "skewideal/finite_field.hpp"

#include <algorithm>
#include <numeric>

namespace skewideal {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Plain coefficient-vector arithmetic over F_p, used only while the tables
// are being built. Vectors are ascending, not normalized.

int degree_of(const std::vector<int>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

std::vector<int> mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                         const std::vector<int>& modulus, long p) {
    int da = degree_of(a), db = degree_of(b);
    if (da < 0 || db < 0) return {};
    std::vector<int> prod(static_cast<std::size_t>(da + db) + 1, 0);
    for (int i = 0; i <= da; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j <= db; ++j)
            prod[i + j] = static_cast<int>((prod[i + j] + static_cast<long>(a[i]) * b[j]) % p);
    }
    // modulus is monic, so reduction is plain long division
    int dm = degree_of(modulus);
    for (int i = static_cast<int>(prod.size()) - 1; i >= dm; --i) {
        int c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < dm; ++j)
            prod[i - dm + j] = static_cast<int>(((prod[i - dm + j] - static_cast<long>(c) * modulus[j]) % p + p) % p);
    }
    prod.resize(dm);
    return prod;
}

// Remainder of a by b (b nonzero, not necessarily monic) over F_p.
std::vector<int> rem_poly(std::vector<int> a, const std::vector<int>& b, long p) {
    int db = degree_of(b);
    long lead_inv = 1;
    {
        long lc = b[db], t = 1;
        // Fermat inverse
        long e = p - 2, base = lc % p;
        while (e > 0) {
            if (e & 1) t = t * base % p;
            base = base * base % p;
            e >>= 1;
        }
        lead_inv = t;
    }
    for (int i = degree_of(a); i >= db; i = degree_of(a)) {
        long c = a[i] * lead_inv % p;
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = static_cast<int>(((a[i - db + j] - c * b[j]) % p + p) % p);
    }
    return a;
}

bool divides_poly(const std::vector<int>& d, const std::vector<int>& a, long p) {
    return degree_of(rem_poly(a, d, p)) < 0;
}

std::vector<int> decode_poly(std::uint64_t enc, long p, int len) {
    std::vector<int> c(static_cast<std::size_t>(len), 0);
    for (int i = 0; i < len; ++i) {
        c[i] = static_cast<int>(enc % p);
        enc /= p;
    }
    return c;
}

bool is_irreducible(const std::vector<int>& f, long p) {
    int k = degree_of(f);
    if (k <= 0) return false;
    // trial division by every monic polynomial of degree 1..k/2
    for (int d = 1; 2 * d <= k; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            std::vector<int> g = decode_poly(enc, p, d + 1);
            g[d] = 1;
            if (divides_poly(g, f, p)) return false;
        }
    }
    return true;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> fs;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

FiniteField::FiniteField(long p, int k, std::vector<int> modulus) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k < 1) throw std::invalid_argument("field extension degree must be >= 1");
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > max_size) throw std::invalid_argument("field size exceeds the 2^16 cap");
    }
    q_ = static_cast<std::uint32_t>(q);

    if (!modulus.empty()) {
        if (static_cast<int>(modulus.size()) != k + 1 || modulus[k] != 1)
            throw std::invalid_argument("modulus must be monic of degree k");
        for (int& c : modulus)
            if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
        if (!is_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");
        modulus_ = std::move(modulus);
    } else {
        // smallest monic irreducible in encoding order (ascending coefficients,
        // least significant digit first)
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            std::vector<int> f = decode_poly(enc, p, k + 1);
            f[k] = 1;
            if (is_irreducible(f, p)) {
                modulus_ = std::move(f);
                break;
            }
        }
        if (modulus_.empty()) throw std::logic_error("no irreducible modulus found");
    }

    // find the primitive element: first rep whose order is exactly q-1
    const long group = static_cast<long>(q_) - 1;
    const std::vector<long> crit = prime_factors(group);
    auto pow_slow = [&](std::uint32_t base, long e) {
        std::vector<int> acc(static_cast<std::size_t>(k_), 0);
        acc[0] = 1;
        std::vector<int> b = decode_poly(base, p_, k_);
        while (e > 0) {
            if (e & 1) acc = mul_mod(acc, b, modulus_, p_);
            b = mul_mod(b, b, modulus_, p_);
            e >>= 1;
        }
        std::uint32_t rep = 0;
        for (int i = k_ - 1; i >= 0; --i) rep = static_cast<std::uint32_t>(rep * p_ + (i < static_cast<int>(acc.size()) ? acc[i] : 0));
        return rep;
    };
    primitive_ = 0;
    for (std::uint32_t cand = 1; cand < q_; ++cand) {
        bool primitive = true;
        for (long ell : crit)
            if (pow_slow(cand, group / ell) == 1) {
                primitive = false;
                break;
            }
        if (group == 1) primitive = true;
        if (primitive) {
            primitive_ = cand;
            break;
        }
    }
    if (primitive_ == 0) throw std::logic_error("no primitive element found");

    exp_.assign(static_cast<std::size_t>(group), 0);
    log_.assign(q_, -1);
    std::vector<int> acc(static_cast<std::size_t>(k_), 0);
    acc[0] = 1;
    const std::vector<int> g = decode_poly(primitive_, p_, k_);
    for (long i = 0; i < group; ++i) {
        std::uint32_t rep = 0;
        for (int j = k_ - 1; j >= 0; --j) rep = static_cast<std::uint32_t>(rep * p_ + acc[j]);
        exp_[i] = rep;
        if (log_[rep] != -1) throw std::logic_error("primitive element order test failed");
        log_[rep] = i;
        acc = mul_mod(acc, g, modulus_, p_);
    }
}

FieldElement FiniteField::from_rep(std::uint32_t rep) const {
    if (rep >= q_) throw std::invalid_argument("element encoding out of range");
    return {this, rep};
}

FieldElement FiniteField::from_coords(const std::vector<int>& coords) const {
    if (coords.size() != static_cast<std::size_t>(k_))
        throw std::invalid_argument("coordinate vector must have length k");
    std::uint32_t rep = 0;
    for (int i = k_ - 1; i >= 0; --i) {
        int c = coords[i];
        if (c < 0 || c >= p_) throw std::invalid_argument("coordinate out of range");
        rep = static_cast<std::uint32_t>(rep * p_ + c);
    }
    return {this, rep};
}

std::vector<int> FiniteField::coords(const FieldElement& a) const {
    std::uint32_t rep = own(a);
    std::vector<int> c(static_cast<std::size_t>(k_), 0);
    for (int i = 0; i < k_; ++i) {
        c[i] = static_cast<int>(rep % p_);
        rep = static_cast<std::uint32_t>(rep / p_);
    }
    return c;
}

FieldElement FiniteField::from_power(long long e) const {
    const long group = static_cast<long>(q_) - 1;
    if (group == 0) return one();
    long long r = e % group;
    if (r < 0) r += group;
    return {this, exp_[static_cast<std::size_t>(r)]};
}

long FiniteField::log(const FieldElement& a) const {
    std::uint32_t rep = own(a);
    if (rep == 0) throw std::domain_error("discrete log of zero");
    return log_[rep];
}

std::uint32_t FiniteField::add_rep(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint32_t rep = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        rep += mult * ((da + db) % p_);
        mult *= static_cast<std::uint32_t>(p_);
    }
    return rep;
}

std::uint32_t FiniteField::neg_rep(std::uint32_t a) const {
    if (p_ == 2) return a;
    std::uint32_t rep = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
        std::uint32_t da = a % p_;
        a /= p_;
        rep += mult * ((p_ - da) % p_);
        mult *= static_cast<std::uint32_t>(p_);
    }
    return rep;
}

std::uint32_t FiniteField::inv_rep(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("division by zero field element");
    long e = log_[a];
    long group = static_cast<long>(q_) - 1;
    long r = (group - e) % group;
    return exp_[r];
}

std::uint32_t FiniteField::pow_rep(std::uint32_t a, long long e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("division by zero field element");
        return e == 0 ? 1u : 0u;
    }
    const long group = static_cast<long>(q_) - 1;
    if (group == 0) return 1;
    long long r = (static_cast<long long>(log_[a]) * (e % group)) % group;
    if (r < 0) r += group;
    return exp_[static_cast<std::size_t>(r)];
}

FieldElement FiniteField::from_int(long c) const {
    long r = c % p_;
    if (r < 0) r += p_;
    return {this, static_cast<std::uint32_t>(r)};
}

bool FiniteField::has_subfield(long q_sub) const noexcept {
    if (q_sub < 2) return false;
    long q = q_sub;
    int j = 0;
    while (q % p_ == 0) {
        q /= p_;
        ++j;
    }
    return q == 1 && j >= 1 && k_ % j == 0;
}

int FiniteField::extension_degree_over(long q_sub) const {
    if (!has_subfield(q_sub)) throw std::invalid_argument("not a subfield order of this field");
    int j = 0;
    long q = q_sub;
    while (q > 1) {
        q /= p_;
        ++j;
    }
    return k_ / j;
}

bool FiniteField::in_subfield(const FieldElement& a, long q_sub) const {
    return pow_rep(own(a), q_sub) == own(a);
}

FieldPtr make_field(long p, int k, const std::vector<int>& modulus) {
    return std::make_shared<const FiniteField>(p, k, modulus);
}

FieldElement frobenius_power(const FieldElement& a, long base_q, long h) {
    const FiniteField& f = *a.field;
    if (!f.has_subfield(base_q)) throw std::invalid_argument("frobenius base is not a subfield order");
    FieldElement r = a;
    for (long i = 0; i < h; ++i) r = f.pow(r, base_q);
    return r;
}

FieldElement trace(const FieldElement& a, long subfield_order) {
    const FiniteField& f = *a.field;
    const int t = f.extension_degree_over(subfield_order);
    FieldElement acc = f.zero();
    FieldElement x = a;
    for (int i = 0; i < t; ++i) {
        acc = acc + x;
        x = f.pow(x, subfield_order);
    }
    return acc;
}

std::pair<std::vector<FieldElement>, std::vector<FieldElement>>
normal_dual_bases(const FiniteField& field, long subfield_order) {
    const int t = field.extension_degree_over(subfield_order);
    const long q = subfield_order;

    // digit value i > 0 maps to g_sub^(i-1), the subfield in discrete-log order
    const long big_group = static_cast<long>(field.size()) - 1;
    const long sub_group = q - 1;
    std::vector<FieldElement> digit(static_cast<std::size_t>(q), field.zero());
    for (long i = 1; i < q; ++i)
        digit[static_cast<std::size_t>(i)] =
            sub_group == 0 ? field.one() : field.from_power((big_group / sub_group) * (i - 1));

    const FieldElement y = field.generator();

    std::uint64_t total = 1;
    for (int i = 0; i < t; ++i) total *= static_cast<std::uint64_t>(q);

    for (std::uint64_t m = 1; m < total; ++m) {
        FieldElement a = field.zero();
        std::uint64_t enc = m;
        FieldElement ypow = field.one();
        for (int i = 0; i < t; ++i) {
            a = a + digit[static_cast<std::size_t>(enc % q)] * ypow;
            enc /= q;
            ypow = ypow * y;
        }
        // conjugates
        std::vector<FieldElement> basis(static_cast<std::size_t>(t));
        basis[0] = a;
        for (int i = 1; i < t; ++i) basis[i] = field.pow(basis[i - 1], q);
        // trace Gram matrix; singular <=> not a basis
        std::vector<std::vector<FieldElement>> gram(t, std::vector<FieldElement>(t));
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) gram[i][j] = trace(basis[i] * basis[j], q);
        // invert by Gaussian elimination, tracking only the first column
        std::vector<std::vector<FieldElement>> w = gram;
        std::vector<std::vector<FieldElement>> inv(t, std::vector<FieldElement>(t, field.zero()));
        for (int i = 0; i < t; ++i) inv[i][i] = field.one();
        bool singular = false;
        for (int col = 0; col < t && !singular; ++col) {
            int pivot = -1;
            for (int r = col; r < t; ++r)
                if (!w[r][col].is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) {
                singular = true;
                break;
            }
            std::swap(w[pivot], w[col]);
            std::swap(inv[pivot], inv[col]);
            FieldElement d = field.inv(w[col][col]);
            for (int c = 0; c < t; ++c) {
                w[col][c] = w[col][c] * d;
                inv[col][c] = inv[col][c] * d;
            }
            for (int r = 0; r < t; ++r) {
                if (r == col || w[r][col].is_zero()) continue;
                FieldElement factor = w[r][col];
                for (int c = 0; c < t; ++c) {
                    w[r][c] = w[r][c] - factor * w[col][c];
                    inv[r][c] = inv[r][c] - factor * inv[col][c];
                }
            }
        }
        if (singular) continue;

        FieldElement b = field.zero();
        for (int j = 0; j < t; ++j) b = b + inv[j][0] * basis[j];
        std::vector<FieldElement> dual(static_cast<std::size_t>(t));
        dual[0] = b;
        for (int i = 1; i < t; ++i) dual[i] = field.pow(dual[i - 1], q);

        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) {
                FieldElement tr = trace(basis[i] * dual[j], q);
                FieldElement expect = i == j ? field.one() : field.zero();
                if (tr != expect) throw std::logic_error("dual basis verification failed");
            }
        return {basis, dual};
    }
    throw std::logic_error("no normal element found");
}

}  // namespace skewideal
