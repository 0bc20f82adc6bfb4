#include "skewideal/algebra.hpp"

#include <stdexcept>

#include "skewideal/fq_linalg.hpp"

namespace skewideal {

AlgebraSpec AlgebraSpec::quotient(Poly modulus) {
    AlgebraSpec s;
    s.kind = Kind::quotient;
    s.quotient_modulus = std::move(modulus);
    return s;
}

AlgebraSpec AlgebraSpec::matrix(int size, std::optional<Poly> extension) {
    AlgebraSpec s;
    s.kind = Kind::matrix;
    s.matrix_size = size;
    s.matrix_extension = std::move(extension);
    return s;
}

AlgebraSpec AlgebraSpec::group(std::vector<std::vector<int>> table) {
    AlgebraSpec s;
    s.kind = Kind::group;
    s.group_table = std::move(table);
    return s;
}

AlgebraSpec AlgebraSpec::direct_sum(std::vector<AlgebraSpec> parts) {
    AlgebraSpec s;
    s.kind = Kind::direct_sum;
    s.summands = std::move(parts);
    return s;
}

AlgebraSpec AlgebraSpec::raw(std::size_t dim, std::vector<std::vector<FieldElement>> constants,
                             std::vector<FieldElement> unit) {
    AlgebraSpec s;
    s.kind = Kind::raw;
    s.raw_dim = dim;
    s.raw_constants = std::move(constants);
    s.raw_unit = std::move(unit);
    return s;
}

bool AlgebraElement::is_zero() const {
    for (const FieldElement& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

Algebra::Algebra(const FiniteField* field, AlgebraSpec spec) : field_(field), spec_(std::move(spec)) {
    switch (spec_.kind) {
        case AlgebraSpec::Kind::quotient: build_quotient(); break;
        case AlgebraSpec::Kind::matrix: build_matrix(); break;
        case AlgebraSpec::Kind::group: build_group(); break;
        case AlgebraSpec::Kind::direct_sum: build_direct_sum(); break;
        case AlgebraSpec::Kind::raw: build_raw(); break;
    }
    if (n_ == 0 || n_ > max_dim) throw std::invalid_argument("algebra dimension out of range");
    verify_axioms();
}

void Algebra::build_quotient() {
    const Poly& f = spec_.quotient_modulus;
    if (f.field() != field_) throw std::invalid_argument("modulus field mismatch");
    if (f.degree() < 1) throw std::invalid_argument("quotient modulus must have degree >= 1");
    if (!f.is_monic()) throw std::invalid_argument("quotient modulus must be monic");
    n_ = static_cast<std::size_t>(f.degree());
    table_.assign(n_ * n_ * n_, field_->zero());
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const Poly prod = Poly::monomial(field_, static_cast<int>(i + j), field_->one()) % f;
            for (std::size_t k = 0; k < n_; ++k)
                table_[(i * n_ + j) * n_ + k] = prod.coeff(static_cast<int>(k));
        }
    unit_.assign(n_, field_->zero());
    unit_[0] = field_->one();
    labels_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
        labels_[i] = i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i));
}

void Algebra::build_matrix() {
    const int m = spec_.matrix_size;
    if (m < 1) throw std::invalid_argument("matrix size must be >= 1");
    Poly ext = spec_.matrix_extension ? *spec_.matrix_extension : Poly::variable(field_);
    int s = 1;
    if (spec_.matrix_extension) {
        if (ext.field() != field_) throw std::invalid_argument("extension field mismatch");
        if (!ext.is_monic() || ext.degree() < 1) throw std::invalid_argument("extension modulus must be monic");
        const auto factors = berlekamp_factor(ext);
        if (factors.size() != 1 || factors[0].second != 1)
            throw std::invalid_argument("extension modulus must be irreducible");
        s = ext.degree();
    }
    n_ = static_cast<std::size_t>(m) * m * s;
    table_.assign(n_ * n_ * n_, field_->zero());
    // basis E_{ij} w^l, row-major in (i, j), scalar power innermost
    auto index = [&](int i, int j, int l) { return (static_cast<std::size_t>(i) * m + j) * s + l; };
    for (int i1 = 0; i1 < m; ++i1)
        for (int j1 = 0; j1 < m; ++j1)
            for (int l1 = 0; l1 < s; ++l1)
                for (int i2 = 0; i2 < m; ++i2)
                    for (int j2 = 0; j2 < m; ++j2)
                        for (int l2 = 0; l2 < s; ++l2) {
                            if (j1 != i2) continue;
                            const std::size_t a = index(i1, j1, l1), b = index(i2, j2, l2);
                            if (s == 1) {
                                table_[(a * n_ + b) * n_ + index(i1, j2, 0)] = field_->one();
                            } else {
                                const Poly w = Poly::monomial(field_, l1 + l2, field_->one()) % ext;
                                for (int k = 0; k < s; ++k)
                                    table_[(a * n_ + b) * n_ + index(i1, j2, k)] = w.coeff(k);
                            }
                        }
    unit_.assign(n_, field_->zero());
    for (int i = 0; i < m; ++i) unit_[index(i, i, 0)] = field_->one();
    labels_.resize(n_);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int l = 0; l < s; ++l) {
                std::string lab = "E" + std::to_string(i + 1) + std::to_string(j + 1);
                if (l > 0) lab += "w^" + std::to_string(l);
                labels_[index(i, j, l)] = lab;
            }
}

void Algebra::build_group() {
    const auto& t = spec_.group_table;
    n_ = t.size();
    if (n_ == 0) throw std::invalid_argument("empty group table");
    for (const auto& row : t) {
        if (row.size() != n_) throw std::invalid_argument("group table is not square");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n_)
                throw std::invalid_argument("group table entry out of range");
    }
    // identity element
    std::size_t id = n_;
    for (std::size_t e = 0; e < n_; ++e) {
        bool ok = true;
        for (std::size_t i = 0; i < n_ && ok; ++i)
            ok = t[e][i] == static_cast<int>(i) && t[i][e] == static_cast<int>(i);
        if (ok) {
            id = e;
            break;
        }
    }
    if (id == n_) throw std::invalid_argument("group table has no identity");
    table_.assign(n_ * n_ * n_, field_->zero());
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            table_[(i * n_ + j) * n_ + static_cast<std::size_t>(t[i][j])] = field_->one();
    unit_.assign(n_, field_->zero());
    unit_[id] = field_->one();
    labels_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) labels_[i] = "g" + std::to_string(i);
}

void Algebra::build_direct_sum() {
    if (spec_.summands.empty()) throw std::invalid_argument("direct sum needs at least one summand");
    std::vector<Algebra> parts;
    parts.reserve(spec_.summands.size());
    for (const AlgebraSpec& s : spec_.summands) {
        if (s.kind == AlgebraSpec::Kind::direct_sum)
            throw std::invalid_argument("nested direct sums are not supported");
        parts.emplace_back(field_, s);
    }
    n_ = 0;
    summand_offsets_.clear();
    for (const Algebra& part : parts) {
        summand_offsets_.push_back(n_);
        n_ += part.dim();
    }
    table_.assign(n_ * n_ * n_, field_->zero());
    unit_.assign(n_, field_->zero());
    labels_.resize(n_);
    for (std::size_t b = 0; b < parts.size(); ++b) {
        const Algebra& part = parts[b];
        const std::size_t off = summand_offsets_[b];
        const std::size_t d = part.dim();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const FieldElement* prod = part.basis_product(i, j);
                for (std::size_t k = 0; k < d; ++k)
                    table_[((off + i) * n_ + (off + j)) * n_ + (off + k)] = prod[k];
            }
        for (std::size_t i = 0; i < d; ++i) unit_[off + i] = part.unit_[i];
        for (std::size_t i = 0; i < d; ++i)
            labels_[off + i] = "b" + std::to_string(b) + "." + part.labels_[i];
    }
}

void Algebra::build_raw() {
    n_ = spec_.raw_dim;
    if (spec_.raw_constants.size() != n_ * n_) throw std::invalid_argument("structure constant table size mismatch");
    if (spec_.raw_unit.size() != n_) throw std::invalid_argument("unit coordinate length mismatch");
    table_.assign(n_ * n_ * n_, field_->zero());
    for (std::size_t ij = 0; ij < n_ * n_; ++ij) {
        if (spec_.raw_constants[ij].size() != n_)
            throw std::invalid_argument("structure constant row length mismatch");
        for (std::size_t k = 0; k < n_; ++k) table_[ij * n_ + k] = spec_.raw_constants[ij][k];
    }
    unit_ = spec_.raw_unit;
    labels_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) labels_[i] = "v" + std::to_string(i);
}

void Algebra::verify_axioms() const {
    // unit law on every basis element
    for (std::size_t i = 0; i < n_; ++i) {
        const AlgebraElement v = basis_element(i);
        if (multiply(unit(), v) != v || multiply(v, unit()) != v)
            throw std::invalid_argument("unit law fails at basis index " + std::to_string(i));
    }
    // associativity on all basis triples
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const AlgebraElement ij = {this, {basis_product(i, j), basis_product(i, j) + n_}};
            for (std::size_t k = 0; k < n_; ++k) {
                const AlgebraElement jk = {this, {basis_product(j, k), basis_product(j, k) + n_}};
                if (multiply(ij, basis_element(k)) != multiply(basis_element(i), jk))
                    throw std::invalid_argument("associativity fails at basis triple (" + std::to_string(i) +
                                                ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
            }
        }
}

AlgebraElement Algebra::zero() const { return {this, std::vector<FieldElement>(n_, field_->zero())}; }

AlgebraElement Algebra::basis_element(std::size_t i) const {
    AlgebraElement e = zero();
    e.coords[i] = field_->one();
    return e;
}

AlgebraElement Algebra::from_coords(std::vector<FieldElement> coords) const {
    if (coords.size() != n_) throw std::invalid_argument("coordinate vector length mismatch");
    for (const FieldElement& c : coords)
        if (c.field != field_) throw std::invalid_argument("coordinate from a different field");
    return {this, std::move(coords)};
}

AlgebraElement Algebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    if (a.alg != this || b.alg != this) throw std::invalid_argument("algebra element owner mismatch");
    AlgebraElement r = zero();
    for (std::size_t i = 0; i < n_; ++i) {
        if (a.coords[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (b.coords[j].is_zero()) continue;
            const FieldElement s = a.coords[i] * b.coords[j];
            const FieldElement* prod = basis_product(i, j);
            for (std::size_t k = 0; k < n_; ++k)
                if (!prod[k].is_zero()) r.coords[k] = r.coords[k] + s * prod[k];
        }
    }
    return r;
}

AlgebraElement Algebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
    if (a.alg != this || b.alg != this) throw std::invalid_argument("algebra element owner mismatch");
    AlgebraElement r = a;
    for (std::size_t i = 0; i < n_; ++i) r.coords[i] = r.coords[i] + b.coords[i];
    return r;
}

AlgebraElement Algebra::sub(const AlgebraElement& a, const AlgebraElement& b) const {
    if (a.alg != this || b.alg != this) throw std::invalid_argument("algebra element owner mismatch");
    AlgebraElement r = a;
    for (std::size_t i = 0; i < n_; ++i) r.coords[i] = r.coords[i] - b.coords[i];
    return r;
}

AlgebraElement Algebra::neg(const AlgebraElement& a) const {
    AlgebraElement r = a;
    for (FieldElement& c : r.coords) c = -c;
    return r;
}

AlgebraElement Algebra::scale(const AlgebraElement& a, const FieldElement& s) const {
    AlgebraElement r = a;
    for (FieldElement& c : r.coords) c = c * s;
    return r;
}

std::optional<AlgebraElement> Algebra::inverse(const AlgebraElement& a) const {
    if (a.alg != this) throw std::invalid_argument("algebra element owner mismatch");
    // left-multiplication matrix L_a: column j = a * v_j
    FqMatrix l(field_, n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        const AlgebraElement col = multiply(a, basis_element(j));
        for (std::size_t i = 0; i < n_; ++i) l.at(i, j) = col.coords[i];
    }
    const auto x = l.solve(unit_);
    if (!x) return std::nullopt;
    const AlgebraElement inv = {this, *x};
    if (multiply(inv, a) != unit() || multiply(a, inv) != unit()) return std::nullopt;
    return inv;
}

Poly Algebra::to_poly(const AlgebraElement& a) const {
    if (spec_.kind != AlgebraSpec::Kind::quotient)
        throw std::invalid_argument("polynomial view needs a quotient algebra");
    return Poly(field_, a.coords);
}

AlgebraElement Algebra::from_poly(const Poly& p) const {
    if (spec_.kind != AlgebraSpec::Kind::quotient)
        throw std::invalid_argument("polynomial view needs a quotient algebra");
    const Poly r = p % spec_.quotient_modulus;
    AlgebraElement e = zero();
    for (int i = 0; i <= r.degree(); ++i) e.coords[static_cast<std::size_t>(i)] = r.coeff(i);
    return e;
}

AlgebraPtr construct_algebra(const FiniteField* field, AlgebraSpec spec) {
    return std::make_shared<const Algebra>(field, std::move(spec));
}

namespace {

void verify_idempotent_axioms(const Algebra& a, const std::vector<AlgebraElement>& es) {
    AlgebraElement sum = a.zero();
    for (std::size_t i = 0; i < es.size(); ++i) {
        const AlgebraElement& e = es[i];
        if (e.alg != &a) throw std::invalid_argument("idempotent owner mismatch");
        if (e * e != e) throw std::invalid_argument("idempotent axiom e^2 = e fails at index " + std::to_string(i));
        for (std::size_t k = 0; k < a.dim(); ++k) {
            const AlgebraElement v = a.basis_element(k);
            if (e * v != v * e)
                throw std::invalid_argument("idempotent at index " + std::to_string(i) + " is not central");
        }
        for (std::size_t j = 0; j < es.size(); ++j)
            if (i != j && !(es[i] * es[j]).is_zero())
                throw std::invalid_argument("idempotents are not orthogonal");
        sum = sum + e;
    }
    if (sum != a.unit()) throw std::invalid_argument("idempotents do not sum to 1");
}

}  // namespace

BlockDecomposition block_decomposition(const Algebra& a) {
    BlockDecomposition out;
    switch (a.spec().kind) {
        case AlgebraSpec::Kind::quotient: {
            const Poly& f = a.spec().quotient_modulus;
            const auto factors = berlekamp_factor(f);
            for (const auto& [h, mult] : factors)
                if (mult > 1)
                    throw std::invalid_argument("block decomposition needs a squarefree quotient modulus");
            const std::vector<Poly> es = quotient_idempotents(f);
            for (std::size_t i = 0; i < es.size(); ++i) {
                Block b;
                b.idempotent = a.from_poly(es[i]);
                b.kind = Block::Kind::quotient_field;
                b.factor = factors[i].first;
                b.dim = static_cast<std::size_t>(b.factor.degree());
                out.blocks.push_back(std::move(b));
            }
            break;
        }
        case AlgebraSpec::Kind::direct_sum: {
            const auto& offsets = a.summand_offsets();
            for (std::size_t b = 0; b < offsets.size(); ++b) {
                const std::size_t off = offsets[b];
                const std::size_t end = b + 1 < offsets.size() ? offsets[b + 1] : a.dim();
                Block blk;
                blk.idempotent = a.zero();
                for (std::size_t i = off; i < end; ++i) blk.idempotent.coords[i] = a.unit().coords[i];
                blk.kind = Block::Kind::summand;
                blk.summand_index = b;
                blk.dim = end - off;
                out.blocks.push_back(std::move(blk));
            }
            break;
        }
        case AlgebraSpec::Kind::matrix: {
            Block blk;
            blk.idempotent = a.unit();
            blk.kind = Block::Kind::summand;
            blk.summand_index = 0;
            blk.dim = a.dim();
            out.blocks.push_back(std::move(blk));
            break;
        }
        default:
            throw std::invalid_argument(
                "block decomposition is only derived for quotient, direct-sum and matrix algebras; "
                "supply idempotents explicitly otherwise");
    }
    std::vector<AlgebraElement> es;
    for (const Block& b : out.blocks) es.push_back(b.idempotent);
    verify_idempotent_axioms(a, es);
    return out;
}

BlockDecomposition block_decomposition_from(const Algebra& a, std::vector<AlgebraElement> idempotents) {
    verify_idempotent_axioms(a, idempotents);
    BlockDecomposition out;
    for (AlgebraElement& e : idempotents) {
        Block b;
        b.idempotent = std::move(e);
        b.kind = Block::Kind::summand;
        b.dim = 0;
        out.blocks.push_back(std::move(b));
    }
    return out;
}

}  // namespace skewideal
