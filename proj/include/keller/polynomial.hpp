#pragma once

/*
 * polynomial.hpp
 * --------------
 * Sparse multivariate polynomials over an exact scalar type K (Q(i) in
 * almost all of the library; the quotient-ring scalar for the two-form
 * eigen-identity).  Terms live in a map keyed by monomial in descending
 * graded-lex order, and no stored coefficient is ever zero, so equality
 * of canonical forms is equality of polynomials.
 *
 * All operations are pure; values are safe to share across threads.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "keller/monomial.hpp"
#include "keller/ring.hpp"
#include "keller/scalar.hpp"

namespace keller {

template <class K>
class Polynomial {
  public:
    using TermMap = std::map<Monomial, K, GrlexGreater>;

    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial zero(Ring ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(Ring ring, K value) {
        Polynomial p(std::move(ring));
        p.add_term(Monomial(p.ring_.size()), std::move(value));
        return p;
    }

    static Polynomial variable(Ring ring, std::size_t var, K coeff) {
        if (var >= ring.size()) throw std::invalid_argument("variable index out of range");
        Polynomial p(std::move(ring));
        p.add_term(Monomial::variable(p.ring_.size(), var), std::move(coeff));
        return p;
    }

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }

    /// The coefficient of the constant monomial (zero if absent).
    K constant_term(const K& zero_value = K{}) const {
        auto it = terms_.find(Monomial(ring_.size()));
        return it == terms_.end() ? zero_value : it->second;
    }

    /// Total degree; 0 for the zero polynomial (keeps degree total).
    std::uint64_t total_degree() const {
        return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
    }

    /// Smallest total degree among terms (the valuation); 0 for zero.
    std::uint64_t min_total_degree() const {
        if (terms_.empty()) return 0;
        std::uint64_t m = terms_.begin()->first.total_degree();
        for (const auto& [mono, c] : terms_) m = std::min(m, mono.total_degree());
        return m;
    }

    bool is_homogeneous_of_degree(std::uint64_t k) const {
        for (const auto& [mono, c] : terms_)
            if (mono.total_degree() != k) return false;
        return true;
    }

    void add_term(const Monomial& mono, K coeff) {
        if (coeff.is_zero()) return;
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    K coefficient(const Monomial& mono, const K& zero_value = K{}) const {
        auto it = terms_.find(mono);
        return it == terms_.end() ? zero_value : it->second;
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_ring(ring_, o.ring_);
        for (const auto& [mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        require_same_ring(ring_, o.ring_);
        for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        Polynomial r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Scale by a scalar.
    friend Polynomial operator*(const Polynomial& a, const K& s) {
        Polynomial r(a.ring_);
        for (const auto& [mono, c] : a.terms_) r.add_term(mono, c * s);
        return r;
    }

    Polynomial scaled_by(std::int64_t n) const {
        Polynomial r(ring_);
        for (const auto& [mono, c] : terms_) r.add_term(mono, c.scaled_by(n));
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  private:
    Ring ring_;
    TermMap terms_;
};

using Poly = Polynomial<GaussianRational>;

template <class K>
Polynomial<K> pow(const Polynomial<K>& base, std::uint64_t e) {
    if (e == 0) {
        // Empty product: requires a unit, which every scalar here has as
        // "coefficient of x^0 in x^0" -- build via 1-scaling of any term or
        // explicitly for the common scalars.
        Polynomial<K> r(base.ring());
        r.add_term(Monomial(base.ring().size()), unit_scalar(K{}));
        return r;
    }
    Polynomial<K> acc = base;
    Polynomial<K> b = base;
    --e;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return acc;
}

inline GaussianRational unit_scalar(const GaussianRational&) { return GaussianRational(1); }

/// Formal partial derivative with respect to one variable.
template <class K>
Polynomial<K> derivative(const Polynomial<K>& p, std::size_t var) {
    if (var >= p.ring().size()) throw std::invalid_argument("derivative: variable index out of range");
    Polynomial<K> r(p.ring());
    for (const auto& [mono, c] : p.terms()) {
        std::uint32_t e = mono[var];
        if (e == 0) continue;
        r.add_term(mono.with_exponent(var, e - 1), c.scaled_by(e));
    }
    return r;
}

/// Sum of the terms of total degree exactly j.
template <class K>
Polynomial<K> homogeneous_component(const Polynomial<K>& p, std::uint64_t j) {
    Polynomial<K> r(p.ring());
    for (const auto& [mono, c] : p.terms())
        if (mono.total_degree() == j) r.add_term(mono, c);
    return r;
}

/// Drop all terms of total degree greater than cap.
template <class K>
Polynomial<K> truncate_above(const Polynomial<K>& p, std::uint64_t cap) {
    Polynomial<K> r(p.ring());
    for (const auto& [mono, c] : p.terms())
        if (mono.total_degree() <= cap) r.add_term(mono, c);
    return r;
}

/// Largest exponent of one variable appearing in p.
template <class K>
std::uint32_t max_exponent_of(const Polynomial<K>& p, std::size_t var) {
    std::uint32_t m = 0;
    for (const auto& [mono, c] : p.terms()) m = std::max(m, mono[var]);
    return m;
}

/// The coefficient of var^power, as a polynomial in the same ring with the
/// var-exponent removed.
template <class K>
Polynomial<K> coefficient_in_var(const Polynomial<K>& p, std::size_t var, std::uint32_t power) {
    Polynomial<K> r(p.ring());
    for (const auto& [mono, c] : p.terms())
        if (mono[var] == power) r.add_term(mono.with_exponent(var, 0), c);
    return r;
}

/// Rebuild p over another ring.  index_map[v] gives the position of old
/// variable v in the target ring; a variable may be dropped (map entry
/// std::nullopt) only if p does not use it.
template <class K>
Polynomial<K> map_ring(const Polynomial<K>& p, const Ring& target,
                       const std::vector<std::optional<std::size_t>>& index_map) {
    if (index_map.size() != p.ring().size())
        throw std::invalid_argument("map_ring: index map arity mismatch");
    Polynomial<K> r(target);
    for (const auto& [mono, c] : p.terms()) {
        Monomial m(target.size());
        for (std::size_t v = 0; v < index_map.size(); ++v) {
            if (mono[v] == 0) continue;
            if (!index_map[v])
                throw std::invalid_argument("map_ring: polynomial uses a dropped variable");
            m = m.times(Monomial::variable(target.size(), *index_map[v], mono[v]));
        }
        r.add_term(m, c);
    }
    return r;
}

/// Embed into a ring that contains every variable of p's ring by name.
template <class K>
Polynomial<K> embed_in(const Polynomial<K>& p, const Ring& target) {
    std::vector<std::optional<std::size_t>> index_map(p.ring().size());
    for (std::size_t v = 0; v < p.ring().size(); ++v) {
        auto idx = target.index_of(p.ring().name(v));
        if (!idx) throw std::invalid_argument("embed_in: target ring lacks variable " + p.ring().name(v));
        index_map[v] = idx;
    }
    return map_ring(p, target, index_map);
}

/// Ring homomorphism: replace variable v by images[v].  All images must
/// share one target ring.  With cap set, terms above that total degree are
/// dropped throughout (used by the power-series inversion loop).
template <class K>
Polynomial<K> substitute(const Polynomial<K>& p, const std::vector<Polynomial<K>>& images,
                         std::optional<std::uint64_t> cap = std::nullopt) {
    if (images.size() != p.ring().size())
        throw std::invalid_argument("substitute: one image per ring variable required");
    Ring target = images.empty() ? p.ring() : images.front().ring();
    for (const auto& g : images) require_same_ring(target, g.ring());

    // Cache images[v]^e, computed incrementally per variable.
    std::vector<std::vector<Polynomial<K>>> powers(images.size());
    auto power_of = [&](std::size_t v, std::uint32_t e) -> const Polynomial<K>& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(images[v]);  // cache[0] = images[v]^1
        while (cache.size() < e) {
            Polynomial<K> next = cache.back() * images[v];
            if (cap) next = truncate_above(next, *cap);
            cache.push_back(std::move(next));
        }
        return cache[e - 1];
    };

    Polynomial<K> r(target);
    for (const auto& [mono, c] : p.terms()) {
        Polynomial<K> term = Polynomial<K>::constant(target, c);
        for (std::size_t v = 0; v < images.size() && !term.is_zero(); ++v) {
            if (mono[v] == 0) continue;
            term = term * power_of(v, mono[v]);
            if (cap) term = truncate_above(term, *cap);
        }
        r += term;
    }
    return r;
}

/// Exact evaluation at a point.
template <class K>
K evaluate(const Polynomial<K>& p, const std::vector<K>& point) {
    if (point.size() != p.ring().size())
        throw std::invalid_argument("evaluate: point arity mismatch");
    K acc{};
    for (const auto& [mono, c] : p.terms()) {
        K term = c;
        for (std::size_t v = 0; v < point.size(); ++v)
            for (std::uint32_t e = 0; e < mono[v]; ++e) term *= point[v];
        acc += term;
    }
    return acc;
}

/// Exact division a / b over Q(i)[X]; throws internal_error when the
/// division is not exact.  Used by the fraction-free determinant, where
/// exactness is guaranteed over an integral domain.
inline Poly exact_divide(const Poly& a, const Poly& b) {
    require_same_ring(a.ring(), b.ring());
    if (b.is_zero()) throw internal_error("exact_divide: division by zero polynomial");
    Poly rem = a;
    Poly quo(a.ring());
    const auto& [lead_mono, lead_coeff] = *b.terms().begin();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms().begin();
        if (!lead_mono.divides(rm)) throw internal_error("exact_divide: inexact polynomial division");
        Monomial qm = lead_mono.quotient_of(rm);
        GaussianRational qc = rc / lead_coeff;
        Poly piece(a.ring());
        piece.add_term(qm, qc);
        quo += piece;
        rem -= piece * b;
    }
    return quo;
}

/// Apply f to every coefficient, producing a polynomial over another scalar.
template <class K2, class K, class F>
Polynomial<K2> map_coefficients(const Polynomial<K>& p, F&& f) {
    Polynomial<K2> r(p.ring());
    for (const auto& [mono, c] : p.terms()) r.add_term(mono, f(c));
    return r;
}

}  // namespace keller
