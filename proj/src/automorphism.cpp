#include "keller/automorphism.hpp"

#include <random>

namespace keller {

Automorphism Automorphism::identity(Ring ring) {
    return Automorphism(std::move(ring), Composition{});
}

Automorphism Automorphism::linear(Ring ring, std::vector<std::vector<GaussianRational>> matrix) {
    const std::size_t m = ring.size();
    if (matrix.size() != m) throw std::invalid_argument("linear automorphism: matrix must be square");
    for (const auto& row : matrix)
        if (row.size() != m) throw std::invalid_argument("linear automorphism: matrix must be square");
    if (scalar_determinant(matrix).is_zero())
        throw std::invalid_argument("linear automorphism: matrix is singular");
    return Automorphism(std::move(ring), Linear{std::move(matrix)});
}

Automorphism Automorphism::translation(Ring ring, std::vector<GaussianRational> offset) {
    if (offset.size() != ring.size())
        throw std::invalid_argument("translation: offset arity mismatch");
    return Automorphism(std::move(ring), Translation{std::move(offset)});
}

Automorphism Automorphism::triangular(Ring ring, std::vector<Poly> shifts) {
    const std::size_t m = ring.size();
    if (shifts.size() != m) throw std::invalid_argument("triangular automorphism: one shift per variable");
    for (std::size_t i = 0; i < m; ++i) {
        require_same_ring(ring, shifts[i].ring());
        if (!shifts[i].constant_term().is_zero())
            throw std::invalid_argument("triangular shift must have no constant term");
        for (std::size_t v = i; v < m; ++v)
            if (max_exponent_of(shifts[i], v) > 0)
                throw std::invalid_argument("triangular shift for variable " + ring.name(i) +
                                            " may only use earlier variables");
    }
    return Automorphism(std::move(ring), Triangular{std::move(shifts)});
}

Automorphism Automorphism::composition(Ring ring, std::vector<Automorphism> factors) {
    std::vector<Automorphism> flat;
    for (auto& f : factors) {
        if (f.ring() != ring) throw ring_mismatch("composition factors must share one ring");
        if (auto* c = std::get_if<Composition>(&f.kind_)) {
            for (auto& inner : c->factors) flat.push_back(std::move(inner));
        } else {
            flat.push_back(std::move(f));
        }
    }
    return Automorphism(std::move(ring), Composition{std::move(flat)});
}

Automorphism Automorphism::permutation(Ring ring, const std::vector<std::size_t>& perm) {
    const std::size_t m = ring.size();
    if (perm.size() != m) throw std::invalid_argument("permutation arity mismatch");
    std::vector<std::vector<GaussianRational>> matrix(m, std::vector<GaussianRational>(m));
    for (std::size_t p = 0; p < m; ++p) matrix[p][perm[p]] = GaussianRational(1);
    return linear(std::move(ring), std::move(matrix));
}

Automorphism Automorphism::reversal(Ring ring) {
    std::vector<std::size_t> perm(ring.size());
    for (std::size_t p = 0; p < perm.size(); ++p) perm[p] = perm.size() - 1 - p;
    return permutation(std::move(ring), perm);
}

PolyMap Automorphism::as_polymap() const {
    const std::size_t m = ring_.size();
    if (const auto* l = std::get_if<Linear>(&kind_)) {
        std::vector<Poly> comps;
        comps.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            Poly c(ring_);
            for (std::size_t j = 0; j < m; ++j)
                if (!l->matrix[i][j].is_zero())
                    c += Poly::variable(ring_, j, l->matrix[i][j]);
            comps.push_back(std::move(c));
        }
        return PolyMap(ring_, std::move(comps));
    }
    if (const auto* t = std::get_if<Translation>(&kind_)) {
        std::vector<Poly> comps;
        comps.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            Poly c = Poly::variable(ring_, i, GaussianRational(1));
            c += Poly::constant(ring_, t->offset[i]);
            comps.push_back(std::move(c));
        }
        return PolyMap(ring_, std::move(comps));
    }
    if (const auto* tr = std::get_if<Triangular>(&kind_)) {
        std::vector<Poly> comps;
        comps.reserve(m);
        for (std::size_t i = 0; i < m; ++i)
            comps.push_back(Poly::variable(ring_, i, GaussianRational(1)) + tr->shifts[i]);
        return PolyMap(ring_, std::move(comps));
    }
    const auto& factors = std::get<Composition>(kind_).factors;
    PolyMap result = PolyMap::identity(ring_);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        result = compose(it->as_polymap(), result);
    return result;
}

Automorphism Automorphism::inverse() const {
    if (const auto* l = std::get_if<Linear>(&kind_))
        return Automorphism(ring_, Linear{scalar_inverse(l->matrix)});
    if (const auto* t = std::get_if<Translation>(&kind_)) {
        std::vector<GaussianRational> neg;
        neg.reserve(t->offset.size());
        for (const auto& v : t->offset) neg.push_back(-v);
        return Automorphism(ring_, Translation{std::move(neg)});
    }
    if (const auto* tr = std::get_if<Triangular>(&kind_)) {
        // Back-substitution X_i = Y_i - h_i(X_1,...,X_{i-1}), resolved in
        // increasing i; the inverse is triangular again.
        const std::size_t m = ring_.size();
        std::vector<Poly> resolved;
        resolved.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            Poly xi = Poly::variable(ring_, i, GaussianRational(1));
            if (!tr->shifts[i].is_zero()) {
                std::vector<Poly> images;
                images.reserve(m);
                for (std::size_t j = 0; j < m; ++j)
                    images.push_back(j < i ? resolved[j] : Poly::variable(ring_, j, GaussianRational(1)));
                xi -= substitute(tr->shifts[i], images);
            }
            resolved.push_back(std::move(xi));
        }
        std::vector<Poly> inv_shifts;
        inv_shifts.reserve(m);
        for (std::size_t i = 0; i < m; ++i)
            inv_shifts.push_back(resolved[i] - Poly::variable(ring_, i, GaussianRational(1)));
        return triangular(ring_, std::move(inv_shifts));
    }
    const auto& factors = std::get<Composition>(kind_).factors;
    std::vector<Automorphism> inv;
    inv.reserve(factors.size());
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) inv.push_back(it->inverse());
    return Automorphism(ring_, Composition{std::move(inv)});
}

Automorphism Automorphism::extended(const std::vector<std::string>& names) const {
    Ring big = ring_.extended(names);
    const std::size_t m = ring_.size(), M = big.size();
    if (const auto* l = std::get_if<Linear>(&kind_)) {
        std::vector<std::vector<GaussianRational>> matrix(M, std::vector<GaussianRational>(M));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) matrix[i][j] = l->matrix[i][j];
        for (std::size_t i = m; i < M; ++i) matrix[i][i] = GaussianRational(1);
        return Automorphism(big, Linear{std::move(matrix)});
    }
    if (const auto* t = std::get_if<Translation>(&kind_)) {
        std::vector<GaussianRational> offset = t->offset;
        offset.resize(M);
        return Automorphism(big, Translation{std::move(offset)});
    }
    if (const auto* tr = std::get_if<Triangular>(&kind_)) {
        std::vector<Poly> shifts;
        shifts.reserve(M);
        for (const auto& s : tr->shifts) shifts.push_back(embed_in(s, big));
        for (std::size_t i = m; i < M; ++i) shifts.push_back(Poly(big));
        return Automorphism(big, Triangular{std::move(shifts)});
    }
    const auto& factors = std::get<Composition>(kind_).factors;
    std::vector<Automorphism> ext;
    ext.reserve(factors.size());
    for (const auto& f : factors) ext.push_back(f.extended(names));
    return Automorphism(big, Composition{std::move(ext)});
}

GaussianRational jacobian_constant(const Automorphism& a) {
    if (const auto* l = std::get_if<Automorphism::Linear>(&a.kind()))
        return scalar_determinant(l->matrix);
    if (const auto* c = std::get_if<Automorphism::Composition>(&a.kind())) {
        GaussianRational prod(1);
        for (const auto& f : c->factors) prod *= jacobian_constant(f);
        return prod;
    }
    return GaussianRational(1);
}

PolyMap equivalence_apply(const EquivalenceWitness& w, const PolyMap& g) {
    if (g.dimension() != w.preimage_change.dimension())
        throw std::invalid_argument("equivalence_apply: dimension mismatch");
    return compose(w.image_change.as_polymap(), compose(g, w.preimage_change.inverse().as_polymap()));
}

bool verify_witness(const EquivalenceWitness& w, const PolyMap& f, const PolyMap& g) {
    if (f.dimension() != g.dimension() || f.dimension() != w.preimage_change.dimension() ||
        f.dimension() != w.image_change.dimension())
        return false;
    return compose(w.image_change.as_polymap(), g) == compose(f, w.preimage_change.as_polymap());
}

namespace {

std::vector<std::vector<GaussianRational>> random_invertible_matrix(std::mt19937_64& rng, std::size_t m) {
    while (true) {
        std::vector<std::vector<GaussianRational>> matrix(m, std::vector<GaussianRational>(m));
        for (auto& row : matrix)
            for (auto& e : row) e = GaussianRational(rand_int(rng, -3, 3));
        if (!scalar_determinant(matrix).is_zero()) return matrix;
    }
}

Poly random_shift(std::mt19937_64& rng, const Ring& ring, std::size_t nvars_usable, std::uint32_t max_deg) {
    // 1-2 small integer terms in the first nvars_usable variables, degree >= 1.
    Poly p(ring);
    const long terms = rand_int(rng, 1, 2);
    for (long t = 0; t < terms; ++t) {
        std::uint32_t deg = static_cast<std::uint32_t>(rand_int(rng, 1, max_deg));
        Monomial mono(ring.size());
        for (std::uint32_t d = 0; d < deg; ++d) {
            std::size_t v = static_cast<std::size_t>(rand_int(rng, 0, static_cast<long>(nvars_usable) - 1));
            mono = mono.times(Monomial::variable(ring.size(), v));
        }
        long c = rand_int(rng, 1, 3) * (rand_int(rng, 0, 1) ? 1 : -1);
        p.add_term(mono, GaussianRational(c));
    }
    return p;
}

}  // namespace

Automorphism random_tame_automorphism(const Ring& ring, std::uint64_t seed, std::size_t steps,
                                      std::uint32_t max_deg) {
    std::mt19937_64 rng(seed);
    const std::size_t m = ring.size();
    std::vector<Automorphism> factors;
    for (std::size_t s = 0; s < steps; ++s) {
        const bool pick_linear = m < 2 || rand_int(rng, 0, 1) == 0;
        if (pick_linear) {
            factors.push_back(Automorphism::linear(ring, random_invertible_matrix(rng, m)));
        } else {
            std::vector<Poly> shifts;
            shifts.reserve(m);
            shifts.push_back(Poly(ring));
            bool any = false;
            for (std::size_t i = 1; i < m; ++i) {
                if (rand_int(rng, 0, 9) < 7) {
                    shifts.push_back(random_shift(rng, ring, i, max_deg));
                    any = any || !shifts.back().is_zero();
                } else {
                    shifts.push_back(Poly(ring));
                }
            }
            if (!any && m > 1) shifts[m - 1] = random_shift(rng, ring, m - 1, max_deg);
            factors.push_back(Automorphism::triangular(ring, std::move(shifts)));
        }
    }
    return Automorphism::composition(ring, std::move(factors));
}

}  // namespace keller
