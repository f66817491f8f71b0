#include "keller/inversion.hpp"

namespace keller {

std::uint64_t default_inverse_cap(const PolyMap& f) {
    const std::uint64_t d = p_degree(f);
    if (d <= 1 || f.dimension() <= 1) return 2;
    std::uint64_t cap = 1;
    for (std::size_t e = 0; e + 1 < f.dimension(); ++e) {
        if (cap > 1000000 / d) return 1000001;  // saturate; cap is configurable anyway
        cap *= d;
    }
    return cap + 1;
}

InverseResult formal_inverse(const PolyMap& f, std::optional<std::uint64_t> cap_opt) {
    const std::size_t m = f.dimension();
    const PolyMap id = PolyMap::identity(f.ring());

    std::vector<Poly> h_comps;
    h_comps.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Poly h = id.component(i) - f.component(i);
        if (!h.is_zero() && h.min_total_degree() < 2)
            throw std::invalid_argument(
                "formal_inverse requires the shape Id - H with H of order >= 2 (normalize first)");
        h_comps.push_back(std::move(h));
    }
    PolyMap h(f.ring(), std::move(h_comps));

    KellerResult kc = is_keller(f);
    if (!kc.keller || !kc.constant.is_one())
        throw std::invalid_argument("formal_inverse requires det JF = 1");

    const std::uint64_t cap = cap_opt.value_or(default_inverse_cap(f));
    PolyMap g = id;
    std::size_t iterations = 0;
    bool stationary = false;
    for (std::uint64_t iter = 0; iter < cap + 2; ++iter) {
        std::vector<Poly> next;
        next.reserve(m);
        for (std::size_t i = 0; i < m; ++i)
            next.push_back(id.component(i) + substitute(h.component(i), g.components(), cap));
        PolyMap g_next(f.ring(), std::move(next));
        ++iterations;
        if (g_next == g) {
            stationary = true;
            break;
        }
        g = std::move(g_next);
    }
    if (stationary && compose(f, g) == id) return {true, std::move(g), cap, iterations};
    return {false, id, cap, iterations};
}

bool verify_inverse(const PolyMap& f, const PolyMap& g) {
    if (f.dimension() != g.dimension())
        throw std::invalid_argument("verify_inverse: dimension mismatch");
    return compose(f, g) == PolyMap::identity(g.ring()) && compose(g, f) == PolyMap::identity(f.ring());
}

bool fixed_point_verify(const PolyMap& n, const std::vector<GaussianRational>& x) {
    return evaluate_map(n, x) == x;
}

TriangularSolve triangular_fixed_solve(const PolyMap& n) {
    const std::size_t m = n.dimension();
    auto uses_only = [&](std::size_t comp, auto&& allowed) {
        for (std::size_t v = 0; v < m; ++v)
            if (!allowed(v) && max_exponent_of(n.component(comp), v) > 0) return false;
        return true;
    };

    bool earlier_only = true, later_only = true;
    for (std::size_t i = 0; i < m; ++i) {
        earlier_only = earlier_only && uses_only(i, [i](std::size_t v) { return v < i; });
        later_only = later_only && uses_only(i, [i](std::size_t v) { return v > i; });
    }
    if (!earlier_only && !later_only) return {false, {}};

    std::vector<GaussianRational> x(m);
    if (earlier_only) {
        for (std::size_t i = 0; i < m; ++i) x[i] = evaluate(n.component(i), x);
    } else {
        for (std::size_t i = m; i-- > 0;) x[i] = evaluate(n.component(i), x);
    }
    return {true, std::move(x)};
}

}  // namespace keller
