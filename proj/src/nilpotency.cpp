#include "keller/nilpotency.hpp"

#include <random>

namespace keller {

NilpotencyResult nilpotency_by_traces(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("nilpotency test needs a square matrix");
    const std::size_t n = m.rows();
    PolyMatrix power = m;
    for (std::size_t k = 1; k <= n; ++k) {
        Poly tr = trace(power);
        if (!tr.is_zero()) return {false, k, std::move(tr)};
        if (k < n) power = power * m;
    }
    return {true, 0, Poly(m.ring())};
}

NilpotencyResult is_nilpotent(const PolyMap& n) { return nilpotency_by_traces(jacobian(n)); }

PolyMap bridge(const PolyMap& n) {
    if (n.ring().contains("t"))
        throw std::invalid_argument("bridge: input already uses the parameter variable name 't'");
    Ring big = n.ring().extended({"t"});
    const std::size_t m = n.dimension();
    Poly t = Poly::variable(big, m, GaussianRational(1));
    std::vector<Poly> comps;
    comps.reserve(m + 1);
    for (std::size_t i = 0; i < m; ++i)
        comps.push_back(Poly::variable(big, i, GaussianRational(1)) - t * embed_in(n.component(i), big));
    comps.push_back(std::move(t));
    return PolyMap(big, std::move(comps));
}

namespace {

void require_homogeneous(const PolyMap& n, std::uint64_t k, const char* who) {
    for (std::size_t i = 0; i < n.dimension(); ++i)
        if (!n.component(i).is_homogeneous_of_degree(k))
            throw std::invalid_argument(std::string(who) + ": component " + std::to_string(i + 1) +
                                        " is not homogeneous of degree " + std::to_string(k));
}

}  // namespace

ComponentCheck euler_identity_check(const PolyMap& n, std::uint64_t k) {
    require_homogeneous(n, k, "euler_identity_check");
    PolyMatrix j = jacobian(n);
    for (std::size_t i = 0; i < n.dimension(); ++i) {
        Poly lhs(n.ring());
        for (std::size_t v = 0; v < n.dimension(); ++v)
            lhs += j.at(i, v) * Poly::variable(n.ring(), v, GaussianRational(1));
        if (lhs != n.component(i).scaled_by(static_cast<std::int64_t>(k))) return {false, i};
    }
    return {true, 0};
}

ExtensionScalar radial_eigenvalue(std::uint64_t k1, std::uint64_t k2) {
    if (k1 == 0 || k1 >= k2) throw std::invalid_argument("radial_eigenvalue requires 0 < k1 < k2");
    const auto d = static_cast<std::uint32_t>(k2 - k1);
    GaussianRational c =
        GaussianRational(static_cast<long>(k1)) / GaussianRational(static_cast<long>(k2));
    return ExtensionScalar::generator(d, c).pow(k1 - 1).scaled_by(static_cast<std::int64_t>(k1));
}

TwoFormReport two_form_identity_check(const PolyMap& n1, const PolyMap& n2, std::uint64_t k1,
                                      std::uint64_t k2,
                                      const std::optional<std::vector<GaussianRational>>& fixed_point) {
    if (k1 == 0 || k1 >= k2)
        throw std::invalid_argument("two_form_identity_check requires 0 < k1 < k2");
    require_same_ring(n1.ring(), n2.ring());
    require_homogeneous(n1, k1, "two_form_identity_check");
    require_homogeneous(n2, k2, "two_form_identity_check");

    const auto d = static_cast<std::uint32_t>(k2 - k1);
    GaussianRational c =
        GaussianRational(static_cast<long>(k1)) / GaussianRational(static_cast<long>(k2));
    const ExtensionScalar lambda = ExtensionScalar::generator(d, c);
    const ExtensionScalar eig = radial_eigenvalue(k1, k2);
    const Ring& ring = n1.ring();
    const std::size_t m = n1.dimension();

    std::vector<Poly> sum_comps;
    sum_comps.reserve(m);
    for (std::size_t i = 0; i < m; ++i) sum_comps.push_back(n1.component(i) + n2.component(i));
    PolyMap sum(ring, sum_comps);
    PolyMatrix j = jacobian(sum);

    // p(L*X): each term picks up L^(total degree).
    auto scale_vars = [&](const Poly& p) {
        Polynomial<ExtensionScalar> r(ring);
        for (const auto& [mono, coeff] : p.terms())
            r.add_term(mono, ExtensionScalar::embed(d, c, coeff) * lambda.pow(mono.total_degree()));
        return r;
    };

    TwoFormReport report{true, 0, eig, std::nullopt};
    for (std::size_t i = 0; i < m; ++i) {
        Polynomial<ExtensionScalar> lhs(ring);
        for (std::size_t v = 0; v < m; ++v) {
            if (j.at(i, v).is_zero()) continue;
            Polynomial<ExtensionScalar> xv(ring);
            xv.add_term(Monomial::variable(m, v), ExtensionScalar::one(d, c));
            lhs += scale_vars(j.at(i, v)) * xv;
        }
        Polynomial<ExtensionScalar> rhs = map_coefficients<ExtensionScalar>(
            sum.component(i), [&](const GaussianRational& q) { return ExtensionScalar::embed(d, c, q) * eig; });
        if (lhs != rhs) {
            report.pass = false;
            report.failing_component = i;
            return report;
        }
    }
    if (fixed_point) report.fixed_point_verified = (evaluate_map(sum, *fixed_point) == *fixed_point);
    return report;
}

RankResult jacobian_rank(const PolyMap& n, std::uint64_t sample_seed) {
    PolyMatrix j = jacobian(n);
    const std::size_t m = n.dimension();
    if (m <= 4) {
        auto next_combination = [m](std::vector<std::size_t>& sel) {
            const std::size_t s = sel.size();
            std::size_t i = s;
            while (i-- > 0) {
                if (sel[i] < m - (s - i)) {
                    ++sel[i];
                    for (std::size_t k = i + 1; k < s; ++k) sel[k] = sel[k - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        // Exhaustive minors, largest size first.
        for (std::size_t s = m; s >= 1; --s) {
            std::vector<std::size_t> rsel(s);
            for (std::size_t i = 0; i < s; ++i) rsel[i] = i;
            do {
                std::vector<std::size_t> csel(s);
                for (std::size_t i = 0; i < s; ++i) csel[i] = i;
                do {
                    PolyMatrix sub(n.ring(), s, s);
                    for (std::size_t a = 0; a < s; ++a)
                        for (std::size_t b = 0; b < s; ++b) sub.at(a, b) = j.at(rsel[a], csel[b]);
                    if (!determinant(sub).is_zero()) return {s, true};
                } while (next_combination(csel));
            } while (next_combination(rsel));
        }
        return {0, true};
    }

    // Evaluation at random rational points: exact rank of each sample is a
    // certified lower bound for the generic rank.
    std::mt19937_64 rng(sample_seed);
    std::size_t best = 0;
    for (int sample = 0; sample < 4; ++sample) {
        std::vector<GaussianRational> point;
        point.reserve(m);
        for (std::size_t v = 0; v < m; ++v)
            point.push_back(GaussianRational::fraction(rand_int(rng, -17, 17), rand_int(rng, 1, 7)));
        std::vector<std::vector<GaussianRational>> numeric(m, std::vector<GaussianRational>(m));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) numeric[a][b] = evaluate(j.at(a, b), point);
        best = std::max(best, scalar_rank(std::move(numeric)));
    }
    return {best, false};
}

SignReport sign_classify(const PolyMap& f) {
    const std::size_t m = f.dimension();
    for (std::size_t i = 0; i < m; ++i) {
        const Poly& c = f.component(i);
        for (const auto& [mono, coeff] : c.terms())
            if (!coeff.is_real())
                throw std::invalid_argument("sign_classify: coefficients must be real");
        if (!c.constant_term().is_zero())
            throw std::invalid_argument("sign_classify: map must have no constant part");
        if (homogeneous_component(c, 1) != Poly::variable(f.ring(), i, GaussianRational(1)))
            throw std::invalid_argument(
                "sign_classify: degree-1 part must be the identity (normal form Id + higher parts)");
    }

    bool any_pos = false, any_neg = false;
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& [mono, coeff] : f.component(i).terms())
            if (mono.total_degree() >= 2) (sgn(coeff.real()) > 0 ? any_pos : any_neg) = true;

    SignClass cls = SignClass::neither;
    if (!any_neg)
        cls = SignClass::positive;  // vacuously positive when no higher terms at all
    else if (!any_pos)
        cls = SignClass::negative;

    SignReport report{cls, is_keller(f).keller, false, false};
    if (cls == SignClass::positive) {
        // F = Id + N: invertible when N is a positive nilpotent map.
        std::vector<Poly> n_comps;
        n_comps.reserve(m);
        for (std::size_t i = 0; i < m; ++i)
            n_comps.push_back(f.component(i) - Poly::variable(f.ring(), i, GaussianRational(1)));
        report.complement_nilpotent = is_nilpotent(PolyMap(f.ring(), std::move(n_comps))).nilpotent;
        report.invertibility_implied = report.complement_nilpotent;
    } else if (cls == SignClass::negative) {
        // Negative mappings with constant nonzero Jacobian are injective.
        report.invertibility_implied = report.keller;
    }
    return report;
}

const char* to_string(SignClass c) {
    switch (c) {
        case SignClass::positive: return "positive";
        case SignClass::negative: return "negative";
        default: return "neither";
    }
}

}  // namespace keller
