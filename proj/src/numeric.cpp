#include "keller/numeric.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "keller/automorphism.hpp"
#include "keller/inversion.hpp"
#include "keller/nilpotency.hpp"

namespace keller {

namespace {

using cd = std::complex<double>;

struct CompiledPoly {
    struct Term {
        cd coeff;
        std::vector<std::pair<std::size_t, std::uint32_t>> factors;  // (var, exponent)
    };
    std::vector<Term> terms;

    cd eval(const std::vector<cd>& x) const {
        cd acc(0.0, 0.0);
        for (const auto& t : terms) {
            cd v = t.coeff;
            for (const auto& [var, e] : t.factors) {
                cd p = x[var];
                cd acc_p(1.0, 0.0);
                std::uint32_t k = e;
                while (k) {
                    if (k & 1) acc_p *= p;
                    k >>= 1;
                    if (k) p *= p;
                }
                v *= acc_p;
            }
            acc += v;
        }
        return acc;
    }
};

CompiledPoly compile(const Poly& p) {
    CompiledPoly c;
    for (const auto& [mono, coeff] : p.terms()) {
        CompiledPoly::Term t;
        t.coeff = coeff.to_complex();
        for (std::size_t v = 0; v < mono.size(); ++v)
            if (mono[v]) t.factors.emplace_back(v, mono[v]);
        c.terms.push_back(std::move(t));
    }
    return c;
}

struct CompiledSystem {
    std::size_t dim;
    std::vector<CompiledPoly> comps;
    std::vector<CompiledPoly> jac;  // row-major dim x dim
    bool subtract_identity;         // residual = F(x) - x - target instead of F(x) - target

    explicit CompiledSystem(const PolyMap& f, bool fixed_point) : dim(f.dimension()), subtract_identity(fixed_point) {
        comps.reserve(dim);
        for (const auto& c : f.components()) comps.push_back(compile(c));
        PolyMatrix j = jacobian(f);
        jac.reserve(dim * dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t v = 0; v < dim; ++v) jac.push_back(compile(j.at(i, v)));
    }

    Eigen::VectorXcd residual(const std::vector<cd>& x, const std::vector<cd>& target) const {
        Eigen::VectorXcd r(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            cd v = comps[i].eval(x) - target[i];
            if (subtract_identity) v -= x[i];
            r(static_cast<Eigen::Index>(i)) = v;
        }
        return r;
    }

    Eigen::MatrixXcd jacobian_at(const std::vector<cd>& x) const {
        Eigen::MatrixXcd m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t v = 0; v < dim; ++v) {
                cd e = jac[i * dim + v].eval(x);
                if (subtract_identity && i == v) e -= 1.0;
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(v)) = e;
            }
        return m;
    }
};

std::optional<std::vector<cd>> newton(const CompiledSystem& sys, const std::vector<cd>& target,
                                      std::vector<cd> x, double tol, std::size_t max_iter) {
    int polish = -1;  // extra steps after convergence, for full double accuracy
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        Eigen::VectorXcd r = sys.residual(x, target);
        if (polish < 0 && r.norm() <= tol) polish = 2;
        if (polish == 0 || (polish > 0 && r.norm() == 0.0)) return x;
        // Complete orthogonal decomposition handles exactly singular
        // Jacobians (minimum-norm step) as well as the regular case.
        Eigen::MatrixXcd j = sys.jacobian_at(x);
        Eigen::VectorXcd step = j.completeOrthogonalDecomposition().solve(-r);
        double norm2 = 0;
        for (std::size_t v = 0; v < sys.dim; ++v) {
            x[v] += step(static_cast<Eigen::Index>(v));
            norm2 += std::norm(x[v]);
        }
        if (!std::isfinite(norm2) || norm2 > 1e16) return std::nullopt;
        if (polish > 0) --polish;
    }
    if (sys.residual(x, target).norm() <= tol) return x;
    return std::nullopt;
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<cd> random_start(std::mt19937_64& rng, std::size_t dim, double radius) {
    std::vector<cd> x(dim);
    for (auto& v : x)
        v = cd((2 * uniform01(rng) - 1) * radius, (2 * uniform01(rng) - 1) * radius);
    return x;
}

double distance(const std::vector<cd>& a, const std::vector<cd>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

std::vector<Cluster> multistart(const CompiledSystem& sys, const std::vector<cd>& target,
                                const SearchOptions& opts) {
    std::mt19937_64 rng(opts.rng_seed);
    std::vector<Cluster> clusters;
    for (std::size_t s = 0; s < opts.seeds; ++s) {
        auto found = newton(sys, target, random_start(rng, sys.dim, opts.start_radius), opts.tol,
                            opts.max_iter);
        if (!found) continue;
        double res = sys.residual(*found, target).norm();
        bool merged = false;
        for (auto& c : clusters) {
            if (distance(c.point, *found) <= opts.dedup_radius) {
                ++c.hits;
                if (res < c.residual) {
                    c.point = *found;
                    c.residual = res;
                }
                merged = true;
                break;
            }
        }
        if (!merged) clusters.push_back(Cluster{*found, res, 1});
    }
    return clusters;
}

}  // namespace

std::optional<mpq_class> reconstruct_rational(double x, long denominator_bound) {
    if (!std::isfinite(x)) return std::nullopt;
    const double sign = x < 0 ? -1.0 : 1.0;
    double v = std::abs(x);
    if (v > 1e15) return std::nullopt;

    // Continued-fraction convergents p/q with q bounded.
    long p_prev = 1, q_prev = 0;
    long p_cur = static_cast<long>(std::floor(v)), q_cur = 1;
    double frac = v - std::floor(v);
    for (int steps = 0; steps < 48 && frac > 1e-15; ++steps) {
        double inv = 1.0 / frac;
        double a_f = std::floor(inv);
        if (a_f > 1e15) break;
        long a = static_cast<long>(a_f);
        long p_next = a * p_cur + p_prev;
        long q_next = a * q_cur + q_prev;
        if (q_next > denominator_bound || q_next <= 0 || p_next < 0) break;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        frac = inv - a_f;
    }
    double approx = static_cast<double>(p_cur) / static_cast<double>(q_cur);
    // Accept only near machine precision: polished Newton output for a true
    // rational is exact to ~1e-15, while the best bounded convergent of an
    // irrational (e.g. sqrt(2) with q <= 10^6) still misses by >= 1e-12.
    if (std::abs(v - approx) > 1e-13 * std::max(1.0, v)) return std::nullopt;
    mpq_class q(sign < 0 ? -p_cur : p_cur, q_cur);
    q.canonicalize();
    return q;
}

FixedPointSearch fixed_point_search(const PolyMap& n, const SearchOptions& opts) {
    CompiledSystem sys(n, /*fixed_point=*/true);
    std::vector<cd> origin_target(n.dimension(), cd(0, 0));
    FixedPointSearch out;
    out.clusters = multistart(sys, origin_target, opts);

    for (const auto& c : out.clusters) {
        std::vector<GaussianRational> candidate;
        candidate.reserve(n.dimension());
        bool ok = true;
        for (const auto& z : c.point) {
            auto re = reconstruct_rational(z.real(), opts.denominator_bound);
            auto im = reconstruct_rational(z.imag(), opts.denominator_bound);
            if (!re || !im) {
                ok = false;
                break;
            }
            candidate.emplace_back(*re, *im);
        }
        if (!ok || !fixed_point_verify(n, candidate)) continue;
        bool duplicate = false;
        for (const auto& e : out.exact_points) duplicate = duplicate || e == candidate;
        if (!duplicate) out.exact_points.push_back(std::move(candidate));
    }

    if (out.exact_points.size() >= 2) {
        out.nilpotency_checked = true;
        out.nilpotent = is_nilpotent(n).nilpotent;
        out.conjecture_violation = out.nilpotent;
    }
    return out;
}

std::size_t degree_estimate(const PolyMap& f, std::size_t targets, std::size_t seeds,
                            std::uint64_t rng_seed) {
    CompiledSystem sys(f, /*fixed_point=*/false);
    std::mt19937_64 rng(rng_seed);
    std::size_t best = 0;
    for (std::size_t t = 0; t < targets; ++t) {
        std::vector<cd> target(f.dimension());
        for (auto& c : target) {
            long num = rand_int(rng, -9, 9), den = rand_int(rng, 1, 4);
            c = cd(static_cast<double>(num) / static_cast<double>(den), 0.0);
        }
        SearchOptions opts;
        opts.seeds = seeds;
        opts.rng_seed = rng();
        best = std::max(best, multistart(sys, target, opts).size());
    }
    return best;
}

}  // namespace keller
