#include "keller/fuzz.hpp"

#include "keller/automorphism.hpp"
#include "keller/inversion.hpp"
#include "keller/nilpotency.hpp"

namespace keller {

const char* to_string(FuzzFamily f) {
    switch (f) {
        case FuzzFamily::strict_triangular: return "strict-triangular";
        case FuzzFamily::conjugated_triangular: return "conjugated-triangular";
        case FuzzFamily::homogeneous: return "homogeneous";
        default: return "two-form";
    }
}

std::optional<FuzzFamily> fuzz_family_from_string(std::string_view s) {
    if (s == "strict-triangular") return FuzzFamily::strict_triangular;
    if (s == "conjugated-triangular") return FuzzFamily::conjugated_triangular;
    if (s == "homogeneous") return FuzzFamily::homogeneous;
    if (s == "two-form") return FuzzFamily::two_form;
    return std::nullopt;
}

Ring default_ring(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return Ring(std::move(names));
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

namespace {

GaussianRational random_coeff(std::mt19937_64& rng, bool complex_coeffs) {
    long re = rand_int(rng, -3, 3);
    long im = complex_coeffs ? rand_int(rng, -2, 2) : 0;
    if (re == 0 && im == 0) re = 1;
    return {mpq_class(re), mpq_class(im)};
}

// A random monomial of total degree exactly deg in the allowed variables.
Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars,
                         const std::vector<std::size_t>& allowed, std::uint64_t deg) {
    Monomial m(nvars);
    for (std::uint64_t d = 0; d < deg; ++d) {
        std::size_t v = allowed[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<long>(allowed.size()) - 1))];
        m = m.times(Monomial::variable(nvars, v));
    }
    return m;
}

Poly random_poly_in(std::mt19937_64& rng, const Ring& ring, const std::vector<std::size_t>& allowed,
                    std::uint64_t min_deg, std::uint64_t max_deg, bool complex_coeffs, long max_terms) {
    Poly p(ring);
    if (allowed.empty() && min_deg > 0) return p;
    const long terms = rand_int(rng, 1, max_terms);
    for (long t = 0; t < terms; ++t) {
        std::uint64_t deg =
            static_cast<std::uint64_t>(rand_int(rng, static_cast<long>(min_deg), static_cast<long>(max_deg)));
        if (deg > 0 && allowed.empty()) continue;
        p.add_term(deg == 0 ? Monomial(ring.size()) : random_monomial(rng, ring.size(), allowed, deg),
                   random_coeff(rng, complex_coeffs));
    }
    return p;
}

}  // namespace

PolyMap random_strict_triangular_map(std::mt19937_64& rng, const Ring& ring, std::uint32_t max_deg,
                                     bool allow_constants,
                                     std::optional<std::uint64_t> homogeneous_degree) {
    const std::size_t n = ring.size();
    std::vector<Poly> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> later;
        for (std::size_t v = i + 1; v < n; ++v) later.push_back(v);
        if (homogeneous_degree) {
            comps.push_back(later.empty() ? Poly(ring)
                                          : random_poly_in(rng, ring, later, *homogeneous_degree,
                                                           *homogeneous_degree, false, 2));
        } else {
            std::uint64_t min_deg = allow_constants ? 0 : 1;
            if (later.empty() && !allow_constants) {
                comps.push_back(Poly(ring));
            } else if (later.empty()) {
                comps.push_back(Poly::constant(ring, GaussianRational(rand_int(rng, -2, 2))));
            } else {
                comps.push_back(random_poly_in(rng, ring, later, min_deg, max_deg, false, 2));
            }
        }
    }
    return PolyMap(ring, std::move(comps));
}

PolyMap random_generic_map(std::mt19937_64& rng, const Ring& ring, std::uint32_t max_deg,
                           bool complex_coeffs) {
    std::vector<std::size_t> all;
    for (std::size_t v = 0; v < ring.size(); ++v) all.push_back(v);
    std::vector<Poly> comps;
    comps.reserve(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i)
        comps.push_back(random_poly_in(rng, ring, all, 0, max_deg, complex_coeffs, 3));
    return PolyMap(ring, std::move(comps));
}

PolyMap random_homogeneous_map(std::mt19937_64& rng, const Ring& ring, std::uint64_t k,
                               bool complex_coeffs) {
    std::vector<std::size_t> all;
    for (std::size_t v = 0; v < ring.size(); ++v) all.push_back(v);
    std::vector<Poly> comps;
    comps.reserve(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i)
        comps.push_back(random_poly_in(rng, ring, all, k, k, complex_coeffs, 3));
    return PolyMap(ring, std::move(comps));
}

namespace {

// Triangular automorphism whose shifts use only LATER variables (Jacobian
// upper unitriangular): the reversal conjugate of the standard kind.
Automorphism random_up_triangular(std::mt19937_64& rng, const Ring& ring, std::uint32_t max_deg) {
    const std::size_t n = ring.size();
    std::vector<Poly> shifts(n, Poly(ring));
    for (std::size_t i = 1; i < n; ++i) {
        if (rand_int(rng, 0, 9) < 7) {
            std::vector<std::size_t> earlier;
            for (std::size_t v = 0; v < i; ++v) earlier.push_back(v);
            shifts[i] = random_poly_in(rng, ring, earlier, 1, max_deg, false, 2);
        }
    }
    Automorphism rev = Automorphism::reversal(ring);
    return Automorphism::composition(ring, {rev, Automorphism::triangular(ring, std::move(shifts)), rev});
}

std::vector<std::vector<GaussianRational>> random_invertible(std::mt19937_64& rng, std::size_t n) {
    while (true) {
        std::vector<std::vector<GaussianRational>> m(n, std::vector<GaussianRational>(n));
        for (auto& row : m)
            for (auto& e : row) e = GaussianRational(rand_int(rng, -2, 2));
        if (!scalar_determinant(m).is_zero()) return m;
    }
}

PolyMap conjugate_by(const Automorphism& a, const PolyMap& n) {
    return compose(a.inverse().as_polymap(), compose(n, a.as_polymap()));
}

bool small_height(const std::vector<GaussianRational>& point, long bound) {
    for (const auto& c : point) {
        if (abs(c.real().get_num()) > bound || c.real().get_den() > bound) return false;
        if (abs(c.imag().get_num()) > bound || c.imag().get_den() > bound) return false;
    }
    return true;
}

// Strictly triangular draws can place the unique fixed point at coordinates
// far beyond any float search radius (back-substitution compounds the
// constants).  Resample until the exact fixed point is small; fall back to
// the constant-free draw (fixed point at the origin) if that keeps failing.
PolyMap bounded_strict_triangular(std::mt19937_64& rng, const Ring& ring, std::uint32_t max_deg) {
    for (int attempt = 0; attempt < 40; ++attempt) {
        PolyMap n = random_strict_triangular_map(rng, ring, max_deg, true);
        TriangularSolve ts = triangular_fixed_solve(n);
        if (ts.applicable && small_height(ts.point, 8)) return n;
    }
    return random_strict_triangular_map(rng, ring, max_deg, false);
}

}  // namespace

PolyMap random_family_map(FuzzFamily family, std::mt19937_64& rng, const Ring& ring,
                          std::uint32_t max_deg) {
    const std::size_t n = ring.size();
    switch (family) {
        case FuzzFamily::strict_triangular:
            return bounded_strict_triangular(rng, ring, max_deg);
        case FuzzFamily::conjugated_triangular: {
            // Conjugator: up-triangular then linear.  Both directions keep the
            // Jacobian strictly upper triangular up to an exact similarity, so
            // nilpotency survives by construction.
            Automorphism b = random_up_triangular(rng, ring, max_deg);
            Automorphism l = Automorphism::linear(ring, random_invertible(rng, n));
            Automorphism a = Automorphism::composition(ring, {b, l});
            PolyMap a_inv = a.inverse().as_polymap();
            for (int attempt = 0; attempt < 40; ++attempt) {
                PolyMap core = bounded_strict_triangular(rng, ring, max_deg);
                TriangularSolve ts = triangular_fixed_solve(core);
                // Fixed points correspond through the conjugation; keep the
                // conjugated one reachable too.
                if (ts.applicable && small_height(evaluate_map(a_inv, ts.point), 24))
                    return conjugate_by(a, core);
            }
            return conjugate_by(a, random_strict_triangular_map(rng, ring, max_deg, false));
        }
        case FuzzFamily::homogeneous: {
            std::uint64_t k = static_cast<std::uint64_t>(rand_int(rng, 2, std::max<long>(2, max_deg)));
            PolyMap core = random_strict_triangular_map(rng, ring, max_deg, false, k);
            if (rand_int(rng, 0, 1)) {
                Automorphism l = Automorphism::linear(ring, random_invertible(rng, n));
                return conjugate_by(l, core);
            }
            return core;
        }
        default: {
            std::uint64_t k2 = static_cast<std::uint64_t>(rand_int(rng, 2, std::max<long>(2, max_deg)));
            std::uint64_t k1 = static_cast<std::uint64_t>(rand_int(rng, 1, static_cast<long>(k2) - 1));
            PolyMap n1 = random_strict_triangular_map(rng, ring, max_deg, false, k1);
            PolyMap n2 = random_strict_triangular_map(rng, ring, max_deg, false, k2);
            std::vector<Poly> comps;
            comps.reserve(n);
            for (std::size_t i = 0; i < n; ++i) comps.push_back(n1.component(i) + n2.component(i));
            PolyMap sum(ring, std::move(comps));
            if (rand_int(rng, 0, 1)) {
                Automorphism l = Automorphism::linear(ring, random_invertible(rng, n));
                return conjugate_by(l, sum);
            }
            return sum;
        }
    }
}

FuzzOutcome fuzz_jn(FuzzFamily family, std::size_t n, std::uint32_t deg, std::size_t count,
                    std::uint64_t seed, const SearchOptions& search) {
    FuzzOutcome out;
    out.family = family;
    out.count = count;
    out.seed = seed;
    Ring ring = default_ring(n);

    for (std::size_t index = 0; index < count; ++index) {
        std::mt19937_64 rng(split_seed(seed, index));
        PolyMap map = random_family_map(family, rng, ring, deg);

        // Self-check: the generators are nilpotent by construction; a failure
        // here is a bug, not a finding.
        if (!is_nilpotent(map).nilpotent)
            throw internal_error("fuzz_jn: generated map failed the nilpotency self-check");

        SearchOptions per_map = search;
        per_map.rng_seed = split_seed(seed ^ 0x5bf03635ull, index);
        FixedPointSearch result = fixed_point_search(map, per_map);
        if (!result.exact_points.empty()) ++out.maps_with_exact_point;
        if (result.conjecture_violation) {
            ++out.violations;
            out.violation_records.push_back(FuzzViolation{map, result.exact_points});
        }

        if (family == FuzzFamily::strict_triangular) {
            TriangularSolve solved = triangular_fixed_solve(map);
            if (solved.applicable) {
                ++out.triangular_checked;
                const bool match = result.exact_points.size() == 1 &&
                                   result.exact_points.front() == solved.point;
                if (!match) ++out.triangular_mismatches;
            }
        }
    }
    return out;
}

}  // namespace keller
