#pragma once

// Shared fixtures for the test suites: tiny constructors, independent
// oracles (naive cofactor determinant, characteristic-polynomial
// nilpotency), and seeded random inputs.  Oracles here must stay
// independent of the implementation paths they check.

#include <random>
#include <string>
#include <vector>

#include "keller/automorphism.hpp"
#include "keller/fuzz.hpp"
#include "keller/io.hpp"
#include "keller/polymap.hpp"

namespace kt {

using namespace keller;

inline Ring R(std::vector<std::string> names) { return Ring(std::move(names)); }

inline Poly P(const std::string& expr, const Ring& ring) { return parse_polynomial(expr, ring); }

inline PolyMap M(const Ring& ring, const std::vector<std::string>& exprs) {
    std::vector<Poly> comps;
    comps.reserve(exprs.size());
    for (const auto& e : exprs) comps.push_back(P(e, ring));
    return PolyMap(ring, std::move(comps));
}

inline GaussianRational Q(long num, long den = 1) { return GaussianRational::fraction(num, den); }
inline GaussianRational QI(long re, long im) { return {mpq_class(re), mpq_class(im)}; }

// Test-local determinant oracle: expansion along the first row, nothing
// shared with the library's cofactor/Bareiss code.
inline Poly oracle_det(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    Poly acc(m.ring());
    for (std::size_t j = 0; j < n; ++j) {
        PolyMatrix minor(m.ring(), n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor.at(r - 1, cc++) = m.at(r, c);
        }
        Poly term = m.at(0, j) * oracle_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Characteristic-polynomial nilpotency oracle: det(s*E - M) == s^n over the
// ring extended by a fresh variable, using the oracle determinant.
inline bool oracle_nilpotent_charpoly(const PolyMatrix& m) {
    Ring big = m.ring().extended({"_s"});
    const std::size_t n = m.rows();
    Poly s = Poly::variable(big, big.size() - 1, GaussianRational(1));
    PolyMatrix shifted(big, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            shifted.at(i, j) = -embed_in(m.at(i, j), big);
            if (i == j) shifted.at(i, j) += s;
        }
    return oracle_det(shifted) == pow(s, n);
}

inline Poly random_poly(std::mt19937_64& rng, const Ring& ring, std::uint32_t max_deg,
                        bool complex_coeffs = true, long max_terms = 3) {
    std::vector<std::size_t> all;
    for (std::size_t v = 0; v < ring.size(); ++v) all.push_back(v);
    Poly p(ring);
    const long terms = rand_int(rng, 1, max_terms);
    for (long t = 0; t < terms; ++t) {
        std::uint64_t deg = static_cast<std::uint64_t>(rand_int(rng, 0, max_deg));
        Monomial mono(ring.size());
        for (std::uint64_t d = 0; d < deg; ++d) {
            std::size_t v = all[static_cast<std::size_t>(rand_int(rng, 0, static_cast<long>(all.size()) - 1))];
            mono = mono.times(Monomial::variable(ring.size(), v));
        }
        long re = rand_int(rng, -3, 3);
        long im = complex_coeffs ? rand_int(rng, -2, 2) : 0;
        if (re == 0 && im == 0) re = 1;
        p.add_term(mono, QI(re, im));
    }
    return p;
}

}  // namespace kt
