#pragma once

/*
 * inversion.hpp
 * -------------
 * Exact inversion machinery: formal power-series inversion of maps in the
 * normal form Id - H (H of order >= 2), exact inverse verification, exact
 * fixed-point checks, and back-substitution solving for strictly
 * triangular dependency patterns.
 */

#include <optional>

#include "keller/polymap.hpp"

namespace keller {

/// The documented default iteration cap: p_degree(F)^(n-1) + 1 (the
/// classical degree bound for inverses of Keller maps), clamped to >= 2.
std::uint64_t default_inverse_cap(const PolyMap& f);

struct InverseResult {
    bool ok;           // false: diverged at cap (a report, not a non-invertibility claim)
    PolyMap inverse;   // meaningful when ok
    std::uint64_t cap;
    std::size_t iterations;
};

/// Requires F = Id - H with H free of constant and linear terms and
/// det JF = 1; iterates G <- Id + H o G truncated above the cap until
/// stationary, then certifies compose(F, G) = Id exactly.
InverseResult formal_inverse(const PolyMap& f, std::optional<std::uint64_t> cap = std::nullopt);

/// compose(F,G) = Id and compose(G,F) = Id, exactly.
bool verify_inverse(const PolyMap& f, const PolyMap& g);

/// N(x) = x, coordinatewise over Q(i).
bool fixed_point_verify(const PolyMap& n, const std::vector<GaussianRational>& x);

struct TriangularSolve {
    bool applicable;
    std::vector<GaussianRational> point;  // the unique fixed point, when applicable
};

/// Exact back-substitution for maps whose component i depends only on
/// variables of index < i, or only on variables of index > i.  Such maps
/// have exactly one fixed point.
TriangularSolve triangular_fixed_solve(const PolyMap& n);

}  // namespace keller
