#pragma once

/*
 * fuzz.hpp
 * --------
 * Seeded generators for nilpotent map families and the fixed-point fuzzing
 * harness: every generated map is nilpotent by construction and self-checked,
 * then searched for fixed points; two or more verified-distinct fixed points
 * of a nilpotent map constitute a CONJECTURE VIOLATION and are serialized in
 * full for independent checking.
 */

#include <random>

#include "keller/numeric.hpp"

namespace keller {

enum class FuzzFamily { strict_triangular, conjugated_triangular, homogeneous, two_form };

const char* to_string(FuzzFamily f);
std::optional<FuzzFamily> fuzz_family_from_string(std::string_view s);

/// x1..xn.
Ring default_ring(std::size_t n);

/// Component i depends only on variables of index > i, so the Jacobian is
/// strictly upper triangular and the map nilpotent by construction.  With
/// homogeneous_degree set, every component is homogeneous of that degree
/// (and constants are excluded).
PolyMap random_strict_triangular_map(std::mt19937_64& rng, const Ring& ring, std::uint32_t max_deg,
                                     bool allow_constants,
                                     std::optional<std::uint64_t> homogeneous_degree = std::nullopt);

/// Generic random map (no structure), for the non-nilpotent halves of the
/// test batteries.
PolyMap random_generic_map(std::mt19937_64& rng, const Ring& ring, std::uint32_t max_deg,
                           bool complex_coeffs);

/// Random homogeneous map of degree k (no nilpotency).
PolyMap random_homogeneous_map(std::mt19937_64& rng, const Ring& ring, std::uint64_t k,
                               bool complex_coeffs);

/// Draw one nilpotent map from the named family.  Nilpotency is structural
/// for every family; the harness still re-checks it.
PolyMap random_family_map(FuzzFamily family, std::mt19937_64& rng, const Ring& ring,
                          std::uint32_t max_deg);

struct FuzzViolation {
    PolyMap map;
    std::vector<std::vector<GaussianRational>> points;
};

struct FuzzOutcome {
    FuzzFamily family;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    std::size_t maps_with_exact_point = 0;
    std::size_t violations = 0;
    std::vector<FuzzViolation> violation_records;
    std::size_t triangular_checked = 0;    // strict family: exact-solver comparisons run
    std::size_t triangular_mismatches = 0; // strict family: disagreements with the exact solver
};

FuzzOutcome fuzz_jn(FuzzFamily family, std::size_t n, std::uint32_t deg, std::size_t count,
                    std::uint64_t seed, const SearchOptions& search = {});

/// Stream-splitting for per-map seeds (splitmix64 step).
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace keller
