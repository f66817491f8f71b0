#pragma once

/*
 * numeric.hpp
 * -----------
 * The only floating-point corner of the library: multistart Newton
 * iteration over complex doubles for fixed-point search and the heuristic
 * preimage-count degree estimate.  Every positive finding is re-verified
 * exactly (rational reconstruction + exact evaluation); numeric results on
 * their own are never treated as proofs.
 *
 * Determinism contract: results depend only on the inputs and the seed,
 * and are aggregated in seed order.
 */

#include <complex>
#include <optional>

#include "keller/polymap.hpp"

namespace keller {

struct SearchOptions {
    std::size_t seeds = 64;
    double tol = 1e-10;            // Newton residual tolerance
    double dedup_radius = 1e-6;    // cluster radius for converged points
    std::uint64_t rng_seed = 1;
    std::size_t max_iter = 80;
    double start_radius = 2.0;
    long denominator_bound = 1000000;  // rational reconstruction bound
};

struct Cluster {
    std::vector<std::complex<double>> point;
    double residual;
    std::size_t hits;
};

struct FixedPointSearch {
    std::vector<Cluster> clusters;                          // approximate findings
    std::vector<std::vector<GaussianRational>> exact_points;  // reconstructed and verified exactly
    bool conjecture_violation = false;  // >= 2 verified-distinct fixed points of a nilpotent map
    bool nilpotency_checked = false;
    bool nilpotent = false;
};

/// Multistart Newton on N(x) - x = 0 from random complex starts; converged
/// points are deduplicated, rationally reconstructed where possible, and
/// re-verified exactly.
FixedPointSearch fixed_point_search(const PolyMap& n, const SearchOptions& opts = {});

/// Heuristic lower bound for the geometric degree: the maximum number of
/// distinct numeric solutions of F(x) = c over several random rational
/// targets c.  A lower bound only, never a certificate.
std::size_t degree_estimate(const PolyMap& f, std::size_t targets, std::size_t seeds,
                            std::uint64_t rng_seed = 7);

/// Best continued-fraction approximation with denominator <= bound, accepted
/// only when it matches x to near machine precision.
std::optional<mpq_class> reconstruct_rational(double x, long denominator_bound);

}  // namespace keller
