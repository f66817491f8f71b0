#pragma once

/*
 * reduction.hpp
 * -------------
 * The constructive reduction of a Keller map to the normal form Id - N
 * with N nilpotent:
 *
 *   blow_up            F(X) with F(0)=0  ->  F_t(X,T), T-weighted by degree
 *   eliminate_t_powers removes every T-power above 1 by adding one fresh
 *                      coordinate per step and replaying a pair of exactly
 *                      invertible coordinate changes, producing the form
 *                      X_i - T*G_i(X) together with a witness
 *   to_nilpotent_form  the end-to-end pipeline with a replay-verified
 *                      witness chain and N = G
 *
 * Every claimed equivalence carries an (H, R) witness; replay is the only
 * accepted proof.
 */

#include <optional>
#include <string>
#include <vector>

#include "keller/automorphism.hpp"
#include "keller/nilpotency.hpp"

namespace keller {

/// T-weighting of the homogeneous layers: component i becomes
/// sum_j T^(j-1) * (degree-j part of F_i), and T itself is appended.
/// Requires F(0) = 0; the new variable is named "t".
PolyMap blow_up(const PolyMap& f);

/// Substitute value for the last variable and drop the last component,
/// giving a map on the first n-1 variables.
PolyMap restrict_last(const PolyMap& f, const GaussianRational& value);

struct EliminationResult {
    PolyMap result;              // every non-T component X_i - T*G_i, T last
    EquivalenceWitness witness;  // R o (input x Id^added) = result o H
    std::size_t added = 0;
    std::vector<std::uint64_t> measures;  // sum of (top T-power - 1), per step
    PolyMap extracted;                    // G, on the non-T variables
};

/// Input contract: last component is exactly the last variable T and every
/// other component is X_i plus terms divisible by T.  Each step removes the
/// current highest T-power summand (ties: lowest component) by adding one
/// fresh variable; the measure strictly decreases until every non-T
/// component has T-degree at most 1.
EliminationResult eliminate_t_powers(const PolyMap& ft);

struct ChainLink {
    std::string stage;  // "normalize" | "blow-up" | "eliminate" | "extract"
    PolyMap from;
    PolyMap to;
    std::optional<EquivalenceWitness> witness;  // equivalence links only
    std::size_t added = 0;
    bool replay_ok = false;
};

struct ReductionReport {
    PolyMap nilpotent_part;
    std::vector<ChainLink> chain;
    std::size_t dimensions_added = 0;
    std::vector<std::uint64_t> measures;
    std::string note;
};

/// Keller map -> nilpotent N with a replay-verified chain:
/// translate F(base) to the origin and absorb the full linear part (which
/// also normalizes the Jacobian constant to 1), blow up, eliminate T
/// powers, and read N off the X_i - T*G_i form.  base_point defaults to
/// the origin; preimage-count genericity at the base point is assumed and
/// recorded in the report note, not checked.
ReductionReport to_nilpotent_form(const PolyMap& f,
                                  const std::optional<std::vector<GaussianRational>>& base_point =
                                      std::nullopt);

}  // namespace keller
