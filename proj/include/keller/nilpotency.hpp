#pragma once

/*
 * nilpotency.hpp
 * --------------
 * The verification battery around nilpotent polynomial maps: the
 * trace-of-powers nilpotency test, the one-parameter bridge
 * N -> (Id - t*N) x Id whose Jacobian determinant is identically 1
 * exactly for nilpotent N, Euler-identity checks for homogeneous and
 * two-form maps, generic Jacobian rank, and sign classification of
 * real maps in the normal form Id + higher-order parts.
 */

#include <optional>

#include "keller/automorphism.hpp"
#include "keller/extension.hpp"
#include "keller/polymap.hpp"

namespace keller {

struct NilpotencyResult {
    bool nilpotent;
    std::size_t first_nonzero_power;  // k with trace(M^k) != 0; 0 when nilpotent
    Poly witness_trace;
};

/// Traces of powers: over a characteristic-zero field, M (size n) is
/// nilpotent iff trace(M^k) = 0 for k = 1..n.  Early exit on the first
/// nonzero trace.
NilpotencyResult nilpotency_by_traces(const PolyMatrix& m);

/// Definition check for maps: is the Jacobian matrix nilpotent over Q(i)[X]?
NilpotencyResult is_nilpotent(const PolyMap& n);

/// (Id - t*N) x Id in variables (X_1..X_n, t).  Its Jacobian determinant is
/// identically 1 iff N is nilpotent.  The parameter variable is named "t";
/// an input already using "t" is rejected.
PolyMap bridge(const PolyMap& n);

struct ComponentCheck {
    bool pass;
    std::size_t failing_component;  // meaningful when !pass
};

/// For N homogeneous of degree k: the exact identity JN(X) * X^T = k * N(X).
/// Throws std::invalid_argument when a component is not homogeneous of
/// degree k (the zero component is allowed).
ComponentCheck euler_identity_check(const PolyMap& n, std::uint64_t k);

/// k1 * L^(k1-1) in Q(i)[L]/(L^(k2-k1) = k1/k2); the eigenvalue of the
/// radial eigenvector identity below.
ExtensionScalar radial_eigenvalue(std::uint64_t k1, std::uint64_t k2);

struct TwoFormReport {
    bool pass;
    std::size_t failing_component;
    ExtensionScalar eigenvalue;
    std::optional<bool> fixed_point_verified;  // set when a point was supplied
};

/// For N = N1 + N2 with N1, N2 homogeneous of degrees k1 < k2 (k1 > 0):
/// verifies J(N1+N2)(L*X) * X^T = k1 * L^(k1-1) * (N1+N2)(X) as an exact
/// identity over the extension ring with L^(k2-k1) = k1/k2.  The identity
/// is universal in X; when a concrete fixed point is supplied it is
/// verified exactly and the eigenvalue reported for it.
TwoFormReport two_form_identity_check(const PolyMap& n1, const PolyMap& n2, std::uint64_t k1,
                                      std::uint64_t k2,
                                      const std::optional<std::vector<GaussianRational>>& fixed_point =
                                          std::nullopt);

struct RankResult {
    std::size_t rank;
    bool exact;  // exact minor computation (small n) vs. sampled lower bound
};

/// Generic rank of JN over the function field: the largest s such that some
/// s x s minor is a nonzero polynomial.  Exhaustive minors for n <= 4;
/// exact evaluation at random rational points (a certified lower bound)
/// beyond that.
RankResult jacobian_rank(const PolyMap& n, std::uint64_t sample_seed = 2024);

enum class SignClass { positive, negative, neither };

struct SignReport {
    SignClass classification;
    bool keller;                  // det JF constant and nonzero
    bool complement_nilpotent;    // F - Id nilpotent (checked for positive maps)
    bool invertibility_implied;   // by the sign-pattern results
};

/// Classifies the signs of the degree >= 2 coefficients of a real map in
/// the normal form F = Id + higher-degree parts (checked: no constant
/// part, degree-1 part exactly the identity, all coefficients real).
/// A map with no higher-degree terms classifies as positive (vacuously).
SignReport sign_classify(const PolyMap& f);

const char* to_string(SignClass c);

}  // namespace keller
