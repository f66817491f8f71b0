#pragma once

/*
 * automorphism.hpp
 * ----------------
 * Invertible coordinate changes built from three primitive kinds --
 * invertible linear maps, translations, and triangular maps
 * X_i -> X_i + h_i(X_1,...,X_{i-1}) -- plus compositions.  Every kind
 * inverts exactly, so a pair (H, R) of them is a replayable proof that
 * two maps are equivalent: R o G = F o H as an identity of polynomials.
 */

#include <cstdint>
#include <variant>
#include <vector>

#include "keller/polymap.hpp"

namespace keller {

class Automorphism {
  public:
    struct Linear {
        std::vector<std::vector<GaussianRational>> matrix;  // row-major, det != 0
    };
    struct Translation {
        std::vector<GaussianRational> offset;
    };
    struct Triangular {
        std::vector<Poly> shifts;  // shifts[i] uses only variables of index < i, no constant term
    };
    struct Composition {
        std::vector<Automorphism> factors;  // applied right to left; empty = identity
    };

    static Automorphism identity(Ring ring);
    static Automorphism linear(Ring ring, std::vector<std::vector<GaussianRational>> matrix);
    static Automorphism translation(Ring ring, std::vector<GaussianRational> offset);
    static Automorphism triangular(Ring ring, std::vector<Poly> shifts);
    static Automorphism composition(Ring ring, std::vector<Automorphism> factors);

    /// Coordinate permutation as a linear automorphism: component p is the
    /// variable at position perm[p].
    static Automorphism permutation(Ring ring, const std::vector<std::size_t>& perm);
    /// Coordinate reversal (its own inverse).
    static Automorphism reversal(Ring ring);

    const Ring& ring() const { return ring_; }
    std::size_t dimension() const { return ring_.size(); }
    const std::variant<Linear, Translation, Triangular, Composition>& kind() const { return kind_; }

    PolyMap as_polymap() const;
    Automorphism inverse() const;

    /// The same automorphism acting on a ring extended by identity
    /// coordinates (names appended after the existing ones).
    Automorphism extended(const std::vector<std::string>& names) const;

  private:
    Automorphism(Ring ring, std::variant<Linear, Translation, Triangular, Composition> kind)
        : ring_(std::move(ring)), kind_(std::move(kind)) {}

    Ring ring_;
    std::variant<Linear, Translation, Triangular, Composition> kind_;
};

/// det of the Jacobian of the automorphism; constant by construction
/// (product of the linear factors' determinants, 1 for the other kinds).
GaussianRational jacobian_constant(const Automorphism& a);

/// The (H, R) pair of a commuting square R o G = F o H.
struct EquivalenceWitness {
    Automorphism preimage_change;  // H
    Automorphism image_change;     // R
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
};

/// F = R o G o H^{-1}.
PolyMap equivalence_apply(const EquivalenceWitness& w, const PolyMap& g);

/// Exact replay check of R o G = F o H.
bool verify_witness(const EquivalenceWitness& w, const PolyMap& f, const PolyMap& g);

/// Deterministic-from-seed composition of random invertible linear and
/// triangular automorphisms; ground truth for invertible Keller maps.
/// Triangular shifts draw small integer coefficients (|c| <= 3).
Automorphism random_tame_automorphism(const Ring& ring, std::uint64_t seed, std::size_t steps,
                                      std::uint32_t max_deg);

/// Deterministic small-integer helper shared by the random generators
/// (avoids unspecified std::uniform_int_distribution behaviour).
template <class Rng>
long rand_int(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace keller
