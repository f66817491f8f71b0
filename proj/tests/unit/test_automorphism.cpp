#include <doctest.h>

#include "keller/automorphism.hpp"
#include "support.hpp"

using namespace kt;

namespace {

Automorphism shear(const Ring& r) {  // (x, y + x^2)
    return Automorphism::triangular(r, {Poly(r), P("x^2", r)});
}

Automorphism swap_xy(const Ring& r) {
    return Automorphism::linear(r, {{Q(0), Q(1)}, {Q(1), Q(0)}});
}

}  // namespace

TEST_CASE("automorphisms as polynomial maps") {
    Ring r = R({"x", "y"});
    CHECK(shear(r).as_polymap() == M(r, {"x", "y + x^2"}));
    CHECK(swap_xy(r).as_polymap() == M(r, {"y", "x"}));
    // factors compose right-to-left: shear after swap
    Automorphism c = Automorphism::composition(r, {shear(r), swap_xy(r)});
    CHECK(c.as_polymap() == M(r, {"y", "x + y^2"}));
    CHECK(is_keller(c.as_polymap()).keller);
}

TEST_CASE("construction invariants") {
    Ring r = R({"x", "y"});
    CHECK_THROWS_AS(Automorphism::linear(r, {{Q(1), Q(1)}, {Q(1), Q(1)}}), std::invalid_argument);
    // shift may only use earlier variables
    CHECK_THROWS_AS(Automorphism::triangular(r, {P("y", r), Poly(r)}), std::invalid_argument);
    // no constant shifts: translations are their own kind
    CHECK_THROWS_AS(Automorphism::triangular(r, {Poly(r), P("x + 1", r)}), std::invalid_argument);
}

TEST_CASE("exact inversion") {
    Ring r = R({"x", "y"});
    CHECK(shear(r).inverse().as_polymap() == M(r, {"x", "y - x^2"}));
    CHECK(Automorphism::identity(r).inverse().as_polymap() == PolyMap::identity(r));
    Automorphism d = Automorphism::linear(r, {{Q(2), Q(0)}, {Q(0), Q(1)}});
    CHECK(d.inverse().as_polymap() == M(r, {"1/2*x", "y"}));
}

TEST_CASE("every constructible automorphism composes with its inverse to the identity") {
    std::mt19937_64 rng(41);
    Ring r = R({"x", "y", "z"});
    PolyMap id = PolyMap::identity(r);
    for (int iter = 0; iter < 12; ++iter) {
        Automorphism a = random_tame_automorphism(r, rng(), static_cast<std::size_t>(rand_int(rng, 0, 4)), 2);
        PolyMap fwd = a.as_polymap();
        PolyMap bwd = a.inverse().as_polymap();
        CHECK(compose(fwd, bwd) == id);
        CHECK(compose(bwd, fwd) == id);
    }
    // translations too
    Automorphism t = Automorphism::translation(r, {Q(1), Q(-2), Q(1, 3)});
    CHECK(compose(t.as_polymap(), t.inverse().as_polymap()) == id);
}

TEST_CASE("triangular automorphisms have Jacobian determinant exactly 1") {
    std::mt19937_64 rng(42);
    Ring r = R({"x", "y", "z"});
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<Poly> shifts{Poly(r)};
        for (std::size_t i = 1; i < 3; ++i) {
            std::vector<std::size_t> earlier;
            for (std::size_t v = 0; v < i; ++v) earlier.push_back(v);
            Poly s(r);
            for (int t = 0; t < 2; ++t) {
                Monomial mono(3);
                std::uint64_t deg = static_cast<std::uint64_t>(rand_int(rng, 1, 3));
                for (std::uint64_t d = 0; d < deg; ++d)
                    mono = mono.times(Monomial::variable(
                        3, earlier[static_cast<std::size_t>(rand_int(rng, 0, static_cast<long>(i) - 1))]));
                s.add_term(mono, Q(rand_int(rng, -3, 3)));
            }
            shifts.push_back(s);
        }
        Automorphism a = Automorphism::triangular(r, shifts);
        KellerResult kc = is_keller(a.as_polymap());
        CHECK(kc.keller);
        CHECK(kc.constant == Q(1));
    }
}

TEST_CASE("equivalence witnesses replay") {
    Ring r = R({"x", "y"});
    PolyMap g = M(r, {"x", "y"});

    EquivalenceWitness trivial{Automorphism::identity(r), Automorphism::identity(r), 2, 2};
    CHECK(equivalence_apply(trivial, g) == g);

    EquivalenceWitness w{shear(r), Automorphism::identity(r), 2, 2};
    PolyMap f = equivalence_apply(w, g);
    CHECK(f == M(r, {"x", "y - x^2"}));
    CHECK(verify_witness(w, f, g));
    CHECK(!verify_witness(w, g, g));
}

TEST_CASE("linear-only witnesses preserve p-degree; triangular ones preserve the Keller data") {
    std::mt19937_64 rng(43);
    Ring r = R({"x", "y", "z"});
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<Poly> comps;
        for (int i = 0; i < 3; ++i) comps.push_back(random_poly(rng, r, 3, false, 2));
        PolyMap g(r, comps);

        Automorphism h = random_tame_automorphism(r, rng(), 1, 1);  // a single linear or triangular step
        while (!std::holds_alternative<Automorphism::Composition>(h.kind()) ||
               std::get<Automorphism::Composition>(h.kind()).factors.size() != 1)
            h = random_tame_automorphism(r, rng(), 1, 1);

        // Degree preservation under linear coordinate changes.
        Automorphism lin_h = Automorphism::linear(r, {{Q(1), Q(1), Q(0)}, {Q(0), Q(1), Q(0)}, {Q(0), Q(0), Q(1)}});
        Automorphism lin_r = Automorphism::linear(r, {{Q(2), Q(0), Q(0)}, {Q(0), Q(1), Q(0)}, {Q(0), Q(1), Q(1)}});
        EquivalenceWitness lw{lin_h, lin_r, 3, 3};
        CHECK(p_degree(equivalence_apply(lw, g)) == p_degree(g));
    }

    // Triangular factors: Keller verdict and constant survive.
    Automorphism h = Automorphism::triangular(r, {Poly(r), P("x^2", r), P("x*y", r)});
    Automorphism rr = Automorphism::triangular(r, {Poly(r), P("3*x^3", r), Poly(r)});
    for (int iter = 0; iter < 6; ++iter) {
        Automorphism tame = random_tame_automorphism(r, rng(), 2, 2);
        PolyMap g = tame.as_polymap();
        KellerResult before = is_keller(g);
        KellerResult after = is_keller(equivalence_apply(EquivalenceWitness{h, rr, 3, 3}, g));
        CHECK(before.keller == after.keller);
        CHECK(before.constant == after.constant);
    }
}

TEST_CASE("tame generator: determinism, identity, Keller constant") {
    Ring r = R({"x", "y", "z"});
    CHECK(random_tame_automorphism(r, 99, 0, 2).as_polymap() == PolyMap::identity(r));
    CHECK(random_tame_automorphism(r, 7, 4, 2).as_polymap() ==
          random_tame_automorphism(r, 7, 4, 2).as_polymap());
    CHECK(random_tame_automorphism(r, 7, 4, 2).as_polymap() !=
          random_tame_automorphism(r, 8, 4, 2).as_polymap());

    std::mt19937_64 rng(44);
    PolyMap id = PolyMap::identity(r);
    for (int iter = 0; iter < 8; ++iter) {
        Automorphism a = random_tame_automorphism(r, rng(), 3, 2);
        CHECK(compose(a.as_polymap(), a.inverse().as_polymap()) == id);
        // Keller constant = product of the linear factors' determinants.
        KellerResult kc = is_keller(a.as_polymap());
        CHECK(kc.keller);
        CHECK(kc.constant == jacobian_constant(a));
    }
}

TEST_CASE("permutation and reversal are exact coordinate permutations") {
    Ring r = R({"x", "y", "z"});
    Automorphism rev = Automorphism::reversal(r);
    CHECK(rev.as_polymap() == M(r, {"z", "y", "x"}));
    CHECK(compose(rev.as_polymap(), rev.as_polymap()) == PolyMap::identity(r));
    Automorphism p = Automorphism::permutation(r, {1, 2, 0});
    CHECK(p.as_polymap() == M(r, {"y", "z", "x"}));
    CHECK(compose(p.as_polymap(), p.inverse().as_polymap()) == PolyMap::identity(r));
}
