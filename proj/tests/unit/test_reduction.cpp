#include <doctest.h>

#include "keller/inversion.hpp"
#include "keller/reduction.hpp"
#include "support.hpp"

using namespace kt;

TEST_CASE("blow-up weights the homogeneous layers by powers of t") {
    Ring rx = R({"x"});
    Ring rt = R({"x", "t"});
    CHECK(blow_up(M(rx, {"x - x^2 - x^3"})) == M(rt, {"x - t*x^2 - t^2*x^3", "t"}));

    Ring r2 = R({"x", "y"});
    Ring r2t = R({"x", "y", "t"});
    CHECK(blow_up(PolyMap::identity(r2)) == PolyMap::identity(r2t));

    // det J(F_t) = F'(t*x) for F = x + x^3.
    PolyMap bu = blow_up(M(rx, {"x + x^3"}));
    CHECK(determinant(jacobian(bu)) == P("1 + 3*t^2*x^2", rt));

    CHECK_THROWS_AS(blow_up(M(rx, {"x + 1"})), std::invalid_argument);
    CHECK_THROWS_AS(blow_up(M(R({"t"}), {"t^2"})), std::invalid_argument);
}

TEST_CASE("blow-up jacobian identity and t=1 restriction on random maps") {
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 25; ++iter) {
        std::size_t n = static_cast<std::size_t>(rand_int(rng, 1, 3));
        Ring r = default_ring(n);
        std::vector<Poly> comps;
        for (std::size_t i = 0; i < n; ++i) {
            Poly p = random_poly(rng, r, 4);
            p -= Poly::constant(r, p.constant_term());  // force F(0) = 0
            comps.push_back(std::move(p));
        }
        PolyMap f(r, comps);
        PolyMap bu = blow_up(f);

        // det J(F_t)(X,t) = det JF(t*X), exactly.
        const Ring& big = bu.ring();
        Poly t = Poly::variable(big, n, Q(1));
        std::vector<Poly> scaled;
        for (std::size_t v = 0; v < n; ++v) scaled.push_back(t * Poly::variable(big, v, Q(1)));
        CHECK(determinant(jacobian(bu)) == substitute(determinant(jacobian(f)), scaled));

        // restriction to t=1 recovers F exactly.
        CHECK(restrict_last(bu, Q(1)) == f);
    }
}

TEST_CASE("t-power elimination: the worked one-variable cubic") {
    Ring rt = R({"x", "t"});
    PolyMap ft = M(rt, {"x - t^2*x^3", "t"});
    EliminationResult elim = eliminate_t_powers(ft);

    // One step: (x1 - t*x2, x2 - t*x1^3, t) with the fresh variable named w1.
    Ring expect_ring = R({"x", "w1", "t"});
    CHECK(elim.added == 1);
    CHECK(elim.result == M(expect_ring, {"x - t*w1", "w1 - t*x^3", "t"}));
    CHECK(elim.measures == std::vector<std::uint64_t>{1, 0});

    // extracted G = (w1, x^3) on (x, w1); not nilpotent, consistent with
    // x - x^3 not being a Keller map.
    Ring small = R({"x", "w1"});
    CHECK(elim.extracted == M(small, {"w1", "x^3"}));
    CHECK(!is_nilpotent(elim.extracted).nilpotent);

    // the witness replays against the plain stable extension, exactly
    CHECK(verify_witness(elim.witness, elim.result, stable_extend(ft, elim.added)));
}

TEST_CASE("t-power elimination: already in t-degree <= 1 form") {
    Ring rt = R({"x", "y", "t"});
    PolyMap ft = M(rt, {"x + t*y^2", "y", "t"});
    EliminationResult elim = eliminate_t_powers(ft);
    CHECK(elim.added == 0);
    CHECK(elim.result == ft);
    CHECK(elim.measures == std::vector<std::uint64_t>{0});
    CHECK(elim.extracted == M(R({"x", "y"}), {"-y^2", "0"}));
    CHECK(is_nilpotent(elim.extracted).nilpotent);
    CHECK(verify_witness(elim.witness, elim.result, ft));
}

TEST_CASE("t-power elimination: identity input") {
    Ring rt = R({"x", "y", "t"});
    PolyMap ft = PolyMap::identity(rt);
    EliminationResult elim = eliminate_t_powers(ft);
    CHECK(elim.added == 0);
    CHECK(elim.extracted == M(R({"x", "y"}), {"0", "0"}));
}

TEST_CASE("t-power elimination rejects nonconforming input") {
    Ring rt = R({"x", "t"});
    // last component not T
    CHECK_THROWS_AS(eliminate_t_powers(M(rt, {"x - t^2*x^3", "t^2"})), std::invalid_argument);
    // T-free part of a component is not X_i
    CHECK_THROWS_AS(eliminate_t_powers(M(rt, {"x^2 - t*x", "t"})), std::invalid_argument);
    CHECK_THROWS_AS(eliminate_t_powers(M(rt, {"x + x^2", "t"})), std::invalid_argument);
}

TEST_CASE("measure decreases strictly through a long elimination") {
    Ring rt = R({"x", "t"});
    PolyMap ft = M(rt, {"x - t^2*x^2 - t^4*x^3", "t"});
    EliminationResult elim = eliminate_t_powers(ft);
    for (std::size_t s = 0; s + 1 < elim.measures.size(); ++s)
        CHECK(elim.measures[s] > elim.measures[s + 1]);
    CHECK(elim.measures.back() == 0);
    CHECK(verify_witness(elim.witness, elim.result, stable_extend(ft, elim.added)));
    // every non-T component of the result has t-degree at most 1
    const std::size_t t_pos = elim.result.dimension() - 1;
    for (std::size_t i = 0; i < t_pos; ++i)
        CHECK(max_exponent_of(elim.result.component(i), t_pos) <= 1);
}

TEST_CASE("full reduction of the basic shear") {
    Ring r = R({"x", "y"});
    ReductionReport rep = to_nilpotent_form(M(r, {"x + y^2", "y"}));
    CHECK(rep.nilpotent_part == M(r, {"-y^2", "0"}));
    CHECK(is_nilpotent(rep.nilpotent_part).nilpotent);
    CHECK(rep.dimensions_added == 1);  // just the blow-up coordinate
    for (const auto& link : rep.chain) CHECK(link.replay_ok);
    // unique fixed point of N at the origin
    TriangularSolve ts = triangular_fixed_solve(rep.nilpotent_part);
    CHECK(ts.applicable);
    CHECK(ts.point == std::vector<GaussianRational>{Q(0), Q(0)});
}

TEST_CASE("reduction of the identity") {
    Ring r = R({"x", "y"});
    ReductionReport rep = to_nilpotent_form(PolyMap::identity(r));
    CHECK(rep.nilpotent_part == M(r, {"0", "0"}));
}

TEST_CASE("reduction normalizes base point and Keller constant") {
    Ring r = R({"x", "y"});
    // Keller constant 6, nonzero image at the base point.
    PolyMap f = M(r, {"2*x + y^2 + 3", "3*y - 1"});
    KellerResult kc = is_keller(f);
    CHECK(kc.keller);
    CHECK(kc.constant == Q(6));
    ReductionReport rep = to_nilpotent_form(f);
    CHECK(is_nilpotent(rep.nilpotent_part).nilpotent);
    for (const auto& link : rep.chain) CHECK(link.replay_ok);

    // a caller-supplied base point is honored
    ReductionReport rep2 = to_nilpotent_form(f, std::vector<GaussianRational>{Q(1), Q(-2)});
    CHECK(is_nilpotent(rep2.nilpotent_part).nilpotent);
    for (const auto& link : rep2.chain) CHECK(link.replay_ok);
}

TEST_CASE("reduction of tame Keller maps yields nilpotent parts with replaying witnesses") {
    std::mt19937_64 rng(62);
    int done = 0;
    while (done < 5) {
        Ring r = default_ring(3);
        Automorphism a = random_tame_automorphism(r, rng(), 3, 2);
        PolyMap f = a.as_polymap();
        ReductionReport rep = to_nilpotent_form(f);
        CHECK(is_nilpotent(rep.nilpotent_part).nilpotent);
        for (std::size_t s = 0; s + 1 < rep.measures.size(); ++s)
            CHECK(rep.measures[s] > rep.measures[s + 1]);
        for (const auto& link : rep.chain) CHECK(link.replay_ok);
        // the bridge of N is Keller with constant 1
        KellerResult kb = is_keller(bridge(rep.nilpotent_part));
        CHECK(kb.keller);
        CHECK(kb.constant == Q(1));
        ++done;
    }
}

TEST_CASE("reduction rejects non-Keller input") {
    Ring r = R({"x", "y"});
    CHECK_THROWS_AS(to_nilpotent_form(M(r, {"x^2", "y"})), std::invalid_argument);
}

TEST_CASE("fixed points of N are zeros of Id - N") {
    Ring r = R({"x", "y"});
    // N = (y^2 + 3, 0): strictly triangular with fixed point (3, 0).
    PolyMap n = M(r, {"y^2 + 3", "0"});
    std::vector<GaussianRational> fp{Q(3), Q(0)};
    CHECK(fixed_point_verify(n, fp));
    std::vector<Poly> id_minus;
    for (std::size_t i = 0; i < 2; ++i)
        id_minus.push_back(Poly::variable(r, i, Q(1)) - n.component(i));
    CHECK(evaluate_map(PolyMap(r, id_minus), fp) == std::vector<GaussianRational>{Q(0), Q(0)});
}
