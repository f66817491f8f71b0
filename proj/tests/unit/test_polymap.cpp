#include <doctest.h>

#include "keller/reduction.hpp"
#include "support.hpp"

using namespace kt;

TEST_CASE("jacobian entries are the hand derivatives") {
    Ring r = R({"x", "y"});
    PolyMap f = M(r, {"x + y^2", "y"});
    PolyMatrix j = jacobian(f);
    CHECK(j.at(0, 0) == P("1", r));
    CHECK(j.at(0, 1) == P("2*y", r));
    CHECK(j.at(1, 0) == Poly(r));
    CHECK(j.at(1, 1) == P("1", r));

    CHECK(jacobian(PolyMap::identity(r)) == PolyMatrix::identity(r, 2));

    PolyMatrix jn = jacobian(M(r, {"y^2", "0"}));
    CHECK(jn.at(0, 0).is_zero());
    CHECK(jn.at(0, 1) == P("2*y", r));
    CHECK(jn.at(1, 0).is_zero());
    CHECK(jn.at(1, 1).is_zero());
}

TEST_CASE("determinant examples") {
    Ring r = R({"x", "y"});
    CHECK(determinant(jacobian(M(r, {"x + y^2", "y"}))) == P("1", r));
    CHECK(determinant(PolyMatrix::identity(R({"a", "b", "c", "d"}), 4)) ==
          Poly::constant(R({"a", "b", "c", "d"}), Q(1)));

    // det(s*E - JN) = s^2 for the nilpotent shift N = (y^2, 0).
    Ring rs = R({"x", "y", "s"});
    PolyMatrix m(rs, 2, 2);
    m.at(0, 0) = P("s", rs);
    m.at(0, 1) = P("-2*y", rs);
    m.at(1, 1) = P("s", rs);
    CHECK(determinant(m) == P("s^2", rs));

    PolyMatrix bad(r, 2, 3);
    CHECK_THROWS_AS(determinant(bad), std::invalid_argument);
}

TEST_CASE("determinant agrees with the naive cofactor oracle") {
    std::mt19937_64 rng(31);
    for (std::size_t n : {2u, 3u, 4u, 5u}) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
        Ring r = R(names);
        for (int iter = 0; iter < (n <= 3 ? 20 : 8); ++iter) {
            PolyMatrix m(r, n, n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (rand_int(rng, 0, 2))  // keep it sparse
                        m.at(a, b) = random_poly(rng, r, 2, true, 2);
            CHECK(determinant(m) == oracle_det(m));
        }
    }
}

TEST_CASE("composition") {
    Ring r = R({"x", "y"});
    PolyMap f = M(r, {"x + y^2", "y"});
    PolyMap g = M(r, {"x - y^2", "y"});
    CHECK(compose(f, g) == PolyMap::identity(r));
    CHECK(compose(f, PolyMap::identity(r)) == f);
    CHECK(compose(PolyMap::identity(r), f) == f);
    CHECK_THROWS_AS(compose(f, PolyMap::identity(R({"x"}))), std::invalid_argument);
}

TEST_CASE("chain rule and determinant multiplicativity") {
    std::mt19937_64 rng(32);
    for (std::size_t n : {2u, 3u}) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
        Ring r = R(names);
        for (int iter = 0; iter < 10; ++iter) {
            std::vector<Poly> fc, gc;
            for (std::size_t i = 0; i < n; ++i) {
                fc.push_back(random_poly(rng, r, 3, true, 2));
                gc.push_back(random_poly(rng, r, 3, true, 2));
            }
            PolyMap f(r, fc), g(r, gc);
            PolyMatrix left = jacobian(compose(f, g));
            PolyMatrix right = substitute(jacobian(f), g.components()) * jacobian(g);
            CHECK(left == right);
            CHECK(determinant(left) ==
                  substitute(determinant(jacobian(f)), g.components()) * determinant(jacobian(g)));
        }
    }
}

TEST_CASE("p-degree") {
    Ring r = R({"x", "y"});
    CHECK(p_degree(M(r, {"x + y^3", "y"})) == 3);
    CHECK(p_degree(PolyMap::identity(R({"a", "b", "c"}))) == 1);
    CHECK(p_degree(M(r, {"0", "0"})) == 0);
    // blow-up of x - x^2 - x^3 has p-degree 5
    PolyMap bu = blow_up(M(R({"x"}), {"x - x^2 - x^3"}));
    CHECK(p_degree(bu) == 5);
}

TEST_CASE("Keller test") {
    Ring r = R({"x", "y"});
    KellerResult yes = is_keller(M(r, {"x + y^2", "y"}));
    CHECK(yes.keller);
    CHECK(yes.constant == Q(1));

    KellerResult no = is_keller(M(r, {"x^2", "y"}));
    CHECK(!no.keller);
    CHECK(no.witness == P("2*x", r));

    KellerResult id = is_keller(PolyMap::identity(r));
    CHECK(id.keller);
    CHECK(id.constant == Q(1));
}

TEST_CASE("stable extension") {
    Ring r = R({"x", "y"});
    PolyMap f = M(r, {"x + y^2", "y"});
    PolyMap ext = stable_extend(f, 1);
    Ring re = R({"x", "y", "w1"});
    CHECK(ext == M(re, {"x + y^2", "y", "w1"}));
    CHECK(stable_extend(f, 0) == f);

    // Keller constant preserved (block-triangular determinant).
    KellerResult kf = is_keller(f), ke = is_keller(ext);
    CHECK(ke.keller == kf.keller);
    CHECK(ke.constant == kf.constant);
    CHECK(p_degree(ext) == p_degree(f));

    // name collisions are an error, not a silent rename
    PolyMap wmap = M(R({"w1"}), {"w1^2"});
    CHECK_THROWS_AS(stable_extend(wmap, 1), std::invalid_argument);
}

TEST_CASE("stable extension preserves the Keller verdict on random tame maps") {
    std::mt19937_64 rng(33);
    Ring r = R({"x", "y", "z"});
    for (int iter = 0; iter < 10; ++iter) {
        Automorphism a = random_tame_automorphism(r, rng(), 3, 2);
        PolyMap f = a.as_polymap();
        KellerResult kf = is_keller(f);
        KellerResult ke = is_keller(stable_extend(f, 2));
        CHECK(kf.keller);
        CHECK(ke.keller);
        CHECK(ke.constant == kf.constant);
    }
}

TEST_CASE("realification") {
    Ring rx = R({"x"});
    PolyMap fi = M(rx, {"i*x"});
    Ring rr = R({"x_re", "x_im"});
    CHECK(realify(fi) == M(rr, {"-x_im", "x_re"}));
    CHECK(realify(PolyMap::identity(rx)) == PolyMap::identity(rr));

    // F = (x^2): det JF = 2x, det JF~ = 4(u^2 + v^2) = |2x|^2.
    PolyMap sq = M(rx, {"x^2"});
    CHECK(determinant(jacobian(realify(sq))) == P("4*x_re^2 + 4*x_im^2", rr));
}

TEST_CASE("realification determinant identity on random complex maps") {
    std::mt19937_64 rng(34);
    for (std::size_t m : {1u, 2u}) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < m; ++i) names.push_back("x" + std::to_string(i + 1));
        Ring r = R(names);
        for (int iter = 0; iter < 12; ++iter) {
            std::vector<Poly> comps;
            for (std::size_t i = 0; i < m; ++i) comps.push_back(random_poly(rng, r, 3, true, 2));
            PolyMap f(r, comps);
            PolyMap rf = realify(f);

            Poly det_c = determinant(jacobian(f));
            std::vector<Poly> images;
            for (std::size_t j = 0; j < m; ++j) {
                Poly img = Poly::variable(rf.ring(), 2 * j, Q(1));
                img += Poly::variable(rf.ring(), 2 * j + 1, QI(0, 1));
                images.push_back(img);
            }
            Poly p = substitute(det_c, images);
            Poly re = map_coefficients<GaussianRational>(
                p, [](const GaussianRational& c) { return GaussianRational(c.real()); });
            Poly im = map_coefficients<GaussianRational>(
                p, [](const GaussianRational& c) { return GaussianRational(c.imag()); });
            CHECK(determinant(jacobian(rf)) == re * re + im * im);
        }
    }
}
