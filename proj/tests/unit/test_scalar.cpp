#include <doctest.h>

#include "keller/extension.hpp"
#include "support.hpp"

using namespace kt;

TEST_CASE("rationals are canonical: lowest terms, positive denominator") {
    GaussianRational a = Q(2, 6);
    CHECK(a.real().get_num() == 1);
    CHECK(a.real().get_den() == 3);
    GaussianRational b = Q(-1, -2);
    CHECK(b.real().get_num() == 1);
    CHECK(b.real().get_den() == 2);
    CHECK(Q(0, 5) == Q(0));
}

TEST_CASE("field arithmetic in Q(i)") {
    GaussianRational z = QI(2, 3);
    CHECK(z * z.conjugate() == Q(13));
    CHECK(z + (-z) == Q(0));
    CHECK(z * z.inverse() == Q(1));
    CHECK(z / z == Q(1));
    CHECK(QI(0, 1) * QI(0, 1) == Q(-1));  // i^2 = -1
    CHECK_THROWS_AS(Q(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(z / Q(0), std::domain_error);
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        GaussianRational a = QI(rand_int(rng, -5, 5), rand_int(rng, -5, 5));
        GaussianRational b = QI(rand_int(rng, -5, 5), rand_int(rng, -5, 5));
        GaussianRational c = QI(rand_int(rng, -5, 5), rand_int(rng, -5, 5));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("scalar text forms") {
    CHECK(Q(0).str() == "0");
    CHECK(Q(3).str() == "3");
    CHECK(Q(-1, 2).str() == "-1/2");
    CHECK(QI(0, 1).str() == "i");
    CHECK(QI(0, -1).str() == "-i");
    CHECK(QI(0, 3).str() == "3*i");
    CHECK(GaussianRational(mpq_class(0), mpq_class(1, 2)).str() == "1/2*i");
    CHECK(QI(1, 1).str() == "(1+i)");
    CHECK(GaussianRational(mpq_class(-1, 2), mpq_class(-3, 4)).str() == "(-1/2-3/4*i)");
}

TEST_CASE("extension scalar: generator relation and degenerate modulus") {
    // d=2, c=1/3: L*L = 1/3
    ExtensionScalar l = ExtensionScalar::generator(2, Q(1, 3));
    CHECK(l * l == ExtensionScalar::embed(2, Q(1, 3), Q(1, 3)));
    CHECK(l * ExtensionScalar::one(2, Q(1, 3)) == l);
    // d=1, c=5: L is forced to 5.
    CHECK(ExtensionScalar::generator(1, Q(5)) == ExtensionScalar::embed(1, Q(5), Q(5)));
}

TEST_CASE("extension scalar: ring axioms and the embedding is a homomorphism") {
    std::mt19937_64 rng(12);
    for (std::uint32_t d : {1u, 2u, 3u}) {
        GaussianRational c = Q(rand_int(rng, 1, 5), rand_int(rng, 1, 5));
        auto random_elt = [&] {
            ExtensionScalar e = ExtensionScalar::zero(d, c);
            for (std::uint32_t j = 0; j < d; ++j)
                e += ExtensionScalar::generator(d, c).pow(j) *
                     ExtensionScalar::embed(d, c, QI(rand_int(rng, -3, 3), rand_int(rng, -3, 3)));
            return e;
        };
        for (int iter = 0; iter < 50; ++iter) {
            ExtensionScalar a = random_elt(), b = random_elt(), e = random_elt();
            CHECK(a * (b + e) == a * b + a * e);
            CHECK((a * b) * e == a * (b * e));
            CHECK(a * b == b * a);
            GaussianRational x = QI(rand_int(rng, -3, 3), rand_int(rng, -3, 3));
            GaussianRational y = QI(rand_int(rng, -3, 3), rand_int(rng, -3, 3));
            CHECK(ExtensionScalar::embed(d, c, x * y) ==
                  ExtensionScalar::embed(d, c, x) * ExtensionScalar::embed(d, c, y));
            CHECK(ExtensionScalar::embed(d, c, x + y) ==
                  ExtensionScalar::embed(d, c, x) + ExtensionScalar::embed(d, c, y));
        }
    }
}

TEST_CASE("extension scalar: modulus mismatch is an error") {
    ExtensionScalar a = ExtensionScalar::one(2, Q(1, 3));
    ExtensionScalar b = ExtensionScalar::one(2, Q(1, 2));
    ExtensionScalar c = ExtensionScalar::one(3, Q(1, 3));
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
    CHECK(a != b);
}
