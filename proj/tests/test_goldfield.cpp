#include "icotile/goldfield.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace icotile;

namespace {

GoldenRational random_golden(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    return {mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))};
}

// a + b*phi in long double, computed without the library.
long double value_ld(const GoldenRational& x) {
    const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
    return x.rational_part().get_d() + x.phi_part().get_d() * phi;
}

}  // namespace

TEST_CASE("golden addition") {
    CHECK(GoldenRational(0, 1) + GoldenRational(1, 0) == GoldenRational(1, 1));
    CHECK(GoldenRational(1, 0) + GoldenRational(0, 0) == GoldenRational(1, 0));
    CHECK(GoldenRational(mpq_class(1, 2), mpq_class(-1, 2)) + GoldenRational(mpq_class(1, 2), mpq_class(1, 2)) ==
          GoldenRational(1, 0));
}

TEST_CASE("golden multiplication") {
    const GoldenRational phi = GoldenRational::phi();
    CHECK(phi * phi == GoldenRational(1, 1));
    CHECK(phi * (phi - 1) == GoldenRational(1));
    CHECK(phi.inverse() == phi - 1);
    // (2 phi) * phi = 2 phi^2 = 2 + 2 phi
    CHECK(GoldenRational(0, 2) * phi == GoldenRational(2, 2));
}

TEST_CASE("golden conjugation") {
    CHECK(GoldenRational::phi().conjugate() == GoldenRational(1, -1));
    // phi -> 1 - phi in 2 + 2 phi gives 2 + 2 - 2 phi
    CHECK(GoldenRational(2, 2).conjugate() == GoldenRational(4, -2));
    std::mt19937_64 rng(11);
    for (int n = 0; n < 200; ++n) {
        const auto x = random_golden(rng), y = random_golden(rng);
        CHECK(x.conjugate().conjugate() == x);
        CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
        CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
    }
}

TEST_CASE("golden sign") {
    CHECK(GoldenRational(1, -1).sign() == -1);
    CHECK(GoldenRational(0).sign() == 0);
    CHECK(GoldenRational(-3, 2).sign() == 1);
    // consecutive Fibonacci numbers: the two terms nearly cancel
    CHECK(GoldenRational(-1597, 987).sign() == (value_ld(GoldenRational(-1597, 987)) > 0 ? 1 : -1));

    std::mt19937_64 rng(5);
    for (int n = 0; n < 2000; ++n) {
        const auto x = random_golden(rng);
        const long double v = value_ld(x);
        if (std::fabs(v) > 1e-9L) CHECK(x.sign() == (v > 0 ? 1 : -1));
        CHECK(x.sign() * x.conjugate().sign() == sgn(x.norm()));
    }
}

TEST_CASE("golden to_double") {
    CHECK(GoldenRational::phi().to_double() == doctest::Approx(1.6180339887498949).epsilon(1e-12));
    CHECK(GoldenRational(1, -1).to_double() == doctest::Approx(-0.6180339887498949).epsilon(1e-12));
    // 2 + 2 phi = 3 + sqrt 5
    CHECK(std::fabs(GoldenRational(2, 2).to_double() - 5.2360679774997897) < 1e-9);
}

TEST_CASE("golden field axioms on random triples") {
    std::mt19937_64 rng(17);
    for (int n = 0; n < 300; ++n) {
        const auto x = random_golden(rng), y = random_golden(rng), z = random_golden(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK(x * x.inverse() == GoldenRational(1));
        CHECK(x.norm() == (x * x.conjugate()).rational_part());
        CHECK((x * x.conjugate()).is_rational());
    }
    CHECK_THROWS_AS(GoldenRational(0).inverse(), std::domain_error);
}

TEST_CASE("golden string round trip") {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 100; ++n) {
        const auto x = random_golden(rng);
        CHECK(GoldenRational::parse(x.str()) == x);
    }
    CHECK(GoldenRational(0, 1).str() == "0+1φ");
    CHECK(GoldenRational::parse("3/4") == GoldenRational(mpq_class(3, 4), 0));
    CHECK(GoldenRational::parse("φ") == GoldenRational::phi());
    CHECK(GoldenRational::parse("-phi") == -GoldenRational::phi());
    CHECK(GoldenRational::parse("1/3+1/7phi") == GoldenRational(mpq_class(1, 3), mpq_class(1, 7)));
    CHECK(GoldenRational::parse("1-φ") == GoldenRational(1, -1));
    CHECK_THROWS_AS(GoldenRational::parse("x+1φ"), std::invalid_argument);
    CHECK_THROWS_AS(GoldenRational::parse(""), std::invalid_argument);
}

TEST_CASE("golden ordering") {
    CHECK(GoldenRational(1) < GoldenRational::phi());
    CHECK(GoldenRational(0, 2) < GoldenRational(2, 2));
    CHECK(abs(GoldenRational(1, -1)) == GoldenRational(-1, 1));
}
