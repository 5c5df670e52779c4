#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "twoport/scalar.hpp"

using twoport::Field;
using twoport::Rat;
using twoport::rat;
using twoport::Scalar;

namespace {

Scalar sc(long p, long q = 1) { return Scalar(rat(p, q)); }
Scalar rt2(long p, long q = 1) { return Scalar::sqrt_term(rat(p, q), 2); }

std::mt19937 rng(20210517);

Scalar random_scalar(bool allow_radical = true) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::uniform_int_distribution<int> coin(0, 3);
    Scalar x = sc(num(rng), den(rng));
    if (allow_radical && coin(rng) != 0) x += rt2(num(rng), den(rng));
    return x;
}

// Float shadow of the exact value; test-only oracle.
double approx(const Scalar& x) {
    return x.rational_part().get_d() + x.radical_part().get_d() * std::sqrt(2.0);
}

}  // namespace

TEST_CASE("arithmetic matches the worked examples") {
    Scalar one_plus = sc(1) + rt2(1);
    Scalar one_minus = sc(1) - rt2(1);
    CHECK(one_plus * one_minus == sc(-1));

    Scalar inv = sc(1) / one_plus;
    CHECK(inv == sc(-1) + rt2(1));
    CHECK(inv * one_plus == sc(1));

    Scalar x = sc(10) - rt2(2);
    Scalar y = sc(8) - rt2(5);
    CHECK(x - y == sc(2) + rt2(3));
}

TEST_CASE("exact sign determination") {
    CHECK((sc(10) - rt2(2)).sign() == 1);
    CHECK(Scalar().sign() == 0);
    CHECK((sc(1) - rt2(1)).sign() == -1);
    CHECK((sc(-3) + rt2(2)).sign() == -1);   // 9 > 8
    CHECK((sc(-7, 5) + rt2(1)).sign() == 1);  // 49/25 < 2
}

TEST_CASE("rationality test") {
    CHECK(sc(4).is_rational());
    CHECK_FALSE((sc(1) + rt2(1)).is_rational());
    Scalar z = sc(1) + rt2(1);
    CHECK((z / z).is_rational());
    CHECK(z / z == sc(1));
}

TEST_CASE("division by zero is an explicit error") {
    CHECK_THROWS_AS(sc(1) / Scalar(), std::domain_error);
    CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
}

TEST_CASE("mixing distinct fields is an error, rationals embed everywhere") {
    Scalar in2 = rt2(1);
    Scalar in3 = Scalar::sqrt_term(rat(1), 3);
    CHECK_THROWS_AS(in2 + in3, std::invalid_argument);
    CHECK(in2 + sc(5) == Scalar(rat(5), rat(1), 2));
    CHECK(Scalar::sqrt_term(rat(0), 3) == Scalar());  // zero radical collapses to Q
}

TEST_CASE("field discriminant validation") {
    CHECK_THROWS_AS(Field::check(4), std::invalid_argument);
    CHECK_THROWS_AS(Field::check(12), std::invalid_argument);
    CHECK_THROWS_AS(Field::check(1), std::invalid_argument);
    CHECK_NOTHROW(Field::check(0));
    CHECK_NOTHROW(Field::check(2));
    CHECK_NOTHROW(Field::check(6));
}

TEST_CASE("field laws hold exactly on randomized scalars") {
    for (int i = 0; i < 300; ++i) {
        Scalar x = random_scalar();
        Scalar y = random_scalar();
        Scalar z = random_scalar();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == Scalar(rat(1)));
            CHECK(twoport::is_rational(x / x));
        }
    }
}

TEST_CASE("sign is multiplicative and agrees with the float shadow") {
    for (int i = 0; i < 300; ++i) {
        Scalar x = random_scalar();
        Scalar y = random_scalar();
        CHECK((x * y).sign() == x.sign() * y.sign());
        double fx = approx(x);
        if (std::abs(fx) > 1e-9) CHECK(x.sign() == (fx > 0 ? 1 : -1));
        CHECK(std::abs(approx(x * y) - fx * approx(y)) < 1e-6);
    }
}

TEST_CASE("text form round-trips") {
    CHECK(Scalar::parse("3/4").str() == "3/4");
    CHECK(Scalar::parse("-5").str() == "-5");
    CHECK(Scalar::parse("10 - 2*sqrt(2)") == sc(10) - rt2(2));
    CHECK(Scalar::parse("sqrt(2)") == rt2(1));
    CHECK(Scalar::parse("-sqrt(2)") == rt2(-1));
    CHECK(Scalar::parse("1/2 + 3/2*sqrt(2)") == Scalar(rat(1, 2), rat(3, 2), 2));
    CHECK(Scalar::parse("2+3*sqrt(2)").str() == "2 + 3*sqrt(2)");

    for (int i = 0; i < 200; ++i) {
        Scalar x = random_scalar();
        CHECK(Scalar::parse(x.str()) == x);
    }
}

TEST_CASE("no decimal literals") {
    CHECK_THROWS_AS(Scalar::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("0.25 + sqrt(2)"), std::invalid_argument);
    CHECK_THROWS_AS(twoport::rat_from_string("2.0"), std::invalid_argument);
}

TEST_CASE("parse rejects foreign radicals") {
    CHECK_THROWS_AS(Scalar::parse("sqrt(3)", 2), std::invalid_argument);
    CHECK(Scalar::parse("sqrt(0)", 2) == Scalar());
    CHECK(Scalar::parse("3*sqrt(1)", 2) == sc(3));
}

TEST_CASE("ordering comparisons are exact") {
    CHECK(sc(10) - rt2(2) > sc(8) - rt2(5));
    CHECK(rt2(1) > sc(1));
    CHECK(rt2(1) < sc(3, 2));
    CHECK((sc(10) - rt2(2)).abs() == sc(10) - rt2(2));
    CHECK((sc(1) - rt2(1)).abs() == rt2(1) - sc(1));
}
