#include <doctest.h>

#include "avalg/rational.hpp"
#include "avalg/sum_of_squares.hpp"

using namespace avalg;

TEST_CASE("rationals stay canonical") {
    Rat r = ratio(6, -4);
    CHECK(rat_str(r) == "-3/2");
    CHECK(r.get_den() == 2);
    CHECK(ratio(0, 7) == 0);
    CHECK(rat_str(ratio(8, 2)) == "4");
}

TEST_CASE("parse and format round trip") {
    for (const char* s : {"0", "1", "-1", "3/5", "-22/7", "1000000000000000000000/7"}) {
        CHECK(rat_str(parse_rat(s)) == s);
    }
    CHECK(parse_rat("4/6") == ratio(2, 3));
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
}

TEST_CASE("squares and square roots") {
    CHECK(is_square(ratio(9, 4)));
    CHECK(rat_sqrt(ratio(9, 4)) == ratio(3, 2));
    CHECK(!is_square(ratio(2, 1)));
    CHECK(!is_square(ratio(-1, 1)));
    CHECK_THROWS_AS(rat_sqrt(ratio(2, 1)), std::domain_error);
}

TEST_CASE("vector helpers") {
    VecQ a = {ratio(1, 2), Rat(0), Rat(3)};
    VecQ b = {Rat(1), Rat(2), Rat(-1)};
    CHECK(dot(a, b) == ratio(-5, 2));
    CHECK(vadd(a, vneg(a)) == zero_vec(3));
    CHECK(proportional(vscale(ratio(-7, 3), b), b));
    CHECK(!proportional(a, b));
    CHECK(proportional(zero_vec(3), zero_vec(3)));
    CHECK(!proportional(b, zero_vec(3)));
}

TEST_CASE("sampler is deterministic and in range") {
    Sampler s1(42), s2(42);
    for (int k = 0; k < 200; ++k) {
        Rat a = s1.small_rat(), b = s2.small_rat();
        CHECK(a == b);
        CHECK(abs(a.get_num()) <= 6);
        CHECK(a.get_den() <= 6);
    }
    Sampler s3(43);
    bool same = true;
    for (int k = 0; k < 20; ++k) same = same && (s1.small_rat() == s3.small_rat());
    CHECK(!same);
}

TEST_CASE("sum of two squares") {
    auto r = sum_of_two_squares(mpz_class(25));
    REQUIRE(r.has_value());
    CHECK(r->first * r->first + r->second * r->second == 25);
    CHECK(!sum_of_two_squares(mpz_class(3)).has_value());
    CHECK(!sum_of_two_squares(mpz_class(21)).has_value());
    CHECK(sum_of_two_squares(mpz_class(0)).has_value());
    // factorisation past trial division (both primes are 1 mod 4)
    mpz_class big = mpz_class(1000003) * 1000033;  // 1000003 = 3 mod 4 appears once
    CHECK(!sum_of_two_squares(big).has_value());
    mpz_class big2 = mpz_class(1000033) * 1001989;  // 1 mod 4 times 1 mod 4
    auto r2 = sum_of_two_squares(big2);
    REQUIRE(r2.has_value());
    CHECK(r2->first * r2->first + r2->second * r2->second == big2);

    Sampler s(5);
    for (int k = 0; k < 50; ++k) {
        mpz_class x = s.int_in(0, 4000), y = s.int_in(0, 4000);
        mpz_class n = x * x + y * y;
        auto rep = sum_of_two_squares(n);
        REQUIRE(rep.has_value());
        CHECK(rep->first * rep->first + rep->second * rep->second == n);
    }
    auto q = sum_of_two_squares_rat(ratio(1, 2));
    REQUIRE(q.has_value());
    CHECK(q->first * q->first + q->second * q->second == ratio(1, 2));
    CHECK(!sum_of_two_squares_rat(ratio(3, 1)).has_value());
}
