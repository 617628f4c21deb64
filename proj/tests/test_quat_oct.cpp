#include <doctest.h>

#include "avalg/octonion.hpp"
#include "avalg/sum_of_squares.hpp"

using namespace avalg;

namespace {

Quat rand_quat(Sampler& s) { return Quat::from_vec(s.vec(4)); }
Oct rand_oct(Sampler& s) { return Oct::from_vec(s.vec(8)); }

}  // namespace

TEST_CASE("defining relations of H") {
    Quat i = Quat::i(), j = Quat::j(), k = Quat::k();
    CHECK(i * j == k);
    CHECK(j * k == i);
    CHECK(k * i == j);
    CHECK(j * i == -k);
    CHECK(i * i == -Quat::one());
    // x -> i conj(x) (-i) fixes 1 and sends i to -i
    CHECK(i * Quat::i().conj() * (-i) == -i);
    Quat q(ratio(3, 5), ratio(4, 5), 0, 0);
    CHECK(q * q.conj() == Quat::one());
}

TEST_CASE("norm multiplicativity in H and O") {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Quat p = Quat::basis(a), q = Quat::basis(b);
            CHECK((p * q).norm2() == p.norm2() * q.norm2());
        }
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            Oct p = Oct::basis(a), q = Oct::basis(b);
            CHECK((p * q).norm2() == Rat(1));
        }
    Sampler s(101);
    for (int t = 0; t < 100; ++t) {
        Quat p = rand_quat(s), q = rand_quat(s);
        CHECK((p * q).norm2() == p.norm2() * q.norm2());
        Oct x = rand_oct(s), y = rand_oct(s);
        CHECK((x * y).norm2() == x.norm2() * y.norm2());
    }
}

TEST_CASE("octonion basis table from the doubling rule") {
    // Brute-force oracle: the full 8x8 table must be alternative, norm-one,
    // with e0 a two-sided unit; a few frozen entries pin the convention.
    for (int a = 0; a < 8; ++a) {
        CHECK(Oct::basis(0) * Oct::basis(a) == Oct::basis(a));
        CHECK(Oct::basis(a) * Oct::basis(0) == Oct::basis(a));
        for (int b = 0; b < 8; ++b) {
            Oct x = Oct::basis(a), y = Oct::basis(b);
            CHECK(oct_associator(x, x, y).is_zero());
            CHECK(oct_associator(y, x, x).is_zero());
        }
    }
    CHECK(Oct::basis(1) * Oct::basis(4) == Oct::basis(5));
    CHECK(Oct::basis(4) * Oct::basis(5) == Oct::basis(1));
    CHECK(Oct::basis(5) * Oct::basis(1) == Oct::basis(4));
    CHECK(Oct::basis(1) * Oct::basis(2) == Oct::basis(3));
}

TEST_CASE("alternativity and Moufang identities on random octonions") {
    Sampler s(102);
    for (int t = 0; t < 100; ++t) {
        Oct x = rand_oct(s), y = rand_oct(s), a = rand_oct(s);
        CHECK(oct_associator(x, x, y).is_zero());
        CHECK(oct_associator(y, x, x).is_zero());
        // middle Moufang: a(xy)a = (ax)(ya)
        CHECK(a * ((x * y) * a) == (a * x) * (y * a));
        // left Moufang: a(x(ay)) = ((ax)a)y
        CHECK(a * (x * (a * y)) == ((a * x) * a) * y);
    }
}

TEST_CASE("conjugation and trace symmetries") {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Quat p = Quat::basis(a), q = Quat::basis(b);
            CHECK((p * q).conj() == q.conj() * p.conj());
            CHECK((p * q).trace() == (q * p).trace());
        }
    Oct z(Quat(ratio(1, 2), 1, 0, 3), Quat(2, ratio(-1, 3), 0, 1));
    CHECK(z.conj().first() == z.first().conj());
    CHECK(z.conj().second() == -z.second());
    CHECK(z * z.conj() == Oct::one().scaled(z.norm2()));
}

TEST_CASE("associator examples") {
    // H is associative.
    Quat qi = Quat::i(), qj = Quat::j(), qk = Quat::k();
    CHECK((qi * qj) * qk == qi * (qj * qk));
    // O is not: (e1, e2, e4) has a nonzero associator.
    CHECK(!oct_associator(Oct::basis(1), Oct::basis(2), Oct::basis(4)).is_zero());
    // (x^2, x^2, x^2) = 0 in O.
    Sampler s(103);
    for (int t = 0; t < 50; ++t) {
        Oct x = rand_oct(s);
        Oct x2 = x * x;
        CHECK(oct_associator(x2, x2, x2).is_zero());
    }
}

TEST_CASE("rational sphere points") {
    CHECK(sphere_point(VecQ{Rat(0), Rat(0), Rat(0)}) == Quat::one());
    CHECK(sphere_point(VecQ{Rat(1), Rat(0), Rat(0)}) == Quat::i());
    CHECK(sphere_point(VecQ{Rat(1), Rat(1), Rat(1)}) ==
          Quat(ratio(-1, 2), ratio(1, 2), ratio(1, 2), ratio(1, 2)));
    CHECK(im_sphere_point(VecQ{Rat(0), Rat(0)}) == Quat::i());
    CHECK(im_sphere_point(VecQ{Rat(2), Rat(0)}) == Quat(0, ratio(-3, 5), ratio(4, 5), 0));
    Quat a = im_sphere_point(VecQ{Rat(1), Rat(1)});
    CHECK(a.re() == 0);
    CHECK(a.norm2() == 1);
    CHECK(a * a == -Quat::one());
    Sampler s(104);
    for (int t = 0; t < 100; ++t) {
        CHECK(sphere_point(s.vec(3)).norm2() == 1);
        Quat b = im_sphere_point(s.vec(2));
        CHECK(b.norm2() == 1);
        CHECK(b.re() == 0);
    }
}

TEST_CASE("conjugator solves u a = b u") {
    Quat u = conjugator(Quat::i(), Quat::i());
    CHECK(!u.is_zero());
    CHECK(u * Quat::i() == Quat::i() * u);

    Quat v = conjugator(Quat::i(), Quat::j());
    CHECK(!v.is_zero());
    CHECK(v * Quat::i() == Quat::j() * v);

    Quat b(0, ratio(3, 5), ratio(4, 5), 0);
    Quat w = conjugator(Quat::i(), b);
    CHECK(!w.is_zero());
    CHECK(w * Quat::i() == b * w);

    CHECK_THROWS_AS(conjugator(Quat::i(), Quat::one()), std::domain_error);
    CHECK_THROWS_AS(conjugator(Quat::i(), Quat::i().scaled(ratio(1, 2))), std::domain_error);
}

TEST_CASE("unit conjugator on the rational orbit of i") {
    Sampler s(105);
    for (int t = 0; t < 25; ++t) {
        Quat w1 = sphere_point(s.vec(3)), w2 = sphere_point(s.vec(3));
        Quat p = w1 * Quat::i() * w1.conj();
        Quat q = w2 * Quat::i() * w2.conj();
        auto v = unit_conjugator(p, q);
        REQUIRE(v.has_value());
        CHECK(v->norm2() == 1);
        CHECK(*v * p == q * *v);
    }
    // antipodal pair
    auto v = unit_conjugator(Quat::i(), -Quat::i());
    REQUIRE(v.has_value());
    CHECK(*v * Quat::i() == -Quat::i() * *v);
    // a pair whose plane norm class is not a sum of two squares has no
    // rational unit conjugator; 2(1 + <q|p>) = 212/55 here and 11 | 55.
    Quat p(0, ratio(-9, 11), ratio(-2, 11), ratio(6, 11));
    Quat q(0, ratio(-3, 5), Rat(0), ratio(4, 5));
    CHECK(p.norm2() == 1);
    CHECK(q.norm2() == 1);
    CHECK(!unit_conjugator(p, q).has_value());
}
