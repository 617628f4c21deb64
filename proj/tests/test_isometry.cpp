#include <doctest.h>

#include "avalg/isometry.hpp"

using namespace avalg;

namespace {

MatQ diag4(int a, int b, int c, int d) {
    MatQ m(4, 4);
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    m.at(2, 2) = c;
    m.at(3, 3) = d;
    return m;
}

IsoSpec t_spec(const Quat& a, const Quat& b, const std::string& form = "T", bool neg = false) {
    IsoSpec s;
    s.form = form;
    s.a = a.to_vec();
    s.b = b.to_vec();
    s.negate = neg;
    return s;
}

}  // namespace

TEST_CASE("realize produces the expected matrices") {
    CHECK(realize(t_spec(Quat::i(), -Quat::i())).matrix() == diag4(1, 1, -1, -1));
    CHECK(realize(IsoSpec{"sigma", {}, {}, false}).matrix() == diag4(1, -1, -1, -1));
    CHECK(realize(t_spec(Quat::i(), Quat::i())).matrix() == diag4(-1, -1, 1, 1));
    CHECK(realize(IsoSpec{"identity", {}, {}, false}).matrix() == MatQ::identity(4));
    CHECK(realize(IsoSpec{"neg_identity", {}, {}, false}).matrix() == MatQ::identity(4).scaled(-1));
    CHECK(realize(t_spec(Quat::i(), Quat::i(), "T", true)).matrix() == diag4(1, 1, -1, -1));
    CHECK_THROWS_AS(realize(t_spec(Quat(1, 1, 0, 0), Quat::one())), std::domain_error);
    CHECK_THROWS_AS(realize(IsoSpec{"spin", {}, {}, false}), std::invalid_argument);
    CHECK_THROWS_AS(realize(IsoSpec{"T", {}, {}, false}), std::invalid_argument);
}

TEST_CASE("realized isometries are exactly orthogonal") {
    Sampler s(7);
    for (int t = 0; t < 50; ++t) {
        Quat a = sphere_point(s.vec(3)), b = sphere_point(s.vec(3));
        IsoForm f = IsoForm::tab(a, b);
        CHECK(f.matrix().is_orthogonal());
        CHECK(f.proper());
        IsoForm g = f.then_sigma();
        CHECK(g.matrix().is_orthogonal());
        CHECK(!g.proper());
        // T_{a,b}^2 = T_{a^2,b^2}
        CHECK(f.compose(f) == IsoForm::tab_scaled(a * a, b * b));
    }
}

TEST_CASE("involutivity conditions both ways") {
    Sampler s(8);
    for (int t = 0; t < 50; ++t) {
        Quat a = im_sphere_point(s.vec(2)), b = im_sphere_point(s.vec(2));
        InvolutivityReport r = involutivity_condition(a, b);
        CHECK(r.t_involutive);       // both squares are -1
        CHECK(r.squares_pm1);
        InvolutivityReport same = involutivity_condition(a, a);
        CHECK(same.t_sigma_involutive);
        InvolutivityReport anti = involutivity_condition(a, -a);
        CHECK(anti.t_sigma_involutive);
        if (!proportional(b.to_vec(), a.to_vec())) {
            InvolutivityReport generic = involutivity_condition(a, b);
            CHECK(!generic.t_sigma_involutive);
            CHECK(!generic.b_pm_a);
        }
    }
    InvolutivityReport r = involutivity_condition(Quat::i(), Quat::j());
    CHECK(r.t_involutive);
    CHECK(!r.t_sigma_involutive);
    Quat a = sphere_point(VecQ{Rat(1), Rat(1), Rat(1)});
    InvolutivityReport r2 = involutivity_condition(a, a);
    CHECK(r2.t_sigma_involutive);
}

TEST_CASE("classify_isometry") {
    Sampler s(9);
    Quat a = sphere_point(s.vec(3)), b = sphere_point(s.vec(3));
    IsometryClass c1 = classify_isometry(IsoForm::tab(a, b));
    CHECK(c1.proper);
    IsometryClass c2 = classify_isometry(IsoForm::tab(a, b).then_sigma());
    CHECK(!c2.proper);
    IsometryClass c3 = classify_isometry(IsoForm::tab(Quat::i(), Quat::i().conj()));
    CHECK(c3.involutive);
    CHECK(c3.fixes_one);
}

TEST_CASE("decompose_proper recovers projective parameters") {
    auto [a1, b1] = decompose_proper(diag4(1, 1, -1, -1));
    CHECK(proportional(a1.to_vec(), Quat::i().to_vec()));
    CHECK(proportional(b1.to_vec(), (-Quat::i()).to_vec()));
    CHECK(sgn(a1[1]) > 0);  // sign normalisation

    auto [a2, b2] = decompose_proper(MatQ::identity(4));
    CHECK(proportional(a2.to_vec(), Quat::one().to_vec()));
    CHECK(proportional(b2.to_vec(), Quat::one().to_vec()));

    Quat a(ratio(-1, 2), ratio(1, 2), ratio(1, 2), ratio(1, 2));
    auto [a3, b3] = decompose_proper(IsoForm::tab(a, a.conj()).matrix());
    CHECK(proportional(a3.to_vec(), a.to_vec()));
    CHECK(proportional(b3.to_vec(), a.conj().to_vec()));

    Sampler s(10);
    for (int t = 0; t < 50; ++t) {
        Quat p = sphere_point(s.vec(3)), q = sphere_point(s.vec(3));
        auto [ar, br] = decompose_proper(IsoForm::tab(p, q).matrix());
        CHECK(proportional(ar.to_vec(), p.to_vec()));
        CHECK(proportional(br.to_vec(), q.to_vec()));
    }
    CHECK_THROWS_AS(decompose_proper(IsoForm::sigma().matrix()), std::domain_error);
    CHECK_THROWS_AS(decompose_proper(MatQ::identity(3)), std::domain_error);
}

TEST_CASE("projective T for non-unit parameters with square norm product") {
    Quat u(1, 2, 0, -1);
    IsoForm f = IsoForm::tab_scaled(u, u.conj());
    CHECK(f.matrix().is_orthogonal());
    CHECK(f.fixes_one());
    // |a|^2 |b|^2 = 36 for (u, conj(u)) with |u|^2 = 6.
    CHECK_THROWS_AS(IsoForm::tab_scaled(u, Quat::one()), std::domain_error);
}
