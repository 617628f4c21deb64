#include <doctest.h>

#include "avalg/identities.hpp"

using namespace avalg;

namespace {

Algebra h_a1(const Quat& a) { return isotope_H(1, a, Quat::one()); }

const Quat kBad(ratio(3, 5), ratio(4, 5), 0, 0);

}  // namespace

TEST_CASE("quadratic criterion on the roster and on counterexamples") {
    for (const char* name : {"O", "*O", "*O(i,1)", "O~", "O~(i)", "*H(i,1)"}) {
        IdentityReport rep = check_quadratic_criterion(named_algebra(name));
        CHECK(rep.holds);
        CHECK(rep.method == "exact-polarized");
    }
    IdentityReport bad = check_quadratic_criterion(h_a1(kBad));
    CHECK(!bad.holds);
    REQUIRE(bad.witness.has_value());
    // The witness really violates x^2 e = x^2.
    Algebra A = h_a1(kBad);
    VecQ x = bad.witness->points[0];
    VecQ x2 = A.square(x);
    CHECK(A.product(x2, require_left_unit(A)) != x2);

    CHECK_THROWS_AS(check_quadratic_criterion(quaternion_algebra(StarVariant::Right)), std::domain_error);
}

TEST_CASE("exact sextic vanishing via polarization") {
    CHECK(check_sextic_exact(named_algebra("H")).holds);
    CHECK(check_sextic_exact(named_algebra("O~")).holds);
    IdentityReport bad = check_sextic_exact(h_a1(kBad));
    CHECK(!bad.holds);
    CHECK(bad.witness.has_value());
}

TEST_CASE("criterion and sextic agree") {
    Sampler s(21);
    for (const char* name : {"C", "*C", "H", "*H", "*H(i,1)", "O", "*O"}) {
        Algebra A = named_algebra(name);
        CHECK(check_quadratic_criterion(A).holds == check_sextic_exact(A).holds);
    }
    for (int t = 0; t < 3; ++t) {
        Quat a = sphere_point(s.vec(3));
        if (a.is_real()) continue;
        Algebra A = h_a1(a);
        CHECK(check_quadratic_criterion(A).holds == check_sextic_exact(A).holds);
    }
}

TEST_CASE("sampled soundness of the polarized sextic result") {
    Algebra o = named_algebra("O");
    Sampler s(22);
    for (int t = 0; t < 100; ++t) CHECK(is_zero(sextic_map(o, s.vec(8))));
}

TEST_CASE("linearizations") {
    CHECK(check_linearizations(named_algebra("O"), 50, 1).holds);
    CHECK(check_linearizations(named_algebra("*O(i,1)"), 50, 1).holds);
    IdentityReport bad = check_linearizations(h_a1(kBad), 50, 1);
    CHECK(!bad.holds);
    CHECK(bad.witness.has_value());
}

TEST_CASE("duplication conditions, first component in x") {
    IsoForm I = IsoForm::identity();
    CHECK(check_dup_condition(DupCondition::FirstComponentX, I, I).holds);
    Quat a = im_sphere_point(VecQ{ratio(1, 2), Rat(2)});
    CHECK(check_dup_condition(DupCondition::FirstComponentX,
                              IsoForm::tab(a, a.conj()).then_sigma(), I)
              .holds);
    IsoForm proper = IsoForm::tab(Quat::i(), Quat::i().conj());
    CHECK(!check_dup_condition(DupCondition::FirstComponentX, proper, I).holds);
    auto w = find_witness(DupCondition::FirstComponentX, proper, I);
    REQUIRE(w.has_value());
    // The witness violates the unpolarized condition.
    Quat x = w->first;
    Quat s = proper.apply(x) * x;
    CHECK(proper.apply(s) != s);
}

TEST_CASE("duplication conditions, first component in y") {
    IsoForm I = IsoForm::identity(), sig = IsoForm::sigma();
    Sampler smp(23);
    for (int t = 0; t < 5; ++t) {
        IsoForm psi = IsoForm::tab(sphere_point(smp.vec(3)), sphere_point(smp.vec(3)));
        CHECK(check_dup_condition(DupCondition::FirstComponentY, I, psi).holds);
    }
    Quat a = im_sphere_point(VecQ{Rat(1), Rat(3)}), b = im_sphere_point(VecQ{Rat(2), ratio(1, 5)});
    IsoForm phi = IsoForm::tab(a, a.conj()).then_sigma();
    CHECK(check_dup_condition(DupCondition::FirstComponentY, phi, IsoForm::tab(b, a)).holds);
    CHECK(!check_dup_condition(DupCondition::FirstComponentY, phi, IsoForm::tab(b, b).then_sigma()).holds);
    CHECK(!check_dup_condition(DupCondition::FirstComponentY, phi, IsoForm::tab(b, -b).then_sigma()).holds);
    // (sigma, T_{i,i}) admits a witness.
    CHECK(find_witness(DupCondition::FirstComponentY, sig, IsoForm::tab(Quat::i(), Quat::i())).has_value());
}

TEST_CASE("duplication conditions, second component") {
    IsoForm I = IsoForm::identity(), sig = IsoForm::sigma();
    CHECK(check_dup_condition(DupCondition::SecondComponent, sig, I).holds);
    CHECK(check_dup_condition(DupCondition::SecondComponent, sig, I.negated()).holds);
    CHECK(!check_dup_condition(DupCondition::SecondComponent, I, I.negated()).holds);
    CHECK(!check_dup_condition(DupCondition::SecondComponent, I, IsoForm::tab(Quat::i(), Quat::i())).holds);
    auto w = find_witness(DupCondition::SecondComponent, I, IsoForm::tab(Quat::i(), Quat::i()));
    REQUIRE(w.has_value());
    // (I, T_{i,i} sigma) is refutable; (sigma, I) is not.
    CHECK(find_witness(DupCondition::SecondComponent, I,
                       IsoForm::tab(Quat::i(), Quat::i()).then_sigma())
              .has_value());
    CHECK(!find_witness(DupCondition::SecondComponent, sig, I, 200, 1).has_value());
    CHECK_THROWS_AS(check_dup_condition(DupCondition::SecondComponent, I.negated(), I), std::domain_error);
}

TEST_CASE("conditions match the criterion of the doubled algebra") {
    Sampler s(24);
    IsoForm I = IsoForm::identity();
    std::vector<std::pair<IsoForm, IsoForm>> pool;
    pool.emplace_back(I, I);
    pool.emplace_back(IsoForm::sigma(), I.negated());
    Quat a = im_sphere_point(s.vec(2)), b = im_sphere_point(s.vec(2));
    pool.emplace_back(IsoForm::tab(a, a.conj()).then_sigma(), IsoForm::tab(b, a));
    pool.emplace_back(I, IsoForm::tab(b, b));
    pool.emplace_back(IsoForm::tab(a, a.conj()), I);
    Quat g = sphere_point(s.vec(3));
    pool.emplace_back(I, IsoForm::tab(g, g).then_sigma().negated());
    for (const auto& [phi, psi] : pool) {
        bool conds = dup_conditions_hold(phi, psi);
        bool crit = check_quadratic_criterion(duplication(phi, psi)).holds;
        CHECK(conds == crit);
        if (conds) {
            CHECK(phi.involutive());
            CHECK(psi.involutive());
        }
    }
}
