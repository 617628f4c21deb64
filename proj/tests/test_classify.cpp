#include <doctest.h>

#include "avalg/classify.hpp"
#include "avalg/json_io.hpp"

using namespace avalg;

namespace {

AlgSpec named(const std::string& n) {
    AlgSpec s;
    s.kind = "named";
    s.name = n;
    return s;
}

IsoForm t_a_sigma(const Quat& a) { return IsoForm::tab(a, a.conj()).then_sigma(); }

}  // namespace

TEST_CASE("family matching") {
    IsoForm I = IsoForm::identity(), sig = IsoForm::sigma();
    auto s1 = match_family(I, I);
    REQUIRE(s1.has_value());
    CHECK(s1->tag == FamilyKind::S1);

    auto s3m = match_family(sig, I.negated());
    REQUIRE(s3m.has_value());
    CHECK(s3m->tag == FamilyKind::S3);
    CHECK(s3m->psi_sign == -1);

    auto s5 = match_family(t_a_sigma(Quat::i()), IsoForm::tab(Quat::j(), Quat::i()));
    REQUIRE(s5.has_value());
    CHECK(s5->tag == FamilyKind::S5);
    CHECK(proportional(s5->a->to_vec(), Quat::i().to_vec()));
    CHECK(proportional(s5->b->to_vec(), Quat::j().to_vec()));

    Quat c = sphere_point(VecQ{Rat(2), ratio(1, 3), Rat(0)});
    auto s2 = match_family(I, IsoForm::tab(c, c).then_sigma().negated());
    REQUIRE(s2.has_value());
    CHECK(s2->tag == FamilyKind::S2);
    CHECK(proportional(s2->a->to_vec(), c.to_vec()));

    Quat a = im_sphere_point(VecQ{Rat(1), Rat(4)});
    auto s4 = match_family(t_a_sigma(a), I);
    REQUIRE(s4.has_value());
    CHECK(s4->tag == FamilyKind::S4);

    CHECK(!match_family(I, I.negated()).has_value());
    CHECK(!match_family(I, IsoForm::tab(Quat::i(), Quat::i())).has_value());
    CHECK(!match_family(IsoForm::tab(Quat::i(), Quat::i().conj()), I).has_value());
    CHECK(!match_family(I, IsoForm::tab(c, c).then_sigma()).has_value());  // +T_{c,c} sigma
    CHECK_THROWS_AS(match_family(I.negated(), I), std::domain_error);
}

TEST_CASE("family labels") {
    CHECK(family_to_class(FamilyTag{FamilyKind::S1, {}, {}, 1}) == ClassLabel::O);
    CHECK(family_to_class(FamilyTag{FamilyKind::S2, {}, {}, 1}) == ClassLabel::StarO_i1);
    CHECK(family_to_class(FamilyTag{FamilyKind::S3, {}, {}, 1}) == ClassLabel::OTilde);
    CHECK(family_to_class(FamilyTag{FamilyKind::S3, {}, {}, -1}) == ClassLabel::StarO);
    CHECK(family_to_class(FamilyTag{FamilyKind::S4, {}, {}, 1}) == ClassLabel::StarO_i1);
    CHECK(family_to_class(FamilyTag{FamilyKind::S5, {}, {}, 1}) == ClassLabel::OTilde_i);
}

TEST_CASE("fingerprints of the dimension-8 roster") {
    CHECK(invariant_fingerprint(named_algebra("O")) == Fingerprint{8, 8, 0, 2});
    CHECK(invariant_fingerprint(named_algebra("*O")) == Fingerprint{8, 1, 7, 2});
    CHECK(invariant_fingerprint(named_algebra("*O(i,1)")) == Fingerprint{8, 7, 1, 4});
    CHECK(invariant_fingerprint(named_algebra("O~")) == Fingerprint{8, 5, 3, 4});
    CHECK(invariant_fingerprint(named_algebra("O~(i)")) == Fingerprint{8, 5, 3, 4});
}

TEST_CASE("verify_isomorphism") {
    Algebra o = named_algebra("O");
    CHECK(verify_isomorphism(o, o, MatQ::identity(8)));
    // Orthogonal but not multiplicative: the identity is no map O -> *O.
    CHECK(!verify_isomorphism(o, named_algebra("*O"), MatQ::identity(8)));
}

TEST_CASE("lemma13 witnesses") {
    for (int idx : {1, 4}) {
        IsoWitness w = iso_lemma13(Oct::basis(idx));
        CHECK(w.verified);
    }
    CHECK(iso_lemma13(Oct::one()).verified);
    Oct mixed = Oct::from_vec({Rat(0), ratio(3, 5), Rat(0), Rat(0), ratio(4, 5), Rat(0), Rat(0), Rat(0)});
    CHECK(iso_lemma13(mixed).verified);
    CHECK_THROWS_AS(iso_lemma13(Oct::from_vec({ratio(3, 5), ratio(4, 5), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)})),
                    std::domain_error);
}

TEST_CASE("one-sided isotopes are isomorphic") {
    CHECK(iso_prop5(Oct::basis(1)).verified);
    CHECK(iso_prop5(Oct::basis(4)).verified);
    IsoWitness id = iso_prop5(Oct::one());
    CHECK(id.verified);
    CHECK(id.map == MatQ::identity(8));
}

TEST_CASE("automorphisms of O") {
    CHECK(aut_lemma14(Quat::one()).map == MatQ::identity(8));
    CHECK(aut_lemma14(Quat(ratio(-1, 2), ratio(1, 2), ratio(1, 2), ratio(1, 2))).verified);
    CHECK(aut_lemma14(Quat(1, 2, 0, -1)).verified);  // projective parameter
    CHECK(aut_lemma15(Quat::one()).map == MatQ::identity(8));
    CHECK(aut_lemma15(Quat::i()).verified);
    CHECK(aut_lemma15(sphere_point(VecQ{Rat(1), Rat(2), Rat(3)})).verified);
    CHECK_THROWS_AS(aut_lemma15(Quat(1, 1, 0, 0)), std::domain_error);

    // Conjugation transports twisted doubling specs.
    Quat u = conjugator(Quat::j(), Quat::i());  // u j = i u
    Algebra from = duplication(t_a_sigma(Quat::j()), IsoForm::identity());
    Algebra to = duplication(t_a_sigma(Quat::i()), IsoForm::identity());
    CHECK(verify_isomorphism(from, to, aut_lemma14(u).map));

    const MatQ& inner = oct_e4_to_e1_automorphism();
    Algebra o = named_algebra("O");
    CHECK(verify_isomorphism(o, o, inner));
    CHECK(inner.apply(basis_vec(8, 4)) == basis_vec(8, 1));
}

TEST_CASE("witness chains to the canonical representatives") {
    for (const Quat& a : {Quat::i(), Quat::j(), im_sphere_point(VecQ{Rat(2), ratio(1, 3)})}) {
        WitnessChain ch = iso_chain_cor5_case1(a);
        CHECK(ch.verified);
        CHECK(ch.composite.verified);
    }
    for (const Quat& b : {Quat::one(), Quat::j(), sphere_point(VecQ{Rat(1), ratio(1, 2), Rat(2)})}) {
        WitnessChain ch = iso_chain_cor5_case2(b);
        CHECK(ch.verified);
    }
    CHECK(iso_chain_cor6(Quat::i(), Quat::i()).verified);
    CHECK(iso_chain_cor6(Quat::i(), Quat::j()).verified);
    CHECK(iso_chain_cor6(Quat::j(), Quat::k()).verified);
    CHECK_THROWS_AS(iso_chain_cor5_case1(Quat::one()), std::domain_error);
}

TEST_CASE("principal isotope isomorphism check") {
    CHECK(iso_prop1_check(2, Quat::i(), Quat::one(), 2, Quat::j(), Quat::one(),
                          conjugator(Quat::i(), Quat::j()), 1, 1));
    CHECK(!iso_prop1_check(2, Quat::i(), Quat::one(), 2, Quat::j(), Quat::one(),
                           conjugator(Quat::i(), Quat::j()), -1, 1));
    CHECK(iso_prop1_check(1, -Quat::one(), Quat::one(), 1, Quat::one(), Quat::one(), Quat::one(), -1, 1));
}

TEST_CASE("classification across the roster and the spec kinds") {
    for (const std::string& name : roster_names()) {
        Classification c = classify(named(name));
        CHECK(class_label_str(c.label) == name);
    }

    AlgSpec star_h;
    star_h.kind = "star";
    star_h.base = "H";
    star_h.variant = "left";
    CHECK(classify(star_h).label == ClassLabel::StarH);

    AlgSpec dup;
    dup.kind = "duplication";
    dup.phi = IsoSpec{"T_sigma", Quat::i().to_vec(), Quat::i().conj().to_vec(), false};
    dup.psi = IsoSpec{"T", Quat::i().to_vec(), Quat::i().to_vec(), false};
    Classification c = classify(dup);
    CHECK(c.label == ClassLabel::OTilde_i);
    REQUIRE(c.family.has_value());
    CHECK(c.family->tag == FamilyKind::S5);
    bool verified = false;
    for (const IsoWitness& w : c.witnesses) verified = verified || (w.verified && w.target == "O~(i)");
    CHECK(verified);

    AlgSpec so;
    so.kind = "star_oct_left";
    so.a = Oct::basis(1).to_vec();
    Classification cso = classify(so);
    CHECK(cso.label == ClassLabel::StarO_i1);

    // Hypothesis violations are reported with the failing check.
    AlgSpec bad;
    bad.kind = "isotope";
    bad.family = 1;
    bad.a = Quat::i().to_vec();
    bad.b = Quat::one().to_vec();
    CHECK_THROWS_WITH_AS(classify(bad), "hypotheses violated: quadratic_criterion", std::domain_error);
    AlgSpec no_unit;
    no_unit.kind = "star";
    no_unit.base = "H";
    no_unit.variant = "right";
    CHECK_THROWS_WITH_AS(classify(no_unit), "hypotheses violated: left_unit", std::domain_error);
}

TEST_CASE("errata flags on the new algebras") {
    AlgSpec ot;
    ot.kind = "duplication";
    ot.phi = IsoSpec{"sigma", {}, {}, false};
    ot.psi = IsoSpec{"identity", {}, {}, false};
    Classification c = classify(ot);
    CHECK(c.label == ClassLabel::OTilde);
    REQUIRE(!c.errata_flags.empty());
    CHECK(c.errata_flags[0].find("reference class table") != std::string::npos);
}

TEST_CASE("A_e transports along verified witnesses") {
    IsoWitness w = iso_lemma13(Oct::basis(1));
    REQUIRE(w.verified);
    Algebra src = star_oct_left(Oct::basis(1));
    MatQ twist = MatQ::from_map(8, [](const VecQ& v) {
        Oct a = Oct::basis(1);
        return (a * Oct::from_vec(v).conj() * a.conj()).to_vec();
    });
    Algebra dst = a_phi_O(twist);
    VecQ e = require_left_unit(src);
    Subspace ae = fixed_subspace(src, e);
    std::vector<VecQ> mapped;
    for (const VecQ& v : ae.basis) mapped.push_back(w.map.apply(v));
    CHECK(make_subspace(mapped) == fixed_subspace(dst, w.map.apply(e)));
    CHECK(invariant_fingerprint(src) == invariant_fingerprint(dst));
}
