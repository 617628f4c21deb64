#include <doctest.h>

#include "avalg/algebra.hpp"
#include "avalg/json_io.hpp"

using namespace avalg;

TEST_CASE("the named octonions agree with doubling of H") {
    // Two routes to the same structure constants.
    Algebra by_dup = named_algebra("O");
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            CHECK(by_dup.basis_product(i, j) == (Oct::basis(i) * Oct::basis(j)).to_vec());
}

TEST_CASE("star products and left units") {
    Algebra star_o = named_algebra("*O");
    VecQ one = basis_vec(8, 0);
    // 1 (.) x = x and x (.) 1 = conj(x).
    CHECK(star_o.product(one, basis_vec(8, 3)) == basis_vec(8, 3));
    CHECK(star_o.product(basis_vec(8, 1), one) == vneg(basis_vec(8, 1)));

    auto e = left_unit(star_o);
    REQUIRE(e.has_value());
    CHECK(*e == one);

    // H(a,1) has left unit conj(a).
    Quat a = sphere_point(VecQ{Rat(1), Rat(2), ratio(1, 3)});
    Algebra ha1 = isotope_H(1, a, Quat::one());
    auto ea = left_unit(ha1);
    REQUIRE(ea.has_value());
    CHECK(*ea == a.conj().to_vec());
    Sampler s(3);
    for (int t = 0; t < 5; ++t)
        CHECK(ha1.product(*ea, s.vec(4)) == ha1.product(*ea, s.vec(4)));  // pure function
    CHECK(ha1.product(*ea, basis_vec(4, 2)) == basis_vec(4, 2));

    // *O_l(a,1) has left unit a; O* has no left unit at all.
    Oct oa = Oct::basis(1);
    auto el = left_unit(star_oct_left(oa));
    REQUIRE(el.has_value());
    CHECK(*el == oa.to_vec());
    CHECK(!left_unit(octonion_algebra(StarVariant::Right)).has_value());
}

TEST_CASE("absolute-valuedness is checked exactly") {
    CHECK(is_absolute_valued(named_algebra("O")).ok);
    Sampler s(4);
    for (int family = 1; family <= 4; ++family) {
        Quat a = sphere_point(s.vec(3)), b = sphere_point(s.vec(3));
        CHECK(is_absolute_valued(isotope_H(family, a, b)).ok);
    }
    // Perturbing one structure constant of H breaks the polarized identities.
    Algebra h = named_algebra("H");
    std::vector<VecQ> constants;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) constants.push_back(h.basis_product(i, j));
    constants[5][0] += 1;
    AvaResult bad = is_absolute_valued(Algebra(4, constants, "H-perturbed"));
    CHECK(!bad.ok);
    CHECK(bad.witness.has_value());
}

TEST_CASE("fixed subspaces") {
    Algebra star_o = named_algebra("*O");
    Subspace ae = fixed_subspace(star_o, basis_vec(8, 0));
    CHECK(ae.dim() == 1);
    CHECK(ae.contains(basis_vec(8, 0)));

    Algebra so_i1 = named_algebra("*O(i,1)");
    Subspace ae2 = fixed_subspace(so_i1, basis_vec(8, 1));
    CHECK(ae2.dim() == 7);
    for (int k = 1; k < 8; ++k) CHECK(ae2.contains(basis_vec(8, k)));
    CHECK(!ae2.contains(basis_vec(8, 0)));

    // O~(i): independently via the kernels of (phi - I) and (psi - I).
    IsoForm phi = IsoForm::tab(Quat::i(), Quat::i().conj()).then_sigma();
    IsoForm psi = IsoForm::tab(Quat::i(), Quat::i());
    Algebra oti = duplication(phi, psi);
    Subspace ae3 = fixed_subspace(oti, basis_vec(8, 0));
    std::vector<VecQ> expected;
    for (const VecQ& v : kernel_basis(phi.matrix() - MatQ::identity(4))) {
        VecQ big = zero_vec(8);
        for (int t = 0; t < 4; ++t) big[static_cast<size_t>(t)] = v[static_cast<size_t>(t)];
        expected.push_back(big);
    }
    for (const VecQ& v : kernel_basis(psi.matrix() - MatQ::identity(4))) {
        VecQ big = zero_vec(8);
        for (int t = 0; t < 4; ++t) big[static_cast<size_t>(4 + t)] = v[static_cast<size_t>(t)];
        expected.push_back(big);
    }
    CHECK(make_subspace(expected) == ae3);
    CHECK(ae3.dim() == 5);

    CHECK_THROWS_AS(fixed_subspace(star_o, basis_vec(8, 1)), std::domain_error);
}

TEST_CASE("single-generated subalgebras and degree") {
    Algebra star_o = named_algebra("*O");
    Sampler s(5);
    for (int t = 0; t < 10; ++t) {
        VecQ x = s.nonzero_vec(8);
        Subspace gen = single_generated(star_o, x);
        CHECK(gen.dim() <= 2);
        // product-closure: re-closing changes nothing
        bool closed = true;
        for (const VecQ& u : gen.basis)
            for (const VecQ& v : gen.basis)
                if (!gen.contains(star_o.product(u, v))) closed = false;
        CHECK(closed);
        CHECK(gen.contains(x));
    }
    Algebra shi = named_algebra("*H(i,1)");
    CHECK(single_generated(shi, VecQ{Rat(1), Rat(2), ratio(1, 2), Rat(-1)}).dim() == 4);
    // The left unit generates the line through itself when idempotent.
    VecQ e = require_left_unit(shi);
    CHECK(shi.product(e, e) == e);
    CHECK(single_generated(shi, e).dim() == 1);

    CHECK(degree_sampled(named_algebra("O"), 20, 1) == 2);
    CHECK(degree_sampled(named_algebra("O~(i)"), 20, 1) == 4);
    CHECK(degree_sampled(named_algebra("R"), 20, 1) == 1);
}

TEST_CASE("multiplication table on {e, x, xe, x^2}") {
    for (const char* name : {"*O(i,1)", "O~", "O~(i)", "*H(i,1)"}) {
        Algebra A = named_algebra(name);
        VecQ e = require_left_unit(A);
        Sampler s(6);
        for (int t = 0; t < 10; ++t) {
            VecQ x = s.vec(A.dim());
            x = vsub(x, vscale(dot(e, x), e));
            if (is_zero(x)) continue;
            MultiplicationTable table = multiplication_table(A, x);
            CHECK(table.all_ok);
            CHECK(table.cells.size() == 16);
        }
    }
    // H(i,1) violates the criterion at x = 1 + j (orthogonal to its left
    // unit -i), so the table must refuse.
    Algebra hi1 = isotope_H(1, Quat::i(), Quat::one());
    VecQ x = vadd(basis_vec(4, 0), basis_vec(4, 2));
    CHECK_THROWS_AS(multiplication_table(hi1, x), std::domain_error);
    CHECK_THROWS_AS(multiplication_table(named_algebra("O"), basis_vec(8, 0)), std::invalid_argument);
}

TEST_CASE("left-unit inner product identities") {
    CheckReport r1 = rodriguez_checks(named_algebra("O"), 20, 1);
    CHECK(r1.all_ok());
    CheckReport r2 = rodriguez_checks(named_algebra("*O(i,1)"), 20, 1);
    CHECK(r2.all_ok());
    // Right-unit-only algebras are rejected.
    CHECK_THROWS_AS(rodriguez_checks(quaternion_algebra(StarVariant::Right), 5, 1), std::domain_error);
}

TEST_CASE("spec parsing and validation") {
    Json j = Json::parse(R"({"kind":"star","base":"H","variant":"left"})");
    Algebra a = from_spec(alg_spec_from_json(j));
    CHECK(a.dim() == 4);
    CHECK(a.basis_product(1, 1) == basis_vec(4, 0));  // conj(i) i = 1

    Json dup = Json::parse(R"({"kind":"duplication","phi":{"form":"sigma"},"psi":{"form":"identity"}})");
    Algebra otilde = from_spec(alg_spec_from_json(dup));
    CHECK(fixed_subspace(otilde, require_left_unit(otilde)).dim() == 5);

    // phi must fix 1 for duplication and twisted products.
    Json bad = Json::parse(R"({"kind":"duplication","phi":{"form":"neg_identity"},"psi":{"form":"identity"}})");
    CHECK_THROWS_AS(from_spec(alg_spec_from_json(bad)), std::invalid_argument);
    Json bad2 = Json::parse(R"({"kind":"isotope","family":2,"a":["1","1","0","0"],"b":["1","0","0","0"]})");
    CHECK_THROWS_AS(from_spec(alg_spec_from_json(bad2)), std::invalid_argument);
    Json bad3 = Json::parse(R"({"kind":"star_oct_left","a":["2","0","0","0","0","0","0","0"]})");
    CHECK_THROWS_AS(from_spec(alg_spec_from_json(bad3)), std::invalid_argument);

    // Round trip through JSON keeps the spec.
    AlgSpec spec = alg_spec_from_json(dup);
    CHECK(alg_spec_to_json(spec) == dup);
}
