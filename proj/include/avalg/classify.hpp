#pragma once

#include "avalg/identities.hpp"

namespace avalg {

enum class ClassLabel { R, C, StarC, H, StarH, StarH_i1, O, StarO, StarO_i1, OTilde, OTilde_i };

std::string class_label_str(ClassLabel label);

enum class FamilyKind { S1, S2, S3, S4, S5 };

std::string family_str(FamilyKind kind);

// Family of a duplication pair (phi, psi), with recovered projective
// parameters:
//   S1 = {(I, I)}
//   S2 = {I} x {-T_{a,a} sigma : a unit}
//   S3 = {sigma} x {I, -I}
//   S4 = {T_{a,abar} sigma : a imaginary unit} x {I}
//   S5 = {(T_{a,abar} sigma, T_{b,a}) : a, b imaginary units}
struct FamilyTag {
    FamilyKind tag;
    std::optional<Quat> a;  // projective; imaginary for S4/S5, free for S2
    std::optional<Quat> b;  // S5 second parameter, projective
    int psi_sign = 1;       // S3: psi = +I or -I
};

// Exact membership by matrix predicates. phi must fix 1 (throws otherwise).
// Succeeds whenever the three duplication conditions hold.
std::optional<FamilyTag> match_family(const IsoForm& phi, const IsoForm& psi);

ClassLabel family_to_class(const FamilyTag& tag);

struct Fingerprint {
    int dim = 0;
    int dim_fixed = 0;   // dim A_e = dim ker(R_e - I)
    int dim_neg = 0;     // dim ker(R_e + I)
    int degree = 0;      // sampled degree
    bool operator==(const Fingerprint&) const = default;
};

Fingerprint invariant_fingerprint(const Algebra& A, int samples = 20, std::uint64_t seed = 1);

struct IsoWitness {
    std::string source, target;
    MatQ map;
    bool verified = false;
    std::string note;
};

// m orthogonal and multiplicative on all basis pairs.
bool verify_isomorphism(const Algebra& A, const Algebra& B, const MatQ& m);

// x -> conj(a) x from *O_l(a,1) to the twisted algebra O_{T_{a,abar} sigma};
// needs a^2 = ±1 (throws std::domain_error("parameter square not +-1")).
IsoWitness iso_lemma13(const Oct& a);

// x -> a x conj(a) from *O_l(a,1) to *O_r(a,1); needs a^2 = ±1.
IsoWitness iso_prop5(const Oct& a);

// (x,y) -> (u x conj(u), u y conj(u)) / |u|^2: automorphism of O for any
// nonzero rational u (projective parameter).
IsoWitness aut_lemma14(const Quat& u);

// (x,y) -> (x, a y): automorphism of O for unit a.
IsoWitness aut_lemma15(const Quat& a);

// Fixed verified automorphism of O with e4 -> e1: the inner automorphism
// z -> p z p^{-1}, p = (1 + e1 + e4 + e5)/2 (p^3 = -1), applied twice.
const MatQ& oct_e4_to_e1_automorphism();

struct WitnessChain {
    std::vector<IsoWitness> legs;
    IsoWitness composite;
    bool verified = false;
};

// dup(T_{a,abar} sigma, I) -> *O(i,1) for an imaginary unit a.
WitnessChain iso_chain_cor5_case1(const Quat& a);
// dup(I, -T_{b,b} sigma) -> *O(i,1) for a unit b.
WitnessChain iso_chain_cor5_case2(const Quat& b);
// dup(T_{a,abar} sigma, T_{b,a}) -> O~(i) for imaginary units a, b.
WitnessChain iso_chain_cor6(const Quat& a, const Quat& b);

// Checks a' p = eps p a and b' p = delta p b exactly and, when they hold and
// the isotope families agree, verifies the induced map +-(p x conj(p))/|p|^2
// as an isomorphism H_m(a,b) -> H_m(a',b').
bool iso_prop1_check(int family, const Quat& a, const Quat& b, int family2, const Quat& a2,
                     const Quat& b2, const Quat& p, int eps, int delta);

struct Classification {
    ClassLabel label;
    std::optional<FamilyTag> family;
    Fingerprint fingerprint;
    std::vector<IsoWitness> witnesses;
    std::vector<std::string> errata_flags;
};

// Labels a spec among the eleven classes. Throws std::domain_error
// ("hypotheses violated: ...") when the spec is not an absolute-valued
// algebra with left unit satisfying the quadratic criterion.
Classification classify(const AlgSpec& spec, int samples = 20, std::uint64_t seed = 1);

// The duplication pair defining the spec, when the description provides one
// (duplication specs, the named algebras O, *O, O~, O~(i), and octonion
// twists that split slot-wise).
std::optional<std::pair<IsoForm, IsoForm>> dup_pair_for_spec(const AlgSpec& spec);

}  // namespace avalg
