#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "avalg/isometry.hpp"
#include "avalg/octonion.hpp"

namespace avalg {

// Finite-dimensional algebra over Q: exact structure constants for an
// orthonormal basis e_0..e_{dim-1}. The norm is the Euclidean norm of
// coordinates; every check below is exact.
class Algebra {
public:
    Algebra(int dim, std::vector<VecQ> constants, std::string label);
    static Algebra from_product(int dim, const std::function<VecQ(const VecQ&, const VecQ&)>& prod,
                                std::string label);

    int dim() const { return dim_; }
    const std::string& label() const { return label_; }
    const VecQ& basis_product(int i, int j) const { return constants_[static_cast<size_t>(i) * dim_ + j]; }

    VecQ product(const VecQ& x, const VecQ& y) const;
    VecQ square(const VecQ& x) const { return product(x, x); }
    VecQ associator(const VecQ& x, const VecQ& y, const VecQ& z) const;
    MatQ left_mult(const VecQ& a) const;   // L_a
    MatQ right_mult(const VecQ& a) const;  // R_a

private:
    int dim_;
    std::vector<VecQ> constants_;
    std::string label_;
};

// ---- constructors ----

enum class StarVariant { Left, Right, Both };  // conj(x)y, x conj(y), conj(x)conj(y)

Algebra real_algebra();
Algebra complex_algebra(std::optional<StarVariant> star = std::nullopt);
Algebra quaternion_algebra(std::optional<StarVariant> star = std::nullopt);
Algebra octonion_algebra(std::optional<StarVariant> star = std::nullopt);

// Principal isotopes of H for unit a, b:
//   family 1: a x y b      family 2: conj(x) a y b
//   family 3: a x b conj(y)  family 4: a conj(x) conj(y) b
Algebra isotope_H(int family, const Quat& a, const Quat& b);

// Twisted left-multiplication algebras x (.) y = phi(x) y; phi must fix 1.
Algebra a_phi_H(const IsoForm& phi);
Algebra a_phi_O(const MatQ& phi8);

// One-sided octonion isotopes with left unit a (unit norm):
// (conj(x) a) y and conj(x) (a y).
Algebra star_oct_left(const Oct& a);
Algebra star_oct_right(const Oct& a);

// Twisted Cayley-Dickson doubling on H x H:
//   (x, y) (*) (u, v) = (phi(x), psi(y)) . (u, v)
// phi must fix 1; the left unit is then (1, 0).
Algebra duplication(const IsoForm& phi, const IsoForm& psi);

// Roster by name: R, C, *C, H, *H, *H(i,1), O, *O, *O(i,1), O~, O~(i)
// (ASCII aliases starC, starH_i1, Otilde_i, ... also accepted).
Algebra named_algebra(const std::string& name);
const std::vector<std::string>& roster_names();

// ---- JSON-facing algebra description ----
struct AlgSpec {
    std::string kind;  // named|star|isotope|A_phi|star_oct_left|star_oct_right|duplication|structure
    std::string name;              // named
    std::string base;              // star / A_phi: C|H|O (A_phi also R)
    std::string variant;           // star: left|right|both
    int family = 0;                // isotope: 1..4
    std::optional<VecQ> a, b;      // isotope (4 coords), star_oct (8 coords)
    std::optional<IsoSpec> phi, psi;  // A_phi, duplication
    int dim = 0;                   // structure
    std::vector<VecQ> constants;   // structure, row-major dim*dim entries
};

Algebra from_spec(const AlgSpec& spec);

// ---- operations ----

struct AvaResult {
    bool ok = false;
    // Violating quadruple (i, j, k, l); mirrored marks the right-sided family.
    std::optional<std::array<int, 4>> witness;
    bool mirrored = false;
};

// Exact absolute-valuedness: both polarized families
//   <e_i e_j | e_k e_l> + <e_k e_j | e_i e_l> = 2 d_ik d_jl
// and the mirrored version on all basis quadruples.
AvaResult is_absolute_valued(const Algebra& A);

// The unique e with L_e = I, when it exists.
std::optional<VecQ> left_unit(const Algebra& A);

// A_e = ker(R_e - I). Requires e to be the left unit.
Subspace fixed_subspace(const Algebra& A, const VecQ& e);

// Smallest product-closed subspace containing x.
Subspace single_generated(const Algebra& A, const VecQ& x);

// Max over sampled generators of dim(single_generated); a certified lower
// bound for the degree, exact for the algebras in scope once capped by the
// degree <= 4 theorem.
int degree_sampled(const Algebra& A, int samples, std::uint64_t seed);

struct TableCell {
    int row, col;  // indices into the ordered set {e, x, xe, x^2}
    VecQ computed, expected;
    bool ok;
};

struct MultiplicationTable {
    std::vector<TableCell> cells;
    bool all_ok = true;
};

// All sixteen products on {e, x, xe, x^2} for x orthogonal to e, checked
// against the closed forms (homogenised, so x need not be unit norm):
//  n = |x|^2, t = <e|x^2>,
//  x(xe) = -n e, x x^2 = -n x, (xe)e = x, (xe)x = -n e,
//  (xe)^2 = 2t e - x^2, (xe)x^2 = 2t x + n xe, x^2 e = x^2,
//  x^2 x = -n xe, x^2(xe) = n x + 2t xe, (x^2)^2 = -n^2 e + 2t x^2.
// Throws std::domain_error("criterion fails") when x^2 e != x^2.
MultiplicationTable multiplication_table(const Algebra& A, const VecQ& x);

struct CheckItem {
    std::string id;
    bool holds = false;
    std::string detail;  // witness description when holds is false
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool all_ok() const;
    const CheckItem* first_failure() const;
};

// The two left-unit inner-product identities, exactly on basis tuples:
//   <x y | z> = <y | x* z>   and   x*(x y) = |x|^2 y  with x* = 2<e|x>e - x,
// plus their sampled consequences (3.2)-(3.8).
CheckReport rodriguez_checks(const Algebra& A, int samples, std::uint64_t seed);

// Left unit of an algebra that is required to have one.
VecQ require_left_unit(const Algebra& A);

}  // namespace avalg
