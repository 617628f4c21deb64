#pragma once

#include <optional>
#include <string>
#include <utility>

#include "avalg/algebra.hpp"

namespace avalg {

struct IdentityWitness {
    std::vector<VecQ> points;
    std::string note;
};

struct IdentityReport {
    std::string id;
    bool holds = false;
    std::string method;  // "exact-polarized" | "sampled"
    std::optional<IdentityWitness> witness;
};

// x^2 e = x^2, checked exactly via symmetrised basis pairs. Throws
// std::domain_error("no left unit").
IdentityReport check_quadratic_criterion(const Algebra& A);

// ((x^2)(x^2))(x^2) - (x^2)((x^2)(x^2)) as a sextic map of x.
VecQ sextic_map(const Algebra& A, const VecQ& x);

// Exact vanishing of the sextic map via full polarization: for every
// multiset of six basis vectors the alternating sum of the map over subset
// sums must be zero (characteristic zero makes this equivalent to the
// quantified identity).
IdentityReport check_sextic_exact(const Algebra& A);

// First and second linearizations of the sextic identity at sampled pairs:
//  f1: (x^2, x^2, s) + (x^2, s, x^2) + (s, x^2, x^2) = 0 with s = xy + yx
//  f2: (x^2, x^2, y^2) + (x^2, s, s) + (x^2, y^2, x^2)
//      + (s, x^2, s) + (s, s, x^2) + (y^2, x^2, x^2) = 0
IdentityReport check_linearizations(const Algebra& A, int samples, std::uint64_t seed);

// The three conditions a duplication pair (phi, psi) must satisfy so that
// squares are fixed by right multiplication with the left unit (1,0); the
// names follow the component of (x,y)^2 each one constrains.
enum class DupCondition { FirstComponentX, FirstComponentY, SecondComponent };

std::string dup_condition_name(DupCondition c);

// FirstComponentX:  phi(phi(x) x) = phi(x) x
// FirstComponentY:  phi(conj(y) psi(y)) = conj(y) psi(y)
// SecondComponent:  psi(psi(y) conj(x) + y phi(x)) = psi(y) conj(x) + y phi(x)
// All are checked exactly on (symmetrised) basis pairs; phi must fix 1.
IdentityReport check_dup_condition(DupCondition c, const IsoForm& phi, const IsoForm& psi);

bool dup_conditions_hold(const IsoForm& phi, const IsoForm& psi);

// Rational point(s) violating the named condition: basis vectors and sums
// first, then seeded random pairs. Empty result after the budget means "no
// witness found", which is reported distinctly from "holds".
std::optional<std::pair<Quat, Quat>> find_witness(DupCondition c, const IsoForm& phi,
                                                  const IsoForm& psi, int budget = 1000,
                                                  std::uint64_t seed = 0);

}  // namespace avalg
