#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>

#include "avalg/rational.hpp"

namespace avalg {

// n = x^2 + y^2 over the integers, when such a representation exists
// (classically: every prime factor congruent to 3 mod 4 occurs to an even
// power). Factors n with trial division plus Pollard rho, so it is intended
// for desk-scale inputs.
std::optional<std::pair<mpz_class, mpz_class>> sum_of_two_squares(const mpz_class& n);

// r = s^2 + t^2 over the rationals.
std::optional<std::pair<Rat, Rat>> sum_of_two_squares_rat(const Rat& r);

}  // namespace avalg
