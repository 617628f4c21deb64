#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace avalg {

// Exact rational scalar. GMP keeps values in lowest terms with a positive
// denominator, which is exactly the representation contract of the library:
// no rounding happens anywhere.
using Rat = mpq_class;

inline Rat ratio(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p" (q > 0 after canonicalization). Throws
// std::invalid_argument on malformed input.
Rat parse_rat(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& r);

bool is_square(const Rat& r);

// Exact square root of a perfect-square rational. Throws std::domain_error
// otherwise.
Rat rat_sqrt(const Rat& r);

// Column vector of rationals.
using VecQ = std::vector<Rat>;

VecQ vadd(const VecQ& a, const VecQ& b);
VecQ vsub(const VecQ& a, const VecQ& b);
VecQ vneg(const VecQ& a);
VecQ vscale(const Rat& s, const VecQ& a);
Rat dot(const VecQ& a, const VecQ& b);
Rat norm2(const VecQ& a);
bool is_zero(const VecQ& a);
VecQ zero_vec(int dim);
VecQ basis_vec(int dim, int i);

// True when u = s*v for some scalar s (v != 0), or both are zero.
bool proportional(const VecQ& u, const VecQ& v);

std::string vec_str(const VecQ& v);

// Deterministic source of small rational sample points. All sampling in the
// library goes through this so that runs are reproducible from the seed.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64();
    long int_in(long lo, long hi);
    Rat small_rat(long max_num = 6, long max_den = 6);
    Rat nonzero_small_rat(long max_num = 6, long max_den = 6);
    VecQ vec(int dim, long max_num = 6, long max_den = 6);
    VecQ nonzero_vec(int dim);

private:
    std::uint64_t state_;
};

}  // namespace avalg
