#include "avalg/sum_of_squares.hpp"

#include <map>
#include <stdexcept>

namespace avalg {
namespace {

void factor_into(mpz_class n, std::map<mpz_class, int>& out);

void pollard_rho(const mpz_class& n, std::map<mpz_class, int>& out) {
    // n is an odd composite with no small factors at this point.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(12345);
    for (;;) {
        mpz_class c = rng.get_z_range(n - 3) + 1;
        mpz_class x = rng.get_z_range(n - 3) + 2, y = x, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d > 1 && d < n) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            ++out[mpz_class(p)];
            n /= static_cast<unsigned long>(p);
        }
    }
    mpz_class d = 17;
    while (d * d <= n && d < 100000) {
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            ++out[d];
            n /= d;
        }
        d += 2;
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        ++out[n];
        return;
    }
    pollard_rho(n, out);
}

// x with x^2 = -1 mod p, for prime p = 1 mod 4.
mpz_class sqrt_minus_one(const mpz_class& p) {
    mpz_class exp = (p - 1) / 4;
    for (mpz_class a = 2; ; ++a) {
        mpz_class x;
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
        if ((x * x) % p == p - 1) return x;
    }
}

// Hermite-Serret descent: prime p = 1 mod 4 as a^2 + b^2.
std::pair<mpz_class, mpz_class> two_squares_prime(const mpz_class& p) {
    if (p == 2) return {1, 1};
    mpz_class a = p, b = sqrt_minus_one(p);
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), p.get_mpz_t());
    while (b > bound) {
        mpz_class r = a % b;
        a = b;
        b = r;
    }
    mpz_class r = a % b;
    return {b, r};
}

std::pair<mpz_class, mpz_class> gauss_mul(const std::pair<mpz_class, mpz_class>& u,
                                          const std::pair<mpz_class, mpz_class>& v) {
    return {u.first * v.first - u.second * v.second, u.first * v.second + u.second * v.first};
}

}  // namespace

std::optional<std::pair<mpz_class, mpz_class>> sum_of_two_squares(const mpz_class& n) {
    if (n < 0) return std::nullopt;
    if (n == 0) return std::make_pair(mpz_class(0), mpz_class(0));
    std::map<mpz_class, int> fac;
    factor_into(n, fac);
    std::pair<mpz_class, mpz_class> acc{1, 0};
    mpz_class square_part = 1;
    for (const auto& [p, e] : fac) {
        if (p % 4 == 3) {
            if (e % 2) return std::nullopt;
            for (int k = 0; k < e / 2; ++k) square_part *= p;
            continue;
        }
        auto rep = two_squares_prime(p);
        for (int k = 0; k < e; ++k) acc = gauss_mul(acc, rep);
    }
    acc.first = abs(acc.first) * square_part;
    acc.second = abs(acc.second) * square_part;
    return acc;
}

std::optional<std::pair<Rat, Rat>> sum_of_two_squares_rat(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    // p/q = pq / q^2.
    mpz_class m = r.get_num() * r.get_den();
    auto rep = sum_of_two_squares(m);
    if (!rep) return std::nullopt;
    Rat den(r.get_den());
    return std::make_pair(Rat(rep->first) / den, Rat(rep->second) / den);
}

}  // namespace avalg
