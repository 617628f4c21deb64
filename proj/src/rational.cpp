#include "avalg/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace avalg {

Rat parse_rat(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::string s(text);
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw std::invalid_argument("malformed rational literal: " + s);
    }
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator in rational literal: " + s);
    v.canonicalize();
    return v;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

bool is_square(const Rat& r) {
    if (sgn(r) < 0) return false;
    return mpz_perfect_square_p(r.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(r.get_den().get_mpz_t());
}

Rat rat_sqrt(const Rat& r) {
    if (!is_square(r)) throw std::domain_error("rational is not a perfect square: " + rat_str(r));
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
    return Rat(n) / Rat(d);
}

VecQ vadd(const VecQ& a, const VecQ& b) {
    VecQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

VecQ vsub(const VecQ& a, const VecQ& b) {
    VecQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

VecQ vneg(const VecQ& a) {
    VecQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

VecQ vscale(const Rat& s, const VecQ& a) {
    VecQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Rat dot(const VecQ& a, const VecQ& b) {
    Rat r = 0;
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

Rat norm2(const VecQ& a) { return dot(a, a); }

bool is_zero(const VecQ& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

VecQ zero_vec(int dim) { return VecQ(static_cast<size_t>(dim), Rat(0)); }

VecQ basis_vec(int dim, int i) {
    VecQ v = zero_vec(dim);
    v[static_cast<size_t>(i)] = 1;
    return v;
}

bool proportional(const VecQ& u, const VecQ& v) {
    if (u.size() != v.size()) return false;
    if (is_zero(v)) return is_zero(u);
    size_t k = 0;
    while (v[k] == 0) {
        if (u[k] != 0) return false;
        ++k;
    }
    Rat s = u[k] / v[k];
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] != s * v[i]) return false;
    return true;
}

std::string vec_str(const VecQ& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(v[i]);
    }
    s += "]";
    return s;
}

std::uint64_t Sampler::next_u64() {
    // splitmix64: compact and identical on every platform.
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Sampler::int_in(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next_u64() % span);
}

Rat Sampler::small_rat(long max_num, long max_den) {
    long num = int_in(-max_num, max_num);
    long den = int_in(1, max_den);
    return ratio(num, den);
}

Rat Sampler::nonzero_small_rat(long max_num, long max_den) {
    for (;;) {
        Rat r = small_rat(max_num, max_den);
        if (r != 0) return r;
    }
}

VecQ Sampler::vec(int dim, long max_num, long max_den) {
    VecQ v(static_cast<size_t>(dim));
    for (auto& x : v) x = small_rat(max_num, max_den);
    return v;
}

VecQ Sampler::nonzero_vec(int dim) {
    for (;;) {
        VecQ v = vec(dim);
        if (!is_zero(v)) return v;
    }
}

}  // namespace avalg
