#include "avalg/quaternion.hpp"

#include <stdexcept>

#include "avalg/sum_of_squares.hpp"

namespace avalg {

Quat Quat::basis(int idx) {
    Quat q;
    q[idx] = 1;
    return q;
}

Quat Quat::from_vec(const VecQ& v) {
    if (v.size() != 4) throw std::invalid_argument("quaternion needs 4 coordinates");
    return Quat(v[0], v[1], v[2], v[3]);
}

Quat Quat::operator+(const Quat& o) const {
    return Quat(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]);
}

Quat Quat::operator-(const Quat& o) const {
    return Quat(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]);
}

Quat Quat::operator-() const { return Quat(-c_[0], -c_[1], -c_[2], -c_[3]); }

Quat Quat::operator*(const Quat& o) const {
    const std::array<Rat, 4>& a = c_;
    const std::array<Rat, 4>& b = o.c_;
    return Quat(a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
                a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
                a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
                a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]);
}

Quat Quat::scaled(const Rat& s) const { return Quat(s * c_[0], s * c_[1], s * c_[2], s * c_[3]); }

Rat Quat::norm2() const { return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3]; }

bool Quat::is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

Quat Quat::inverse() const {
    Rat n = norm2();
    if (n == 0) throw std::domain_error("inverse of zero quaternion");
    return conj().scaled(1 / n);
}

Rat quat_dot(const Quat& p, const Quat& q) {
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2] + p[3] * q[3];
}

Quat commutator(const Quat& p, const Quat& q) { return p * q - q * p; }

MatQ left_mult_matrix(const Quat& a) {
    return MatQ::from_map(4, [&](const VecQ& v) { return (a * Quat::from_vec(v)).to_vec(); });
}

MatQ right_mult_matrix(const Quat& a) {
    return MatQ::from_map(4, [&](const VecQ& v) { return (Quat::from_vec(v) * a).to_vec(); });
}

Quat sphere_point(const VecQ& v3) {
    if (v3.size() != 3) throw std::invalid_argument("sphere_point needs 3 coordinates");
    Rat n2 = norm2(v3);
    Rat d = 1 + n2;
    return Quat((1 - n2) / d, 2 * v3[0] / d, 2 * v3[1] / d, 2 * v3[2] / d);
}

Quat im_sphere_point(const VecQ& u2) {
    if (u2.size() != 2) throw std::invalid_argument("im_sphere_point needs 2 coordinates");
    Rat n2 = norm2(u2);
    Rat d = 1 + n2;
    return Quat(0, (1 - n2) / d, 2 * u2[0] / d, 2 * u2[1] / d);
}

Quat conjugator(const Quat& a, const Quat& b) {
    if (a.re() != b.re() || a.norm2() != b.norm2())
        throw std::domain_error("not conjugate");
    // u a = b u  <=>  (R_a - L_b) u = 0.
    MatQ m = right_mult_matrix(a) - left_mult_matrix(b);
    std::vector<VecQ> ker = kernel_basis(m);
    if (ker.empty()) throw std::domain_error("not conjugate");
    return Quat::from_vec(ker[0]);
}

namespace {

// Unit solution of v p conj(v) = q from the plane spanned by {v0, v0 p},
// v0 = 1 - q p. Exists iff 1/|v0|^2 is a sum of two rational squares.
std::optional<Quat> direct_unit_conjugator(const Quat& p, const Quat& q) {
    if (q == p) return Quat::one();
    Quat v0 = Quat::one() - q * p;
    if (v0.is_zero()) return std::nullopt;  // q == -p
    auto st = sum_of_two_squares_rat(1 / v0.norm2());
    if (!st) return std::nullopt;
    Quat v = v0.scaled(st->first) + (v0 * p).scaled(st->second);
    if (v.is_zero()) return std::nullopt;
    return v;
}

}  // namespace

std::optional<Quat> unit_conjugator(const Quat& p, const Quat& q) {
    if (!p.is_imaginary() || p.norm2() != 1 || !q.is_imaginary() || q.norm2() != 1)
        throw std::invalid_argument("unit_conjugator expects imaginary unit quaternions");
    auto check = [&](const Quat& v) {
        return v.norm2() == 1 && v * p == q * v;
    };
    if (q == -p) {
        // v = z j conj(z) for any unit z with z i conj(z) = p.
        std::optional<Quat> z =
            p == Quat::i() || p == -Quat::i() ? std::optional<Quat>(Quat::one())
                                              : direct_unit_conjugator(Quat::i(), p);
        if (!z) return std::nullopt;
        Quat v = *z * Quat::j() * z->conj();
        if (check(v)) return v;
        return std::nullopt;
    }
    if (auto v = direct_unit_conjugator(p, q); v && check(*v)) return v;
    return std::nullopt;
}

}  // namespace avalg
