#pragma once

#include <array>
#include <string>

#include "avalg/linalg.hpp"
#include "avalg/rational.hpp"

namespace avalg {

// Quaternion over the rationals, basis (1, i, j, k) with
// i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
class Quat {
public:
    Quat() : c_{Rat(0), Rat(0), Rat(0), Rat(0)} {}
    Quat(Rat a, Rat b, Rat c, Rat d) : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static Quat one() { return Quat(1, 0, 0, 0); }
    static Quat i() { return Quat(0, 1, 0, 0); }
    static Quat j() { return Quat(0, 0, 1, 0); }
    static Quat k() { return Quat(0, 0, 0, 1); }
    static Quat basis(int idx);
    static Quat from_vec(const VecQ& v);

    const Rat& operator[](int idx) const { return c_[static_cast<size_t>(idx)]; }
    Rat& operator[](int idx) { return c_[static_cast<size_t>(idx)]; }

    Quat operator+(const Quat& o) const;
    Quat operator-(const Quat& o) const;
    Quat operator-() const;
    Quat operator*(const Quat& o) const;
    bool operator==(const Quat& o) const = default;

    Quat conj() const { return Quat(c_[0], -c_[1], -c_[2], -c_[3]); }
    Quat scaled(const Rat& s) const;
    Rat re() const { return c_[0]; }
    Rat norm2() const;
    Rat trace() const { return 2 * c_[0]; }
    bool is_zero() const;
    bool is_real() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_imaginary() const { return c_[0] == 0; }
    // q * conj(q) / |q|^2 inverse for nonzero q.
    Quat inverse() const;

    VecQ to_vec() const { return {c_[0], c_[1], c_[2], c_[3]}; }
    std::string str() const { return vec_str(to_vec()); }

private:
    std::array<Rat, 4> c_;
};

inline Quat quat_mul(const Quat& p, const Quat& q) { return p * q; }
Rat quat_dot(const Quat& p, const Quat& q);
Quat commutator(const Quat& p, const Quat& q);

// Matrices of left/right multiplication in the standard basis.
MatQ left_mult_matrix(const Quat& a);
MatQ right_mult_matrix(const Quat& a);

// Rational point of S(H) by stereographic projection from -1:
// v in Q^3 -> ((1-|v|^2) + 2 v1 i + 2 v2 j + 2 v3 k) / (1+|v|^2). Exact norm 1.
Quat sphere_point(const VecQ& v3);

// Rational point of S(Im H), pole i, parametrised over the (j,k) chart.
Quat im_sphere_point(const VecQ& u2);

// Nonzero u with u a = b u, projective (not normalised). Requires
// Re(a) = Re(b) and |a|^2 = |b|^2; throws std::domain_error("not conjugate")
// when only the zero solution exists.
Quat conjugator(const Quat& a, const Quat& b);

// Unit v with v p conj(v) = q for imaginary rational units p, q. Solutions
// live on the plane (1 - qp) Q(p), whose norms are 2(1 + <q|p>) times sums of
// two squares, so a rational unit exists iff 2(1 + <q|p>) is a rational sum
// of two squares; that class is invariant under unit rotations of either
// argument, which makes the test sharp. The antipodal case q = -p goes
// through v = z j conj(z) for z rotating i onto p. Empty result means no
// rational unit conjugator exists along these constructions.
std::optional<Quat> unit_conjugator(const Quat& p, const Quat& q);

}  // namespace avalg
