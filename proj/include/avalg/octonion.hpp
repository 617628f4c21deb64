#pragma once

#include <string>

#include "avalg/quaternion.hpp"

namespace avalg {

// Octonion as a pair of quaternions under the Cayley-Dickson product
//   (x, y) * (u, v) = (x u - conj(v) y,  y conj(u) + v x).
// Basis e0..e7 = (1,0),(i,0),(j,0),(k,0),(0,1),(0,i),(0,j),(0,k).
class Oct {
public:
    Oct() = default;
    Oct(Quat a, Quat b) : a_(std::move(a)), b_(std::move(b)) {}

    static Oct one() { return Oct(Quat::one(), Quat()); }
    static Oct basis(int idx);
    static Oct from_vec(const VecQ& v);

    const Quat& first() const { return a_; }
    const Quat& second() const { return b_; }

    Oct operator+(const Oct& o) const { return Oct(a_ + o.a_, b_ + o.b_); }
    Oct operator-(const Oct& o) const { return Oct(a_ - o.a_, b_ - o.b_); }
    Oct operator-() const { return Oct(-a_, -b_); }
    Oct operator*(const Oct& o) const;
    bool operator==(const Oct& o) const = default;

    Oct conj() const { return Oct(a_.conj(), -b_); }
    Oct scaled(const Rat& s) const { return Oct(a_.scaled(s), b_.scaled(s)); }
    Rat re() const { return a_.re(); }
    Rat norm2() const { return a_.norm2() + b_.norm2(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_imaginary() const { return a_.re() == 0; }

    VecQ to_vec() const;
    std::string str() const { return vec_str(to_vec()); }

private:
    Quat a_, b_;
};

inline Oct cd_product(const Oct& a, const Oct& b) { return a * b; }

// (xy)z - x(yz) for octonion arguments.
Oct oct_associator(const Oct& x, const Oct& y, const Oct& z);

MatQ oct_left_mult_matrix(const Oct& a);
MatQ oct_right_mult_matrix(const Oct& a);

}  // namespace avalg
