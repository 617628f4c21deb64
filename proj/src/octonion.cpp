#include "avalg/octonion.hpp"

#include <stdexcept>

namespace avalg {

Oct Oct::basis(int idx) {
    VecQ v = basis_vec(8, idx);
    return from_vec(v);
}

Oct Oct::from_vec(const VecQ& v) {
    if (v.size() != 8) throw std::invalid_argument("octonion needs 8 coordinates");
    return Oct(Quat(v[0], v[1], v[2], v[3]), Quat(v[4], v[5], v[6], v[7]));
}

Oct Oct::operator*(const Oct& o) const {
    return Oct(a_ * o.a_ - o.b_.conj() * b_, b_ * o.a_.conj() + o.b_ * a_);
}

VecQ Oct::to_vec() const {
    return {a_[0], a_[1], a_[2], a_[3], b_[0], b_[1], b_[2], b_[3]};
}

Oct oct_associator(const Oct& x, const Oct& y, const Oct& z) {
    return (x * y) * z - x * (y * z);
}

MatQ oct_left_mult_matrix(const Oct& a) {
    return MatQ::from_map(8, [&](const VecQ& v) { return (a * Oct::from_vec(v)).to_vec(); });
}

MatQ oct_right_mult_matrix(const Oct& a) {
    return MatQ::from_map(8, [&](const VecQ& v) { return (Oct::from_vec(v) * a).to_vec(); });
}

}  // namespace avalg
