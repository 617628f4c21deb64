#include "avalg/isometry.hpp"

#include <stdexcept>

namespace avalg {

IsoForm IsoForm::identity() { return IsoForm(MatQ::identity(4), "I"); }

IsoForm IsoForm::sigma() {
    MatQ m = MatQ::identity(4);
    m.at(1, 1) = -1;
    m.at(2, 2) = -1;
    m.at(3, 3) = -1;
    return IsoForm(std::move(m), "sigma");
}

IsoForm IsoForm::tab(const Quat& a, const Quat& b) {
    if (a.norm2() != 1 || b.norm2() != 1) throw std::domain_error("non-unit parameter");
    return IsoForm(left_mult_matrix(a) * right_mult_matrix(b),
                   "T(" + a.str() + "," + b.str() + ")");
}

IsoForm IsoForm::tab_scaled(const Quat& a, const Quat& b) {
    Rat n = a.norm2() * b.norm2();
    if (n == 0) throw std::domain_error("zero parameter");
    if (!is_square(n)) throw std::domain_error("parameter norms admit no rational scale");
    Rat s = rat_sqrt(n);
    MatQ m = (left_mult_matrix(a) * right_mult_matrix(b)).scaled(1 / s);
    return IsoForm(std::move(m), "T~(" + a.str() + "," + b.str() + ")");
}

IsoForm IsoForm::from_matrix(MatQ m, std::string tag) {
    if (!m.is_orthogonal()) throw std::domain_error("matrix is not orthogonal");
    return IsoForm(std::move(m), std::move(tag));
}

IsoForm IsoForm::compose(const IsoForm& inner) const {
    return IsoForm(m_ * inner.m_, tag_ + "*" + inner.tag_);
}

IsoForm IsoForm::negated() const { return IsoForm(m_.scaled(-1), "-" + tag_); }

IsoForm IsoForm::then_sigma() const { return compose(sigma()); }

IsometryClass classify_isometry(const IsoForm& f) {
    return IsometryClass{f.proper(), f.involutive(), f.fixes_one()};
}

IsoForm realize(const IsoSpec& spec) {
    IsoForm f = IsoForm::identity();
    if (spec.form == "identity") {
        f = IsoForm::identity();
    } else if (spec.form == "neg_identity") {
        f = IsoForm::identity().negated();
    } else if (spec.form == "sigma") {
        f = IsoForm::sigma();
    } else if (spec.form == "T" || spec.form == "T_sigma") {
        if (!spec.a || !spec.b) throw std::invalid_argument("form " + spec.form + " needs a and b");
        f = IsoForm::tab(Quat::from_vec(*spec.a), Quat::from_vec(*spec.b));
        if (spec.form == "T_sigma") f = f.then_sigma();
    } else {
        throw std::invalid_argument("unknown isometry form: " + spec.form);
    }
    if (spec.negate) f = f.negated();
    return f;
}

InvolutivityReport involutivity_condition(const Quat& a, const Quat& b) {
    if (a.norm2() != 1 || b.norm2() != 1) throw std::domain_error("non-unit parameter");
    IsoForm t = IsoForm::tab(a, b);
    InvolutivityReport rep;
    rep.t_involutive = t.involutive();
    rep.t_sigma_involutive = t.then_sigma().involutive();
    Quat a2 = a * a, b2 = b * b;
    rep.squares_pm1 = a2 == b2 && (a2 == Quat::one() || a2 == -Quat::one());
    rep.b_pm_a = (b == a) || (b == -a);
    return rep;
}

std::pair<Quat, Quat> decompose_proper(const MatQ& m) {
    if (m.rows() != 4 || m.cols() != 4 || !m.is_orthogonal() || m.det() != 1)
        throw std::domain_error("not proper");
    // Solve M R_{conj(b)} = L_c linearly in (b, c); the solution line is
    // spanned by the true parameter pair, giving M = L_c R_b / |b|^2.
    MatQ sys(16, 8);
    for (int t = 0; t < 4; ++t) {
        MatQ mb = m * right_mult_matrix(Quat::basis(t).conj());
        MatQ lc = left_mult_matrix(Quat::basis(t));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                sys.at(i * 4 + j, t) = mb.at(i, j);
                sys.at(i * 4 + j, 4 + t) = -lc.at(i, j);
            }
    }
    std::vector<VecQ> ker = kernel_basis(sys);
    if (ker.size() != 1) throw std::domain_error("not proper");
    VecQ v = ker[0];
    Quat b(v[0], v[1], v[2], v[3]);
    Quat a(v[4], v[5], v[6], v[7]);
    if (a.is_zero() || b.is_zero()) throw std::domain_error("not proper");
    for (int idx = 0; idx < 4; ++idx) {
        if (a[idx] != 0) {
            if (sgn(a[idx]) < 0) {
                a = -a;
                b = -b;
            }
            break;
        }
    }
    // Exact postcondition of the kernel system.
    if (!(left_mult_matrix(a) * right_mult_matrix(b) == m.scaled(b.norm2())))
        throw std::logic_error("decompose_proper: recomposition failed");
    return {a, b};
}

}  // namespace avalg
