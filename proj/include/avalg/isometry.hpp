#pragma once

#include <optional>
#include <string>
#include <utility>

#include "avalg/quaternion.hpp"

namespace avalg {

// Linear isometry of Euclidean H: an exact orthogonal 4x4 matrix plus a
// display tag. Tags are informational; every predicate works on the matrix.
class IsoForm {
public:
    static IsoForm identity();
    static IsoForm sigma();  // standard involution x -> conj(x)
    // x -> a x b for exactly-unit a, b. Throws std::domain_error("non-unit parameter").
    static IsoForm tab(const Quat& a, const Quat& b);
    // x -> a x b / s with rational s, s^2 = |a|^2 |b|^2. Accepts projective
    // parameters such as (u, conj(u)); throws when no rational scale exists.
    static IsoForm tab_scaled(const Quat& a, const Quat& b);
    static IsoForm from_matrix(MatQ m, std::string tag);

    IsoForm compose(const IsoForm& inner) const;  // this after inner
    IsoForm negated() const;
    IsoForm then_sigma() const;  // this after sigma

    const MatQ& matrix() const { return m_; }
    const std::string& tag() const { return tag_; }
    Quat apply(const Quat& x) const { return Quat::from_vec(m_.apply(x.to_vec())); }
    bool operator==(const IsoForm& o) const { return m_ == o.m_; }

    bool proper() const { return m_.det() == 1; }
    bool involutive() const { return (m_ * m_).is_identity(); }
    bool fixes_one() const { return apply(Quat::one()) == Quat::one(); }

private:
    IsoForm(MatQ m, std::string tag) : m_(std::move(m)), tag_(std::move(tag)) {}
    MatQ m_;
    std::string tag_;
};

struct IsometryClass {
    bool proper;
    bool involutive;
    bool fixes_one;
};

IsometryClass classify_isometry(const IsoForm& f);

// JSON-facing isometry description. Parameters are coordinate vectors so the
// same spec type can describe octonion twists (8 coordinates) where those are
// accepted; realize() itself is the quaternion (4-coordinate) version.
struct IsoSpec {
    std::string form;  // "identity" | "neg_identity" | "sigma" | "T" | "T_sigma"
    std::optional<VecQ> a, b;
    bool negate = false;
};

// Turns a spec into a realized isometry. a, b must be exactly unit norm.
IsoForm realize(const IsoSpec& spec);

struct InvolutivityReport {
    bool t_involutive;        // T_{a,b}^2 == I
    bool t_sigma_involutive;  // (T_{a,b} o sigma)^2 == I
    bool squares_pm1;         // a^2 == b^2 == 1 or a^2 == b^2 == -1
    bool b_pm_a;              // b == a or b == -a
};

InvolutivityReport involutivity_condition(const Quat& a, const Quat& b);

// Recovers (a, b) with m = T_{a/|a|, b/|b|} for a proper isometry m.
// Representatives are rational and projective: unique up to scale, with the
// first nonzero coordinate of a normalised positive. Throws
// std::domain_error("not proper") when det(m) != +1.
std::pair<Quat, Quat> decompose_proper(const MatQ& m);

}  // namespace avalg
