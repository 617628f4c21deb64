#include "avalg/identities.hpp"

#include <stdexcept>
#include <unordered_map>

namespace avalg {

IdentityReport check_quadratic_criterion(const Algebra& A) {
    VecQ e = require_left_unit(A);
    const int n = A.dim();
    IdentityReport rep{"quadratic_criterion", true, "exact-polarized", std::nullopt};
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            // Symmetrised square of e_i + e_j; bilinearity makes this exact.
            VecQ s = vadd(A.basis_product(i, j), A.basis_product(j, i));
            if (A.product(s, e) != s) {
                rep.holds = false;
                rep.witness = IdentityWitness{{vadd(basis_vec(n, i), basis_vec(n, j))},
                                              "x^2 e != x^2 at x = e_" + std::to_string(i) + " + e_" + std::to_string(j)};
                return rep;
            }
        }
    return rep;
}

VecQ sextic_map(const Algebra& A, const VecQ& x) {
    VecQ t = A.square(x);
    return A.associator(t, t, t);
}

namespace {

// Memoisation key for points with coordinates in 0..6 (dim <= 8).
std::uint64_t point_key(const VecQ& v) {
    std::uint64_t k = 0;
    for (const Rat& c : v) k = (k << 4) | static_cast<std::uint64_t>(c.get_num().get_si());
    return k;
}

}  // namespace

IdentityReport check_sextic_exact(const Algebra& A) {
    const int n = A.dim();
    if (n > 8) throw std::invalid_argument("sextic polarization supported up to dimension 8");
    IdentityReport rep{"sextic", true, "exact-polarized", std::nullopt};

    std::unordered_map<std::uint64_t, VecQ> memo;
    auto eval = [&](const VecQ& p) -> const VecQ& {
        std::uint64_t key = point_key(p);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, sextic_map(A, p)).first;
        return it->second;
    };

    std::vector<int> m(6, 0);  // non-decreasing multiset of basis indices
    for (;;) {
        VecQ total = zero_vec(n);
        for (unsigned mask = 1; mask < 64; ++mask) {
            VecQ p = zero_vec(n);
            for (int t = 0; t < 6; ++t)
                if (mask & (1u << t)) p[static_cast<size_t>(m[static_cast<size_t>(t)])] += 1;
            const VecQ& value = eval(p);
            if (__builtin_popcount(mask) % 2 == 0)  // sign (-1)^(6-|S|)
                total = vadd(total, value);
            else
                total = vsub(total, value);
        }
        if (!is_zero(total)) {
            rep.holds = false;
            IdentityWitness w;
            for (int t = 0; t < 6; ++t) w.points.push_back(basis_vec(n, m[static_cast<size_t>(t)]));
            w.note = "polarization nonzero on basis multiset";
            rep.witness = std::move(w);
            return rep;
        }
        // next non-decreasing tuple
        int pos = 5;
        while (pos >= 0 && m[static_cast<size_t>(pos)] == n - 1) --pos;
        if (pos < 0) break;
        int v = m[static_cast<size_t>(pos)] + 1;
        for (int t = pos; t < 6; ++t) m[static_cast<size_t>(t)] = v;
    }
    return rep;
}

IdentityReport check_linearizations(const Algebra& A, int samples, std::uint64_t seed) {
    IdentityReport rep{"linearizations", true, "sampled", std::nullopt};
    Sampler s(seed);
    const int n = A.dim();
    for (int t = 0; t < samples; ++t) {
        VecQ x = s.vec(n), y = s.vec(n);
        VecQ x2 = A.square(x), y2 = A.square(y);
        VecQ sym = vadd(A.product(x, y), A.product(y, x));
        VecQ f1 = vadd(vadd(A.associator(x2, x2, sym), A.associator(x2, sym, x2)), A.associator(sym, x2, x2));
        if (!is_zero(f1)) {
            rep.holds = false;
            rep.witness = IdentityWitness{{x, y}, "first linearization nonzero"};
            return rep;
        }
        VecQ f2 = vadd(vadd(vadd(A.associator(x2, x2, y2), A.associator(x2, sym, sym)), A.associator(x2, y2, x2)),
                       vadd(vadd(A.associator(sym, x2, sym), A.associator(sym, sym, x2)), A.associator(y2, x2, x2)));
        if (!is_zero(f2)) {
            rep.holds = false;
            rep.witness = IdentityWitness{{x, y}, "second linearization nonzero"};
            return rep;
        }
    }
    return rep;
}

std::string dup_condition_name(DupCondition c) {
    switch (c) {
        case DupCondition::FirstComponentX: return "first_component_x";
        case DupCondition::FirstComponentY: return "first_component_y";
        default: return "second_component";
    }
}

namespace {

// Defect of the condition at a concrete point; zero iff the condition holds
// there. The quantified conditions are quadratic (or bilinear) in their
// variables, so basis-pair polarization below is exact.
Quat dup_defect(DupCondition c, const IsoForm& phi, const IsoForm& psi, const Quat& x, const Quat& y) {
    switch (c) {
        case DupCondition::FirstComponentX: {
            Quat s = phi.apply(x) * x;
            return phi.apply(s) - s;
        }
        case DupCondition::FirstComponentY: {
            Quat s = y.conj() * psi.apply(y);
            return phi.apply(s) - s;
        }
        default: {
            Quat s = psi.apply(y) * x.conj() + y * phi.apply(x);
            return psi.apply(s) - s;
        }
    }
}

Quat dup_defect_polarized(DupCondition c, const IsoForm& phi, const IsoForm& psi, const Quat& u, const Quat& v) {
    switch (c) {
        case DupCondition::FirstComponentX: {
            Quat s = phi.apply(u) * v + phi.apply(v) * u;
            return phi.apply(s) - s;
        }
        case DupCondition::FirstComponentY: {
            Quat s = u.conj() * psi.apply(v) + v.conj() * psi.apply(u);
            return phi.apply(s) - s;
        }
        default:
            // Already bilinear in (x, y) = (u, v).
            return dup_defect(c, phi, psi, u, v);
    }
}

}  // namespace

IdentityReport check_dup_condition(DupCondition c, const IsoForm& phi, const IsoForm& psi) {
    if (!phi.fixes_one()) throw std::domain_error("phi does not fix 1");
    IdentityReport rep{dup_condition_name(c), true, "exact-polarized", std::nullopt};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (!dup_defect_polarized(c, phi, psi, Quat::basis(i), Quat::basis(j)).is_zero()) {
                rep.holds = false;
                rep.witness = IdentityWitness{{basis_vec(4, i), basis_vec(4, j)},
                                              "polarized defect nonzero on basis pair"};
                return rep;
            }
        }
    return rep;
}

bool dup_conditions_hold(const IsoForm& phi, const IsoForm& psi) {
    return check_dup_condition(DupCondition::FirstComponentX, phi, psi).holds &&
           check_dup_condition(DupCondition::FirstComponentY, phi, psi).holds &&
           check_dup_condition(DupCondition::SecondComponent, phi, psi).holds;
}

std::optional<std::pair<Quat, Quat>> find_witness(DupCondition c, const IsoForm& phi,
                                                  const IsoForm& psi, int budget, std::uint64_t seed) {
    auto violates = [&](const Quat& x, const Quat& y) {
        return !dup_defect(c, phi, psi, x, y).is_zero();
    };
    // Basis vectors and pairwise sums make the polarized refutation concrete.
    std::vector<Quat> pool;
    for (int i = 0; i < 4; ++i) pool.push_back(Quat::basis(i));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) pool.push_back(Quat::basis(i) + Quat::basis(j));
    for (const Quat& x : pool)
        for (const Quat& y : pool)
            if (violates(x, y)) return std::make_pair(x, y);
    Sampler s(seed);
    for (int t = 0; t < budget; ++t) {
        Quat x = Quat::from_vec(s.vec(4)), y = Quat::from_vec(s.vec(4));
        if (violates(x, y)) return std::make_pair(x, y);
    }
    return std::nullopt;
}

}  // namespace avalg
