#include "avalg/algebra.hpp"

#include <map>
#include <stdexcept>

namespace avalg {

Algebra::Algebra(int dim, std::vector<VecQ> constants, std::string label)
    : dim_(dim), constants_(std::move(constants)), label_(std::move(label)) {
    if (constants_.size() != static_cast<size_t>(dim_) * dim_)
        throw std::invalid_argument("structure constants must hold dim*dim products");
    for (const VecQ& v : constants_)
        if (v.size() != static_cast<size_t>(dim_))
            throw std::invalid_argument("structure constant entry of wrong dimension");
}

Algebra Algebra::from_product(int dim, const std::function<VecQ(const VecQ&, const VecQ&)>& prod,
                              std::string label) {
    std::vector<VecQ> constants;
    constants.reserve(static_cast<size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) constants.push_back(prod(basis_vec(dim, i), basis_vec(dim, j)));
    return Algebra(dim, std::move(constants), std::move(label));
}

VecQ Algebra::product(const VecQ& x, const VecQ& y) const {
    if (x.size() != static_cast<size_t>(dim_) || y.size() != static_cast<size_t>(dim_))
        throw std::invalid_argument("dimension mismatch in product");
    VecQ r = zero_vec(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[static_cast<size_t>(j)] == 0) continue;
            Rat c = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
            const VecQ& e = basis_product(i, j);
            for (int t = 0; t < dim_; ++t)
                if (e[static_cast<size_t>(t)] != 0) r[static_cast<size_t>(t)] += c * e[static_cast<size_t>(t)];
        }
    }
    return r;
}

VecQ Algebra::associator(const VecQ& x, const VecQ& y, const VecQ& z) const {
    return vsub(product(product(x, y), z), product(x, product(y, z)));
}

MatQ Algebra::left_mult(const VecQ& a) const {
    return MatQ::from_map(dim_, [&](const VecQ& v) { return product(a, v); });
}

MatQ Algebra::right_mult(const VecQ& a) const {
    return MatQ::from_map(dim_, [&](const VecQ& v) { return product(v, a); });
}

// ---- constructors ----

namespace {

VecQ cvec(const Rat& a, const Rat& b) { return {a, b}; }

std::function<Quat(const Quat&)> quat_star(std::optional<StarVariant> star, bool second) {
    bool conj = false;
    if (star) {
        if (*star == StarVariant::Both) conj = true;
        else if (*star == StarVariant::Left) conj = !second;
        else conj = second;
    }
    if (conj) return [](const Quat& q) { return q.conj(); };
    return [](const Quat& q) { return q; };
}

}  // namespace

Algebra real_algebra() { return Algebra(1, {VecQ{Rat(1)}}, "R"); }

Algebra complex_algebra(std::optional<StarVariant> star) {
    auto conj2 = [](const VecQ& v) { return cvec(v[0], -v[1]); };
    auto id2 = [](const VecQ& v) { return v; };
    auto lhs = (star && (*star == StarVariant::Left || *star == StarVariant::Both)) ? conj2 : id2;
    auto rhs = (star && (*star == StarVariant::Right || *star == StarVariant::Both)) ? conj2 : id2;
    std::string label = !star ? "C" : (*star == StarVariant::Left ? "*C" : (*star == StarVariant::Right ? "C*" : "*C*"));
    return Algebra::from_product(2, [=](const VecQ& x0, const VecQ& y0) {
        VecQ x = lhs(x0), y = rhs(y0);
        return cvec(x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]);
    }, label);
}

Algebra quaternion_algebra(std::optional<StarVariant> star) {
    auto f = quat_star(star, false), g = quat_star(star, true);
    std::string label = !star ? "H" : (*star == StarVariant::Left ? "*H" : (*star == StarVariant::Right ? "H*" : "*H*"));
    return Algebra::from_product(4, [=](const VecQ& x, const VecQ& y) {
        return (f(Quat::from_vec(x)) * g(Quat::from_vec(y))).to_vec();
    }, label);
}

Algebra octonion_algebra(std::optional<StarVariant> star) {
    bool cl = star && (*star == StarVariant::Left || *star == StarVariant::Both);
    bool cr = star && (*star == StarVariant::Right || *star == StarVariant::Both);
    std::string label = !star ? "O" : (*star == StarVariant::Left ? "*O" : (*star == StarVariant::Right ? "O*" : "*O*"));
    return Algebra::from_product(8, [=](const VecQ& x, const VecQ& y) {
        Oct u = Oct::from_vec(x), v = Oct::from_vec(y);
        if (cl) u = u.conj();
        if (cr) v = v.conj();
        return (u * v).to_vec();
    }, label);
}

Algebra isotope_H(int family, const Quat& a, const Quat& b) {
    if (family < 1 || family > 4) throw std::invalid_argument("isotope family must be 1..4");
    if (a.norm2() != 1 || b.norm2() != 1) throw std::invalid_argument("invalid parameter: non-unit isotope parameter");
    std::string label = "H" + std::to_string(family) + "(" + a.str() + "," + b.str() + ")";
    return Algebra::from_product(4, [=](const VecQ& xv, const VecQ& yv) {
        Quat x = Quat::from_vec(xv), y = Quat::from_vec(yv);
        switch (family) {
            case 1: return (a * x * y * b).to_vec();
            case 2: return (x.conj() * a * y * b).to_vec();
            case 3: return (a * x * b * y.conj()).to_vec();
            default: return (a * x.conj() * y.conj() * b).to_vec();
        }
    }, label);
}

Algebra a_phi_H(const IsoForm& phi) {
    if (!phi.fixes_one()) throw std::invalid_argument("invalid parameter: phi(1) != 1");
    return Algebra::from_product(4, [&](const VecQ& x, const VecQ& y) {
        return (phi.apply(Quat::from_vec(x)) * Quat::from_vec(y)).to_vec();
    }, "H_phi[" + phi.tag() + "]");
}

Algebra a_phi_O(const MatQ& phi8) {
    if (phi8.rows() != 8 || !phi8.is_orthogonal()) throw std::invalid_argument("invalid parameter: phi not an isometry of O");
    if (phi8.apply(basis_vec(8, 0)) != basis_vec(8, 0)) throw std::invalid_argument("invalid parameter: phi(1) != 1");
    return Algebra::from_product(8, [&](const VecQ& x, const VecQ& y) {
        return (Oct::from_vec(phi8.apply(x)) * Oct::from_vec(y)).to_vec();
    }, "O_phi");
}

Algebra star_oct_left(const Oct& a) {
    if (a.norm2() != 1) throw std::invalid_argument("invalid parameter: non-unit twist");
    return Algebra::from_product(8, [&](const VecQ& x, const VecQ& y) {
        return ((Oct::from_vec(x).conj() * a) * Oct::from_vec(y)).to_vec();
    }, "*O_l(" + a.str() + ",1)");
}

Algebra star_oct_right(const Oct& a) {
    if (a.norm2() != 1) throw std::invalid_argument("invalid parameter: non-unit twist");
    return Algebra::from_product(8, [&](const VecQ& x, const VecQ& y) {
        return (Oct::from_vec(x).conj() * (a * Oct::from_vec(y))).to_vec();
    }, "*O_r(" + a.str() + ",1)");
}

Algebra duplication(const IsoForm& phi, const IsoForm& psi) {
    if (!phi.fixes_one()) throw std::invalid_argument("invalid parameter: phi(1) != 1");
    return Algebra::from_product(8, [&](const VecQ& xv, const VecQ& yv) {
        Oct z = Oct::from_vec(xv);
        Oct twisted(phi.apply(z.first()), psi.apply(z.second()));
        return (twisted * Oct::from_vec(yv)).to_vec();
    }, "HxH(" + phi.tag() + "," + psi.tag() + ")");
}

namespace {

Algebra with_label(Algebra a, const std::string& label) {
    std::vector<VecQ> constants;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) constants.push_back(a.basis_product(i, j));
    return Algebra(a.dim(), std::move(constants), label);
}

}  // namespace

Algebra named_algebra(const std::string& name) {
    static const std::map<std::string, std::string> aliases = {
        {"starC", "*C"}, {"starH", "*H"}, {"starO", "*O"},
        {"starH_i1", "*H(i,1)"}, {"starO_i1", "*O(i,1)"},
        {"Otilde", "O~"}, {"Otilde_i", "O~(i)"},
    };
    std::string n = name;
    if (auto it = aliases.find(n); it != aliases.end()) n = it->second;
    if (n == "R") return real_algebra();
    if (n == "C") return complex_algebra();
    if (n == "*C") return complex_algebra(StarVariant::Left);
    if (n == "C*") return complex_algebra(StarVariant::Right);
    if (n == "H") return quaternion_algebra();
    if (n == "*H") return quaternion_algebra(StarVariant::Left);
    if (n == "H*") return quaternion_algebra(StarVariant::Right);
    if (n == "*H(i,1)") return with_label(isotope_H(2, Quat::i(), Quat::one()), "*H(i,1)");
    if (n == "O") return with_label(duplication(IsoForm::identity(), IsoForm::identity()), "O");
    if (n == "*O") return octonion_algebra(StarVariant::Left);
    if (n == "O*") return octonion_algebra(StarVariant::Right);
    if (n == "*O(i,1)") return with_label(star_oct_left(Oct::basis(1)), "*O(i,1)");
    if (n == "O~") return with_label(duplication(IsoForm::sigma(), IsoForm::identity()), "O~");
    if (n == "O~(i)") {
        IsoForm phi = IsoForm::tab(Quat::i(), Quat::i().conj()).then_sigma();
        IsoForm psi = IsoForm::tab(Quat::i(), Quat::i());
        return with_label(duplication(phi, psi), "O~(i)");
    }
    throw std::invalid_argument("unknown algebra name: " + name);
}

const std::vector<std::string>& roster_names() {
    static const std::vector<std::string> names = {
        "R", "C", "*C", "H", "*H", "*H(i,1)", "O", "*O", "*O(i,1)", "O~", "O~(i)"};
    return names;
}

Algebra from_spec(const AlgSpec& spec) {
    if (spec.kind == "named") return named_algebra(spec.name);
    if (spec.kind == "star") {
        StarVariant v;
        if (spec.variant == "left") v = StarVariant::Left;
        else if (spec.variant == "right") v = StarVariant::Right;
        else if (spec.variant == "both") v = StarVariant::Both;
        else throw std::invalid_argument("star variant must be left|right|both");
        if (spec.base == "C") return complex_algebra(v);
        if (spec.base == "H") return quaternion_algebra(v);
        if (spec.base == "O") return octonion_algebra(v);
        throw std::invalid_argument("star base must be C|H|O");
    }
    if (spec.kind == "isotope") {
        if (!spec.a || !spec.b) throw std::invalid_argument("isotope needs a and b");
        return isotope_H(spec.family, Quat::from_vec(*spec.a), Quat::from_vec(*spec.b));
    }
    if (spec.kind == "A_phi") {
        if (!spec.phi) throw std::invalid_argument("A_phi needs phi");
        if (spec.base == "H") return a_phi_H(realize(*spec.phi));
        if (spec.base == "O") {
            const IsoSpec& p = *spec.phi;
            if (p.negate) throw std::invalid_argument("invalid parameter: phi(1) != 1");
            if (p.form == "identity") return a_phi_O(MatQ::identity(8));
            if (p.form == "sigma")
                return a_phi_O(MatQ::from_map(8, [](const VecQ& v) { return Oct::from_vec(v).conj().to_vec(); }));
            if (p.form == "T_sigma") {
                // z -> a conj(z) conj(a), the only parametric isometry of O used here.
                if (!p.a) throw std::invalid_argument("T_sigma on O needs a (8 coordinates)");
                Oct a = Oct::from_vec(*p.a);
                if (a.norm2() != 1) throw std::invalid_argument("invalid parameter: non-unit twist");
                if (p.b && !proportional(*p.b, a.conj().to_vec()))
                    throw std::invalid_argument("T_sigma on O supports only b = conj(a)");
                return a_phi_O(MatQ::from_map(8, [&](const VecQ& v) {
                    return (a * Oct::from_vec(v).conj() * a.conj()).to_vec();
                }));
            }
            throw std::invalid_argument("unsupported octonion isometry form: " + p.form);
        }
        if (spec.base == "R") return real_algebra();
        if (spec.base == "C") {
            const IsoSpec& p = *spec.phi;
            bool conj = p.form == "sigma";
            if (!conj && p.form != "identity") throw std::invalid_argument("A_phi on C supports identity|sigma");
            if (p.negate) throw std::invalid_argument("invalid parameter: phi(1) != 1");
            return conj ? complex_algebra(StarVariant::Left) : complex_algebra();
        }
        throw std::invalid_argument("A_phi base must be R|C|H|O");
    }
    if (spec.kind == "star_oct_left" || spec.kind == "star_oct_right") {
        if (!spec.a) throw std::invalid_argument(spec.kind + " needs a (8 coordinates)");
        Oct a = Oct::from_vec(*spec.a);
        return spec.kind == "star_oct_left" ? star_oct_left(a) : star_oct_right(a);
    }
    if (spec.kind == "duplication") {
        if (!spec.phi || !spec.psi) throw std::invalid_argument("duplication needs phi and psi");
        return duplication(realize(*spec.phi), realize(*spec.psi));
    }
    if (spec.kind == "structure") {
        return Algebra(spec.dim, spec.constants, "structure");
    }
    throw std::invalid_argument("unknown algebra kind: " + spec.kind);
}

// ---- operations ----

AvaResult is_absolute_valued(const Algebra& A) {
    const int n = A.dim();
    // Cache <e_i e_j | e_k e_l>.
    std::vector<Rat> g(static_cast<size_t>(n) * n * n * n);
    auto idx = [n](int i, int j, int k, int l) {
        return ((static_cast<size_t>(i) * n + j) * n + k) * n + l;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    g[idx(i, j, k, l)] = dot(A.basis_product(i, j), A.basis_product(k, l));
    AvaResult res;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Rat want = (i == k && j == l) ? Rat(2) : Rat(0);
                    if (g[idx(i, j, k, l)] + g[idx(k, j, i, l)] != want) {
                        res.witness = std::array<int, 4>{i, j, k, l};
                        res.mirrored = false;
                        return res;
                    }
                    if (g[idx(j, i, l, k)] + g[idx(j, k, l, i)] != want) {
                        res.witness = std::array<int, 4>{i, j, k, l};
                        res.mirrored = true;
                        return res;
                    }
                }
    res.ok = true;
    return res;
}

std::optional<VecQ> left_unit(const Algebra& A) {
    const int n = A.dim();
    // sum_i e_i-coefficient alpha_i with sum alpha_i (e_i e_j) = e_j for all j.
    MatQ sys(n * n, n);
    VecQ rhs(static_cast<size_t>(n) * n, Rat(0));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const VecQ& p = A.basis_product(i, j);
            for (int t = 0; t < n; ++t) sys.at(j * n + t, i) = p[static_cast<size_t>(t)];
        }
        rhs[static_cast<size_t>(j) * n + j] = 1;
    }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    if (!A.left_mult(*sol).is_identity()) return std::nullopt;
    return sol;
}

VecQ require_left_unit(const Algebra& A) {
    auto e = left_unit(A);
    if (!e) throw std::domain_error("no left unit");
    return *e;
}

Subspace fixed_subspace(const Algebra& A, const VecQ& e) {
    if (!A.left_mult(e).is_identity()) throw std::domain_error("not a left unit");
    MatQ m = A.right_mult(e) - MatQ::identity(A.dim());
    return make_subspace(kernel_basis(m));
}

Subspace single_generated(const Algebra& A, const VecQ& x) {
    if (is_zero(x)) throw std::invalid_argument("single_generated needs x != 0");
    Subspace span = make_subspace({x});
    for (;;) {
        bool grew = false;
        std::vector<VecQ> basis = span.basis;
        for (const VecQ& u : basis)
            for (const VecQ& v : basis)
                if (span.insert(A.product(u, v))) grew = true;
        if (!grew) return span;
    }
}

int degree_sampled(const Algebra& A, int samples, std::uint64_t seed) {
    Sampler s(seed);
    int best = 0;
    auto consider = [&](const VecQ& x) {
        if (is_zero(x)) return;
        best = std::max(best, single_generated(A, x).dim());
    };
    for (int i = 0; i < A.dim(); ++i) consider(basis_vec(A.dim(), i));
    for (int t = 0; t < samples; ++t) consider(s.nonzero_vec(A.dim()));
    return best;
}

MultiplicationTable multiplication_table(const Algebra& A, const VecQ& x) {
    VecQ e = require_left_unit(A);
    if (dot(e, x) != 0) throw std::invalid_argument("x must be orthogonal to the left unit");
    if (is_zero(x)) throw std::invalid_argument("x must be nonzero");
    VecQ xe = A.product(x, e);
    VecQ x2 = A.square(x);
    if (A.product(x2, e) != x2) throw std::domain_error("criterion fails");
    Rat n = norm2(x);
    Rat t = dot(e, x2);
    std::vector<VecQ> b = {e, x, xe, x2};
    auto lin = [&](const Rat& ce, const Rat& cx, const Rat& cxe, const Rat& cx2) {
        return vadd(vadd(vscale(ce, e), vscale(cx, x)), vadd(vscale(cxe, xe), vscale(cx2, x2)));
    };
    std::vector<std::vector<VecQ>> expected(4, std::vector<VecQ>(4));
    for (int v = 0; v < 4; ++v) expected[0][static_cast<size_t>(v)] = b[static_cast<size_t>(v)];
    expected[1][0] = xe;
    expected[1][1] = x2;
    expected[1][2] = lin(-n, 0, 0, 0);   // x(xe) = -|x|^2 e
    expected[1][3] = lin(0, -n, 0, 0);   // x x^2 = -|x|^2 x
    expected[2][0] = x;                  // (xe)e = x
    expected[2][1] = lin(-n, 0, 0, 0);   // (xe)x = -|x|^2 e
    expected[2][2] = lin(2 * t, 0, 0, -1);
    expected[2][3] = lin(0, 2 * t, n, 0);
    expected[3][0] = x2;                 // the criterion itself
    expected[3][1] = lin(0, 0, -n, 0);
    expected[3][2] = lin(0, n, 2 * t, 0);
    expected[3][3] = lin(-n * n, 0, 0, 2 * t);
    MultiplicationTable table;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            TableCell cell;
            cell.row = r;
            cell.col = c;
            cell.computed = A.product(b[static_cast<size_t>(r)], b[static_cast<size_t>(c)]);
            cell.expected = expected[static_cast<size_t>(r)][static_cast<size_t>(c)];
            cell.ok = cell.computed == cell.expected;
            table.all_ok = table.all_ok && cell.ok;
            table.cells.push_back(std::move(cell));
        }
    return table;
}

bool CheckReport::all_ok() const {
    for (const CheckItem& it : items)
        if (!it.holds) return false;
    return true;
}

const CheckItem* CheckReport::first_failure() const {
    for (const CheckItem& it : items)
        if (!it.holds) return &it;
    return nullptr;
}

CheckReport rodriguez_checks(const Algebra& A, int samples, std::uint64_t seed) {
    CheckReport rep;
    VecQ e = require_left_unit(A);
    const int n = A.dim();
    auto star = [&](const VecQ& x) { return vsub(vscale(2 * dot(e, x), e), x); };

    // <x y | z> = <y | x* z> on all basis triples (trilinear, hence exact).
    {
        CheckItem it{"adjoint_identity", true, ""};
        for (int i = 0; i < n && it.holds; ++i)
            for (int j = 0; j < n && it.holds; ++j)
                for (int k = 0; k < n && it.holds; ++k) {
                    VecQ x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                    if (dot(A.product(x, y), z) != dot(y, A.product(star(x), z))) {
                        it.holds = false;
                        it.detail = "basis triple (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
                    }
                }
        rep.items.push_back(std::move(it));
    }
    // x*(x y) = |x|^2 y, polarized in x over basis pairs (quadratic, hence exact).
    {
        CheckItem it{"star_cancellation", true, ""};
        for (int i = 0; i < n && it.holds; ++i)
            for (int k = 0; k < n && it.holds; ++k)
                for (int j = 0; j < n && it.holds; ++j) {
                    VecQ x = basis_vec(n, i), xp = basis_vec(n, k), y = basis_vec(n, j);
                    VecQ lhs = vadd(A.product(star(x), A.product(xp, y)), A.product(star(xp), A.product(x, y)));
                    VecQ rhs = vscale(2 * dot(x, xp), y);
                    if (lhs != rhs) {
                        it.holds = false;
                        it.detail = "basis triple (" + std::to_string(i) + "," + std::to_string(k) + "," + std::to_string(j) + ")";
                    }
                }
        rep.items.push_back(std::move(it));
    }

    // Sampled consequences. x, y, z are fresh draws per sample; the first
    // block needs x (and y) orthogonal to e.
    Sampler s(seed);
    auto perp = [&](const VecQ& v) { return vsub(v, vscale(dot(e, v) / norm2(e), e)); };
    auto fail = [&](CheckItem& it, const VecQ& x, const VecQ& y) {
        it.holds = false;
        it.detail = "x=" + vec_str(x) + " y=" + vec_str(y);
    };
    CheckItem i32{"eq3.2", true, ""}, i33{"eq3.3", true, ""}, i34{"eq3.4", true, ""},
        i35{"eq3.5", true, ""}, i36{"eq3.6", true, ""}, i37{"eq3.7", true, ""}, i38{"eq3.8", true, ""};
    for (int t = 0; t < samples; ++t) {
        VecQ x = perp(s.vec(n)), y = perp(s.vec(n)), z = s.vec(n);
        if (i32.holds && dot(A.product(x, y), z) != -dot(y, A.product(x, z))) fail(i32, x, y);
        if (i33.holds && A.product(x, A.product(x, y)) != vscale(-norm2(x), y)) fail(i33, x, y);
        if (i34.holds && dot(A.product(x, e), x) != -dot(e, A.square(x))) fail(i34, x, x);
        if (i35.holds && A.product(x, A.square(x)) != vscale(-norm2(x), x)) fail(i35, x, x);
        if (i36.holds &&
            vadd(A.product(x, A.product(y, z)), A.product(y, A.product(x, z))) != vscale(-2 * dot(x, y), z))
            fail(i36, x, y);
        VecQ xg = s.vec(n), yg = s.vec(n);  // general position for (3.7), (3.8)
        if (i37.holds) {
            VecQ lhs = A.product(xg, A.product(xg, e));
            VecQ rhs = vsub(vscale(2 * dot(e, xg), A.product(xg, e)), vscale(norm2(xg), e));
            if (lhs != rhs) fail(i37, xg, xg);
        }
        if (i38.holds) {
            VecQ lhs = vadd(A.product(xg, A.product(yg, e)), A.product(yg, A.product(xg, e)));
            VecQ rhs = vsub(vadd(vscale(2 * dot(e, xg), A.product(yg, e)), vscale(2 * dot(e, yg), A.product(xg, e))),
                            vscale(2 * dot(xg, yg), e));
            if (lhs != rhs) fail(i38, xg, yg);
        }
    }
    for (auto& it : {i32, i33, i34, i35, i36, i37, i38}) rep.items.push_back(it);
    return rep;
}

}  // namespace avalg
