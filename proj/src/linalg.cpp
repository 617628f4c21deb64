#include "avalg/linalg.hpp"

#include <stdexcept>

namespace avalg {

MatQ MatQ::identity(int n) {
    MatQ m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatQ MatQ::from_rows(const std::vector<VecQ>& rows) {
    if (rows.empty()) return MatQ(0, 0);
    MatQ m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (rows[static_cast<size_t>(i)].size() != static_cast<size_t>(m.cols()))
            throw std::invalid_argument("ragged rows");
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

MatQ MatQ::from_map(int dim, const std::function<VecQ(const VecQ&)>& f) {
    MatQ m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        VecQ img = f(basis_vec(dim, j));
        for (int i = 0; i < dim; ++i) m.at(i, j) = img[static_cast<size_t>(i)];
    }
    return m;
}

VecQ MatQ::apply(const VecQ& v) const {
    if (v.size() != static_cast<size_t>(cols_)) throw std::invalid_argument("dimension mismatch in apply");
    VecQ r(static_cast<size_t>(rows_), Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[static_cast<size_t>(j)] != 0) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

VecQ MatQ::row(int i) const {
    VecQ r(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(j)] = at(i, j);
    return r;
}

VecQ MatQ::col(int j) const {
    VecQ c(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c[static_cast<size_t>(i)] = at(i, j);
    return c;
}

MatQ MatQ::transpose() const {
    MatQ t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

MatQ MatQ::operator*(const MatQ& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    MatQ r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (o.at(k, j) != 0) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

MatQ MatQ::operator+(const MatQ& o) const {
    MatQ r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

MatQ MatQ::operator-(const MatQ& o) const {
    MatQ r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

MatQ MatQ::scaled(const Rat& s) const {
    MatQ r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = s * at(i, j);
    return r;
}

bool MatQ::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool MatQ::is_orthogonal() const {
    if (rows_ != cols_) return false;
    return (transpose() * *this).is_identity();
}

Rat MatQ::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    MatQ m = *this;
    Rat d = 1;
    int n = rows_;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (m.at(r, c) != 0) { p = r; break; }
        if (p < 0) return Rat(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Rat inv = 1 / m.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (m.at(r, c) == 0) continue;
            Rat f = m.at(r, c) * inv;
            for (int j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    return d;
}

RrefResult rref(const MatQ& m) {
    RrefResult res;
    res.reduced = m;
    MatQ& a = res.reduced;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int p = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
        Rat inv = 1 / a.at(r, c);
        for (int j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

int rank(const MatQ& m) { return rref(m).rank; }

std::vector<VecQ> kernel_basis(const MatQ& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<VecQ> basis;
    for (int fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[static_cast<size_t>(fc)]) continue;
        VecQ v = zero_vec(m.cols());
        v[static_cast<size_t>(fc)] = 1;
        for (size_t pi = 0; pi < rr.pivot_cols.size(); ++pi)
            v[static_cast<size_t>(rr.pivot_cols[pi])] = -rr.reduced.at(static_cast<int>(pi), fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<VecQ> solve(const MatQ& m, const VecQ& b) {
    if (b.size() != static_cast<size_t>(m.rows())) throw std::invalid_argument("dimension mismatch in solve");
    MatQ aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[static_cast<size_t>(i)];
    }
    RrefResult rr = rref(aug);
    for (int c : rr.pivot_cols)
        if (c == m.cols()) return std::nullopt;  // inconsistent system
    VecQ x = zero_vec(m.cols());
    for (size_t pi = 0; pi < rr.pivot_cols.size(); ++pi)
        x[static_cast<size_t>(rr.pivot_cols[pi])] = rr.reduced.at(static_cast<int>(pi), m.cols());
    return x;
}

std::vector<VecQ> row_space_basis(const std::vector<VecQ>& span) {
    if (span.empty()) return {};
    RrefResult rr = rref(MatQ::from_rows(span));
    std::vector<VecQ> basis;
    for (int i = 0; i < rr.rank; ++i) basis.push_back(rr.reduced.row(i));
    return basis;
}

bool Subspace::contains(const VecQ& v) const {
    // Reduce v against the echelon basis; containment iff it reduces to zero.
    VecQ w = v;
    for (const VecQ& b : basis) {
        size_t lead = 0;
        while (lead < b.size() && b[lead] == 0) ++lead;
        if (lead == b.size()) continue;
        if (w[lead] != 0) w = vsub(w, vscale(w[lead], b));  // basis rows have unit pivots
    }
    return is_zero(w);
}

bool Subspace::insert(const VecQ& v) {
    if (contains(v)) return false;
    std::vector<VecQ> rows = basis;
    rows.push_back(v);
    basis = row_space_basis(rows);
    return true;
}

Subspace make_subspace(const std::vector<VecQ>& span) {
    Subspace s;
    s.basis = row_space_basis(span);
    return s;
}

std::string mat_str(const MatQ& m) {
    std::string s;
    for (int i = 0; i < m.rows(); ++i) {
        s += vec_str(m.row(i));
        s += "\n";
    }
    return s;
}

}  // namespace avalg
