#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "avalg/rational.hpp"

namespace avalg {

// Dense matrix over the rationals. Everything here is exact; rank, kernels
// and solves are computed by Gauss-Jordan elimination with exact pivots.
class MatQ {
public:
    MatQ() : rows_(0), cols_(0) {}
    MatQ(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Rat(0)) {}

    static MatQ identity(int n);
    static MatQ from_rows(const std::vector<VecQ>& rows);
    // Column i is f(e_i); represents a linear map in the standard basis.
    static MatQ from_map(int dim, const std::function<VecQ(const VecQ&)>& f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    VecQ apply(const VecQ& v) const;
    VecQ row(int i) const;
    VecQ col(int j) const;
    MatQ transpose() const;
    MatQ operator*(const MatQ& o) const;
    MatQ operator+(const MatQ& o) const;
    MatQ operator-(const MatQ& o) const;
    MatQ scaled(const Rat& s) const;
    bool operator==(const MatQ& o) const = default;

    bool is_identity() const;
    bool is_orthogonal() const;  // M^T M == I
    Rat det() const;             // square only

private:
    int rows_, cols_;
    std::vector<Rat> data_;
};

struct RrefResult {
    MatQ reduced;
    int rank = 0;
    std::vector<int> pivot_cols;
};

RrefResult rref(const MatQ& m);
int rank(const MatQ& m);

// Basis of {v : m v = 0}.
std::vector<VecQ> kernel_basis(const MatQ& m);

// One preimage of b under m, when the system is consistent.
std::optional<VecQ> solve(const MatQ& m, const VecQ& b);

// Row space of the given spanning set in reduced echelon form; convenient
// canonical representation for subspace comparison.
std::vector<VecQ> row_space_basis(const std::vector<VecQ>& span);

// Exact linear span with membership test and closure growth.
struct Subspace {
    std::vector<VecQ> basis;  // reduced echelon rows, pairwise independent

    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const VecQ& v) const;
    // Returns true when v enlarged the span.
    bool insert(const VecQ& v);
    bool operator==(const Subspace& o) const = default;
};

Subspace make_subspace(const std::vector<VecQ>& span);

std::string mat_str(const MatQ& m);

}  // namespace avalg
