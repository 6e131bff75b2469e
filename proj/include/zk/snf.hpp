#pragma once

#include <optional>
#include <vector>

#include "zk/base.hpp"

namespace zk {

// Dense integer matrix, row-major. All arithmetic is overflow-checked.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<i64> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    i64& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    i64 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IntMat identity(int n);

    bool is_zero() const;
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    IntMat mul(const IntMat& o) const;
    std::vector<i64> apply(const std::vector<i64>& x) const;
    IntMat hstack(const IntMat& o) const;
    IntMat col(int j) const;
};

// U*A*V = D with U, V unimodular; divisors = nonzero diagonal of D in
// divisibility order d1 | d2 | ... | dr, all positive.
struct SmithForm {
    IntMat D;
    IntMat U, Uinv;
    IntMat V, Vinv;
    int rank = 0;
    std::vector<i64> divisors;
};

SmithForm smith_normal_form(const IntMat& A);

// One integer solution of A x = b, if any.
std::optional<std::vector<i64>> solve_integer(const IntMat& A, const std::vector<i64>& b);
std::optional<std::vector<i64>> solve_integer(const SmithForm& snf, const std::vector<i64>& b);

// Basis of the (saturated) integer kernel lattice of A, as columns.
IntMat kernel_basis(const IntMat& A);

}  // namespace zk
