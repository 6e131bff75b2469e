#include "zk/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace zk {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMat::is_zero() const {
    for (i64 x : a)
        if (x != 0) return false;
    return true;
}

IntMat IntMat::mul(const IntMat& o) const {
    if (cols != o.rows) throw InternalError("IntMat::mul shape mismatch");
    IntMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            i64 aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols; ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(aik, o.at(k, j)));
        }
    return r;
}

std::vector<i64> IntMat::apply(const std::vector<i64>& x) const {
    if (static_cast<int>(x.size()) != cols) throw InternalError("IntMat::apply shape mismatch");
    std::vector<i64> r(static_cast<size_t>(rows), 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != 0 && x[j] != 0) r[i] = checked_add(r[i], checked_mul(at(i, j), x[j]));
    return r;
}

IntMat IntMat::hstack(const IntMat& o) const {
    if (rows != o.rows) throw InternalError("IntMat::hstack shape mismatch");
    IntMat r(rows, cols + o.cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols; ++j) r.at(i, cols + j) = o.at(i, j);
    }
    return r;
}

IntMat IntMat::col(int j) const {
    IntMat r(rows, 1);
    for (int i = 0; i < rows; ++i) r.at(i, 0) = at(i, j);
    return r;
}

namespace {

// Elementary operations applied to A while maintaining U A V = D.
// Row ops touch U (and Uinv from the right); column ops touch V/Vinv.
struct Reducer {
    IntMat A, U, Uinv, V, Vinv;

    explicit Reducer(const IntMat& in)
        : A(in),
          U(IntMat::identity(in.rows)),
          Uinv(IntMat::identity(in.rows)),
          V(IntMat::identity(in.cols)),
          Vinv(IntMat::identity(in.cols)) {}

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
        for (int c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
        for (int r = 0; r < Uinv.rows; ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
        for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
        for (int c = 0; c < Vinv.cols; ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
    }
    void negate_row(int i) {
        for (int c = 0; c < A.cols; ++c) A.at(i, c) = checked_neg(A.at(i, c));
        for (int c = 0; c < U.cols; ++c) U.at(i, c) = checked_neg(U.at(i, c));
        for (int r = 0; r < Uinv.rows; ++r) Uinv.at(r, i) = checked_neg(Uinv.at(r, i));
    }
    // row i += q * row j
    void add_row(int i, int j, i64 q) {
        if (q == 0) return;
        for (int c = 0; c < A.cols; ++c) A.at(i, c) = checked_add(A.at(i, c), checked_mul(q, A.at(j, c)));
        for (int c = 0; c < U.cols; ++c) U.at(i, c) = checked_add(U.at(i, c), checked_mul(q, U.at(j, c)));
        for (int r = 0; r < Uinv.rows; ++r) Uinv.at(r, j) = checked_sub(Uinv.at(r, j), checked_mul(q, Uinv.at(r, i)));
    }
    // col i += q * col j
    void add_col(int i, int j, i64 q) {
        if (q == 0) return;
        for (int r = 0; r < A.rows; ++r) A.at(r, i) = checked_add(A.at(r, i), checked_mul(q, A.at(r, j)));
        for (int r = 0; r < V.rows; ++r) V.at(r, i) = checked_add(V.at(r, i), checked_mul(q, V.at(r, j)));
        for (int c = 0; c < Vinv.cols; ++c) Vinv.at(j, c) = checked_sub(Vinv.at(j, c), checked_mul(q, Vinv.at(i, c)));
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMat& A) {
    Reducer red(A);
    IntMat& M = red.A;
    const int n = std::min(M.rows, M.cols);
    int t = 0;

    for (; t < n; ++t) {
        // Pick the smallest-magnitude nonzero pivot in the remaining block.
        int pr = -1, pc = -1;
        i64 best = 0;
        for (int i = t; i < M.rows; ++i)
            for (int j = t; j < M.cols; ++j) {
                i64 v = M.at(i, j);
                if (v != 0 && (pr < 0 || std::llabs(v) < best)) {
                    pr = i;
                    pc = j;
                    best = std::llabs(v);
                }
            }
        if (pr < 0) break;
        red.swap_rows(t, pr);
        red.swap_cols(t, pc);

        for (;;) {
            bool dirty = false;
            for (int i = t + 1; i < M.rows; ++i) {
                if (M.at(i, t) == 0) continue;
                i64 q = M.at(i, t) / M.at(t, t);
                red.add_row(i, t, -q);
                if (M.at(i, t) != 0) {
                    red.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < M.cols; ++j) {
                if (M.at(t, j) == 0) continue;
                i64 q = M.at(t, j) / M.at(t, t);
                red.add_col(j, t, -q);
                if (M.at(t, j) != 0) {
                    red.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (!dirty) break;
        }
        if (M.at(t, t) < 0) red.negate_row(t);
    }

    // Enforce the divisibility chain d_i | d_{i+1}.
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i + 1 < t; ++i) {
            i64 a = M.at(i, i), b = M.at(i + 1, i + 1);
            if (b % a == 0) continue;
            changed = true;
            // Fold entry (i+1,i+1) into the (i,i) corner and re-reduce the 2x2.
            red.add_col(i, i + 1, 1);
            for (;;) {
                i64 q = M.at(i + 1, i) / M.at(i, i);
                red.add_row(i + 1, i, -q);
                if (M.at(i + 1, i) == 0) break;
                red.swap_rows(i, i + 1);
            }
            for (;;) {
                i64 q = M.at(i, i + 1) / M.at(i, i);
                red.add_col(i + 1, i, -q);
                if (M.at(i, i + 1) == 0) break;
                red.swap_cols(i, i + 1);
            }
            if (M.at(i, i) < 0) red.negate_row(i);
            if (M.at(i + 1, i + 1) < 0) red.negate_row(i + 1);
        }
    }

    SmithForm out;
    out.D = std::move(red.A);
    out.U = std::move(red.U);
    out.Uinv = std::move(red.Uinv);
    out.V = std::move(red.V);
    out.Vinv = std::move(red.Vinv);
    out.rank = t;
    out.divisors.reserve(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) out.divisors.push_back(out.D.at(i, i));
    return out;
}

std::optional<std::vector<i64>> solve_integer(const SmithForm& snf, const std::vector<i64>& b) {
    if (static_cast<int>(b.size()) != snf.D.rows) throw InternalError("solve_integer shape mismatch");
    std::vector<i64> ub = snf.U.apply(b);
    std::vector<i64> y(static_cast<size_t>(snf.D.cols), 0);
    for (int i = 0; i < snf.D.rows; ++i) {
        if (i < snf.rank) {
            i64 d = snf.D.at(i, i);
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.V.apply(y);
}

std::optional<std::vector<i64>> solve_integer(const IntMat& A, const std::vector<i64>& b) {
    return solve_integer(smith_normal_form(A), b);
}

IntMat kernel_basis(const IntMat& A) {
    SmithForm snf = smith_normal_form(A);
    int k = A.cols - snf.rank;
    IntMat K(A.cols, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < A.cols; ++i) K.at(i, j) = snf.V.at(i, snf.rank + j);
    return K;
}

}  // namespace zk
