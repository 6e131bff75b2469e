#pragma once

// Test-only helpers: seeded deterministic randomness and independent
// brute-force oracles. Nothing here may call into the code paths it checks.

#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <unordered_set>

#include "zk/polytope.hpp"
#include "zk/simplicial.hpp"

namespace zktest {

using namespace zk;

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(u64 seed) : gen(seed) {}
    // Uniform-ish in [0, n); the slight modulo bias is irrelevant here and
    // keeps the stream implementation-independent.
    u64 operator()(u64 n) { return n == 0 ? 0 : gen() % n; }
    i64 coeff(i64 bound) { return static_cast<i64>((*this)(2 * static_cast<u64>(bound) + 1)) - bound; }
};

inline SimplicialComplex random_complex(Rng& rng, int max_m, int max_simplex = 4) {
    int m = 2 + static_cast<int>(rng(static_cast<u64>(max_m - 1)));
    int count = 1 + static_cast<int>(rng(static_cast<u64>(m + 2)));
    std::vector<std::vector<int>> maximal;
    for (int c = 0; c < count; ++c) {
        int size = 1 + static_cast<int>(rng(static_cast<u64>(std::min(m, max_simplex))));
        std::set<int> s;
        while (static_cast<int>(s.size()) < size) s.insert(1 + static_cast<int>(rng(static_cast<u64>(m))));
        maximal.emplace_back(s.begin(), s.end());
    }
    return SimplicialComplex::build(maximal, m);
}

inline VSet random_subset(Rng& rng, VSet ground) {
    VSet out = 0;
    for (int v : vlist(ground))
        if (rng(2)) out |= vbit(v);
    return out;
}

// --- Exact rational rank via Bareiss fraction-free elimination. ---

inline int bareiss_rank(std::vector<std::vector<i64>> M) {
    const int rows = static_cast<int>(M.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(M[0].size());
    int rank = 0;
    i64 prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (M[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(M[rank], M[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                M[r][c] = (checked_sub(checked_mul(M[rank][col], M[r][c]), checked_mul(M[r][col], M[rank][c]))) / prev;
            M[r][col] = 0;
        }
        prev = M[rank][col];
        ++rank;
    }
    return rank;
}

inline i64 bareiss_det(std::vector<std::vector<i64>> M) {
    const int n = static_cast<int>(M.size());
    i64 sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (M[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(M[k], M[pivot]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c)
                M[r][c] = checked_sub(checked_mul(M[k][k], M[r][c]), checked_mul(M[r][k], M[k][c])) / prev;
        prev = M[k][k];
    }
    return n == 0 ? 1 : checked_mul(sign, M[n - 1][n - 1]);
}

// --- Brute-force lattice membership: rational span check, then coset
// enumeration of the generated subgroup inside (Z/N)^k, where N is the
// r-th determinantal divisor (the index of the lattice in its saturation).

inline void enumerate_combinations(int n, int r, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(static_cast<size_t>(r));
    std::iota(idx.begin(), idx.end(), 0);
    if (r > n) return;
    for (;;) {
        fn(idx);
        int i = r - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < r; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

inline bool lattice_member_bruteforce(const std::vector<std::vector<i64>>& columns, const std::vector<i64>& y) {
    const int k = static_cast<int>(y.size());
    std::vector<std::vector<i64>> At;  // rows = columns of the lattice matrix
    for (const auto& c : columns) {
        if (static_cast<int>(c.size()) != k) throw std::runtime_error("oracle: column length mismatch");
        At.push_back(c);
    }
    int r = bareiss_rank(At);
    {
        auto with_y = At;
        with_y.push_back(y);
        if (bareiss_rank(with_y) != r) return false;  // outside the rational span
    }
    if (r == 0) return true;  // y is rationally dependent on nothing => y = 0

    // N = gcd of all r x r minors.
    i64 N = 0;
    enumerate_combinations(static_cast<int>(At.size()), r, [&](const std::vector<int>& rowsel) {
        enumerate_combinations(k, r, [&](const std::vector<int>& colsel) {
            std::vector<std::vector<i64>> sub(static_cast<size_t>(r), std::vector<i64>(static_cast<size_t>(r)));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    sub[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        At[static_cast<size_t>(rowsel[static_cast<size_t>(i)])]
                          [static_cast<size_t>(colsel[static_cast<size_t>(j)])];
            N = std::gcd(N, bareiss_det(sub));
        });
    });
    if (N < 0) N = -N;
    if (N == 0) throw std::runtime_error("oracle: zero determinantal divisor at full rank");
    if (N == 1) return true;  // saturated lattice: rational membership suffices

    // BFS closure of the subgroup generated by the columns inside (Z/N)^k.
    auto encode = [&](const std::vector<i64>& v) {
        u64 code = 0;
        for (int i = 0; i < k; ++i) {
            i64 x = v[static_cast<size_t>(i)] % N;
            if (x < 0) x += N;
            code = code * static_cast<u64>(N) + static_cast<u64>(x);
        }
        return code;
    };
    double size_bound = 1;
    for (int i = 0; i < k; ++i) size_bound *= static_cast<double>(N);
    if (size_bound > 6e6) throw std::runtime_error("oracle: modular group too large for brute force");

    std::unordered_set<u64> seen;
    std::queue<std::vector<i64>> frontier;
    std::vector<i64> zero(static_cast<size_t>(k), 0);
    seen.insert(encode(zero));
    frontier.push(zero);
    const u64 target = encode(y);
    if (target == encode(zero)) return true;
    while (!frontier.empty()) {
        std::vector<i64> cur = frontier.front();
        frontier.pop();
        for (const auto& g : columns) {
            std::vector<i64> nxt(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i) nxt[static_cast<size_t>(i)] = (cur[static_cast<size_t>(i)] + g[static_cast<size_t>(i)]) % N;
            u64 code = encode(nxt);
            if (seen.insert(code).second) {
                if (code == target) return true;
                frontier.push(nxt);
            }
        }
    }
    return seen.count(target) != 0;
}

// --- Independent belt oracle: induced k-cycles by subset enumeration. ---

inline std::set<Belt> belts_by_subset_enumeration(const SimplePolytope3& P, int k) {
    std::set<Belt> out;
    const int m = P.facet_count();
    std::vector<int> all(static_cast<size_t>(m));
    std::iota(all.begin(), all.end(), 1);
    enumerate_combinations(m, k, [&](const std::vector<int>& sel) {
        std::vector<int> s;
        for (int i : sel) s.push_back(all[static_cast<size_t>(i)]);
        // Induced subgraph must be a single cycle: all degrees 2, connected.
        std::vector<std::vector<int>> nbr(s.size());
        for (size_t a = 0; a < s.size(); ++a)
            for (size_t b = 0; b < s.size(); ++b)
                if (a != b && P.adjacent(s[a], s[b])) nbr[a].push_back(static_cast<int>(b));
        for (const auto& n : nbr)
            if (n.size() != 2) return;
        std::vector<char> visited(s.size(), 0);
        std::vector<int> order{0};
        visited[0] = 1;
        int prev = -1;
        while (static_cast<int>(order.size()) < k) {
            int cur = order.back();
            int next = nbr[static_cast<size_t>(cur)][0] == prev ? nbr[static_cast<size_t>(cur)][1]
                                                                : nbr[static_cast<size_t>(cur)][0];
            if (visited[static_cast<size_t>(next)]) return;  // two short cycles, not one k-cycle
            visited[static_cast<size_t>(next)] = 1;
            prev = cur;
            order.push_back(next);
        }
        int closing = order.back();
        if (nbr[static_cast<size_t>(closing)][0] != 0 && nbr[static_cast<size_t>(closing)][1] != 0) return;
        std::vector<int> facets;
        for (int idx : order) facets.push_back(s[static_cast<size_t>(idx)]);
        if (k == 3) {
            std::array<int, 3> key{facets[0], facets[1], facets[2]};
            std::sort(key.begin(), key.end());
            if (std::binary_search(P.vertices().begin(), P.vertices().end(), key)) return;
        }
        out.insert(Belt{facets}.canonical());
    });
    return out;
}

}  // namespace zktest
