#pragma once

#include <map>
#include <string>
#include <vector>

#include "zk/koszul.hpp"
#include "zk/simplicial.hpp"

namespace zk {

// One summand H̃^q(K_J) of the decomposition of H*(Z_K), sitting in total
// degree q + |J| + 1.
struct HochsterComponent {
    VSet J = 0;
    int q = 0;
    AbelianGroup group;
    std::vector<Cochain> generators;  // cocycles on K_J, torsion generators first

    int embedding_degree() const { return q + vcard(J) + 1; }
};

HochsterComponent hochster_component(const SimplicialComplex& K, VSet J, int q);

struct BettiTable {
    std::map<int, i64> betti;                 // degree -> rank (zero ranks omitted)
    std::map<int, std::vector<i64>> torsion;  // degree -> invariant factors

    i64 rank(int k) const;
    i64 euler_characteristic() const;
    int top_degree() const;
    bool operator==(const BettiTable& o) const { return betti == o.betti && torsion == o.torsion; }
};

inline constexpr int kDefaultBettiGuard = 24;

// b_k(Z_K) = sum over J of rank H̃^{k-|J|-1}(K_J), torsion carried along.
// Parallel over subsets J, cone subcomplexes skipped.
BettiTable betti_numbers(const SimplicialComplex& K, int max_m = kDefaultBettiGuard);

// Plain reference loop: no parallelism, no cone skip. Kept for tests and
// the benchmark.
BettiTable betti_numbers_serial(const SimplicialComplex& K, int max_m = kDefaultBettiGuard);

struct ManifoldReport {
    BettiTable table;
    int manifold_dim = 0;  // m + 3
    bool connected_ok = false;      // b0 = 1
    bool two_connected_ok = false;  // b1 = b2 = 0
    bool duality_ok = false;        // b_k = b_{m+3-k} (free parts)
    bool euler_ok = false;          // chi = 0 when m+3 is odd
    bool all_ok() const { return connected_ok && two_connected_ok && duality_ok && euler_ok; }
};

// Sanity checks for K = K_P of a simple 3-polytope; failures indicate an
// implementation bug, not bad input.
ManifoldReport manifold_checks(const SimplicialComplex& K, int max_m = kDefaultBettiGuard);

// Product of cochains on full subcomplexes, computed through R*(K) so the
// sign is canonical. Result lives on K_{I∪J}.
Cochain mu_product(const SimplicialComplex& K, const SimplicialComplex& sub_union,
                   const Cochain& a, VSet I, const Cochain& b, VSet J);

}  // namespace zk
