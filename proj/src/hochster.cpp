#include "zk/hochster.hpp"

#include <algorithm>
#include <atomic>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zk {

HochsterComponent hochster_component(const SimplicialComplex& K, VSet J, int q) {
    if ((J & ~K.ground()) != 0) throw ValidationError("hochster_component: J outside the vertex set");
    HochsterComponent out;
    out.J = J;
    out.q = q;
    SimplicialComplex sub = K.full_subcomplex(J);
    if (q < -1 || q > sub.dim()) return out;
    ReducedCohomology h = reduced_cohomology(sub);
    const CohomologyPiece& piece = h.piece(q);
    out.group = piece.group();
    for (const auto& g : piece.generator_cocycles()) out.generators.push_back(Cochain::from_vector(sub, q, g));
    return out;
}

i64 BettiTable::rank(int k) const {
    auto it = betti.find(k);
    return it == betti.end() ? 0 : it->second;
}

i64 BettiTable::euler_characteristic() const {
    i64 chi = 0;
    for (const auto& [k, b] : betti) chi += (k % 2 == 0) ? b : -b;
    return chi;
}

int BettiTable::top_degree() const {
    int top = 0;
    for (const auto& [k, b] : betti)
        if (b != 0) top = std::max(top, k);
    for (const auto& [k, t] : torsion)
        if (!t.empty()) top = std::max(top, k);
    return top;
}

namespace {

void guard_subsets(const SimplicialComplex& K, int max_m) {
    if (K.vertex_count() > max_m)
        throw PreconditionError("subset enumeration over " + std::to_string(K.vertex_count()) +
                                " vertices exceeds the guard (" + std::to_string(max_m) +
                                "); raise --max-m to override");
}

// Contributions of one full subcomplex, as (degree, group) pairs.
void accumulate(const SimplicialComplex& sub, int card, BettiTable& into) {
    ReducedCohomology h = reduced_cohomology(sub);
    for (int q = -1; q <= sub.dim(); ++q) {
        AbelianGroup g = h.group(q);
        if (g.is_zero()) continue;
        int degree = q + card + 1;
        if (g.free_rank != 0) into.betti[degree] += g.free_rank;
        auto& t = into.torsion[degree];
        t.insert(t.end(), g.torsion.begin(), g.torsion.end());
    }
}

void canonicalize(BettiTable& t) {
    for (auto it = t.betti.begin(); it != t.betti.end();)
        it = it->second == 0 ? t.betti.erase(it) : std::next(it);
    for (auto it = t.torsion.begin(); it != t.torsion.end();) {
        if (it->second.empty()) {
            it = t.torsion.erase(it);
            continue;
        }
        // Deterministic canonical form regardless of accumulation order.
        AbelianGroup merged;
        for (i64 d : it->second) merged = AbelianGroup::direct_sum(merged, AbelianGroup{0, {d}});
        it->second = merged.torsion;
        ++it;
    }
}

// Subset masks of the ground set, indexed densely for the parallel loop.
std::vector<VSet> enumerate_subsets(VSet ground) {
    std::vector<int> verts = vlist(ground);
    const size_t n = verts.size();
    std::vector<VSet> subsets(size_t{1} << n);
    for (size_t code = 0; code < subsets.size(); ++code) {
        VSet J = 0;
        for (size_t b = 0; b < n; ++b)
            if ((code >> b) & 1) J |= vbit(verts[b]);
        subsets[code] = J;
    }
    return subsets;
}

}  // namespace

BettiTable betti_numbers(const SimplicialComplex& K, int max_m) {
    guard_subsets(K, max_m);
    std::vector<VSet> subsets = enumerate_subsets(K.ground());
    BettiTable total;
    std::exception_ptr failure = nullptr;
    std::atomic<bool> failed{false};

#pragma omp parallel
    {
        BettiTable local;
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(subsets.size()); ++idx) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                VSet J = subsets[static_cast<size_t>(idx)];
                SimplicialComplex sub = K.full_subcomplex(J);
                if (J != 0 && sub.is_cone()) continue;  // cones contribute nothing
                accumulate(sub, vcard(J), local);
            } catch (...) {
#pragma omp critical(betti_failure)
                {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        }
#pragma omp critical(betti_merge)
        {
            for (const auto& [k, b] : local.betti) total.betti[k] += b;
            for (const auto& [k, t] : local.torsion) {
                auto& dst = total.torsion[k];
                dst.insert(dst.end(), t.begin(), t.end());
            }
        }
    }
    if (failure) std::rethrow_exception(failure);
    canonicalize(total);
    return total;
}

BettiTable betti_numbers_serial(const SimplicialComplex& K, int max_m) {
    guard_subsets(K, max_m);
    BettiTable total;
    for (VSet J : enumerate_subsets(K.ground())) accumulate(K.full_subcomplex(J), vcard(J), total);
    canonicalize(total);
    return total;
}

ManifoldReport manifold_checks(const SimplicialComplex& K, int max_m) {
    ManifoldReport r;
    r.table = betti_numbers(K, max_m);
    const int m = K.vertex_count();
    r.manifold_dim = m + 3;
    r.connected_ok = r.table.rank(0) == 1;
    r.two_connected_ok = r.table.rank(1) == 0 && r.table.rank(2) == 0;
    r.duality_ok = true;
    for (int k = 0; k <= r.manifold_dim; ++k)
        if (r.table.rank(k) != r.table.rank(r.manifold_dim - k)) r.duality_ok = false;
    if (r.table.top_degree() > r.manifold_dim) r.duality_ok = false;
    r.euler_ok = r.manifold_dim % 2 == 0 || r.table.euler_characteristic() == 0;
    if (!r.all_ok()) throw InternalError("manifold sanity checks failed for a polytopal complex");
    return r;
}

Cochain mu_product(const SimplicialComplex& K, const SimplicialComplex& sub_union,
                   const Cochain& a, VSet I, const Cochain& b, VSet J) {
    if ((I & ~K.ground()) || (J & ~K.ground())) throw ValidationError("mu_product: supports outside the complex");
    if (sub_union.ground() != (I | J)) throw ValidationError("mu_product: target subcomplex must sit on I ∪ J");
    RElement ra = cochain_to_r(K, a, I);
    RElement rb = cochain_to_r(K, b, J);
    RElement prod = multiply(ra, rb);
    int degree = a.degree + b.degree + 1;
    Multidegree md{vcard(I | J) - (degree + 1), I | J};
    return r_to_cochain(sub_union, prod, md);
}

}  // namespace zk
