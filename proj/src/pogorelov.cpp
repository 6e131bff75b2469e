#include "zk/pogorelov.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zk {

VSet Configuration::J1() const { return vbit(facet(5)) | vbit(facet(6)) | vbit(facet(7)); }

VSet Configuration::J2() const {
    VSet s = vbit(facet(2));
    for (int r = l + 4; r <= l + n - 1; ++r) s |= vbit(facet(r));
    return s;
}

VSet Configuration::J3() const { return vbit(facet(3)) | vbit(facet(4)); }

namespace {

// The facet that together with (a, b) forms the other endpoint of the edge
// a ∩ b: the two vertices on that edge are {a,b,x} and {a,b,y}.
std::array<int, 2> edge_endpoints(const SimplePolytope3& P, int a, int b) {
    std::array<int, 2> ends{0, 0};
    int found = 0;
    for (const auto& t : P.vertices())
        if (std::count(t.begin(), t.end(), a) && std::count(t.begin(), t.end(), b)) {
            for (int f : t)
                if (f != a && f != b) ends[static_cast<size_t>(found++)] = f;
        }
    if (found != 2) throw InternalError("edge of adjacent facets must have two endpoints");
    return ends;
}

// Members of the facet cycle of `center` strictly between `from` and `to`,
// walking in the direction whose first step leaves `avoid`.
std::vector<int> arc_between(const SimplePolytope3& P, int center, int from, int to, int avoid) {
    const auto& cyc = P.cycle(center);
    const int len = static_cast<int>(cyc.size());
    int start = -1;
    for (int i = 0; i < len; ++i)
        if (cyc[static_cast<size_t>(i)] == from) start = i;
    if (start < 0) throw InternalError("arc_between: 'from' facet not around center");
    for (int dir : {1, -1}) {
        int first = cyc[static_cast<size_t>(((start + dir) % len + len) % len)];
        if (first == avoid) continue;
        std::vector<int> arc;
        for (int step = 1; step < len; ++step) {
            int f = cyc[static_cast<size_t>(((start + dir * step) % len + len) % len)];
            if (f == to) return arc;
            arc.push_back(f);
        }
        throw InternalError("arc_between: 'to' facet not around center");
    }
    throw InternalError("arc_between: no direction avoids the excluded facet");
}

void verify_configuration(const SimplePolytope3& P, const Configuration& c) {
    const int total = c.role_count();
    auto F = [&](int role) { return c.facet(role); };

    std::set<int> distinct(c.role_to_facet.begin() + 1, c.role_to_facet.end());
    if (static_cast<int>(distinct.size()) != total) throw InternalError("configuration facets not pairwise distinct");
    if (P.facet_size(F(1)) != 5 || P.facet_size(F(2)) != c.l || P.facet_size(F(3)) != c.n)
        throw InternalError("configuration facet sizes disagree with roles");

    // Adjacencies around the central triple.
    for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {1, 6}, {3, 6}, {1, 7}})
        if (!P.adjacent(F(a), F(b))) throw InternalError("configuration adjacency missing");
    // Stated disjointness relations.
    for (auto [a, b] : {std::pair{2, 6}, {3, 4}, {1, 5}})
        if (P.adjacent(F(a), F(b))) throw InternalError("configuration disjointness violated");
    for (int r2 = 8; r2 <= c.l + 3; ++r2) {
        if (P.adjacent(F(r2), F(7))) throw InternalError("G2 facet touches F7");
        for (int r3 = c.l + 4; r3 <= total; ++r3)
            if (P.adjacent(F(r2), F(r3))) throw InternalError("G2 facet touches G3 facet");
    }
    for (int r3 = c.l + 4; r3 <= total; ++r3)
        if (P.adjacent(F(r3), F(7))) throw InternalError("G3 facet touches F7");

    // Belts around F1, F2, F3 carry exactly the expected members.
    auto belt_set = [&](int role) {
        const auto& cyc = P.cycle(F(role));
        return std::set<int>(cyc.begin(), cyc.end());
    };
    std::set<int> want1{F(2), F(3), F(4), F(6), F(7)};
    if (belt_set(1) != want1) throw InternalError("belt around F1 has unexpected members");
    std::set<int> want2{F(1), F(3), F(4), F(5)};
    for (int r = 8; r <= c.l + 3; ++r) want2.insert(F(r));
    if (belt_set(2) != want2) throw InternalError("belt around F2 has unexpected members");
    std::set<int> want3{F(1), F(2), F(5), F(6)};
    for (int r = c.l + 4; r <= total; ++r) want3.insert(F(r));
    if (belt_set(3) != want3) throw InternalError("belt around F3 has unexpected members");

    // G2 chain endpoints touch F4 and F5; G3 endpoints touch F5 and F6.
    if (!P.adjacent(F(8), F(4)) || !P.adjacent(F(c.l + 3), F(5))) throw InternalError("G2 endpoints misplaced");
    if (!P.adjacent(F(c.l + 4), F(5)) || !P.adjacent(F(total), F(6))) throw InternalError("G3 endpoints misplaced");

    // The surrounding (l+n-4)-belt, as a belt and in the stated order.
    std::vector<int> expect{F(4)};
    for (int r = 8; r <= c.l + 3; ++r) expect.push_back(F(r));
    expect.push_back(F(5));
    for (int r = c.l + 4; r <= total; ++r) expect.push_back(F(r));
    expect.push_back(F(6));
    expect.push_back(F(7));
    if (!(Belt{expect} == c.belt)) throw InternalError("configuration belt disagrees with role order");
    if (c.belt.length() != c.l + c.n - 4) throw InternalError("configuration belt has wrong length");
    for (int a = 0; a < c.belt.length(); ++a)
        for (int b = a + 1; b < c.belt.length(); ++b) {
            bool consecutive = (b == a + 1) || (a == 0 && b == c.belt.length() - 1);
            if (P.adjacent(expect[static_cast<size_t>(a)], expect[static_cast<size_t>(b)]) != consecutive)
                throw InternalError("configuration belt is not a belt");
        }
}

}  // namespace

Configuration configuration_from(const SimplePolytope3& P, int f1, const std::array<int, 3>& start_vertex) {
    if (P.facet_size(f1) != 5) throw PreconditionError("configuration must start at a pentagonal facet");
    if (!std::count(start_vertex.begin(), start_vertex.end(), f1))
        throw PreconditionError("start vertex does not lie on the start facet");
    if (!std::binary_search(P.vertices().begin(), P.vertices().end(), start_vertex))
        throw PreconditionError("start vertex is not a vertex of the polytope");

    // F2, F3: the other two facets at the vertex, lower index first.
    std::array<int, 2> others{};
    int found = 0;
    for (int f : start_vertex)
        if (f != f1) others[static_cast<size_t>(found++)] = f;
    int f2 = std::min(others[0], others[1]);
    int f3 = std::max(others[0], others[1]);

    // F4: other facet at the far endpoint of edge F1∩F2 (one endpoint is the
    // start vertex, carrying F3). Similarly F5 for F2∩F3 and F6 for F1∩F3.
    auto other_end = [&](int a, int b, int at_start) {
        auto ends = edge_endpoints(P, a, b);
        if (ends[0] != at_start && ends[1] != at_start) throw InternalError("edge endpoints miss the start vertex");
        return ends[0] == at_start ? ends[1] : ends[0];
    };
    int f4 = other_end(f1, f2, f3);
    int f5 = other_end(f2, f3, f1);
    int f6 = other_end(f1, f3, f2);
    int f7 = 0;
    for (int f : P.cycle(f1))
        if (f != f2 && f != f3 && f != f4 && f != f6) f7 = f;
    if (f7 == 0) throw InternalError("fifth neighbor of F1 not found");

    Configuration c;
    c.l = P.facet_size(f2);
    c.n = P.facet_size(f3);
    c.role_to_facet.assign(static_cast<size_t>(c.l + c.n), 0);
    c.role_to_facet[1] = f1;
    c.role_to_facet[2] = f2;
    c.role_to_facet[3] = f3;
    c.role_to_facet[4] = f4;
    c.role_to_facet[5] = f5;
    c.role_to_facet[6] = f6;
    c.role_to_facet[7] = f7;

    // G2: around F2 from F4 to F5 avoiding F1; G3: around F3 from F5 to F6
    // avoiding F2.
    std::vector<int> g2 = arc_between(P, f2, f4, f5, f1);
    std::vector<int> g3 = arc_between(P, f3, f5, f6, f2);
    if (static_cast<int>(g2.size()) != c.l - 4) throw InternalError("G2 has wrong size");
    if (static_cast<int>(g3.size()) != c.n - 4) throw InternalError("G3 has wrong size");
    for (size_t i = 0; i < g2.size(); ++i) c.role_to_facet[8 + i] = g2[i];
    for (size_t i = 0; i < g3.size(); ++i) c.role_to_facet[static_cast<size_t>(c.l) + 4 + i] = g3[i];

    std::vector<int> belt{f4};
    belt.insert(belt.end(), g2.begin(), g2.end());
    belt.push_back(f5);
    belt.insert(belt.end(), g3.begin(), g3.end());
    belt.push_back(f6);
    belt.push_back(f7);
    c.belt = Belt{belt};

    verify_configuration(P, c);
    return c;
}

Configuration find_configuration(const SimplePolytope3& P) {
    if (!is_pogorelov(P).pogorelov) throw PreconditionError("configuration search requires a Pogorelov polytope");
    int f1 = 0;
    for (int i = 1; i <= P.facet_count() && f1 == 0; ++i)
        if (P.facet_size(i) == 5) f1 = i;
    if (f1 == 0) throw InternalError("Pogorelov polytope without pentagonal facets");
    for (const auto& v : P.vertices())
        if (std::count(v.begin(), v.end(), f1)) return configuration_from(P, f1, v);
    throw InternalError("facet without vertices");
}

std::vector<Configuration> find_all_configurations(const SimplePolytope3& P) {
    if (!is_pogorelov(P).pogorelov) throw PreconditionError("configuration search requires a Pogorelov polytope");
    std::vector<Configuration> out;
    for (int f1 = 1; f1 <= P.facet_count(); ++f1) {
        if (P.facet_size(f1) != 5) continue;
        for (const auto& v : P.vertices())
            if (std::count(v.begin(), v.end(), f1)) out.push_back(configuration_from(P, f1, v));
    }
    return out;
}

PipelineClasses build_classes(const SimplicialComplex& K, const Configuration& config) {
    VSet J1 = config.J1(), J2 = config.J2(), J3 = config.J3();
    SimplicialComplex K1 = K.full_subcomplex(J1);
    SimplicialComplex K2 = K.full_subcomplex(J2);
    SimplicialComplex K3 = K.full_subcomplex(J3);

    Cochain ca = Cochain::chi(K1, vbit(config.facet(6))) + Cochain::chi(K1, vbit(config.facet(7)));
    Cochain cb = Cochain::chi(K2, vbit(config.facet(2)));
    Cochain cc = Cochain::chi(K3, vbit(config.facet(4)));

    PipelineClasses out{CohomologyClass::from_cocycle(cochain_to_r(K, ca, J1)),
                        CohomologyClass::from_cocycle(cochain_to_r(K, cb, J2)),
                        CohomologyClass::from_cocycle(cochain_to_r(K, cc, J3))};
    if (out.alpha.degree != 4 || out.beta.degree != config.n - 2 || out.gamma.degree != 3)
        throw InternalError("pipeline class degrees disagree with the configuration");
    return out;
}

MasseyCertificate certify_with(const SimplePolytope3& P, const Configuration& config) {
    MasseyCertificate cert;
    cert.m = P.facet_count();
    cert.config = config;

    // The dual complex must outlive the certificate's RElements.
    cert.complex = std::make_shared<const SimplicialComplex>(dual_complex(P));
    const SimplicialComplex& K = *cert.complex;

    cert.classes = build_classes(K, config);
    MasseyResult raw = triple_massey(cert.classes.alpha, cert.classes.beta, cert.classes.gamma);
    cert.unpruned_indeterminacy = raw.indeterminacy;
    cert.result = restrict_indeterminacy_by_multidegree(raw);
    if (cert.result.degree != config.n + 4) throw InternalError("Massey product degree is not n + 4");

    // The representative must map to a generator of the rank-1 strand group.
    Strand strand(K, cert.result.b_mdeg.support);
    int poly = vcard(cert.result.b_mdeg.support) - cert.result.b_mdeg.p;
    CohomologyPiece piece = strand.cohomology(poly);
    cert.strand_group = piece.group();
    if (!(cert.strand_group == AbelianGroup{1, {}}))
        throw InternalError("strand of the representative is not isomorphic to Z");
    cert.representative_coords = piece.class_coords(strand.coords(cert.result.b, poly));
    if (cert.representative_coords.size() != 1 ||
        (cert.representative_coords[0] != 1 && cert.representative_coords[0] != -1))
        throw InternalError("representative is not a generator of the strand group");

    if (cert.result.trivial) throw InternalError("certified Massey product came out trivial");
    cert.nontrivial = true;
    return cert;
}

MasseyCertificate certify(const SimplePolytope3& P) { return certify_with(P, find_configuration(P)); }

const std::array<ObstructionGraph, 5>& obstruction_graphs() {
    // Edge lists transcribed from the five published 6-vertex diagrams;
    // graphs 2..5 drop {1,3}, {3,5}, both, and {1,3},{1,4},{3,5}.
    static const std::array<ObstructionGraph, 5> graphs = [] {
        std::vector<std::pair<int, int>> base{{1, 2}, {1, 3}, {1, 4}, {1, 6}, {2, 3},
                                              {2, 4}, {3, 5}, {3, 6}, {4, 5}, {5, 6}};
        auto minus = [&](std::vector<std::pair<int, int>> drop) {
            std::vector<std::pair<int, int>> out;
            for (auto e : base)
                if (std::find(drop.begin(), drop.end(), e) == drop.end()) out.push_back(e);
            return out;
        };
        return std::array<ObstructionGraph, 5>{
            ObstructionGraph{1, base},
            ObstructionGraph{2, minus({{1, 3}})},
            ObstructionGraph{3, minus({{3, 5}})},
            ObstructionGraph{4, minus({{1, 3}, {3, 5}})},
            ObstructionGraph{5, minus({{1, 3}, {1, 4}, {3, 5}})},
        };
    }();
    return graphs;
}

namespace {

// Adjacency bitmasks over vertices 0..5.
std::array<u64, 6> pattern_adjacency(const ObstructionGraph& g) {
    std::array<u64, 6> adj{};
    for (auto [a, b] : g.edges) {
        adj[static_cast<size_t>(a - 1)] |= u64{1} << (b - 1);
        adj[static_cast<size_t>(b - 1)] |= u64{1} << (a - 1);
    }
    return adj;
}

// Exact induced-subgraph isomorphism between two 6-vertex graphs.
bool six_isomorphic(const std::array<u64, 6>& a, const std::array<u64, 6>& b) {
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    auto degree = [](const std::array<u64, 6>& g, int v) { return std::popcount(g[static_cast<size_t>(v)]); };
    std::array<int, 6> da{}, db{};
    for (int v = 0; v < 6; ++v) {
        da[static_cast<size_t>(v)] = degree(a, v);
        db[static_cast<size_t>(v)] = degree(b, v);
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    do {
        bool ok = true;
        for (int v = 0; v < 6 && ok; ++v) {
            if (da[static_cast<size_t>(v)] != db[static_cast<size_t>(perm[static_cast<size_t>(v)])]) {
                ok = false;
                break;
            }
            for (int w = v + 1; w < 6 && ok; ++w) {
                bool ea = (a[static_cast<size_t>(v)] >> w) & 1;
                bool eb = (b[static_cast<size_t>(perm[static_cast<size_t>(v)])] >> perm[static_cast<size_t>(w)]) & 1;
                if (ea != eb) ok = false;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

int match_obstruction(const SimplicialComplex& K, const std::array<int, 6>& verts) {
    std::array<u64, 6> adj{};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (K.has_edge(verts[static_cast<size_t>(i)], verts[static_cast<size_t>(j)])) {
                adj[static_cast<size_t>(i)] |= u64{1} << j;
                adj[static_cast<size_t>(j)] |= u64{1} << i;
            }
    for (const auto& g : obstruction_graphs())
        if (six_isomorphic(adj, pattern_adjacency(g))) return g.id;
    return 0;
}

std::vector<std::array<int, 6>> six_subsets(const SimplicialComplex& K) {
    std::vector<int> verts = vlist(K.ground());
    const int n = static_cast<int>(verts.size());
    std::vector<std::array<int, 6>> out;
    if (n < 6) return out;
    std::array<int, 6> idx{0, 1, 2, 3, 4, 5};
    for (;;) {
        std::array<int, 6> subset;
        for (int i = 0; i < 6; ++i) subset[static_cast<size_t>(i)] = verts[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        out.push_back(subset);
        int i = 5;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - 6 + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < 6; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace

std::vector<ObstructionHit> obstruction_scan(const SimplicialComplex& K) {
    std::vector<std::array<int, 6>> subsets = six_subsets(K);
    std::vector<ObstructionHit> hits;
    std::exception_ptr failure = nullptr;
    std::atomic<bool> failed{false};

#pragma omp parallel
    {
        std::vector<ObstructionHit> local;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(subsets.size()); ++i) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                const auto& s = subsets[static_cast<size_t>(i)];
                int id = match_obstruction(K, s);
                if (id != 0) {
                    VSet mask = 0;
                    for (int v : s) mask |= vbit(v);
                    local.push_back({mask, id});
                }
            } catch (...) {
#pragma omp critical(scan_failure)
                {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        }
#pragma omp critical(scan_merge)
        hits.insert(hits.end(), local.begin(), local.end());
    }
    if (failure) std::rethrow_exception(failure);
    std::sort(hits.begin(), hits.end(), [](const ObstructionHit& a, const ObstructionHit& b) {
        return a.vertices != b.vertices ? lex_less(a.vertices, b.vertices) : a.graph_id < b.graph_id;
    });
    return hits;
}

std::vector<ObstructionHit> obstruction_scan_serial(const SimplicialComplex& K) {
    std::vector<ObstructionHit> hits;
    for (const auto& s : six_subsets(K)) {
        int id = match_obstruction(K, s);
        if (id != 0) {
            VSet mask = 0;
            for (int v : s) mask |= vbit(v);
            hits.push_back({mask, id});
        }
    }
    std::sort(hits.begin(), hits.end(), [](const ObstructionHit& a, const ObstructionHit& b) {
        return a.vertices != b.vertices ? lex_less(a.vertices, b.vertices) : a.graph_id < b.graph_id;
    });
    return hits;
}

}  // namespace zk
