#include "zk/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace zk {

Belt Belt::canonical() const {
    const size_t n = facets.size();
    if (n == 0) return *this;
    std::vector<int> best;
    std::vector<int> cur(n);
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<int> seq = facets;
        if (dir == 1) std::reverse(seq.begin(), seq.end());
        for (size_t r = 0; r < n; ++r) {
            for (size_t i = 0; i < n; ++i) cur[i] = seq[(r + i) % n];
            if (best.empty() || cur < best) best = cur;
        }
    }
    Belt b;
    b.facets = best;
    return b;
}

std::string Belt::render() const {
    std::string out = "(";
    for (size_t i = 0; i < facets.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(facets[i]);
    }
    return out + ")";
}

i64 PVector::total() const {
    i64 t = 0;
    for (i64 c : counts) t += c;
    return t;
}

i64 PVector::euler_combination() const {
    i64 s = 0;
    for (int k = 3; k < static_cast<int>(counts.size()); ++k) s += (6 - static_cast<i64>(k)) * counts[k];
    return s;
}

SimplePolytope3 SimplePolytope3::from_cycles(std::vector<std::vector<int>> facet_cycles) {
    SimplePolytope3 P;
    P.cycles_ = std::move(facet_cycles);
    P.validate();
    return P;
}

const std::vector<int>& SimplePolytope3::cycle(int i) const {
    if (i < 1 || i > facet_count()) throw ValidationError("facet index out of range: " + std::to_string(i));
    return cycles_[static_cast<size_t>(i - 1)];
}

bool SimplePolytope3::adjacent(int i, int j) const {
    const auto& c = cycle(i);
    return std::find(c.begin(), c.end(), j) != c.end();
}

int SimplePolytope3::edge_count() const {
    size_t total = 0;
    for (const auto& c : cycles_) total += c.size();
    return static_cast<int>(total / 2);
}

void SimplePolytope3::validate() {
    const int m = facet_count();
    if (m < 4) throw ValidationError("a simple 3-polytope has at least 4 facets");
    if (m > kMaxLabel) throw ValidationError("facet count exceeds supported maximum of 64");

    for (int i = 1; i <= m; ++i) {
        const auto& c = cycles_[static_cast<size_t>(i - 1)];
        if (c.size() < 3) throw ValidationError("facet " + std::to_string(i) + " has fewer than 3 edges");
        std::set<int> seen;
        for (int j : c) {
            if (j < 1 || j > m) throw ValidationError("facet index out of range in cycle of facet " + std::to_string(i));
            if (j == i) throw ValidationError("facet " + std::to_string(i) + " adjacent to itself");
            if (!seen.insert(j).second)
                throw ValidationError("facets " + std::to_string(i) + " and " + std::to_string(j) + " share two edges");
        }
    }
    for (int i = 1; i <= m; ++i)
        for (int j : cycles_[static_cast<size_t>(i - 1)])
            if (!adjacent(j, i))
                throw ValidationError("adjacency not symmetric between facets " + std::to_string(i) + " and " +
                                      std::to_string(j));

    // Each consecutive pair (a, b) around facet i is a polytope vertex
    // {i, a, b}; it must be seen from all three facets.
    std::map<std::array<int, 3>, int> triple_count;
    for (int i = 1; i <= m; ++i) {
        const auto& c = cycles_[static_cast<size_t>(i - 1)];
        const size_t n = c.size();
        for (size_t t = 0; t < n; ++t) {
            std::array<int, 3> key{i, c[t], c[(t + 1) % n]};
            std::sort(key.begin(), key.end());
            ++triple_count[key];
        }
    }
    vertices_.clear();
    for (const auto& [key, count] : triple_count) {
        if (count != 3)
            throw ValidationError("inconsistent facet cycles around vertex {" + std::to_string(key[0]) + "," +
                                  std::to_string(key[1]) + "," + std::to_string(key[2]) + "}");
        vertices_.push_back(key);
    }

    const int V = vertex_count();
    const int E = edge_count();
    if (V - E + m != 2) throw ValidationError("Euler relation V - E + F = 2 fails");
    if (3 * V != 2 * E) throw ValidationError("polytope is not simple (vertex degrees)");

    // Connectivity of the facet adjacency graph.
    std::vector<char> seen(static_cast<size_t>(m + 1), 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        ++reached;
        for (int j : cycles_[static_cast<size_t>(i - 1)])
            if (!seen[static_cast<size_t>(j)]) {
                seen[static_cast<size_t>(j)] = 1;
                stack.push_back(j);
            }
    }
    if (reached != m) throw ValidationError("facet adjacency graph is disconnected");
}

SimplePolytope3 SimplePolytope3::dodecahedron() {
    // Labeled so that the configuration construction started at facet 1 and
    // its lowest vertex produces roles F1..F9 = facets 1..9.
    return from_cycles({
        {2, 3, 6, 7, 4},     // 1
        {4, 1, 3, 5, 8},     // 2
        {1, 2, 5, 9, 6},     // 3
        {1, 2, 8, 10, 7},    // 4
        {2, 3, 9, 11, 8},    // 5
        {3, 1, 7, 12, 9},    // 6
        {1, 4, 10, 12, 6},   // 7
        {4, 2, 5, 11, 10},   // 8
        {5, 3, 6, 12, 11},   // 9
        {7, 4, 8, 11, 12},   // 10
        {8, 5, 9, 12, 10},   // 11
        {7, 6, 9, 11, 10},   // 12
    });
}

SimplePolytope3 SimplePolytope3::cube() {
    return from_cycles({
        {2, 3, 4, 5},  // 1 bottom
        {1, 3, 6, 5},  // 2
        {1, 4, 6, 2},  // 3
        {1, 5, 6, 3},  // 4
        {1, 2, 6, 4},  // 5
        {2, 5, 4, 3},  // 6 top
    });
}

SimplePolytope3 SimplePolytope3::tetrahedron() {
    return from_cycles({
        {2, 3, 4},
        {1, 3, 4},
        {1, 4, 2},
        {1, 2, 3},
    });
}

SimplePolytope3 SimplePolytope3::triangular_prism() {
    return from_cycles({
        {3, 4, 5},        // 1 top triangle
        {3, 5, 4},        // 2 bottom triangle
        {1, 4, 2, 5},     // 3
        {1, 5, 2, 3},     // 4
        {1, 3, 2, 4},     // 5
    });
}

SimplePolytope3 SimplePolytope3::pentagonal_prism() {
    return from_cycles({
        {3, 4, 5, 6, 7},  // 1 top pentagon
        {3, 7, 6, 5, 4},  // 2 bottom pentagon
        {1, 4, 2, 7},     // 3
        {1, 5, 2, 3},     // 4
        {1, 6, 2, 4},     // 5
        {1, 7, 2, 5},     // 6
        {1, 3, 2, 6},     // 7
    });
}

std::optional<SimplePolytope3> SimplePolytope3::by_name(const std::string& name) {
    if (name == "dodecahedron") return dodecahedron();
    if (name == "cube") return cube();
    if (name == "tetrahedron") return tetrahedron();
    if (name == "triangular-prism") return triangular_prism();
    if (name == "pentagonal-prism") return pentagonal_prism();
    return std::nullopt;
}

std::vector<std::string> SimplePolytope3::corpus_names() {
    return {"dodecahedron", "cube", "tetrahedron", "triangular-prism", "pentagonal-prism"};
}

SimplicialComplex dual_complex(const SimplePolytope3& P) {
    const int m = P.facet_count();
    std::vector<std::vector<int>> maximal;
    for (const auto& t : P.vertices()) maximal.push_back({t[0], t[1], t[2]});
    SimplicialComplex K = SimplicialComplex::build(maximal, m);

    // Adjacent facets must share a vertex (both endpoints of their edge).
    for (int i = 1; i <= m; ++i)
        for (int j : P.cycle(i))
            if (!K.contains(vbit(i) | vbit(j))) throw ValidationError("dual complex misses an adjacency edge");
    if (static_cast<int>(K.edges().size()) != P.edge_count())
        throw ValidationError("dual complex edge count disagrees with the polytope");

    // Triangulated 2-sphere: every edge lies in exactly two triangles and
    // every vertex link is a single cycle.
    const auto& triangles = K.simplices_of_dim(2);
    for (VSet e : K.edges()) {
        int count = 0;
        for (VSet t : triangles)
            if ((t & e) == e) ++count;
        if (count != 2) throw ValidationError("dual complex is not a closed surface (edge in " +
                                              std::to_string(count) + " triangles)");
    }
    for (int v = 1; v <= m; ++v) {
        std::map<int, std::vector<int>> link;  // neighbor -> neighbors within link
        for (VSet t : triangles)
            if (vhas(t, v)) {
                auto rest = vlist(t ^ vbit(v));
                link[rest[0]].push_back(rest[1]);
                link[rest[1]].push_back(rest[0]);
            }
        if (link.empty()) throw ValidationError("isolated vertex in dual complex");
        for (const auto& [w, nbrs] : link)
            if (nbrs.size() != 2) throw ValidationError("vertex link is not a cycle");
        // Single cycle: walk it.
        int start = link.begin()->first;
        int prev = start, cur = link[start][0];
        size_t steps = 1;
        while (cur != start) {
            const auto& nb = link[cur];
            int next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            ++steps;
        }
        if (steps != link.size()) throw ValidationError("vertex link is disconnected");
    }
    int V = K.vertex_count(), E = static_cast<int>(K.edges().size()),
        F = static_cast<int>(triangles.size());
    if (V - E + F != 2) throw ValidationError("dual complex Euler characteristic is not 2");
    return K;
}

std::vector<Belt> find_belts(const SimplePolytope3& P, int k) {
    if (k < 3) throw ValidationError("belts have length at least 3");
    const int m = P.facet_count();
    std::set<Belt> out;

    if (k == 3) {
        // Empty triangles: 3-cliques of the facet graph with no common vertex.
        for (int a = 1; a <= m; ++a)
            for (int b = a + 1; b <= m; ++b) {
                if (!P.adjacent(a, b)) continue;
                for (int c = b + 1; c <= m; ++c) {
                    if (!P.adjacent(a, c) || !P.adjacent(b, c)) continue;
                    std::array<int, 3> key{a, b, c};
                    if (std::binary_search(P.vertices().begin(), P.vertices().end(), key)) continue;
                    out.insert(Belt{{a, b, c}}.canonical());
                }
            }
        return {out.begin(), out.end()};
    }

    // Chordless k-cycles by DFS: smallest label first; the reflection is
    // killed by requiring the second vertex smaller than the last.
    std::vector<int> path;
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(path.size()) == k) {
            if (path[1] < path.back()) out.insert(Belt{path}.canonical());
            return;
        }
        int last = path.back();
        int s = path.front();
        bool closing_next = static_cast<int>(path.size()) + 1 == k;
        for (int w : P.cycle(last)) {
            if (w <= s) continue;
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            bool chord = false;
            for (size_t t = 1; t + 1 < path.size() && !chord; ++t)
                if (P.adjacent(path[t], w)) chord = true;
            if (chord) continue;
            // Touching the start is required exactly when the cycle closes.
            if (path.size() >= 2 && P.adjacent(w, s) != closing_next) continue;
            path.push_back(w);
            self(self);
            path.pop_back();
        }
    };
    for (int s = 1; s <= m; ++s) {
        path = {s};
        extend(extend);
    }
    return {out.begin(), out.end()};
}

FlagCheck is_flag(const SimplePolytope3& P) {
    FlagCheck r;
    bool complete = true;
    for (int i = 1; i <= P.facet_count() && complete; ++i)
        for (int j = i + 1; j <= P.facet_count() && complete; ++j)
            if (!P.adjacent(i, j)) complete = false;
    if (P.facet_count() == 4 && complete) {
        r.is_simplex = true;
        return r;
    }
    auto belts3 = find_belts(P, 3);
    if (!belts3.empty()) {
        r.three_belt = belts3.front();
        return r;
    }
    r.flag = true;
    return r;
}

PogorelovCheck is_pogorelov(const SimplePolytope3& P) {
    PogorelovCheck r;
    r.flag = is_flag(P);
    if (!r.flag.flag) return r;
    auto belts4 = find_belts(P, 4);
    if (!belts4.empty()) {
        r.four_belt = belts4.front();
        return r;
    }
    r.pogorelov = true;
    return r;
}

PVector p_vector(const SimplePolytope3& P) {
    PVector pv;
    int maxk = 3;
    for (int i = 1; i <= P.facet_count(); ++i) maxk = std::max(maxk, P.facet_size(i));
    pv.counts.assign(static_cast<size_t>(maxk + 1), 0);
    for (int i = 1; i <= P.facet_count(); ++i) ++pv.counts[static_cast<size_t>(P.facet_size(i))];
    if (pv.euler_combination() != 12) throw ValidationError("p-vector fails the Euler identity");
    if (is_pogorelov(P).pogorelov) {
        if (pv.p(3) != 0 || pv.p(4) != 0 || pv.p(5) < 12)
            throw InternalError("Pogorelov polytope with impossible p-vector");
    }
    return pv;
}

namespace {

Belt verified_belt(const SimplePolytope3& P, std::vector<int> seq, const std::string& what) {
    const int k = static_cast<int>(seq.size());
    std::set<int> distinct(seq.begin(), seq.end());
    bool ok = static_cast<int>(distinct.size()) == k && k >= 3;
    for (int a = 0; a < k && ok; ++a)
        for (int b = a + 1; b < k && ok; ++b) {
            bool consecutive = (b == a + 1) || (a == 0 && b == k - 1);
            if (P.adjacent(seq[static_cast<size_t>(a)], seq[static_cast<size_t>(b)]) != consecutive) ok = false;
        }
    if (ok && k == 3) {
        std::array<int, 3> key{seq[0], seq[1], seq[2]};
        std::sort(key.begin(), key.end());
        if (std::binary_search(P.vertices().begin(), P.vertices().end(), key)) ok = false;
    }
    if (!ok) throw InternalError(what + " is not a belt");
    return Belt{std::move(seq)};
}

}  // namespace

Belt belt_around_facet(const SimplePolytope3& P, int i) {
    if (!is_flag(P).flag) throw PreconditionError("belt_around_facet requires a flag polytope");
    return verified_belt(P, P.cycle(i), "facet neighborhood");
}

Belt belt_around_pair(const SimplePolytope3& P, int i, int j) {
    if (!is_pogorelov(P).pogorelov) throw PreconditionError("belt_around_pair requires a Pogorelov polytope");
    if (!P.adjacent(i, j)) throw PreconditionError("belt_around_pair requires adjacent facets");

    std::set<int> members;
    for (int f : P.cycle(i))
        if (f != j) members.insert(f);
    for (int f : P.cycle(j))
        if (f != i) members.insert(f);

    // Walk the cyclic order: inside the member set each facet has exactly
    // two adjacent members when the surrounding set is a belt.
    std::vector<int> seq;
    int start = *members.begin();
    int prev = -1, cur = start;
    do {
        seq.push_back(cur);
        std::vector<int> next;
        for (int f : members)
            if (f != cur && P.adjacent(cur, f)) next.push_back(f);
        if (next.size() != 2) throw InternalError("pair neighborhood is not a cycle");
        cur = (next[0] == prev) ? next[1] : next[0];
        prev = seq.back();
    } while (cur != start);
    if (seq.size() != members.size()) throw InternalError("pair neighborhood walk missed facets");

    Belt b = verified_belt(P, seq, "pair neighborhood");
    int expect = P.facet_size(i) + P.facet_size(j) - 4;
    if (b.length() != expect) throw InternalError("pair belt has unexpected length");
    return b;
}

}  // namespace zk
