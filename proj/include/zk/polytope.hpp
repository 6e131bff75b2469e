#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "zk/simplicial.hpp"

namespace zk {

// Cyclic sequence of facet indices; canonical form is the lexicographically
// smallest rotation/reflection.
struct Belt {
    std::vector<int> facets;

    int length() const { return static_cast<int>(facets.size()); }
    Belt canonical() const;
    bool operator==(const Belt& o) const { return canonical().facets == o.canonical().facets; }
    bool operator<(const Belt& o) const { return canonical().facets < o.canonical().facets; }
    std::string render() const;
};

struct PVector {
    std::vector<i64> counts;  // counts[k] = number of k-gonal facets

    i64 p(int k) const { return k < static_cast<int>(counts.size()) ? counts[k] : 0; }
    i64 total() const;
    // 3p3 + 2p4 + p5 - sum_{k>=7}(k-6)p_k
    i64 euler_combination() const;
};

// Combinatorial simple 3-polytope, given by each facet's cyclic sequence of
// neighboring facets. 1-based indices throughout. Vertices are the triples
// of facets meeting at a point.
class SimplePolytope3 {
public:
    static SimplePolytope3 from_cycles(std::vector<std::vector<int>> facet_cycles);

    int facet_count() const { return static_cast<int>(cycles_.size()); }
    int facet_size(int i) const { return static_cast<int>(cycle(i).size()); }
    const std::vector<int>& cycle(int i) const;
    const std::vector<std::vector<int>>& cycles() const { return cycles_; }

    bool adjacent(int i, int j) const;
    // Sorted facet triples meeting at the polytope's vertices.
    const std::vector<std::array<int, 3>>& vertices() const { return vertices_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const;

    // Corpus with fixed labelings.
    static SimplePolytope3 dodecahedron();
    static SimplePolytope3 cube();
    static SimplePolytope3 tetrahedron();
    static SimplePolytope3 triangular_prism();
    static SimplePolytope3 pentagonal_prism();
    static std::optional<SimplePolytope3> by_name(const std::string& name);
    static std::vector<std::string> corpus_names();

private:
    void validate();

    std::vector<std::vector<int>> cycles_;
    std::vector<std::array<int, 3>> vertices_;
};

// K_P: nerve of the facet cover; checked to be a triangulation of S^2.
SimplicialComplex dual_complex(const SimplePolytope3& P);

// All k-belts up to rotation/reflection, canonically ordered. k = 3 means
// empty triangles of K_P; k >= 4 chordless cycles of the facet graph.
std::vector<Belt> find_belts(const SimplePolytope3& P, int k);

struct FlagCheck {
    bool flag = false;
    bool is_simplex = false;       // failed because P = Δ³
    std::optional<Belt> three_belt;  // failed because of this 3-belt
};
FlagCheck is_flag(const SimplePolytope3& P);

struct PogorelovCheck {
    bool pogorelov = false;
    FlagCheck flag;
    std::optional<Belt> four_belt;
};
PogorelovCheck is_pogorelov(const SimplePolytope3& P);

// Facet-size census; throws if the Euler identity fails, and asserts the
// Pogorelov consequences (p3 = p4 = 0, p5 >= 12) when the input is Pogorelov.
PVector p_vector(const SimplePolytope3& P);

// The k-belt around facet i (flag polytopes only), k = |F_i|.
Belt belt_around_facet(const SimplePolytope3& P, int i);

// The (k1 + k2 - 4)-belt around an adjacent facet pair (Pogorelov only).
Belt belt_around_pair(const SimplePolytope3& P, int i, int j);

}  // namespace zk
