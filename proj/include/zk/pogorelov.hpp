#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "zk/hochster.hpp"
#include "zk/massey.hpp"
#include "zk/polytope.hpp"

namespace zk {

// Facets F1..F_{l+n-1} in the roles of the triple-with-belt configuration:
// F1 pentagonal, F2 l-gonal, F3 n-gonal meeting at a vertex, surrounded by
// the (l+n-4)-belt (F4, F8..F_{l+3}, F5, F_{l+4}..F_{l+n-1}, F6, F7).
struct Configuration {
    std::vector<int> role_to_facet;  // index 0 unused, 1..l+n-1
    int l = 0, n = 0;
    Belt belt;

    int facet(int role) const { return role_to_facet[static_cast<size_t>(role)]; }
    int role_count() const { return l + n - 1; }
    VSet J1() const;  // {F5, F6, F7}
    VSet J2() const;  // {F2} ∪ G3
    VSet J3() const;  // {F3, F4}
};

// Deterministic construction from the lowest-index pentagonal facet and its
// lexicographically lowest vertex. Requires a Pogorelov polytope.
Configuration find_configuration(const SimplePolytope3& P);

// One configuration per (pentagonal facet, vertex) start pair.
std::vector<Configuration> find_all_configurations(const SimplePolytope3& P);

// Explicit start point; start_vertex is a sorted facet triple containing f1.
Configuration configuration_from(const SimplePolytope3& P, int f1, const std::array<int, 3>& start_vertex);

struct PipelineClasses {
    CohomologyClass alpha, beta, gamma;
};

// alpha = [chi_{F6} + chi_{F7}] on K_{J1}, beta = [chi_{F2}] on K_{J2},
// gamma = [chi_{F4}] on K_{J3}, translated into R*(K_P).
PipelineClasses build_classes(const SimplicialComplex& K, const Configuration& config);

struct MasseyCertificate {
    std::string polytope_name;  // empty for file inputs
    std::string input_digest;
    int m = 0;
    std::shared_ptr<const SimplicialComplex> complex;  // owns the K_P all elements point into
    Configuration config;
    PipelineClasses classes;
    MasseyResult result;              // pruned indeterminacy
    std::vector<IndetGenerator> unpruned_indeterminacy;
    AbelianGroup strand_group;        // H of the representative's strand
    std::vector<i64> representative_coords;
    bool nontrivial = false;
};

// Full pipeline: configuration -> classes -> triple Massey -> multidegree
// pruning -> generator check. A trivial verdict is an internal error.
MasseyCertificate certify(const SimplePolytope3& P);
MasseyCertificate certify_with(const SimplePolytope3& P, const Configuration& config);

struct ObstructionGraph {
    int id = 0;
    std::vector<std::pair<int, int>> edges;  // on vertices 1..6
};

// The five 6-vertex obstruction graphs, as shipped edge-list data.
const std::array<ObstructionGraph, 5>& obstruction_graphs();

struct ObstructionHit {
    VSet vertices;
    int graph_id = 0;
    bool operator==(const ObstructionHit& o) const { return vertices == o.vertices && graph_id == o.graph_id; }
};

// All 6-subsets whose induced 1-skeleton is isomorphic to one of the five
// graphs. Parallel over subsets; deterministic output order.
std::vector<ObstructionHit> obstruction_scan(const SimplicialComplex& K);
std::vector<ObstructionHit> obstruction_scan_serial(const SimplicialComplex& K);

}  // namespace zk
