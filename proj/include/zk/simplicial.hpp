#pragma once

#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "zk/base.hpp"
#include "zk/snf.hpp"

namespace zk {

// Finite simplicial complex on a fixed vertex set, simplices stored as
// bitmasks over the original 1-based labels. Always contains the empty
// simplex; contains every singleton of its ground set. The complex with
// empty ground set ("the empty complex") has {∅} as its only simplex.
class SimplicialComplex {
public:
    SimplicialComplex() {
        insert_closed(0);
        finalize_dims();
    }

    // Smallest downward-closed complex containing the given simplices and
    // all singletons of [m].
    static SimplicialComplex build(const std::vector<std::vector<int>>& maximal_simplices, int m);
    static SimplicialComplex on_ground(VSet ground);

    void add_simplex(VSet s);  // inserts s and all faces; vertices must lie in ground

    VSet ground() const { return ground_; }
    int vertex_count() const { return vcard(ground_); }
    bool is_empty_complex() const { return ground_ == 0; }
    int dim() const { return dim_; }

    bool contains(VSet s) const { return simplices_.count(s) != 0; }

    // Simplices of dimension d (d = -1 is the empty simplex), in
    // lexicographic order of their vertex lists.
    const std::vector<VSet>& simplices_of_dim(int d) const;
    size_t simplex_count() const { return simplices_.size(); }
    std::vector<VSet> all_simplices() const;

    // K_J: everything inside J, original labels kept.
    SimplicialComplex full_subcomplex(VSet J) const;

    // Edges of the 1-skeleton as masks of size 2.
    const std::vector<VSet>& edges() const { return simplices_of_dim(1); }
    bool has_edge(int a, int b) const { return contains(vbit(a) | vbit(b)); }

    // True if some vertex v joins every simplex: σ ∪ {v} ∈ K for all σ.
    bool is_cone() const;

    // Matrix of d : C^p -> C^{p+1} in the coaugmented complex (p >= -1),
    // columns indexed by simplices_of_dim(p), rows by dim p+1.
    IntMat coboundary_matrix(int p) const;

    bool operator==(const SimplicialComplex& o) const;

private:
    void insert_closed(VSet s);
    void finalize_dims();

    VSet ground_ = 0;
    std::unordered_set<u64> simplices_;
    std::vector<std::vector<VSet>> by_dim_;  // index d+1
    int dim_ = -1;
    static const std::vector<VSet> kNoSimplices;
};

// Integer simplicial cochain of fixed degree; keys are simplices of the
// complex with exactly degree+1 vertices, values nonzero.
struct Cochain {
    const SimplicialComplex* complex = nullptr;
    int degree = 0;
    std::map<VSet, i64, bool (*)(VSet, VSet)> coeffs{lex_less};

    Cochain() = default;
    Cochain(const SimplicialComplex& K, int deg) : complex(&K), degree(deg) {}

    // Characteristic cochain of a simplex.
    static Cochain chi(const SimplicialComplex& K, VSet simplex);

    void add_term(VSet s, i64 c);
    bool is_zero() const { return coeffs.empty(); }
    Cochain operator+(const Cochain& o) const;
    Cochain operator-() const;
    bool operator==(const Cochain& o) const { return degree == o.degree && coeffs == o.coeffs; }

    std::vector<i64> to_vector() const;  // in simplices_of_dim(degree) order
    static Cochain from_vector(const SimplicialComplex& K, int degree, const std::vector<i64>& v);

    std::string render() const;
};

// Coboundary with the face-insertion sign (-1)^{position}; the degree -1
// cochain on ∅ maps to the sum of all vertex cochains.
Cochain coboundary(const Cochain& c);

// Finitely generated abelian group in canonical form.
struct AbelianGroup {
    i64 free_rank = 0;
    std::vector<i64> torsion;  // d_i >= 2, d_i | d_{i+1}

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
    std::string render() const;

    // Canonicalized direct sum (recombines torsion via prime powers).
    static AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
};

// Cohomology of one spot ker(d_cur)/im(d_prev) of a cochain complex of
// free abelian groups, with enough data to express classes of cocycles.
class CohomologyPiece {
public:
    CohomologyPiece() = default;
    CohomologyPiece(IntMat d_prev, IntMat d_cur);

    const AbelianGroup& group() const { return group_; }
    int ambient_dim() const { return n_; }

    bool is_cocycle(const std::vector<i64>& z) const;

    // Coordinates of [z] over the presentation generators: torsion
    // coordinates reduced mod their order, then free coordinates.
    std::vector<i64> class_coords(const std::vector<i64>& z) const;
    bool class_is_zero(const std::vector<i64>& z) const;

    // Generator cocycles, torsion generators first (aligned with
    // group().torsion), then free generators.
    std::vector<std::vector<i64>> generator_cocycles() const;

    // Does [z] lie in the subgroup generated by the classes of gens?
    bool in_span(const std::vector<std::vector<i64>>& gens, const std::vector<i64>& z) const;

private:
    int n_ = 0;
    IntMat d_prev_, d_cur_;
    AbelianGroup group_;
    IntMat adapted_;             // n x k adapted kernel basis
    SmithForm adapted_snf_;      // for coordinate solves
    std::vector<i64> orders_;    // per adapted column: 0 free, 1 dead, e>1 torsion
};

// Reduced (coaugmented) integral cohomology in degrees -1..dim.
struct ReducedCohomology {
    std::vector<CohomologyPiece> pieces;  // index d+1

    const CohomologyPiece& piece(int degree) const;
    AbelianGroup group(int degree) const;  // zero group outside stored range
    int max_degree() const { return static_cast<int>(pieces.size()) - 2; }
};

ReducedCohomology reduced_cohomology(const SimplicialComplex& K);

}  // namespace zk
