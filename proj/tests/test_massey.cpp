#include <doctest.h>

#include <map>

#include "util.hpp"
#include "zk/massey.hpp"
#include "zk/pogorelov.hpp"

using namespace zk;
using namespace zktest;

namespace {

// Class of the first stored generator of H~^q(K_J), translated into R*(K).
std::optional<CohomologyClass> strand_generator_class(const SimplicialComplex& K, VSet J, int q) {
    SimplicialComplex sub = K.full_subcomplex(J);
    if (q > sub.dim()) return std::nullopt;
    ReducedCohomology h = reduced_cohomology(sub);
    const CohomologyPiece& piece = h.piece(q);
    if (piece.group().is_zero()) return std::nullopt;
    Cochain c = Cochain::from_vector(sub, q, piece.generator_cocycles().front());
    return CohomologyClass::from_cocycle(cochain_to_r(K, c, J));
}

// Independent verdict: membership of [b] in the indeterminacy subgroup of
// the full degree-(k-1) group, all strands of the whole vertex set at once.
bool full_group_trivial(const SimplicialComplex& K, const CohomologyClass& a1, const CohomologyClass& a3,
                        const MasseyResult& res) {
    if (res.b.is_zero()) return true;
    const int deg = res.degree;

    std::map<VSet, int> offset;  // strand support -> start of its block
    std::map<VSet, Strand> strands;
    int total = 0;
    for (VSet T = 0;; T = (T - K.ground()) & K.ground()) {
        int poly = deg - vcard(T);
        if (poly >= 0 && poly <= vcard(T)) {
            Strand s(K, T);
            int size = static_cast<int>(s.basis(poly).size());
            if (size > 0) {
                offset.emplace(T, total);
                strands.emplace(T, std::move(s));
                total += size;
            }
        }
        if (T == K.ground()) break;
    }

    auto embed = [&](const RElement& x) {
        std::vector<i64> big(static_cast<size_t>(total), 0);
        Multidegree md;
        if (x.is_zero()) return big;
        if (!x.is_homogeneous(&md)) throw std::runtime_error("full_group_trivial: inhomogeneous element");
        const Strand& s = strands.at(md.support);
        std::vector<i64> local = s.coords(x, deg - vcard(md.support));
        int start = offset.at(md.support);
        for (size_t i = 0; i < local.size(); ++i) big[static_cast<size_t>(start) + i] = local[i];
        return big;
    };

    std::vector<std::vector<i64>> columns;
    // Coboundaries of every strand in the degree below.
    for (const auto& [T, s] : strands) {
        int poly = deg - vcard(T);
        if (poly == 0) continue;
        IntMat d = s.differential_matrix(poly - 1);
        for (int j = 0; j < d.cols; ++j) {
            std::vector<i64> col(static_cast<size_t>(total), 0);
            for (int i = 0; i < d.rows; ++i) col[static_cast<size_t>(offset.at(T) + i)] = d.at(i, j);
            columns.push_back(std::move(col));
        }
    }
    // Products of the outer classes with generators of every compatible
    // strand of the complementary degree, over the whole vertex set.
    auto add_side = [&](const CohomologyClass& outer, bool left, int h_degree) {
        for (VSet T = 0;; T = (T - K.ground()) & K.ground()) {
            if ((T & outer.mdeg.support) == 0) {
                int poly = h_degree - vcard(T);
                if (poly >= 0 && poly <= vcard(T)) {
                    Strand s(K, T);
                    if (!s.basis(poly).empty()) {
                        CohomologyPiece piece = s.cohomology(poly);
                        for (const auto& gen : piece.generator_cocycles()) {
                            RElement x = s.element(poly, gen);
                            RElement prod = left ? multiply(outer.representative, x) : multiply(x, outer.representative);
                            if (!prod.is_zero()) columns.push_back(embed(prod));
                        }
                    }
                }
            }
            if (T == K.ground()) break;
        }
    };
    add_side(a1, true, deg - a1.degree);
    add_side(a3, false, deg - a3.degree);

    std::vector<i64> target = embed(res.b);
    IntMat A(total, static_cast<int>(columns.size()));
    for (size_t j = 0; j < columns.size(); ++j)
        for (int i = 0; i < total; ++i) A.at(i, static_cast<int>(j)) = columns[j][static_cast<size_t>(i)];
    return solve_integer(A, target).has_value();
}

// Brute-force verdict in the representative's strand coordinates.
bool strand_trivial_bruteforce(const SimplicialComplex& K, const MasseyResult& res) {
    if (res.b.is_zero()) return true;
    Strand strand(K, res.b_mdeg.support);
    int poly = vcard(res.b_mdeg.support) - res.b_mdeg.p;
    std::vector<std::vector<i64>> cols;
    for (const auto& g : res.indeterminacy)
        if (g.mdeg == res.b_mdeg) cols.push_back(strand.coords(g.rep, poly));
    IntMat d = strand.differential_matrix(poly - 1);
    for (int j = 0; j < d.cols; ++j) {
        std::vector<i64> col(static_cast<size_t>(d.rows));
        for (int i = 0; i < d.rows; ++i) col[static_cast<size_t>(i)] = d.at(i, j);
        cols.push_back(std::move(col));
    }
    return lattice_member_bruteforce(cols, strand.coords(res.b, poly));
}

}  // namespace

TEST_CASE("dodecahedron classes give a defined product with zero-obstruction lifts") {
    const auto P = SimplePolytope3::dodecahedron();
    SimplicialComplex K = dual_complex(P);
    PipelineClasses cls = build_classes(K, find_configuration(P));

    DefinednessCheck def = is_defined(cls.alpha, cls.beta, cls.gamma);
    REQUIRE(def.defined);
    CHECK(differential(def.a12) == multiply(cls.alpha.representative, cls.beta.representative));
    CHECK(differential(def.a23) == multiply(cls.beta.representative, cls.gamma.representative));
    // alpha*beta vanishes on the nose, so the first lift is zero.
    CHECK(multiply(cls.alpha.representative, cls.beta.representative).is_zero());
    CHECK(def.a12.is_zero());

    MasseyResult res = triple_massey(cls.alpha, cls.beta, cls.gamma);
    CHECK(res.degree == 9);
    CHECK_FALSE(res.trivial);
    CHECK(differential(res.b).is_zero());
    CHECK(res.b_mdeg.support == vset({2, 3, 4, 5, 6, 7, 9}));
    // b = -alpha·a23 lands on the chi_{4,7} monomial strand.
    REQUIRE(res.b.term_count() == 1);
    CHECK(res.b.terms().begin()->first.I == vset({4, 7}));
}

TEST_CASE("a nonzero pairwise product blocks definedness") {
    SimplicialComplex square = SimplicialComplex::build({{1, 2}, {2, 3}, {3, 4}, {4, 1}}, 4);
    auto a = strand_generator_class(square, vset({1, 3}), 0);
    auto b = strand_generator_class(square, vset({2, 4}), 0);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    DefinednessCheck def = is_defined(*a, *b, *a);
    CHECK_FALSE(def.defined);
    CHECK(def.obstruction.find("a1·a2") != std::string::npos);
    CHECK_THROWS_AS(triple_massey(*a, *b, *a), PreconditionError);
}

TEST_CASE("overlapping supports annihilate and leave the product defined") {
    SimplicialComplex path = SimplicialComplex::build({{1, 2}, {2, 3}, {3, 4}}, 4);
    auto a = strand_generator_class(path, vset({1, 3}), 0);
    auto b = strand_generator_class(path, vset({1, 4}), 0);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(multiply(a->representative, b->representative).is_zero());
    DefinednessCheck def = is_defined(*a, *b, *a);
    CHECK(def.defined);
}

TEST_CASE("zero middle class gives the trivial product") {
    SimplicialComplex square = SimplicialComplex::build({{1, 2}, {2, 3}, {3, 4}, {4, 1}}, 4);
    auto a = strand_generator_class(square, vset({1, 3}), 0);
    REQUIRE(a.has_value());
    CohomologyClass zero = CohomologyClass::zero(square, Multidegree{1, vset({2, 4})});
    MasseyResult res = triple_massey(*a, zero, *a);
    CHECK(res.defined);
    CHECK(res.b.is_zero());
    CHECK(res.trivial);
}

TEST_CASE("random re-lifts move the representative only inside the lattice") {
    const auto P = SimplePolytope3::dodecahedron();
    SimplicialComplex K = dual_complex(P);
    PipelineClasses cls = build_classes(K, find_configuration(P));
    MasseyResult res = triple_massey(cls.alpha, cls.beta, cls.gamma);

    Multidegree md23{0, cls.beta.mdeg.support | cls.gamma.mdeg.support};
    md23.p = 2 * vcard(md23.support) - (cls.beta.degree + cls.gamma.degree - 1);
    Strand strand23(K, md23.support);
    int poly23 = vcard(md23.support) - md23.p;
    IntMat ker23 = kernel_basis(strand23.differential_matrix(poly23));

    Multidegree md12{0, cls.alpha.mdeg.support | cls.beta.mdeg.support};
    md12.p = 2 * vcard(md12.support) - (cls.alpha.degree + cls.beta.degree - 1);
    Strand strand12(K, md12.support);
    int poly12 = vcard(md12.support) - md12.p;
    IntMat ker12 = kernel_basis(strand12.differential_matrix(poly12));

    Rng rng(505);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<i64> c23(static_cast<size_t>(ker23.cols));
        for (auto& v : c23) v = rng.coeff(2);
        std::vector<i64> c12(static_cast<size_t>(ker12.cols));
        for (auto& v : c12) v = rng.coeff(2);
        RElement a23 = res.a23 + strand23.element(poly23, ker23.apply(c23));
        RElement a12 = res.a12 + strand12.element(poly12, ker12.apply(c12));
        CHECK(differential(a23) == multiply(cls.beta.representative, cls.gamma.representative));
        CHECK(differential(a12) == multiply(cls.alpha.representative, cls.beta.representative));

        RElement b2 = multiply(cls.alpha.representative, a23).scaled(cls.alpha.degree % 2 == 0 ? -1 : 1) +
                      multiply(a12, cls.gamma.representative);
        CHECK(differential(b2).is_zero());
        std::vector<RElement> gens;
        for (const auto& g : res.indeterminacy)
            if (g.mdeg == res.b_mdeg) gens.push_back(g.rep);
        CHECK(strand_class_in_span(K, res.b_mdeg, gens, b2 - res.b));
    }
}

TEST_CASE("the 7-vertex core of the dodecahedron case is nontrivial at small scale") {
    SimplicialComplex icosa = dual_complex(SimplePolytope3::dodecahedron());
    SimplicialComplex core = icosa.full_subcomplex(vset({2, 3, 4, 5, 6, 7, 9}));
    CHECK(core.vertex_count() == 7);

    SimplicialComplex K1 = core.full_subcomplex(vset({5, 6, 7}));
    Cochain ca = Cochain::chi(K1, vbit(6)) + Cochain::chi(K1, vbit(7));
    CohomologyClass alpha = CohomologyClass::from_cocycle(cochain_to_r(core, ca, vset({5, 6, 7})));
    auto beta = strand_generator_class(core, vset({2, 9}), 0);
    auto gamma = strand_generator_class(core, vset({3, 4}), 0);
    REQUIRE(beta.has_value());
    REQUIRE(gamma.has_value());

    MasseyResult res = triple_massey(alpha, *beta, *gamma);
    CHECK(res.degree == 9);
    CHECK_FALSE(res.trivial);
    CHECK(full_group_trivial(core, alpha, *gamma, res) == res.trivial);
    CHECK(strand_trivial_bruteforce(core, res) == res.trivial);

    MasseyResult pruned = restrict_indeterminacy_by_multidegree(res);
    CHECK(pruned.indeterminacy.empty());
    CHECK(pruned.trivial == res.trivial);
}

TEST_CASE("verdicts agree with the full-group and brute-force routes on scanned instances") {
    std::vector<SimplicialComplex> pool;
    for (int id = 1; id <= 5; ++id) {
        std::vector<std::vector<int>> edges;
        for (auto [a, b] : obstruction_graphs()[static_cast<size_t>(id - 1)].edges) edges.push_back({a, b});
        pool.push_back(SimplicialComplex::build(edges, 6));
    }
    Rng rng(9090);
    for (int i = 0; i < 12; ++i) pool.push_back(random_complex(rng, 7, 3));

    int defined_count = 0, nontrivial_count = 0;
    for (const auto& K : pool) {
        // Candidate degree-3 classes: generators over non-edge pairs.
        std::vector<CohomologyClass> classes;
        auto verts = vlist(K.ground());
        for (size_t a = 0; a < verts.size(); ++a)
            for (size_t b = a + 1; b < verts.size(); ++b) {
                VSet J = vbit(verts[a]) | vbit(verts[b]);
                if (K.contains(J)) continue;
                if (auto c = strand_generator_class(K, J, 0)) classes.push_back(*c);
            }
        int budget = 8;
        for (size_t i = 0; i < classes.size() && budget > 0; ++i)
            for (size_t j = 0; j < classes.size() && budget > 0; ++j)
                for (size_t k = 0; k < classes.size() && budget > 0; ++k) {
                    if (i == j || j == k) continue;
                    DefinednessCheck def = is_defined(classes[i], classes[j], classes[k]);
                    if (!def.defined) continue;
                    --budget;
                    ++defined_count;
                    MasseyResult res = triple_massey(classes[i], classes[j], classes[k]);
                    if (!res.trivial) ++nontrivial_count;
                    CHECK(full_group_trivial(K, classes[i], classes[k], res) == res.trivial);
                    CHECK(strand_trivial_bruteforce(K, res) == res.trivial);
                    MasseyResult pruned = restrict_indeterminacy_by_multidegree(res);
                    CHECK(pruned.trivial == res.trivial);
                    CHECK(pruned.indeterminacy.size() <= res.indeterminacy.size());
                }
    }
    CHECK(defined_count >= 20);
    INFO("nontrivial instances found: ", nontrivial_count);
}
