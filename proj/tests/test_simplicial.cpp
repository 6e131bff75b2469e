#include <doctest.h>

#include "util.hpp"
#include "zk/polytope.hpp"
#include "zk/simplicial.hpp"

using namespace zk;
using namespace zktest;

TEST_CASE("build_complex closes downward and keeps all singletons") {
    SimplicialComplex K = SimplicialComplex::build({{1, 2}, {2, 3}}, 3);
    CHECK(K.contains(0));
    CHECK(K.contains(vset({1})));
    CHECK(K.contains(vset({2})));
    CHECK(K.contains(vset({3})));
    CHECK(K.contains(vset({1, 2})));
    CHECK(K.contains(vset({2, 3})));
    CHECK_FALSE(K.contains(vset({1, 3})));
    CHECK(K.dim() == 1);

    SimplicialComplex point = SimplicialComplex::build({{1}}, 1);
    CHECK(point.simplex_count() == 2);  // empty simplex and the point

    // Isolated labels still become vertices.
    SimplicialComplex ghost = SimplicialComplex::build({{1, 2}}, 4);
    CHECK(ghost.contains(vset({4})));
}

TEST_CASE("build_complex rejects bad input") {
    CHECK_THROWS_AS(SimplicialComplex::build({{1, 1}}, 2), ValidationError);
    CHECK_THROWS_AS(SimplicialComplex::build({{1, 5}}, 4), ValidationError);
    CHECK_THROWS_AS(SimplicialComplex::build({{0}}, 2), ValidationError);
}

TEST_CASE("icosahedron face counts from the dodecahedron dual") {
    SimplicialComplex K = dual_complex(SimplePolytope3::dodecahedron());
    CHECK(K.vertex_count() == 12);
    CHECK(K.simplices_of_dim(0).size() == 12);
    CHECK(K.simplices_of_dim(1).size() == 30);
    CHECK(K.simplices_of_dim(2).size() == 20);
    CHECK(12 - 30 + 20 == 2);
}

TEST_CASE("full subcomplex keeps original labels and restricts transitively") {
    SimplicialComplex K = SimplicialComplex::build({{1, 2, 3}, {3, 4}, {4, 5}}, 5);
    CHECK(K.full_subcomplex(K.ground()) == K);
    SimplicialComplex nothing = K.full_subcomplex(0);
    CHECK(nothing.is_empty_complex());
    CHECK(nothing.simplex_count() == 1);

    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        SimplicialComplex R = random_complex(rng, 8);
        VSet J1 = random_subset(rng, R.ground());
        VSet J2 = J1 & random_subset(rng, R.ground());
        CHECK(R.full_subcomplex(J1).full_subcomplex(J2) == R.full_subcomplex(J2));
    }

    CHECK_THROWS_AS(K.full_subcomplex(vbit(6)), ValidationError);
}

TEST_CASE("coboundary: coaugmentation and the fixed edge sign") {
    SimplicialComplex two = SimplicialComplex::build({{1}, {2}}, 2);
    Cochain chi_empty = Cochain::chi(two, 0);
    Cochain d = coboundary(chi_empty);
    CHECK(d == Cochain::chi(two, vset({1})) + Cochain::chi(two, vset({2})));

    SimplicialComplex edge = SimplicialComplex::build({{1, 2}}, 2);
    CHECK(coboundary(Cochain::chi(edge, vset({1}))) == -Cochain::chi(edge, vset({1, 2})));
    CHECK(coboundary(Cochain::chi(edge, vset({2}))) == Cochain::chi(edge, vset({1, 2})));
}

TEST_CASE("d after d is zero on random complexes") {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        SimplicialComplex K = random_complex(rng, 8);
        for (int deg = -1; deg <= K.dim(); ++deg) {
            Cochain c(K, deg);
            for (VSet s : K.simplices_of_dim(deg)) c.add_term(s, rng.coeff(3));
            CHECK(coboundary(coboundary(c)).is_zero());
        }
    }
}

TEST_CASE("reduced cohomology of spheres, points and the empty complex") {
    SimplicialComplex icosa = dual_complex(SimplePolytope3::dodecahedron());
    ReducedCohomology h = reduced_cohomology(icosa);
    CHECK(h.group(-1).is_zero());
    CHECK(h.group(0).is_zero());
    CHECK(h.group(1).is_zero());
    CHECK(h.group(2) == AbelianGroup{1, {}});

    SimplicialComplex two = SimplicialComplex::build({{1}, {2}}, 2);
    CHECK(reduced_cohomology(two).group(0) == AbelianGroup{1, {}});
    CHECK(reduced_cohomology(two).group(-1).is_zero());

    SimplicialComplex empty = SimplicialComplex::build({}, 0);
    CHECK(reduced_cohomology(empty).group(-1) == AbelianGroup{1, {}});
}

TEST_CASE("cones are acyclic") {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        SimplicialComplex K = random_complex(rng, 6);
        // Cone over a fresh apex.
        int apex = 0;
        for (int v = 1; v <= kMaxLabel; ++v)
            if (!vhas(K.ground(), v)) {
                apex = v;
                break;
            }
        std::vector<std::vector<int>> maximal;
        for (VSet s : K.all_simplices()) {
            auto verts = vlist(s);
            verts.push_back(apex);
            maximal.push_back(verts);
        }
        int m = std::max(apex, vlist(K.ground()).empty() ? 0 : vlist(K.ground()).back());
        SimplicialComplex cone = SimplicialComplex::build(maximal, m);
        CHECK(cone.is_cone());
        ReducedCohomology h = reduced_cohomology(cone);
        for (int q = -1; q <= cone.dim(); ++q) CHECK(h.group(q).is_zero());
    }
}

TEST_CASE("six-vertex projective plane has 2-torsion") {
    SimplicialComplex rp2 = SimplicialComplex::build(
        {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}},
        6);
    // Sanity: a closed surface (every edge in exactly two triangles).
    for (VSet e : rp2.simplices_of_dim(1)) {
        int count = 0;
        for (VSet t : rp2.simplices_of_dim(2))
            if ((t & e) == e) ++count;
        CHECK(count == 2);
    }
    ReducedCohomology h = reduced_cohomology(rp2);
    CHECK(h.group(0).is_zero());
    CHECK(h.group(1).is_zero());
    CHECK(h.group(2) == AbelianGroup{0, {2}});
}

TEST_CASE("certificate subcomplexes of the icosahedron") {
    SimplicialComplex K = dual_complex(SimplePolytope3::dodecahedron());
    VSet J1 = vset({5, 6, 7}), J2 = vset({2, 9}), J3 = vset({3, 4});

    SimplicialComplex big = K.full_subcomplex(J1 | J2 | J3);
    CHECK(big.dim() >= 1);
    ReducedCohomology h = reduced_cohomology(big);
    CHECK(h.group(1) == AbelianGroup{1, {}});

    for (VSet J : {J1 | J2, J2 | J3}) {
        ReducedCohomology sub = reduced_cohomology(K.full_subcomplex(J));
        for (int q = -1; q <= 2; ++q) CHECK(sub.group(q).is_zero());
    }
}

TEST_CASE("cohomology generators are cocycles representing their classes") {
    Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        SimplicialComplex K = random_complex(rng, 7);
        ReducedCohomology h = reduced_cohomology(K);
        for (int q = -1; q <= K.dim(); ++q) {
            const CohomologyPiece& piece = h.piece(q);
            auto gens = piece.generator_cocycles();
            size_t expected = static_cast<size_t>(piece.group().free_rank) + piece.group().torsion.size();
            CHECK(gens.size() == expected);
            for (const auto& g : gens) {
                CHECK(piece.is_cocycle(g));
                CHECK_FALSE(piece.class_is_zero(g));
            }
        }
    }
}

TEST_CASE("abelian group direct sum canonicalizes torsion") {
    AbelianGroup a{1, {2}};
    AbelianGroup b{0, {3}};
    CHECK(AbelianGroup::direct_sum(a, b) == AbelianGroup{1, {6}});
    AbelianGroup c{0, {2, 4}};
    AbelianGroup d{0, {8}};
    CHECK(AbelianGroup::direct_sum(c, d) == AbelianGroup{0, {2, 4, 8}});
    CHECK(AbelianGroup::direct_sum(AbelianGroup{0, {6}}, AbelianGroup{0, {4}}) == AbelianGroup{0, {2, 12}});
}
