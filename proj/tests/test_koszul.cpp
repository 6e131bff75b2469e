#include <doctest.h>

#include "util.hpp"
#include "zk/koszul.hpp"
#include "zk/polytope.hpp"

using namespace zk;
using namespace zktest;

namespace {

// Random element as a short combination of random monomials.
RElement random_element(Rng& rng, const SimplicialComplex& K) {
    RElement e(K);
    auto simplices = K.all_simplices();
    int terms = 1 + static_cast<int>(rng(3));
    for (int t = 0; t < terms; ++t) {
        VSet I = simplices[rng(simplices.size())];
        VSet J = random_subset(rng, K.ground() & ~I);
        e.add_term({J, I}, rng.coeff(3));
    }
    return e;
}

// Random element homogeneous in total degree (possibly zero).
RElement random_degree_homogeneous(Rng& rng, const SimplicialComplex& K) {
    RElement seed = random_element(rng, K);
    if (seed.is_zero()) return seed;
    int want = seed.terms().begin()->first.total_degree();
    RElement e(K);
    for (const auto& [m, c] : seed.terms())
        if (m.total_degree() == want) e.add_term(m, c);
    for (int extra = 0; extra < 6; ++extra) {
        RElement more = random_element(rng, K);
        for (const auto& [m, c] : more.terms())
            if (m.total_degree() == want) e.add_term(m, c);
    }
    return e;
}

}  // namespace

TEST_CASE("product relations of the quotient algebra") {
    SimplicialComplex K = SimplicialComplex::build({{1, 2}, {3}}, 3);
    RElement u1 = RElement::monomial(K, vset({1}), 0);
    RElement u2 = RElement::monomial(K, vset({2}), 0);
    RElement v1 = RElement::monomial(K, 0, vset({1}));
    RElement v3 = RElement::monomial(K, 0, vset({3}));

    CHECK(multiply(u1, v1).is_zero());                       // u_i v_i = 0
    CHECK(multiply(u1, u1).is_zero());                       // u_i^2 = 0
    CHECK(multiply(v1, v1).is_zero());                       // v_i^2 = 0
    CHECK(multiply(u1, u2) == RElement::monomial(K, vset({1, 2}), 0));
    CHECK(multiply(u2, u1) == -RElement::monomial(K, vset({1, 2}), 0));
    CHECK(multiply(v1, v3).is_zero());                       // {1,3} not a simplex
    RElement v12 = multiply(v1, RElement::monomial(K, 0, vset({2})));
    CHECK(v12 == RElement::monomial(K, 0, vset({1, 2})));
}

TEST_CASE("differential on generators and the Leibniz example") {
    SimplicialComplex K = SimplicialComplex::build({{1, 2}}, 2);
    RElement u1 = RElement::monomial(K, vset({1}), 0);
    RElement v1 = RElement::monomial(K, 0, vset({1}));
    CHECK(differential(u1) == v1);
    CHECK(differential(v1).is_zero());

    RElement u12 = RElement::monomial(K, vset({1, 2}), 0);
    RElement expect = RElement::monomial(K, vset({2}), vset({1})) - RElement::monomial(K, vset({1}), vset({2}));
    CHECK(differential(u12) == expect);
}

TEST_CASE("r_basis enumerates the strand monomials") {
    SimplicialComplex icosa = dual_complex(SimplePolytope3::dodecahedron());
    VSet J = vset({5, 6, 7});
    auto top = r_basis(icosa, Multidegree{3, J});
    REQUIRE(top.size() == 1);
    CHECK(top[0].J == J);
    CHECK(top[0].I == 0);

    // {1,2} is an edge of the icosahedron.
    auto edge = r_basis(icosa, Multidegree{0, vset({1, 2})});
    REQUIRE(edge.size() == 1);
    CHECK(edge[0].I == vset({1, 2}));

    auto mixed = r_basis(icosa, Multidegree{1, vset({1, 2})});
    CHECK(mixed.size() == 2);  // u_1 v_2 and u_2 v_1
}

TEST_CASE("algebra laws on seeded random elements") {
    Rng rng(833);
    std::vector<SimplicialComplex> pool;
    for (int i = 0; i < 8; ++i) pool.push_back(random_complex(rng, 7));

    for (int trial = 0; trial < 300; ++trial) {
        const SimplicialComplex& K = pool[rng(pool.size())];
        RElement x = random_element(rng, K);
        RElement y = random_element(rng, K);
        RElement z = random_element(rng, K);

        CHECK(differential(differential(x)).is_zero());
        CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));

        int dx = 0, dy = 0;
        RElement hx = random_degree_homogeneous(rng, K);
        RElement hy = random_degree_homogeneous(rng, K);
        if (hx.is_degree_homogeneous(&dx) && hy.is_degree_homogeneous(&dy) && !hx.is_zero() && !hy.is_zero()) {
            RElement lhs = differential(multiply(hx, hy));
            RElement rhs = multiply(differential(hx), hy) +
                           multiply(hx, differential(hy)).scaled(dx % 2 == 0 ? 1 : -1);
            CHECK(lhs == rhs);
            // Graded commutativity.
            CHECK(multiply(hx, hy) == multiply(hy, hx).scaled(dx * dy % 2 == 0 ? 1 : -1));
        }
    }
}

TEST_CASE("multidegree additivity of products") {
    Rng rng(311);
    for (int trial = 0; trial < 200; ++trial) {
        SimplicialComplex K = random_complex(rng, 7);
        auto simplices = K.all_simplices();
        VSet I1 = simplices[rng(simplices.size())];
        VSet J1 = random_subset(rng, K.ground() & ~I1);
        VSet I2 = simplices[rng(simplices.size())];
        VSet J2 = random_subset(rng, K.ground() & ~I2);
        RElement a = RElement::monomial(K, J1, I1);
        RElement b = RElement::monomial(K, J2, I2);
        RElement ab = multiply(a, b);
        if (ab.is_zero()) continue;
        Multidegree md;
        REQUIRE(ab.is_homogeneous(&md));
        CHECK(md.p == vcard(J1) + vcard(J2));
        CHECK(md.support == (I1 | J1 | I2 | J2));
    }
}

TEST_CASE("cochain translation commutes with the differentials") {
    Rng rng(1999);
    for (int trial = 0; trial < 40; ++trial) {
        SimplicialComplex K = random_complex(rng, 6);
        std::vector<VSet> subsets;
        for (VSet J = 0;; J = (J - K.ground()) & K.ground()) {
            subsets.push_back(J);
            if (J == K.ground()) break;
        }
        for (VSet J : subsets) {
            SimplicialComplex sub = K.full_subcomplex(J);
            for (int deg = -1; deg <= sub.dim(); ++deg) {
                // Exact ladder on every basis cochain.
                for (VSet L : sub.simplices_of_dim(deg)) {
                    Cochain chi = Cochain::chi(sub, L);
                    CHECK(cochain_to_r(K, coboundary(chi), J) == differential(cochain_to_r(K, chi, J)));
                }
            }
        }
    }
}

TEST_CASE("cochain translation round-trips") {
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        SimplicialComplex K = random_complex(rng, 7);
        VSet J = random_subset(rng, K.ground());
        SimplicialComplex sub = K.full_subcomplex(J);
        int deg = -1 + static_cast<int>(rng(static_cast<u64>(sub.dim() + 2)));
        Cochain c(sub, deg);
        for (VSet s : sub.simplices_of_dim(deg)) c.add_term(s, rng.coeff(4));
        RElement x = cochain_to_r(K, c, J);
        Multidegree md{vcard(J) - (deg + 1), J};
        CHECK(r_to_cochain(sub, x, md) == c);
    }
}

TEST_CASE("strand cohomology equals full subcomplex cohomology") {
    Rng rng(515);
    for (int trial = 0; trial < 12; ++trial) {
        SimplicialComplex K = random_complex(rng, 6);
        for (VSet J = 0;; J = (J - K.ground()) & K.ground()) {
            SimplicialComplex sub = K.full_subcomplex(J);
            ReducedCohomology h = reduced_cohomology(sub);
            for (int p = 0; p <= vcard(J); ++p) {
                AbelianGroup strand = cohomology_of_R(K, Multidegree{p, J});
                AbelianGroup simplicial = h.group(vcard(J) - p - 1);
                CHECK(strand == simplicial);
            }
            if (J == K.ground()) break;
        }
    }
    // A non-edge pair carries Z in the (-1; 2{i,j}) strand.
    SimplicialComplex path = SimplicialComplex::build({{1, 2}, {2, 3}}, 3);
    CHECK(cohomology_of_R(path, Multidegree{1, vset({1, 3})}) == AbelianGroup{1, {}});
    CHECK(cohomology_of_R(path, Multidegree{0, 0}) == AbelianGroup{1, {}});
}

TEST_CASE("rendering is deterministic and parse inverts it") {
    SimplicialComplex K = SimplicialComplex::build({{1, 2, 3}}, 3);
    RElement e = RElement::monomial(K, vset({1, 3}), vset({2}), -1);
    CHECK(e.render() == "-u{1,3}v{2}");
    CHECK(RElement::parse(K, "-u{1,3}v{2}") == e);
    CHECK(RElement::parse(K, "0").is_zero());
    CHECK(RElement::parse(K, "3") == RElement::monomial(K, 0, 0, 3));

    Rng rng(3003);
    for (int trial = 0; trial < 120; ++trial) {
        SimplicialComplex R = random_complex(rng, 7);
        RElement x = random_element(rng, R);
        CHECK(RElement::parse(R, x.render()) == x);
    }
}
