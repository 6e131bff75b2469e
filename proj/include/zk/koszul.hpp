#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zk/simplicial.hpp"

namespace zk {

// Multidegree (-p; 2·support): p exterior variables inside the given
// vertex support. Total cohomological degree is 2|support| - p.
struct Multidegree {
    int p = 0;
    VSet support = 0;

    int total_degree() const { return 2 * vcard(support) - p; }
    bool operator==(const Multidegree& o) const { return p == o.p && support == o.support; }
    std::string render() const;
};

// Basis monomial u_J v_I of R*(K): J exterior, I polynomial, disjoint,
// I a simplex of K.
struct RMonomial {
    VSet J = 0;
    VSet I = 0;

    int total_degree() const { return vcard(J) + 2 * vcard(I); }
    Multidegree multidegree() const { return {vcard(J), J | I}; }
    bool operator==(const RMonomial& o) const { return J == o.J && I == o.I; }
};

// Term order: total degree, then J, then I, lexicographic on vertex lists.
struct RMonomialLess {
    bool operator()(const RMonomial& a, const RMonomial& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        if (a.J != b.J) return lex_less(a.J, b.J);
        return lex_less(a.I, b.I);
    }
};

// Integer linear combination of monomials; terms with I ∉ K are never stored.
class RElement {
public:
    RElement() = default;
    explicit RElement(const SimplicialComplex& K) : K_(&K) {}

    static RElement monomial(const SimplicialComplex& K, VSet J, VSet I, i64 coeff = 1);
    static RElement unit(const SimplicialComplex& K) { return monomial(K, 0, 0, 1); }

    const SimplicialComplex* complex() const { return K_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<RMonomial, i64, RMonomialLess>& terms() const { return terms_; }

    void add_term(RMonomial m, i64 coeff);

    RElement operator+(const RElement& o) const;
    RElement operator-(const RElement& o) const;
    RElement operator-() const;
    RElement scaled(i64 c) const;
    bool operator==(const RElement& o) const { return terms_ == o.terms_; }

    // True if every term shares one multidegree (vacuously true when zero).
    bool is_homogeneous(Multidegree* out = nullptr) const;
    // True if every term has the same total degree.
    bool is_degree_homogeneous(int* out = nullptr) const;

    std::string render() const;
    static RElement parse(const SimplicialComplex& K, const std::string& text);

private:
    const SimplicialComplex* K_ = nullptr;
    std::map<RMonomial, i64, RMonomialLess> terms_;
};

// Bilinear product with Koszul signs; terms sharing a vertex or with
// polynomial part outside K vanish.
RElement multiply(const RElement& x, const RElement& y);

// Derivation with d(u_i) = v_i, d(v_i) = 0.
RElement differential(const RElement& x);

// All u_{J∖L} v_L with L ∈ K_J and |L| = |md.support| - md.p.
std::vector<RMonomial> r_basis(const SimplicialComplex& K, const Multidegree& md);

// Sign ε(L, J) making cochain translation commute with the differentials.
int epsilon_sign(VSet L, VSet J);

// The strand of R*(K) with fixed vertex support, graded by |L|.
class Strand {
public:
    Strand(const SimplicialComplex& K, VSet support);

    VSet support() const { return support_; }
    int pieces() const { return static_cast<int>(basis_.size()); }
    const std::vector<RMonomial>& basis(int poly_size) const;

    // Matrix of d : piece(poly_size) -> piece(poly_size + 1).
    IntMat differential_matrix(int poly_size) const;

    std::vector<i64> coords(const RElement& x, int poly_size) const;
    RElement element(int poly_size, const std::vector<i64>& v) const;

    // Cohomology at the piece with |L| = poly_size.
    CohomologyPiece cohomology(int poly_size) const;

    // Solve d x = target inside the strand; target homogeneous with
    // polynomial size t, solution in piece t-1. Returns nullopt if the
    // class of target is nonzero.
    std::optional<RElement> solve_differential(const RElement& target, int target_poly_size) const;

private:
    const SimplicialComplex* K_;
    VSet support_;
    std::vector<std::vector<RMonomial>> basis_;  // index |L| = 0..|support|
};

// Translation between simplicial cochains on K_J and the support-J
// strand: chi_L -> ε(L,J) u_{J\L} v_L.
RElement cochain_to_r(const SimplicialComplex& K, const Cochain& c, VSet J);
// Inverse; x must be homogeneous of the given multidegree.
Cochain r_to_cochain(const SimplicialComplex& sub, const RElement& x, const Multidegree& md);

// Cohomology of the multidegree-md strand of (R*(K), d).
AbelianGroup cohomology_of_R(const SimplicialComplex& K, const Multidegree& md);

}  // namespace zk
