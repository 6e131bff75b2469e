#include "zk/massey.hpp"

#include <algorithm>

namespace zk {

CohomologyClass CohomologyClass::from_cocycle(const RElement& rep) {
    CohomologyClass c;
    c.representative = rep;
    if (!differential(rep).is_zero()) throw ValidationError("class representative is not a cocycle");
    if (!rep.is_homogeneous(&c.mdeg)) throw ValidationError("class representative is not multidegree-homogeneous");
    if (rep.is_zero()) throw ValidationError("zero element needs an explicit multidegree; use CohomologyClass::zero");
    c.degree = c.mdeg.total_degree();
    return c;
}

CohomologyClass CohomologyClass::zero(const SimplicialComplex& K, Multidegree md) {
    CohomologyClass c;
    c.representative = RElement(K);
    c.mdeg = md;
    c.degree = md.total_degree();
    return c;
}

namespace {

const SimplicialComplex& ambient(const CohomologyClass& a1, const CohomologyClass& a2,
                                 const CohomologyClass& a3) {
    const SimplicialComplex* K = a1.representative.complex();
    if (!K) K = a2.representative.complex();
    if (!K) K = a3.representative.complex();
    if (!K) throw ValidationError("Massey inputs carry no complex");
    for (const auto* c : {a1.representative.complex(), a2.representative.complex(), a3.representative.complex()})
        if (c && c != K) throw ValidationError("Massey inputs live over different complexes");
    return *K;
}

// Solve d x = target for a homogeneous cocycle product; nullopt when the
// product class is nonzero.
std::optional<RElement> lift_product(const SimplicialComplex& K, const RElement& target) {
    if (target.is_zero()) return RElement(K);
    Multidegree md;
    if (!target.is_homogeneous(&md)) throw InternalError("product of homogeneous classes is inhomogeneous");
    Strand strand(K, md.support);
    return strand.solve_differential(target, vcard(md.support) - md.p);
}

// Generators of H^{degree} within one strand, already multiplied by the
// fixed cocycle factor. Appends only nonzero products.
void append_side_generators(const SimplicialComplex& K, const CohomologyClass& factor, bool factor_on_left,
                            int h_degree, VSet strand_support, int side, std::vector<IndetGenerator>& out) {
    if ((strand_support & factor.mdeg.support) != 0) return;
    int poly = h_degree - vcard(strand_support);  // |L| for elements of total degree h_degree
    if (poly < 0 || poly > vcard(strand_support)) return;
    Strand strand(K, strand_support);
    CohomologyPiece piece = strand.cohomology(poly);
    if (piece.group().is_zero()) return;
    for (const auto& gen : piece.generator_cocycles()) {
        RElement x = strand.element(poly, gen);
        RElement prod = factor_on_left ? multiply(factor.representative, x) : multiply(x, factor.representative);
        if (prod.is_zero()) continue;
        Multidegree md;
        prod.is_homogeneous(&md);
        out.push_back({prod, side, md});
    }
}

std::vector<VSet> subsets_of(VSet universe) {
    std::vector<int> verts = vlist(universe);
    std::vector<VSet> out(size_t{1} << verts.size());
    for (size_t code = 0; code < out.size(); ++code) {
        VSet s = 0;
        for (size_t b = 0; b < verts.size(); ++b)
            if ((code >> b) & 1) s |= vbit(verts[b]);
        out[code] = s;
    }
    return out;
}

}  // namespace

DefinednessCheck is_defined(const CohomologyClass& a1, const CohomologyClass& a2, const CohomologyClass& a3) {
    const SimplicialComplex& K = ambient(a1, a2, a3);
    DefinednessCheck r;
    for (const auto* c : {&a1, &a2, &a3})
        if (!differential(c->representative).is_zero()) throw ValidationError("Massey input is not a cocycle");

    RElement p12 = multiply(a1.representative, a2.representative);
    auto lift12 = lift_product(K, p12);
    if (!lift12) {
        r.obstruction = "[a1·a2] != 0 in strand " + vset_to_string(a1.mdeg.support | a2.mdeg.support);
        return r;
    }
    RElement p23 = multiply(a2.representative, a3.representative);
    auto lift23 = lift_product(K, p23);
    if (!lift23) {
        r.obstruction = "[a2·a3] != 0 in strand " + vset_to_string(a2.mdeg.support | a3.mdeg.support);
        return r;
    }
    r.defined = true;
    r.a12 = *lift12;
    r.a23 = *lift23;
    return r;
}

MasseyResult triple_massey(const CohomologyClass& a1, const CohomologyClass& a2, const CohomologyClass& a3) {
    const SimplicialComplex& K = ambient(a1, a2, a3);
    DefinednessCheck def = is_defined(a1, a2, a3);
    if (!def.defined) throw PreconditionError("Massey product not defined: " + def.obstruction);

    MasseyResult res;
    res.defined = true;
    res.a12 = def.a12;
    res.a23 = def.a23;
    res.degree = a1.degree + a2.degree + a3.degree - 1;

    const int k1 = a1.degree;
    RElement left = multiply(a1.representative, res.a23).scaled(k1 % 2 == 0 ? -1 : 1);
    res.b = left + multiply(res.a12, a3.representative);

    if (!differential(res.b).is_zero()) throw InternalError("Massey representative is not a cocycle");
    res.b_mdeg = Multidegree{2 * vcard(a1.mdeg.support | a2.mdeg.support | a3.mdeg.support) - res.degree,
                             a1.mdeg.support | a2.mdeg.support | a3.mdeg.support};
    if (!res.b.is_zero()) {
        Multidegree got;
        if (!res.b.is_homogeneous(&got) || !(got == res.b_mdeg) || got.total_degree() != res.degree)
            throw InternalError("Massey representative degree bookkeeping mismatch");
    }

    // Indeterminacy generators over all strands inside the supports' union.
    VSet universe = res.b_mdeg.support;
    for (VSet T : subsets_of(universe & ~a1.mdeg.support))
        append_side_generators(K, a1, true, a2.degree + a3.degree - 1, T, 1, res.indeterminacy);
    for (VSet T : subsets_of(universe & ~a3.mdeg.support))
        append_side_generators(K, a3, false, a1.degree + a2.degree - 1, T, 3, res.indeterminacy);

    std::vector<RElement> strand_gens;
    for (const auto& g : res.indeterminacy)
        if (g.mdeg == res.b_mdeg) strand_gens.push_back(g.rep);
    res.trivial = strand_class_in_span(K, res.b_mdeg, strand_gens, res.b);
    return res;
}

MasseyResult restrict_indeterminacy_by_multidegree(const MasseyResult& in) {
    if (!in.defined) throw PreconditionError("restrict_indeterminacy: product is not defined");
    MasseyResult out = in;
    out.pruned = true;
    out.indeterminacy.clear();
    for (const auto& g : in.indeterminacy)
        if (g.mdeg == in.b_mdeg) out.indeterminacy.push_back(g);
    return out;
}

bool strand_class_in_span(const SimplicialComplex& K, const Multidegree& md,
                          const std::vector<RElement>& gens, const RElement& z) {
    if (z.is_zero()) return true;
    Strand strand(K, md.support);
    int poly = vcard(md.support) - md.p;
    CohomologyPiece piece = strand.cohomology(poly);
    std::vector<std::vector<i64>> gen_vecs;
    for (const auto& g : gens) gen_vecs.push_back(strand.coords(g, poly));
    return piece.in_span(gen_vecs, strand.coords(z, poly));
}

}  // namespace zk
