#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zk/koszul.hpp"

namespace zk {

// A cohomology class of R*(K) given by a homogeneous cocycle.
struct CohomologyClass {
    RElement representative;
    Multidegree mdeg;
    int degree = 0;

    static CohomologyClass from_cocycle(const RElement& rep);
    static CohomologyClass zero(const SimplicialComplex& K, Multidegree md);
};

struct IndetGenerator {
    RElement rep;      // cocycle representing alpha·x or gamma·y
    int side = 1;      // 1: alpha side, 3: gamma side
    Multidegree mdeg;  // strand it lives in
};

struct DefinednessCheck {
    bool defined = false;
    RElement a12, a23;
    std::string obstruction;  // which product class is nonzero, when not defined
};

struct MasseyResult {
    bool defined = false;
    RElement a12, a23;
    RElement b;
    Multidegree b_mdeg;
    int degree = 0;  // k1 + k2 + k3 - 1
    std::vector<IndetGenerator> indeterminacy;
    bool pruned = false;
    bool trivial = true;
};

// Definedness: the pairwise product classes must vanish; lifts are solved
// inside the forced multidegree strands.
DefinednessCheck is_defined(const CohomologyClass& a1, const CohomologyClass& a2, const CohomologyClass& a3);

// Representative b = (-1)^{k1+1} a1 a23 + a12 a3, indeterminacy generators
// from alpha·H^{k2+k3-1} and gamma·H^{k1+k2-1} over strands inside the
// supports' union, triviality decided exactly over Z in b's strand.
MasseyResult triple_massey(const CohomologyClass& a1, const CohomologyClass& a2, const CohomologyClass& a3);

// Drop indeterminacy generators outside the representative's strand. The
// triviality verdict is unchanged.
MasseyResult restrict_indeterminacy_by_multidegree(const MasseyResult& in);

// Decide membership of [z] in the subgroup spanned by the classes of gens
// within the strand piece holding z.
bool strand_class_in_span(const SimplicialComplex& K, const Multidegree& md,
                          const std::vector<RElement>& gens, const RElement& z);

}  // namespace zk
