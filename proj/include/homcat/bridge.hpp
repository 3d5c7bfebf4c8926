#pragma once

#include "homcat/mor.hpp"

#include <string>

namespace homcat {

// The three stable t-structures in (K^{∞,b}/K^b)(proj A):
//   PlusMinus    = ((K^{+,b}/K^b), (K^{-,b}/K^b))
//   MinusAcyclic = ((K^{-,b}/K^b),  K^{∞,∅})
//   AcyclicPlus  = ( K^{∞,∅},      (K^{+,b}/K^b))
enum class TStructurePair { PlusMinus, MinusAcyclic, AcyclicPlus };

// F on objects: window [0,1] with F^0 = P(X), F^1 the cosyzygy co-term of T
// and d^0 = ε_T ∘ α ∘ ρ_X.
SplicedComplex functor_F(const MorE& a);
// F on maps: degreewise lifts through the resolutions/coresolutions.
SplicedMap functor_F_map(const MorE& a, const MorE& b, const MorMap& f);

// The two adjunction resolutions of S and the arrows ξ: X -> S, ζ: S -> T.
struct LambdaData {
    SplicedComplex S;  // aligned extension of the input
    SplicedComplex X;  // acyclic, left-aligned
    SplicedComplex T;  // acyclic, right-aligned
    SplicedMap xi;
    SplicedMap zeta;
};
LambdaData lambda_data(const SplicedComplex& S);

// Z^1 of the surjectivized composite ζ∘ξ: the Mor-side image of S.
MorE z1_lambda(const SplicedComplex& S);

// Hom dimension in (K^{∞,b}/K^b)(proj A), defined through the Mor transport.
uint32_t quotient_hom_dim(const SplicedComplex& S, const SplicedComplex& T);

struct TDecomposition {
    SplicedComplex U, V;
    SplicedMap u;  // U -> S
    SplicedMap v;  // S -> V
};
TDecomposition decompose_tstructure(const SplicedComplex& S, TStructurePair pair);

// CM T2(A)-module representing the quotient class of S.
Module stable_cm_of_t2(const SplicedComplex& S);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;
};
struct VerificationReport {
    std::vector<CheckResult> checks;
    bool vacuous = false;

    bool all_pass() const;
    void add(const std::string& name, bool pass, const std::string& witness = "");
};

// Deterministic sample closure under Σ, Σ^{-1} and the decomposition
// triangles, starting from the context's fixture objects.
std::vector<MorE> sample_objects(const CtxPtr& ctx, uint32_t cap = 50, uint64_t seed = 0);

VerificationReport verify_stable_tstructure(const CtxPtr& ctx, TStructurePair pair,
                                            const std::vector<MorE>& samples,
                                            bool swapped = false);
VerificationReport verify_triangle_of_recollements(const CtxPtr& ctx,
                                                   const std::vector<MorE>& samples);
VerificationReport roundtrip_report(const CtxPtr& ctx, const std::vector<MorE>& samples);

// The §6-style comparison: the stable-hom table of the explicit-list context
// against the stable module category of `other`, plus the witness that the
// two acyclic factors differ.
VerificationReport verify_example_comparison(const CtxPtr& list_ctx, const AlgebraPtr& other);

}  // namespace homcat
