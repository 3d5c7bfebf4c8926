#pragma once

#include "homcat/complexes.hpp"

#include <set>

namespace homcat {

// Admissible epimorphism between members: alpha: X ↠ T.
struct MorE {
    CtxPtr ctx;
    Module X, T;
    ModuleMap alpha;
};

// Admissible monomorphism between members with member cokernel: alpha: Z ↪ X.
struct MorM {
    CtxPtr ctx;
    Module Z, X;
    ModuleMap alpha;
};

// Pair (f, g) with g∘alpha = alpha'∘f.
struct MorMap {
    ModuleMap f, g;
};

MorE make_more(const CtxPtr& ctx, const ModuleMap& alpha);
MorM make_morm(const CtxPtr& ctx, const ModuleMap& alpha);

MorE mor_zero(const CtxPtr& ctx);                    // 0 -> 0
MorE mor_of_module(const CtxPtr& ctx, const Module& M);   // (M -> 0)
MorE mor_identity_of(const CtxPtr& ctx, const Module& M); // (M = M)
MorE mor_direct_sum(const MorE& a, const MorE& b);

MorMap mor_identity(const MorE& a);
MorMap mor_compose(const MorE& a, const MorE& b, const MorE& c, const MorMap& f, const MorMap& g);
void mor_map_check(const MorE& a, const MorE& b, const MorMap& m);

std::vector<MorMap> mor_hom_basis(const MorE& a, const MorE& b);

struct StableMorHom {
    uint32_t dim = 0;
    std::vector<MorMap> reps;
    std::vector<MorMap> hom_basis;
    RowSpace factoring;
};
StableMorHom mor_stable_hom(const MorE& a, const MorE& b);
bool mor_factors_stably(const MorE& a, const MorE& b, const MorMap& m);
bool is_stably_trivial(const MorE& a);

MorM mor_ker(const MorE& e);
MorE mor_cok(const MorM& m);

// T2-module transport. The raw transport works over any algebra; the public
// ops are restricted to Gorenstein contexts.
AlgebraPtr t2_of(const AlgebraPtr& A);
Module mor_to_t2_raw(const Module& Z, const Module& X, const ModuleMap& alpha);
struct MorData {
    Module X, T;
    ModuleMap alpha;
};
MorData from_t2_raw(const AlgebraPtr& base, const Module& M);
Module to_t2_module(const MorM& m);
MorM from_t2_module(const CtxPtr& ctx, const Module& M);

struct MorSuspension {
    MorE q;          // stably trivial
    MorMap embed;    // a ↪ q
    MorE sigma;      // Σa
    MorMap project;  // q ↠ Σa
};
MorSuspension mor_suspension(const MorE& a);

struct MorCosuspension {
    MorE q;         // stably trivial
    MorMap onto;    // q ↠ a
    MorE sigma_inv; // Σ^{-1} a
    MorMap incl;    // Σ^{-1} a ↪ q
};
MorCosuspension mor_cosuspension(const MorE& a);

// The three stable t-structure decompositions of Thm-style (Mor01, Mor10,
// Mor11): each triangle is U -> a -> V with U in the first factor and V in
// the second.
struct MorTrianglePair {
    MorE U, V;
    MorMap u_to_a, a_to_v;
};
struct DecompositionTriangles {
    MorTrianglePair p10_11;  // (Mor10, Mor11)
    MorTrianglePair p01_10;  // (Mor01, Mor10)
    MorTrianglePair p11_01;  // (Mor11, Mor01)
};
DecompositionTriangles mor_decomposition_triangles(const MorE& a);

enum class MorClass { Mor10, Mor11, Mor01 };
std::set<MorClass> classify_mor(const MorE& a);

// Krull-Schmidt decomposition in Mor^e and the stable isomorphism test
// (indecomposable summands matched up to iso after dropping the stably
// trivial ones).
std::vector<MorE> mor_decompose(const MorE& a, uint64_t budget = 1u << 16);
bool mor_isomorphic(const MorE& a, const MorE& b, uint64_t budget = 1u << 16);
bool mor_stably_isomorphic(const MorE& a, const MorE& b);

}  // namespace homcat
