#pragma once

#include "homcat/algebra.hpp"

#include <functional>
#include <optional>

namespace homcat {

// Finitely generated right module: one action matrix per algebra basis
// element, acting on column vectors. For a right module the assignment is an
// anti-homomorphism: act(x*y) = act(y)·act(x).
struct Module {
    AlgebraPtr A;
    uint32_t dim = 0;
    std::vector<Mat> act;

    Mat act_of(const Vec& x) const;  // action of an algebra element
    void check() const;              // unit = id, multiplicativity on basis pairs
    bool operator==(const Module& o) const { return A->same(*o.A) && dim == o.dim && act == o.act; }
};

struct ModuleMap {
    Module src, tgt;
    Mat m;  // tgt.dim x src.dim

    void check() const;  // intertwining on algebra generators
    bool is_zero() const { return m.is_zero(); }
};

ModuleMap compose(const ModuleMap& f, const ModuleMap& g);  // f∘g
ModuleMap identity_map(const Module& M);
ModuleMap zero_map(const Module& src, const Module& tgt);
ModuleMap map_between(const Module& src, const Module& tgt, Mat m);

Module zero_module(const AlgebraPtr& A);
Module regular_module(const AlgebraPtr& A);
Module simple_module(const AlgebraPtr& A, uint32_t vertex);

// e_v A with right multiplication; cached per algebra.
Module indecomposable_projective(const AlgebraPtr& A, uint32_t vertex);

// Standard-form projective ⊕ e_{summands[i]} A, plus block offsets.
struct ProjSummands {
    std::vector<uint32_t> summands;  // vertex per indecomposable block
    std::vector<uint32_t> offsets;   // dim offset per block, plus total at end
};
Module proj_module(const AlgebraPtr& A, const std::vector<uint32_t>& summands);
ProjSummands proj_layout(const AlgebraPtr& A, const std::vector<uint32_t>& summands);

struct SubQuot {
    Module mod;
    ModuleMap map;  // inclusion (submodule) or projection (quotient)
};

// span: columns spanning an invariant subspace of M.
SubQuot submodule(const Module& M, const Mat& span);
SubQuot quotient_module(const Module& M, const Mat& span);

struct SumData {
    Module mod;
    std::vector<ModuleMap> incl, proj;
};
SumData direct_sum(const std::vector<Module>& parts);

// Column span of M·rad.
Mat radical_span(const Module& M);
SubQuot radical_submodule(const Module& M);
SubQuot socle_submodule(const Module& M);  // killed by the radical
SubQuot socle_quotient(const Module& M);   // M / soc(M)
SubQuot top_quotient(const Module& M);     // M / M·rad

std::vector<Mat> module_hom_basis(const Module& M, const Module& N);
// Hom between standard-form projectives, assembled blockwise from a
// per-algebra cache of Hom(e_v A, e_w A).
std::vector<Mat> proj_hom_basis(const AlgebraPtr& A, const std::vector<uint32_t>& srcs,
                                const std::vector<uint32_t>& tgts);

struct Factorization {
    SubQuot kernel;    // kernel with inclusion into src
    SubQuot image;     // image with inclusion into tgt
    ModuleMap onto_image;  // src ↠ image
    SubQuot cokernel;  // cokernel with projection from tgt
};
Factorization factorize(const ModuleMap& f);

struct CoverData {
    Module P;
    std::vector<uint32_t> mults;  // per-vertex multiplicities
    std::vector<uint32_t> summands;
    ModuleMap epi;
};
CoverData projective_cover(const Module& M);

struct SyzygyData {
    Module omega;
    ModuleMap incl;  // omega ↪ cover.P
    CoverData cover;
};
SyzygyData syzygy_data(const Module& M);
Module syzygy(const Module& M);

bool is_projective(const Module& M);

// Hom_A(M, A) as a right module over the opposite algebra.
struct DualData {
    Module dual;
    std::vector<Mat> homs;  // basis maps M -> A, each dim_A x dim_M
};
DualData star_dual_full(const Module& M);
Module star_dual(const Module& M);
// Contravariant action on maps: (N* -> M*), g ↦ g∘f.
ModuleMap star_dual_map(const ModuleMap& f, const DualData& dsrc, const DualData& dtgt);
// Natural map M -> M**.
ModuleMap double_dual_unit(const Module& M, const DualData& d1, const DualData& d2);

struct StableHom {
    uint32_t dim = 0;
    std::vector<Mat> reps;       // representatives of a basis of the quotient
    std::vector<Mat> hom_basis;  // basis of Hom(M,N)
    RowSpace factoring;          // span of maps factoring through a projective
};
StableHom stable_hom(const Module& M, const Module& N);
bool factors_through_projective(const ModuleMap& f);

enum class Tri { Yes, No, Undecided };

struct IsoResult {
    Tri verdict = Tri::Undecided;
    std::optional<ModuleMap> iso;
};
IsoResult is_isomorphic(const Module& M, const Module& N, uint64_t budget = 1u << 16);
bool isomorphic(const Module& M, const Module& N);  // throws on Undecided

// Krull-Schmidt decomposition via Fitting splittings of endomorphisms.
std::vector<Module> decompose_indecomposables(const Module& M, uint64_t budget = 1u << 16);
bool in_additive_closure(const Module& M, const std::vector<Module>& gens);

// All modules of the given dimension over a quiver-built algebra, up to
// isomorphism. Enumerates vertex supports and arrow actions; needs the
// algebra's path metadata.
std::vector<Module> enumerate_modules(const AlgebraPtr& A, uint32_t dim);

// Odometer over F_p^k; f receives each nonzero coefficient vector. Stops
// early when f returns true; returns whether f ever did.
bool for_each_combination(const FieldSpec& F, uint32_t k, uint64_t budget,
                          const std::function<bool(const Vec&)>& f);

// Module map u: U -> V constrained by E·u = R (resp. u·E = R), solved in
// hom-space coordinates so the result intertwines by construction.
std::optional<Mat> solve_module_map_pre(const Module& U, const Module& V, const Mat& E,
                                        const Mat& R);
std::optional<Mat> solve_module_map_post(const Module& U, const Module& V, const Mat& E,
                                         const Mat& R);

}  // namespace homcat
