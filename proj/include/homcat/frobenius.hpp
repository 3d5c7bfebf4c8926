#pragma once

#include "homcat/module.hpp"

#include <memory>

namespace homcat {

// dim Ext^i(M, N) from a minimal projective resolution of M.
uint32_t ext_dim(const Module& M, const Module& N, uint32_t i);

// The ambient Frobenius category: CM(A) for Gorenstein A, or an explicit
// additive subcategory of mod A closed under syzygy and cosyzygy.
struct FrobeniusContext {
    enum class Mode { Gorenstein, ExplicitList };

    AlgebraPtr A;
    Mode mode = Mode::Gorenstein;
    uint32_t d = 0;  // Gorenstein dimension (Gorenstein mode)
    std::vector<Module> gens;
    uint32_t cap = 64;
};

using CtxPtr = std::shared_ptr<const FrobeniusContext>;

CtxPtr make_context(const AlgebraPtr& A, uint32_t cap = 64);
CtxPtr make_context_list(const AlgebraPtr& A, std::vector<Module> gens, uint32_t cap = 64);

bool is_member(const Module& M, const CtxPtr& ctx);

// Exact sequence 0 -> M -> P -> cok -> 0 with P projective(-injective in the
// context) in standard form and cok again a member. For projective M this is
// (M ≅ P, iso, 0).
struct CosyzygyData {
    Module P;
    std::vector<uint32_t> summands;  // standard-form layout of P
    ModuleMap mono;                  // M ↪ P
    Module cok;
    ModuleMap cokmap;  // P ↠ cok
};
CosyzygyData cosyzygy(const Module& M, const CtxPtr& ctx);

// Standard form of a projective module, with the identifying isomorphism.
struct StdProj {
    std::vector<uint32_t> summands;
    Module P;        // proj_module(A, summands)
    ModuleMap to;    // M -> P
    ModuleMap from;  // P -> M
};
StdProj standardize_projective(const Module& M);

}  // namespace homcat
