#pragma once

#include "homcat/frobenius.hpp"

namespace homcat {

// One degree of a complex of projectives, always kept in standard form
// ⊕ e_{summands[k]} A.
struct ProjComp {
    std::vector<uint32_t> summands;
    Module mod;
};
ProjComp make_comp(const AlgebraPtr& A, std::vector<uint32_t> summands);

// Cochain complex of standard-form projectives supported on [lo, hi()].
// Outside the stored range everything is zero.
struct BoundedComplex {
    AlgebraPtr A;
    int lo = 0;
    std::vector<ProjComp> comp;
    std::vector<Mat> diff;  // diff[i-lo]: comp(i) -> comp(i+1)

    int hi() const { return lo + (int)comp.size() - 1; }
    bool empty() const { return comp.empty(); }
    ProjComp at(int i) const;
    Mat d(int i) const;  // correctly-shaped zero outside the range
    uint32_t dim_at(int i) const;
    void check() const;
    uint32_t total_dim() const;
};

BoundedComplex zero_complex(const AlgebraPtr& A);
BoundedComplex stalk_complex(const AlgebraPtr& A, int degree, std::vector<uint32_t> summands);
// drops zero components at both edges
BoundedComplex trim(const BoundedComplex& X);

enum class TruncMode { Ge, Le };
BoundedComplex truncate(const BoundedComplex& X, TruncMode mode, int n);
BoundedComplex shift(const BoundedComplex& X, int k);  // Σ^k, (Σ X)^i = X^{i+1}
BoundedComplex direct_sum_complex(const BoundedComplex& X, const BoundedComplex& Y);

struct ChainMap {
    BoundedComplex src, tgt;
    int lo = 0;
    std::vector<Mat> parts;  // parts[i-lo]: src(i) -> tgt(i)

    Mat part(int i) const;
    void check() const;
};
ChainMap identity_chain_map(const BoundedComplex& X);
ChainMap zero_chain_map(const BoundedComplex& X, const BoundedComplex& Y);
ChainMap compose(const ChainMap& f, const ChainMap& g);
ChainMap add_maps(const ChainMap& f, const ChainMap& g);
ChainMap negate(const ChainMap& f);

BoundedComplex cone(const ChainMap& f);

struct Homotopy {
    int lo = 0;
    std::vector<Mat> parts;  // parts[i-lo]: X^i -> Y^{i-1}
};
// Homotopy h with f = d∘h + h∘d, if one exists.
std::optional<Homotopy> is_null_homotopic(const ChainMap& f);
bool is_contractible(const BoundedComplex& X);
bool homotopy_equivalent(const ChainMap& f);  // cone(f) contractible

Module homology(const BoundedComplex& X, int i);

// Degreewise Hom(-, A) with reversed indices, over the opposite algebra.
BoundedComplex dualize_complex(const BoundedComplex& X);

/******** spliced complexes ********/

// Finite representation of an object of K^{∞,b}(proj A): a window plus a
// left tail (minimal projective resolution of `left`) and a right tail
// (cosyzygy coresolution of the member `right`).
struct SplicedComplex {
    CtxPtr ctx;
    BoundedComplex window;  // nonempty
    Module left;
    ModuleMap left_seam;  // left ↪ window(lo), composes to zero with d
    Module right;
    ModuleMap right_seam;  // window(hi) ↠ right, kills im d

    int lo() const { return window.lo; }
    int hi() const { return window.hi(); }
    void check() const;
};

SplicedComplex make_spliced(const CtxPtr& ctx, BoundedComplex window, Module left,
                            ModuleMap left_seam, Module right, ModuleMap right_seam);
// Bounded complex as a spliced one (zero tails).
SplicedComplex spliced_of_bounded(const CtxPtr& ctx, const BoundedComplex& X);

// Same homotopy class with window enlarged to cover [lo, hi].
SplicedComplex extend_window(const SplicedComplex& S, int lo, int hi);
BoundedComplex materialize(const SplicedComplex& S, int lo, int hi);
SplicedComplex shift_spliced(const SplicedComplex& S, int k);

Module spliced_homology(const SplicedComplex& S, int i);
bool spliced_exact_everywhere(const SplicedComplex& S);

// Tail-shape certificates: K^{+,b} needs a terminating left tail, K^{-,b} a
// terminating right tail, K^{∞,∅} vanishing homology (with member cocycles
// in list mode).
bool cert_plus_bounded(const SplicedComplex& S);
bool cert_minus_bounded(const SplicedComplex& S);
bool cert_acyclic(const SplicedComplex& S);
// Trivial in the quotient by K^b: both tails terminate.
bool cert_bounded(const SplicedComplex& S);
// Zero object of K(proj A): both tails terminate and the materialized
// bounded complex is contractible.
bool spliced_contractible(const SplicedComplex& S);

// Complete resolution of a member, aligned so that Z^1 ≅ M (resolution in
// degrees <= 0, coresolution in degrees >= 1).
SplicedComplex complete_resolution(const Module& M, const CtxPtr& ctx, int lo, int hi);

struct SplicedMap {
    SplicedComplex src, tgt;  // windows aligned to a common range
    std::vector<Mat> parts;   // one per window degree
    ModuleMap lmap;           // src.left -> tgt.left
    ModuleMap rmap;           // src.right -> tgt.right

    Mat part(int i) const;
    void check() const;
};

// Extends both sides so the windows cover [lo, hi], lifting the map
// canonically through the tails.
SplicedMap extend_map(const SplicedMap& f, int lo, int hi);
SplicedMap align_identity(const SplicedComplex& S, int lo, int hi);  // id on an extension
SplicedMap compose_spliced(const SplicedMap& f, const SplicedMap& g);

// Aligns the windows and derives the tail maps from the seam-compatibility
// equations; fails if the window maps are not tail-compatible.
SplicedMap make_spliced_map(const SplicedComplex& src, const SplicedComplex& tgt,
                            int parts_lo, const std::vector<Mat>& parts);

struct SplicedCone {
    SplicedComplex cone;
    // block split of each window component of the cone: first src_dims[i]
    // coordinates come from src[i+1], the rest from tgt[i]
    int lo = 0;
    std::vector<uint32_t> src_dims;
};
SplicedCone cone_spliced(const SplicedMap& f);

struct TruncationTriangle {
    SplicedComplex upper;  // τ_{>= n+1}, zero left tail
    SplicedComplex lower;  // τ_{<= n}, zero right tail
    SplicedMap incl;       // upper -> S
    SplicedMap proj;       // S -> lower
};
TruncationTriangle truncation_triangle(const SplicedComplex& S, int n);
SplicedComplex truncate_spliced(const SplicedComplex& S, TruncMode mode, int n);

}  // namespace homcat
