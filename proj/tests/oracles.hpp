#pragma once

#include "homcat/module.hpp"

#include <cstdint>

// Brute-force enumeration oracles, independent of the library's rref-based
// solvers. Everything here walks raw matrix entries over F_p and tests the
// defining property directly, so keep the inputs tiny.
namespace oracles {

using namespace homcat;

// Enumerates all r x c matrices over F_p, calling f on each; returns the
// number for which f returned true. Caller is responsible for p^(r*c) being
// sane.
inline uint64_t count_matrices(const FieldSpec& F, uint32_t r, uint32_t c,
                               const std::function<bool(const Mat&)>& f)
{
    uint64_t total = 1;
    for (uint32_t i = 0; i < r * c; ++i)
        total *= F.p;
    uint64_t hits = 0;
    Mat M(r, c);
    for (uint64_t code = 0; code < total; ++code) {
        uint64_t x = code;
        for (auto& e : M.a) {
            e = uint32_t(x % F.p);
            x /= F.p;
        }
        if (f(M))
            ++hits;
    }
    return hits;
}

inline bool intertwines(const Module& M, const Module& N, const Mat& H)
{
    const FieldSpec& F = M.A->field;
    for (uint32_t b = 0; b < M.A->dim; ++b)
        if (!(mul(F, H, M.act[b]) == mul(F, N.act[b], H)))
            return false;
    return true;
}

// log_p of the number of intertwiners = dim Hom(M, N).
inline uint32_t hom_dim(const Module& M, const Module& N)
{
    if (M.dim == 0 || N.dim == 0)
        return 0;
    uint64_t n = count_matrices(M.A->field, N.dim, M.dim,
                                [&](const Mat& H) { return intertwines(M, N, H); });
    uint32_t d = 0;
    while (n > 1) {
        n /= M.A->field.p;
        ++d;
    }
    return d;
}

// dim of the subspace of maps factoring as M -> P -> N with P the cover of N.
// Both layers are enumerated, nothing is solved.
inline uint32_t stable_hom_dim(const Module& M, const Module& N)
{
    if (M.dim == 0 || N.dim == 0)
        return 0;
    const FieldSpec& F = M.A->field;
    CoverData cov = projective_cover(N);
    std::vector<Mat> factoring;
    count_matrices(F, cov.P.dim, M.dim, [&](const Mat& G) {
        if (intertwines(M, cov.P, G))
            factoring.push_back(mul(F, cov.epi.m, G));
        return false;
    });
    RowSpace fact(F, N.dim * M.dim);
    for (auto& m : factoring)
        fact.add_row(Vec(m.a.begin(), m.a.end()));
    uint32_t total = hom_dim(M, N);
    return total - fact.dim();
}

}  // namespace oracles
