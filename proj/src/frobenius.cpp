#include "homcat/frobenius.hpp"

#include <algorithm>

namespace homcat {

/******** Ext ********/

uint32_t ext_dim(const Module& M, const Module& N, uint32_t i)
{
    const FieldSpec& F = M.A->field;
    require(M.A->same(*N.A), Err::AlgebraMismatch, "ext over mixed algebras");
    // minimal resolution P_0 <- ... <- P_{i+1}
    std::vector<Module> P;
    std::vector<ModuleMap> d;  // d[k-1]: P_k -> P_{k-1}
    Module cur = M;
    ModuleMap prev_incl;
    for (uint32_t k = 0; k <= i + 1; ++k) {
        SyzygyData s = syzygy_data(cur);
        P.push_back(s.cover.P);
        // d_k = (P_k ↠ Ω_{k-1} ↪ P_{k-1})
        if (k > 0)
            d.push_back(compose(prev_incl, s.cover.epi));
        prev_incl = s.incl;
        cur = s.omega;
    }
    // hom complex: delta_k: Hom(P_{k-1}, N) -> Hom(P_k, N), f ↦ f∘d_k
    std::vector<std::vector<Mat>> hb;
    for (auto& p : P)
        hb.push_back(module_hom_basis(p, N));
    auto delta = [&](uint32_t k) {  // k >= 1: matrix of -∘d_k
        uint32_t rows_dim = (uint32_t)hb[k].size();
        uint32_t cols_dim = (uint32_t)hb[k - 1].size();
        // coordinates of each composite in terms of hb[k]
        Mat coords(P[k].dim * N.dim, rows_dim);
        for (uint32_t j = 0; j < rows_dim; ++j)
            for (uint32_t t = 0; t < coords.rows; ++t)
                coords.at(t, j) = hb[k][j].a[t];
        Mat out(rows_dim, cols_dim);
        for (uint32_t j = 0; j < cols_dim; ++j) {
            Mat comp = mul(F, hb[k - 1][j], d[k - 1].m);
            auto x = solve_linear(F, coords, Vec(comp.a.begin(), comp.a.end()));
            require(x.has_value(), Err::Internal, "ext: composite outside hom space");
            for (uint32_t r = 0; r < rows_dim; ++r)
                out.at(r, j) = (*x)[r];
        }
        return out;
    };
    uint32_t zi;  // dim ker(delta_{i+1})
    if (hb[i].empty())
        return 0;
    if (P[i + 1].dim == 0)
        zi = (uint32_t)hb[i].size();
    else
        zi = (uint32_t)hb[i].size() - rank(F, delta(i + 1));
    uint32_t bi = 0;  // rank of delta_i
    if (i > 0 && !hb[i - 1].empty())
        bi = rank(F, delta(i));
    return zi - bi;
}

/******** contexts ********/

CtxPtr make_context(const AlgebraPtr& A, uint32_t cap)
{
    auto g = is_iwanaga_gorenstein(A, cap);
    require(g.determined && g.gorenstein, Err::NotGorenstein,
            "algebra is not Iwanaga-Gorenstein within the cap");
    auto ctx = std::make_shared<FrobeniusContext>();
    ctx->A = A;
    ctx->mode = FrobeniusContext::Mode::Gorenstein;
    ctx->d = g.d;
    ctx->cap = cap;
    return ctx;
}

bool is_member(const Module& M, const CtxPtr& ctx)
{
    require(M.A->same(*ctx->A), Err::ContextMismatch, "module over a different algebra");
    if (ctx->mode == FrobeniusContext::Mode::Gorenstein) {
        Module R = regular_module(ctx->A);
        for (uint32_t i = 1; i <= ctx->d; ++i)
            if (ext_dim(M, R, i) != 0)
                return false;
        return true;
    }
    return in_additive_closure(M, ctx->gens);
}

StdProj standardize_projective(const Module& M)
{
    CoverData cov = projective_cover(M);
    auto inv = inverse(M.A->field, cov.epi.m);
    require(inv.has_value(), Err::Internal, "standardize_projective on a non-projective module");
    StdProj out;
    out.summands = cov.summands;
    out.P = cov.P;
    out.to = ModuleMap{M, cov.P, *inv};
    out.from = cov.epi;
    return out;
}

namespace {

CosyzygyData cosyzygy_of_projective(const Module& M)
{
    StdProj sp = standardize_projective(M);
    Module z = zero_module(M.A);
    return CosyzygyData{sp.P, sp.summands, sp.to, z, zero_map(sp.P, z)};
}

CosyzygyData cosyzygy_gorenstein(const Module& M, const CtxPtr& ctx)
{
    const FieldSpec& F = M.A->field;
    DualData d1 = star_dual_full(M);
    DualData d2 = star_dual_full(d1.dual);
    ModuleMap eta = double_dual_unit(M, d1, d2);
    CoverData covd = projective_cover(d1.dual);
    DualData dP = star_dual_full(covd.P);
    // pi*: M** ↪ (P(M*))*
    ModuleMap pistar = star_dual_map(covd.epi, dP, d2);
    ModuleMap mu = compose(pistar, eta);
    require(rank(F, mu.m) == M.dim, Err::Internal, "cosyzygy: unit composite not injective");
    StdProj sp = standardize_projective(dP.dual);
    ModuleMap mono = compose(sp.to, mu);
    SubQuot cok = quotient_module(sp.P, mono.m);
    require(is_member(cok.mod, ctx), Err::Internal, "cosyzygy: cokernel is not a member");
    return CosyzygyData{sp.P, sp.summands, mono, cok.mod, cok.map};
}

CosyzygyData cosyzygy_list(const Module& M, const CtxPtr& ctx)
{
    const AlgebraPtr& A = M.A;
    const FieldSpec& F = A->field;
    require(is_member(M, ctx), Err::NotMember, "cosyzygy of a non-member");
    // componentwise on the Krull-Schmidt pieces
    auto parts = decompose_indecomposables(M);
    if (parts.size() != 1) {
        std::vector<CosyzygyData> sub;
        for (auto& p : parts)
            sub.push_back(cosyzygy(p, ctx));
        // assemble direct sums
        std::vector<uint32_t> summands;
        std::vector<Module> Ps, coks;
        for (auto& s : sub) {
            summands.insert(summands.end(), s.summands.begin(), s.summands.end());
            Ps.push_back(s.P);
            coks.push_back(s.cok);
        }
        // M ≅ ⊕parts: need the iso; rebuild via hom search
        SumData sd = direct_sum(parts);
        IsoResult ir = is_isomorphic(M, sd.mod);
        require(ir.verdict == Tri::Yes, Err::Internal, "decomposition lost the isomorphism");
        SumData pd = direct_sum(Ps);
        SumData cd = direct_sum(coks);
        Mat mono(pd.mod.dim, M.dim), cokm(cd.mod.dim, pd.mod.dim);
        for (size_t k = 0; k < parts.size(); ++k) {
            Mat mk = mul(F, pd.incl[k].m, mul(F, sub[k].mono.m, compose(sd.proj[k], ir.iso.value()).m));
            mono = add(F, mono, mk);
            Mat ck = mul(F, cd.incl[k].m, mul(F, sub[k].cokmap.m, pd.proj[k].m));
            cokm = add(F, cokm, ck);
        }
        return CosyzygyData{pd.mod, summands, ModuleMap{M, pd.mod, mono}, cd.mod,
                            ModuleMap{pd.mod, cd.mod, cokm}};
    }
    if (is_projective(M))
        return cosyzygy_of_projective(M);

    // indecomposable non-projective: search monos into standard projectives,
    // smallest candidate first, with member cokernel
    uint32_t maxP = 0;
    for (uint32_t v = 0; v < A->vertex_count(); ++v)
        maxP = std::max(maxP, indecomposable_projective(A, v).dim);
    std::vector<std::vector<uint32_t>> candidates;
    uint32_t V = A->vertex_count();
    std::function<void(std::vector<uint32_t>&, uint32_t, uint32_t)> gen =
        [&](std::vector<uint32_t>& cur, uint32_t startv, uint32_t dims) {
            if (dims > M.dim + A->dim)
                return;
            if (!cur.empty() && dims > M.dim)
                candidates.push_back(cur);
            for (uint32_t v = startv; v < V; ++v) {
                cur.push_back(v);
                gen(cur, v, dims + indecomposable_projective(A, v).dim);
                cur.pop_back();
            }
        };
    std::vector<uint32_t> cur;
    gen(cur, 0, 0);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
                         uint32_t da = 0, db = 0;
                         for (uint32_t v : a)
                             da += indecomposable_projective(A, v).dim;
                         for (uint32_t v : b)
                             db += indecomposable_projective(A, v).dim;
                         return da < db || (da == db && a < b);
                     });
    for (auto& cand : candidates) {
        Module P = proj_module(A, cand);
        auto homs = module_hom_basis(M, P);
        if (homs.empty())
            continue;
        CosyzygyData found;
        bool ok = for_each_combination(F, (uint32_t)homs.size(), 1u << 14, [&](const Vec& c) {
            Mat H(P.dim, M.dim);
            for (size_t t = 0; t < homs.size(); ++t)
                if (c[t])
                    H = add(F, H, scale(F, c[t], homs[t]));
            if (rank(F, H) != M.dim)
                return false;
            SubQuot cok = quotient_module(P, H);
            if (!is_member(cok.mod, ctx))
                return false;
            found = CosyzygyData{P, cand, ModuleMap{M, P, H}, cok.mod, cok.map};
            return true;
        });
        if (ok)
            return found;
    }
    fail(Err::NoAdmissibleMono, "no admissible mono into a projective with member cokernel");
}

}  // namespace

CosyzygyData cosyzygy(const Module& M, const CtxPtr& ctx)
{
    require(M.A->same(*ctx->A), Err::ContextMismatch, "module over a different algebra");
    if (M.dim == 0) {
        Module z = zero_module(ctx->A);
        return CosyzygyData{z, {}, identity_map(z), z, identity_map(z)};
    }
    require(is_member(M, ctx), Err::NotMember, "cosyzygy requires a member");
    if (is_projective(M))
        return cosyzygy_of_projective(M);
    if (ctx->mode == FrobeniusContext::Mode::Gorenstein)
        return cosyzygy_gorenstein(M, ctx);
    return cosyzygy_list(M, ctx);
}

CtxPtr make_context_list(const AlgebraPtr& A, std::vector<Module> gens, uint32_t cap)
{
    auto ctx = std::make_shared<FrobeniusContext>();
    ctx->A = A;
    ctx->mode = FrobeniusContext::Mode::ExplicitList;
    ctx->gens = std::move(gens);
    ctx->cap = cap;
    for (auto& g : ctx->gens)
        require(g.A->same(*A), Err::ContextMismatch, "generator over a different algebra");
    // projectives must be members
    for (uint32_t v = 0; v < A->vertex_count(); ++v)
        require(in_additive_closure(indecomposable_projective(A, v), ctx->gens),
                Err::NotFrobeniusClosed,
                "projective at vertex " + std::to_string(v) + " is not in the closure");
    // closure under syzygy and cosyzygy
    CtxPtr view = ctx;
    for (size_t i = 0; i < ctx->gens.size(); ++i) {
        Module om = syzygy(ctx->gens[i]);
        require(in_additive_closure(om, ctx->gens), Err::NotFrobeniusClosed,
                "syzygy of generator " + std::to_string(i) + " leaves the closure");
        try {
            CosyzygyData cz = cosyzygy(ctx->gens[i], view);
            require(in_additive_closure(cz.cok, ctx->gens), Err::NotFrobeniusClosed,
                    "cosyzygy cokernel of generator " + std::to_string(i) + " leaves the closure");
        } catch (const Error& e) {
            if (e.code == Err::NoAdmissibleMono)
                fail(Err::NotFrobeniusClosed,
                     "generator " + std::to_string(i) + " admits no mono into a projective");
            throw;
        }
    }
    return ctx;
}

}  // namespace homcat
