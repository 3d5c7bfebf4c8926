#include "homcat/mor.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace homcat {

/******** objects ********/

MorE make_more(const CtxPtr& ctx, const ModuleMap& alpha)
{
    const FieldSpec& F = ctx->A->field;
    alpha.check();
    require(rank(F, alpha.m) == alpha.tgt.dim, Err::NotSurjective, "MorE map is not surjective");
    require(is_member(alpha.src, ctx), Err::NotMember, "MorE source is not a member");
    require(is_member(alpha.tgt, ctx), Err::NotMember, "MorE target is not a member");
    SubQuot ker = submodule(alpha.src, kernel_matrix(F, alpha.m));
    require(is_member(ker.mod, ctx), Err::NotMember, "MorE kernel is not a member");
    return MorE{ctx, alpha.src, alpha.tgt, alpha};
}

MorM make_morm(const CtxPtr& ctx, const ModuleMap& alpha)
{
    const FieldSpec& F = ctx->A->field;
    alpha.check();
    require(rank(F, alpha.m) == alpha.src.dim, Err::NotInjective, "MorM map is not injective");
    require(is_member(alpha.src, ctx), Err::NotMember, "MorM source is not a member");
    require(is_member(alpha.tgt, ctx), Err::NotMember, "MorM target is not a member");
    SubQuot cok = quotient_module(alpha.tgt, alpha.m);
    require(is_member(cok.mod, ctx), Err::NotMember, "MorM cokernel is not a member");
    return MorM{ctx, alpha.src, alpha.tgt, alpha};
}

MorE mor_zero(const CtxPtr& ctx)
{
    Module z = zero_module(ctx->A);
    return MorE{ctx, z, z, identity_map(z)};
}

MorE mor_of_module(const CtxPtr& ctx, const Module& M)
{
    Module z = zero_module(ctx->A);
    return make_more(ctx, ModuleMap{M, z, Mat(0, M.dim)});
}

MorE mor_identity_of(const CtxPtr& ctx, const Module& M)
{
    return make_more(ctx, identity_map(M));
}

MorE mor_direct_sum(const MorE& a, const MorE& b)
{
    const FieldSpec& F = a.ctx->A->field;
    SumData X = direct_sum({a.X, b.X});
    SumData T = direct_sum({a.T, b.T});
    Mat m(T.mod.dim, X.mod.dim);
    m = add(F, mul(F, T.incl[0].m, mul(F, a.alpha.m, X.proj[0].m)),
            mul(F, T.incl[1].m, mul(F, b.alpha.m, X.proj[1].m)));
    return MorE{a.ctx, X.mod, T.mod, ModuleMap{X.mod, T.mod, m}};
}

MorMap mor_identity(const MorE& a)
{
    return MorMap{identity_map(a.X), identity_map(a.T)};
}

void mor_map_check(const MorE& a, const MorE& b, const MorMap& m)
{
    const FieldSpec& F = a.ctx->A->field;
    m.f.check();
    m.g.check();
    require(mul(F, m.g.m, a.alpha.m) == mul(F, b.alpha.m, m.f.m), Err::Internal,
            "Mor map square does not commute");
}

MorMap mor_compose(const MorE& a, const MorE& b, const MorE& c, const MorMap& f, const MorMap& g)
{
    (void)a;
    (void)b;
    (void)c;
    return MorMap{compose(g.f, f.f), compose(g.g, f.g)};
}

/******** hom spaces ********/

std::vector<MorMap> mor_hom_basis(const MorE& a, const MorE& b)
{
    require(a.ctx.get() == b.ctx.get(), Err::ContextMismatch, "Mor hom across contexts");
    const FieldSpec& F = a.ctx->A->field;
    const auto& gens = a.ctx->A->generators();
    uint32_t nf = b.X.dim * a.X.dim, ng = b.T.dim * a.T.dim;
    if (nf + ng == 0)
        return {};
    uint32_t nrows = (uint32_t)gens.size() * (nf + ng) + b.T.dim * a.X.dim;
    Mat C(nrows, nf + ng);
    uint32_t row = 0;
    auto put_intertwine = [&](const Module& src, const Module& tgt, uint32_t col0, const Vec& gelt) {
        Mat am = src.act_of(gelt), an = tgt.act_of(gelt);
        for (uint32_t i = 0; i < tgt.dim; ++i)
            for (uint32_t j = 0; j < src.dim; ++j) {
                for (uint32_t k = 0; k < src.dim; ++k)
                    C.at(row, col0 + i * src.dim + k) =
                        F.add(C.at(row, col0 + i * src.dim + k), am.at(k, j));
                for (uint32_t k = 0; k < tgt.dim; ++k)
                    C.at(row, col0 + k * src.dim + j) =
                        F.sub(C.at(row, col0 + k * src.dim + j), an.at(i, k));
                ++row;
            }
    };
    for (const Vec& g : gens) {
        put_intertwine(a.X, b.X, 0, g);
        put_intertwine(a.T, b.T, nf, g);
    }
    // square: g∘alpha_a - alpha_b∘f = 0
    for (uint32_t i = 0; i < b.T.dim; ++i)
        for (uint32_t j = 0; j < a.X.dim; ++j) {
            for (uint32_t k = 0; k < a.T.dim; ++k)
                C.at(row, nf + i * a.T.dim + k) =
                    F.add(C.at(row, nf + i * a.T.dim + k), a.alpha.m.at(k, j));
            for (uint32_t k = 0; k < b.X.dim; ++k)
                C.at(row, k * a.X.dim + j) = F.sub(C.at(row, k * a.X.dim + j), b.alpha.m.at(i, k));
            ++row;
        }
    std::vector<MorMap> out;
    for (auto& v : kernel_basis(F, C)) {
        Mat fm(b.X.dim, a.X.dim), gm(b.T.dim, a.T.dim);
        fm.a.assign(v.begin(), v.begin() + nf);
        gm.a.assign(v.begin() + nf, v.end());
        out.push_back(MorMap{ModuleMap{a.X, b.X, fm}, ModuleMap{a.T, b.T, gm}});
    }
    return out;
}

namespace {

Vec mor_map_vec(const MorMap& m)
{
    Vec v(m.f.m.a.begin(), m.f.m.a.end());
    v.insert(v.end(), m.g.m.a.begin(), m.g.m.a.end());
    return v;
}

// projective epi q_b ↠ b: q_b = (P(ker β)⊕P(X_b) -> P(X_b))
struct ProjEpi {
    MorE q;
    MorMap onto;
};

ProjEpi projective_epi_onto(const MorE& b)
{
    const CtxPtr& ctx = b.ctx;
    const FieldSpec& F = ctx->A->field;
    SubQuot kerb = submodule(b.X, kernel_matrix(F, b.alpha.m));
    CoverData ck = projective_cover(kerb.mod);
    CoverData cx = projective_cover(b.X);
    SumData top = direct_sum({ck.P, cx.P});
    Mat qm = mul(F, Mat::identity(cx.P.dim), top.proj[1].m);  // (0, id): P'⊕Q' -> Q'
    MorE q{ctx, top.mod, cx.P, ModuleMap{top.mod, cx.P, qm}};
    // u = (incl∘cover_ker, cover_X), v = beta∘cover_X
    Mat u = add(F, mul(F, kerb.map.m, mul(F, ck.epi.m, top.proj[0].m)),
                mul(F, cx.epi.m, top.proj[1].m));
    Mat v = mul(F, b.alpha.m, cx.epi.m);
    MorMap onto{ModuleMap{top.mod, b.X, u}, ModuleMap{cx.P, b.T, v}};
    mor_map_check(q, b, onto);
    require(rank(F, u) == b.X.dim && rank(F, v) == b.T.dim, Err::Internal,
            "projective epi onto Mor object is not componentwise surjective");
    return ProjEpi{q, onto};
}

}  // namespace

StableMorHom mor_stable_hom(const MorE& a, const MorE& b)
{
    const FieldSpec& F = a.ctx->A->field;
    StableMorHom out{0, {}, mor_hom_basis(a, b),
                     RowSpace(F, b.X.dim * a.X.dim + b.T.dim * a.T.dim)};
    if (out.hom_basis.empty())
        return out;
    ProjEpi pe = projective_epi_onto(b);
    for (const MorMap& h : mor_hom_basis(a, pe.q)) {
        MorMap comp{compose(pe.onto.f, h.f), compose(pe.onto.g, h.g)};
        out.factoring.add_row(mor_map_vec(comp));
    }
    RowSpace seen = out.factoring;
    for (const MorMap& h : out.hom_basis)
        if (seen.add_row(mor_map_vec(h)))
            out.reps.push_back(h);
    out.dim = (uint32_t)out.reps.size();
    return out;
}

bool mor_factors_stably(const MorE& a, const MorE& b, const MorMap& m)
{
    StableMorHom sh = mor_stable_hom(a, b);
    return sh.factoring.contains(mor_map_vec(m));
}

bool is_stably_trivial(const MorE& a)
{
    if (a.X.dim == 0 && a.T.dim == 0)
        return true;
    return mor_factors_stably(a, a, mor_identity(a));
}

/******** kernels, cokernels, T2 transport ********/

MorM mor_ker(const MorE& e)
{
    const FieldSpec& F = e.ctx->A->field;
    SubQuot ker = submodule(e.X, kernel_matrix(F, e.alpha.m));
    return make_morm(e.ctx, ker.map);
}

MorE mor_cok(const MorM& m)
{
    SubQuot cok = quotient_module(m.X, m.alpha.m);
    return make_more(m.ctx, cok.map);
}

namespace {
std::mutex g_t2_mutex;
std::map<const Algebra*, AlgebraPtr> g_t2_cache;
std::vector<AlgebraPtr> g_t2_pins;
}  // namespace

AlgebraPtr t2_of(const AlgebraPtr& A)
{
    std::lock_guard<std::mutex> lk(g_t2_mutex);
    auto it = g_t2_cache.find(A.get());
    if (it != g_t2_cache.end())
        return it->second;
    AlgebraPtr T = triangular2(A);
    g_t2_pins.push_back(A);
    g_t2_cache.emplace(A.get(), T);
    return T;
}

Module mor_to_t2_raw(const Module& Z, const Module& X, const ModuleMap& alpha)
{
    const AlgebraPtr& A = Z.A;
    const FieldSpec& F = A->field;
    AlgebraPtr T2 = t2_of(A);
    const uint32_t d = A->dim, n = Z.dim + X.dim;
    Module M{T2, n, {}};
    M.act.reserve(T2->dim);
    // slots: [0,d) = E11⊗b, [d,2d) = E12⊗b, [2d,3d) = E22⊗b
    for (uint32_t s = 0; s < 3; ++s)
        for (uint32_t b = 0; b < d; ++b) {
            Mat m(n, n);
            if (s == 0) {
                Mat az = Z.act[b];
                for (uint32_t i = 0; i < Z.dim; ++i)
                    for (uint32_t j = 0; j < Z.dim; ++j)
                        m.at(i, j) = az.at(i, j);
            } else if (s == 2) {
                Mat ax = X.act[b];
                for (uint32_t i = 0; i < X.dim; ++i)
                    for (uint32_t j = 0; j < X.dim; ++j)
                        m.at(Z.dim + i, Z.dim + j) = ax.at(i, j);
            } else {
                // (z, x)·(E12⊗b) = (0, alpha(z)·b)
                Mat ab = mul(F, X.act[b], alpha.m);
                for (uint32_t i = 0; i < X.dim; ++i)
                    for (uint32_t j = 0; j < Z.dim; ++j)
                        m.at(Z.dim + i, j) = ab.at(i, j);
            }
            M.act.push_back(std::move(m));
        }
    M.check();
    return M;
}

MorData from_t2_raw(const AlgebraPtr& base, const Module& M)
{
    const FieldSpec& F = base->field;
    const uint32_t d = base->dim;
    require(M.A->dim == 3 * d, Err::InputError, "module is not over T2 of the base algebra");
    auto slot_elt = [&](uint32_t s, const Vec& a) {
        Vec v(3 * d, 0);
        for (uint32_t i = 0; i < d; ++i)
            v[s * d + i] = a[i];
        return v;
    };
    Mat e11 = M.act_of(slot_elt(0, base->unit));
    Mat e22 = M.act_of(slot_elt(2, base->unit));
    // the slots are invariant only under the diagonal A-action, so the
    // induced structure is extracted by hand rather than via submodule()
    auto slot_basis = [&](const Mat& im) {
        RowSpace rs(F, im.transpose());
        return rs.R.transpose();
    };
    Mat Bz = slot_basis(e11), Bx = slot_basis(e22);
    auto induce = [&](const Mat& B) {
        Module out{base, B.cols, {}};
        for (uint32_t b = 0; b < d; ++b) {
            Vec diag(3 * d, 0);
            for (uint32_t i = 0; i < d; ++i) {
                Vec bb(d, 0);
                bb[b] = 1;
                diag[i] = bb[i];
                diag[2 * d + i] = bb[i];
            }
            Mat act = M.act_of(diag);
            auto ind = solve_matrix(F, B, mul(F, act, B));
            require(ind.has_value(), Err::Internal, "t2 slot not invariant under the diagonal");
            out.act.push_back(*ind);
        }
        out.check();
        return out;
    };
    Module Z = induce(Bz), X = induce(Bx);
    // alpha: Z -> X, z ↦ z·(E12⊗1)
    Mat e12 = M.act_of(slot_elt(1, base->unit));
    auto am = solve_matrix(F, Bx, mul(F, e12, Bz));
    require(am.has_value(), Err::Internal, "t2 E12 action leaves the X slot");
    return MorData{Z, X, ModuleMap{Z, X, *am}};
}

Module to_t2_module(const MorM& m)
{
    require(m.ctx->mode == FrobeniusContext::Mode::Gorenstein, Err::NotGorensteinContext,
            "T2 transport requires a Gorenstein context");
    return mor_to_t2_raw(m.Z, m.X, m.alpha);
}

MorM from_t2_module(const CtxPtr& ctx, const Module& M)
{
    require(ctx->mode == FrobeniusContext::Mode::Gorenstein, Err::NotGorensteinContext,
            "T2 transport requires a Gorenstein context");
    MorData md = from_t2_raw(ctx->A, M);
    return make_morm(ctx, md.alpha);
}

/******** suspension ********/

MorSuspension mor_suspension(const MorE& a)
{
    const CtxPtr& ctx = a.ctx;
    const FieldSpec& F = ctx->A->field;
    CosyzygyData cs = cosyzygy(a.X, ctx);
    CosyzygyData ct = cosyzygy(a.T, ctx);
    SumData pq = direct_sum({cs.P, ct.P});
    // q = (P⊕Q -> Q), embed = ((s, t∘alpha), t)
    Mat qm = mul(F, Mat::identity(ct.P.dim), pq.proj[1].m);
    MorE q{ctx, pq.mod, ct.P, ModuleMap{pq.mod, ct.P, qm}};
    Mat emb_f = add(F, mul(F, pq.incl[0].m, cs.mono.m),
                    mul(F, pq.incl[1].m, mul(F, ct.mono.m, a.alpha.m)));
    MorMap embed{ModuleMap{a.X, pq.mod, emb_f}, ModuleMap{a.T, ct.P, ct.mono.m}};
    mor_map_check(a, q, embed);
    // componentwise cokernels
    SubQuot cokX = quotient_module(pq.mod, emb_f);
    Module ST = ct.cok;
    // induced map cok_X -> ΣT
    auto ind = solve_module_map_post(cokX.mod, ST, cokX.map.m,
                                            mul(F, ct.cokmap.m, qm));
    require(ind.has_value(), Err::Internal, "suspension: induced map on cokernels failed");
    MorE sigma = make_more(ctx, ModuleMap{cokX.mod, ST, *ind});
    MorMap project{cokX.map, ct.cokmap};
    mor_map_check(q, sigma, project);
    require(is_stably_trivial(q), Err::Internal, "suspension: q is not stably trivial");
    return MorSuspension{q, embed, sigma, project};
}

MorCosuspension mor_cosuspension(const MorE& a)
{
    const CtxPtr& ctx = a.ctx;
    const FieldSpec& F = ctx->A->field;
    ProjEpi pe = projective_epi_onto(a);
    SubQuot kf = submodule(pe.q.X, kernel_matrix(F, pe.onto.f.m));
    SubQuot kg = submodule(pe.q.T, kernel_matrix(F, pe.onto.g.m));
    // restricted structure map: (0,1)|ker
    auto restr = solve_matrix(F, kg.map.m, mul(F, pe.q.alpha.m, kf.map.m));
    require(restr.has_value(), Err::Internal, "cosuspension: structure map does not restrict");
    MorE sig = make_more(ctx, ModuleMap{kf.mod, kg.mod, *restr});
    MorMap incl{kf.map, kg.map};
    mor_map_check(sig, pe.q, incl);
    return MorCosuspension{pe.q, pe.onto, sig, incl};
}

/******** decomposition triangles ********/

namespace {

// extension of embed_u along f: a map h: v -> q_u with h∘f = embed_u,
// solved jointly over both components with the square constraint
MorMap extend_through(const MorE& v, const MorE& qu, const MorMap& f, const MorMap& embed_u)
{
    const FieldSpec& F = v.ctx->A->field;
    auto homs = mor_hom_basis(v, qu);
    require(!homs.empty() || (embed_u.f.m.is_zero() && embed_u.g.m.is_zero()), Err::Internal,
            "extend_through: empty hom space");
    uint32_t rows = qu.X.dim * f.f.src.dim + qu.T.dim * f.g.src.dim;
    Mat C(rows, (uint32_t)homs.size());
    for (uint32_t k = 0; k < homs.size(); ++k) {
        Mat cf = mul(F, homs[k].f.m, f.f.m), cg = mul(F, homs[k].g.m, f.g.m);
        uint32_t t = 0;
        for (auto& e : cf.a)
            C.at(t++, k) = e;
        for (auto& e : cg.a)
            C.at(t++, k) = e;
    }
    Vec rhs;
    rhs.insert(rhs.end(), embed_u.f.m.a.begin(), embed_u.f.m.a.end());
    rhs.insert(rhs.end(), embed_u.g.m.a.begin(), embed_u.g.m.a.end());
    auto x = solve_linear(F, C, rhs);
    require(x.has_value(), Err::Internal, "extend_through: no extension (injectivity failed?)");
    MorMap h{zero_map(v.X, qu.X), zero_map(v.T, qu.T)};
    for (uint32_t k = 0; k < homs.size(); ++k)
        if ((*x)[k]) {
            h.f.m = add(F, h.f.m, scale(F, (*x)[k], homs[k].f.m));
            h.g.m = add(F, h.g.m, scale(F, (*x)[k], homs[k].g.m));
        }
    return h;
}

}  // namespace

DecompositionTriangles mor_decomposition_triangles(const MorE& a)
{
    const CtxPtr& ctx = a.ctx;
    const FieldSpec& F = ctx->A->field;
    DecompositionTriangles out;

    // (i) 0_{ker α} -> a -> 1_T
    SubQuot ker = submodule(a.X, kernel_matrix(F, a.alpha.m));
    out.p10_11.U = mor_of_module(ctx, ker.mod);
    out.p10_11.V = mor_identity_of(ctx, a.T);
    out.p10_11.u_to_a = MorMap{ker.map, zero_map(zero_module(ctx->A), a.T)};
    out.p10_11.a_to_v = MorMap{a.alpha, identity_map(a.T)};
    mor_map_check(out.p10_11.U, a, out.p10_11.u_to_a);
    mor_map_check(a, out.p10_11.V, out.p10_11.a_to_v);

    // (ii) σ -> a -> Σ(0_{ΩX}), from 0 -> 0_{ΩX} -> σ -> a -> 0
    SyzygyData sx = syzygy_data(a.X);
    MorE sig = make_more(ctx, ModuleMap{sx.cover.P, a.T,
                                        mul(F, a.alpha.m, sx.cover.epi.m)});
    MorMap sig_to_a{sx.cover.epi, identity_map(a.T)};
    mor_map_check(sig, a, sig_to_a);
    MorE omega0 = mor_of_module(ctx, sx.omega);
    MorMap omega_to_sig{sx.incl, zero_map(zero_module(ctx->A), a.T)};
    mor_map_check(omega0, sig, omega_to_sig);
    MorSuspension su = mor_suspension(omega0);
    // connecting map a -> Σ(0_{ΩX}): extend embed through σ, then descend
    MorMap h = extend_through(sig, su.q, omega_to_sig, su.embed);
    // δ: a -> Σ with δ∘(σ->a) = project∘h; σ->a is componentwise epi
    auto df = solve_module_map_post(a.X, su.sigma.X, sig_to_a.f.m,
                                           mul(F, su.project.f.m, h.f.m));
    auto dg = solve_module_map_post(a.T, su.sigma.T, sig_to_a.g.m,
                                           mul(F, su.project.g.m, h.g.m));
    require(df.has_value() && dg.has_value(), Err::Internal, "connecting map descent failed");
    out.p01_10.U = sig;
    out.p01_10.V = su.sigma;
    out.p01_10.u_to_a = sig_to_a;
    out.p01_10.a_to_v = MorMap{ModuleMap{a.X, su.sigma.X, *df}, ModuleMap{a.T, su.sigma.T, *dg}};
    mor_map_check(a, out.p01_10.V, out.p01_10.a_to_v);

    // (iii) 1_X -> a -> τ, from 0 -> a -> τ -> 1_{ΣX} -> 0 with
    // τ = (P -> M), M the pushout of P <- X -> T
    CosyzygyData cx = cosyzygy(a.X, ctx);
    SumData pt = direct_sum({cx.P, a.T});
    Mat diffm = sub(F, mul(F, pt.incl[0].m, cx.mono.m), mul(F, pt.incl[1].m, a.alpha.m));
    SubQuot M = quotient_module(pt.mod, diffm);
    Mat pP = mul(F, M.map.m, pt.incl[0].m);
    Mat pT = mul(F, M.map.m, pt.incl[1].m);
    MorE tau = make_more(ctx, ModuleMap{cx.P, M.mod, pP});
    out.p11_01.U = mor_identity_of(ctx, a.X);
    out.p11_01.V = tau;
    out.p11_01.u_to_a = MorMap{identity_map(a.X), a.alpha};
    out.p11_01.a_to_v = MorMap{cx.mono, ModuleMap{a.T, M.mod, pT}};
    mor_map_check(out.p11_01.U, a, out.p11_01.u_to_a);
    mor_map_check(a, out.p11_01.V, out.p11_01.a_to_v);
    return out;
}

std::set<MorClass> classify_mor(const MorE& a)
{
    std::set<MorClass> out;
    const FieldSpec& F = a.ctx->A->field;
    if (is_projective(a.T))
        out.insert(MorClass::Mor10);
    SubQuot ker = submodule(a.X, kernel_matrix(F, a.alpha.m));
    if (is_projective(ker.mod))
        out.insert(MorClass::Mor11);
    if (is_projective(a.X))
        out.insert(MorClass::Mor01);
    return out;
}

/******** decomposition and stable isomorphism ********/

namespace {

std::optional<std::pair<Mat, Mat>> mor_fitting(const FieldSpec& F, const MorMap& e,
                                               uint32_t dx, uint32_t dt)
{
    Mat pf = e.f.m, pg = e.g.m;
    uint32_t rf = rank(F, pf), rg = rank(F, pg);
    for (uint32_t step = 0; step < 34; ++step) {
        Mat sf = mul(F, pf, pf), sg = mul(F, pg, pg);
        uint32_t rf2 = rank(F, sf), rg2 = rank(F, sg);
        if (rf2 == rf && rg2 == rg)
            break;
        pf = sf;
        pg = sg;
        rf = rf2;
        rg = rg2;
    }
    if (rf + rg == 0 || (rf == dx && rg == dt))
        return std::nullopt;
    return std::make_pair(pf, pg);
}

void mor_decompose_rec(const MorE& a, uint64_t budget, std::vector<MorE>& out)
{
    if (a.X.dim + a.T.dim == 0)
        return;
    const FieldSpec& F = a.ctx->A->field;
    auto ends = mor_hom_basis(a, a);
    std::optional<std::pair<Mat, Mat>> split;
    bool found = for_each_combination(F, (uint32_t)ends.size(), budget, [&](const Vec& c) {
        MorMap H{zero_map(a.X, a.X), zero_map(a.T, a.T)};
        for (size_t i = 0; i < ends.size(); ++i)
            if (c[i]) {
                H.f.m = add(F, H.f.m, scale(F, c[i], ends[i].f.m));
                H.g.m = add(F, H.g.m, scale(F, c[i], ends[i].g.m));
            }
        split = mor_fitting(F, H, a.X.dim, a.T.dim);
        return split.has_value();
    });
    if (found && split) {
        // image part and kernel part, each with the restricted structure map
        auto piece = [&](const Mat& spanX, const Mat& spanT) {
            SubQuot SX = submodule(a.X, spanX);
            SubQuot ST = submodule(a.T, spanT);
            auto restr = solve_matrix(F, ST.map.m, mul(F, a.alpha.m, SX.map.m));
            require(restr.has_value(), Err::Internal, "mor split: alpha does not restrict");
            return MorE{a.ctx, SX.mod, ST.mod, ModuleMap{SX.mod, ST.mod, *restr}};
        };
        Mat kf = kernel_matrix(F, split->first), kg = kernel_matrix(F, split->second);
        mor_decompose_rec(piece(split->first, split->second), budget, out);
        mor_decompose_rec(piece(kf, kg), budget, out);
        return;
    }
    uint64_t total = 1;
    for (size_t i = 0; i < ends.size() && total <= budget; ++i)
        total *= F.p;
    require(total <= budget, Err::FieldTooSmallForSplit,
            "no splitting Mor endomorphism found within budget");
    out.push_back(a);
}

}  // namespace

std::vector<MorE> mor_decompose(const MorE& a, uint64_t budget)
{
    std::vector<MorE> out;
    mor_decompose_rec(a, budget, out);
    return out;
}

bool mor_isomorphic(const MorE& a, const MorE& b, uint64_t budget)
{
    if (a.X.dim != b.X.dim || a.T.dim != b.T.dim)
        return false;
    if (a.X.dim + a.T.dim == 0)
        return true;
    const FieldSpec& F = a.ctx->A->field;
    auto homs = mor_hom_basis(a, b);
    if (homs.empty())
        return false;
    return for_each_combination(F, (uint32_t)homs.size(), budget, [&](const Vec& c) {
        MorMap H{zero_map(a.X, b.X), zero_map(a.T, b.T)};
        for (size_t i = 0; i < homs.size(); ++i)
            if (c[i]) {
                H.f.m = add(F, H.f.m, scale(F, c[i], homs[i].f.m));
                H.g.m = add(F, H.g.m, scale(F, c[i], homs[i].g.m));
            }
        return inverse(F, H.f.m).has_value() && inverse(F, H.g.m).has_value();
    });
}

bool mor_stably_isomorphic(const MorE& a, const MorE& b)
{
    auto strip = [&](const MorE& x) {
        std::vector<MorE> keep;
        for (auto& p : mor_decompose(x))
            if (!is_stably_trivial(p))
                keep.push_back(p);
        return keep;
    };
    std::vector<MorE> pa = strip(a), pb = strip(b);
    if (pa.size() != pb.size())
        return false;
    std::vector<bool> used(pb.size(), false);
    for (auto& p : pa) {
        bool hit = false;
        for (size_t j = 0; j < pb.size(); ++j) {
            if (used[j])
                continue;
            if (mor_isomorphic(p, pb[j])) {
                used[j] = true;
                hit = true;
                break;
            }
        }
        if (!hit)
            return false;
    }
    return true;
}

}  // namespace homcat
