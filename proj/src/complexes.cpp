#include "homcat/complexes.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace homcat {

/******** bounded complexes ********/

ProjComp make_comp(const AlgebraPtr& A, std::vector<uint32_t> summands)
{
    Module m = proj_module(A, summands);
    return ProjComp{std::move(summands), std::move(m)};
}

ProjComp BoundedComplex::at(int i) const
{
    if (i < lo || i > hi())
        return ProjComp{{}, zero_module(A)};
    return comp[size_t(i - lo)];
}

uint32_t BoundedComplex::dim_at(int i) const
{
    if (i < lo || i > hi())
        return 0;
    return comp[size_t(i - lo)].mod.dim;
}

Mat BoundedComplex::d(int i) const
{
    if (i >= lo && i < hi())
        return diff[size_t(i - lo)];
    return Mat(dim_at(i + 1), dim_at(i));
}

void BoundedComplex::check() const
{
    require((int)diff.size() == std::max<int>(0, (int)comp.size() - 1), Err::Internal,
            "complex: differential count");
    for (int i = lo; i < hi(); ++i)
        ModuleMap{at(i).mod, at(i + 1).mod, d(i)}.check();
    const FieldSpec& F = A->field;
    for (int i = lo; i + 1 < hi(); ++i)
        require(mul(F, d(i + 1), d(i)).is_zero(), Err::Internal, "complex: d∘d != 0");
}

uint32_t BoundedComplex::total_dim() const
{
    uint32_t t = 0;
    for (auto& c : comp)
        t += c.mod.dim;
    return t;
}

BoundedComplex zero_complex(const AlgebraPtr& A)
{
    return BoundedComplex{A, 0, {}, {}};
}

BoundedComplex stalk_complex(const AlgebraPtr& A, int degree, std::vector<uint32_t> summands)
{
    BoundedComplex X{A, degree, {make_comp(A, std::move(summands))}, {}};
    return X;
}

BoundedComplex trim(const BoundedComplex& X)
{
    int a = X.lo, b = X.hi();
    while (a <= b && X.dim_at(a) == 0)
        ++a;
    while (b >= a && X.dim_at(b) == 0)
        --b;
    if (a > b)
        return zero_complex(X.A);
    BoundedComplex Y{X.A, a, {}, {}};
    for (int i = a; i <= b; ++i)
        Y.comp.push_back(X.at(i));
    for (int i = a; i < b; ++i)
        Y.diff.push_back(X.d(i));
    return Y;
}

BoundedComplex truncate(const BoundedComplex& X, TruncMode mode, int n)
{
    int a = X.lo, b = X.hi();
    if (mode == TruncMode::Ge)
        a = std::max(a, n);
    else
        b = std::min(b, n);
    if (a > b)
        return zero_complex(X.A);
    BoundedComplex Y{X.A, a, {}, {}};
    for (int i = a; i <= b; ++i)
        Y.comp.push_back(X.at(i));
    for (int i = a; i < b; ++i)
        Y.diff.push_back(X.d(i));
    return Y;
}

BoundedComplex shift(const BoundedComplex& X, int k)
{
    if (X.empty())
        return X;
    BoundedComplex Y{X.A, X.lo - k, X.comp, X.diff};
    if (k % 2 != 0) {
        const FieldSpec& F = X.A->field;
        for (auto& m : Y.diff)
            m = scale(F, F.neg(1), m);
    }
    return Y;
}

BoundedComplex direct_sum_complex(const BoundedComplex& X, const BoundedComplex& Y)
{
    if (X.empty())
        return Y;
    if (Y.empty())
        return X;
    int a = std::min(X.lo, Y.lo), b = std::max(X.hi(), Y.hi());
    BoundedComplex Z{X.A, a, {}, {}};
    for (int i = a; i <= b; ++i) {
        std::vector<uint32_t> s = X.at(i).summands;
        auto t = Y.at(i).summands;
        s.insert(s.end(), t.begin(), t.end());
        Z.comp.push_back(make_comp(X.A, s));
    }
    const FieldSpec& F = X.A->field;
    for (int i = a; i < b; ++i) {
        Mat dx = X.d(i), dy = Y.d(i);
        Mat m(dx.rows + dy.rows, dx.cols + dy.cols);
        for (uint32_t r = 0; r < dx.rows; ++r)
            for (uint32_t c = 0; c < dx.cols; ++c)
                m.at(r, c) = dx.at(r, c);
        for (uint32_t r = 0; r < dy.rows; ++r)
            for (uint32_t c = 0; c < dy.cols; ++c)
                m.at(dx.rows + r, dx.cols + c) = dy.at(r, c);
        Z.diff.push_back(std::move(m));
    }
    (void)F;
    return Z;
}

/******** chain maps ********/

Mat ChainMap::part(int i) const
{
    if (i >= lo && i - lo < (int)parts.size())
        return parts[size_t(i - lo)];
    return Mat(tgt.dim_at(i), src.dim_at(i));
}

void ChainMap::check() const
{
    const FieldSpec& F = src.A->field;
    int a = std::min(src.lo, tgt.lo) - 1, b = std::max(src.hi(), tgt.hi()) + 1;
    for (int i = a; i <= b; ++i) {
        ModuleMap{src.at(i).mod, tgt.at(i).mod, part(i)}.check();
        if (i < b)
            require(mul(F, tgt.d(i), part(i)) == mul(F, part(i + 1), src.d(i)), Err::Internal,
                    "chain map does not commute with differentials");
    }
}

ChainMap identity_chain_map(const BoundedComplex& X)
{
    ChainMap f{X, X, X.lo, {}};
    for (int i = X.lo; i <= X.hi(); ++i)
        f.parts.push_back(Mat::identity(X.dim_at(i)));
    return f;
}

ChainMap zero_chain_map(const BoundedComplex& X, const BoundedComplex& Y)
{
    return ChainMap{X, Y, 0, {}};
}

ChainMap compose(const ChainMap& f, const ChainMap& g)
{
    const FieldSpec& F = f.src.A->field;
    int a = std::min(g.src.lo, f.tgt.lo), b = std::max(g.src.hi(), f.tgt.hi());
    ChainMap h{g.src, f.tgt, a, {}};
    for (int i = a; i <= b; ++i)
        h.parts.push_back(mul(F, f.part(i), g.part(i)));
    return h;
}

ChainMap add_maps(const ChainMap& f, const ChainMap& g)
{
    const FieldSpec& F = f.src.A->field;
    int a = std::min(f.src.lo, f.tgt.lo), b = std::max(f.src.hi(), f.tgt.hi());
    ChainMap h{f.src, f.tgt, a, {}};
    for (int i = a; i <= b; ++i)
        h.parts.push_back(add(F, f.part(i), g.part(i)));
    return h;
}

ChainMap negate(const ChainMap& f)
{
    const FieldSpec& F = f.src.A->field;
    ChainMap h = f;
    for (auto& m : h.parts)
        m = scale(F, F.neg(1), m);
    return h;
}

BoundedComplex cone(const ChainMap& f)
{
    const BoundedComplex &X = f.src, &Y = f.tgt;
    const FieldSpec& F = X.A->field;
    int a = std::min(X.lo - 1, Y.lo), b = std::max(X.hi() - 1, Y.hi());
    if (a > b)
        return zero_complex(X.A);
    BoundedComplex Z{X.A, a, {}, {}};
    for (int i = a; i <= b; ++i) {
        std::vector<uint32_t> s = X.at(i + 1).summands;
        auto t = Y.at(i).summands;
        s.insert(s.end(), t.begin(), t.end());
        Z.comp.push_back(make_comp(X.A, s));
    }
    for (int i = a; i < b; ++i) {
        uint32_t x1 = X.dim_at(i + 1), x2 = X.dim_at(i + 2);
        uint32_t y1 = Y.dim_at(i), y2 = Y.dim_at(i + 1);
        Mat m(x2 + y2, x1 + y1);
        Mat dx = X.d(i + 1), dy = Y.d(i), fp = f.part(i + 1);
        for (uint32_t r = 0; r < x2; ++r)
            for (uint32_t c = 0; c < x1; ++c)
                m.at(r, c) = F.neg(dx.at(r, c));
        for (uint32_t r = 0; r < y2; ++r) {
            for (uint32_t c = 0; c < x1; ++c)
                m.at(x2 + r, c) = fp.at(r, c);
            for (uint32_t c = 0; c < y1; ++c)
                m.at(x2 + r, x1 + c) = dy.at(r, c);
        }
        Z.diff.push_back(std::move(m));
    }
    return Z;
}

/******** homotopies ********/

std::optional<Homotopy> is_null_homotopic(const ChainMap& f)
{
    const BoundedComplex &X = f.src, &Y = f.tgt;
    const AlgebraPtr& A = X.A;
    const FieldSpec& F = A->field;
    int hlo = std::max(X.lo, Y.lo + 1), hhi = std::min(X.hi(), Y.hi() + 1);
    // unknown h^i: X^i -> Y^{i-1}, in block-hom coordinates
    std::vector<std::vector<Mat>> bases;
    std::vector<uint32_t> offsets;
    uint32_t total = 0;
    for (int i = hlo; i <= hhi; ++i) {
        auto b = proj_hom_basis(A, X.at(i).summands, Y.at(i - 1).summands);
        offsets.push_back(total);
        total += (uint32_t)b.size();
        bases.push_back(std::move(b));
    }
    offsets.push_back(total);
    int elo = std::min(X.lo, Y.lo), ehi = std::max(X.hi(), Y.hi());
    uint32_t nrows = 0;
    for (int i = elo; i <= ehi; ++i)
        nrows += Y.dim_at(i) * X.dim_at(i);
    Mat C(nrows, total);
    Vec rhs(nrows, 0);
    uint32_t row0 = 0;
    for (int i = elo; i <= ehi; ++i) {
        uint32_t blk = Y.dim_at(i) * X.dim_at(i);
        if (blk == 0)
            continue;
        Mat fi = f.part(i);
        for (uint32_t t = 0; t < blk; ++t)
            rhs[row0 + t] = fi.a[t];
        // d_Y(i-1)·h(i) term
        if (i >= hlo && i <= hhi) {
            Mat dy = Y.d(i - 1);
            for (uint32_t k = 0; k < bases[size_t(i - hlo)].size(); ++k) {
                Mat contrib = mul(F, dy, bases[size_t(i - hlo)][k]);
                for (uint32_t t = 0; t < blk; ++t)
                    C.at(row0 + t, offsets[size_t(i - hlo)] + k) =
                        F.add(C.at(row0 + t, offsets[size_t(i - hlo)] + k), contrib.a[t]);
            }
        }
        // h(i+1)·d_X(i) term
        if (i + 1 >= hlo && i + 1 <= hhi) {
            Mat dx = X.d(i);
            for (uint32_t k = 0; k < bases[size_t(i + 1 - hlo)].size(); ++k) {
                Mat contrib = mul(F, bases[size_t(i + 1 - hlo)][k], dx);
                for (uint32_t t = 0; t < blk; ++t)
                    C.at(row0 + t, offsets[size_t(i + 1 - hlo)] + k) =
                        F.add(C.at(row0 + t, offsets[size_t(i + 1 - hlo)] + k), contrib.a[t]);
            }
        }
        row0 += blk;
    }
    auto x = solve_linear(F, C, rhs);
    if (!x)
        return std::nullopt;
    Homotopy h;
    h.lo = hlo;
    for (int i = hlo; i <= hhi; ++i) {
        Mat hi_mat(Y.dim_at(i - 1), X.dim_at(i));
        for (uint32_t k = 0; k < bases[size_t(i - hlo)].size(); ++k)
            if ((*x)[offsets[size_t(i - hlo)] + k])
                hi_mat = add(F, hi_mat, scale(F, (*x)[offsets[size_t(i - hlo)] + k],
                                              bases[size_t(i - hlo)][k]));
        h.parts.push_back(std::move(hi_mat));
    }
    return h;
}

bool is_contractible(const BoundedComplex& X)
{
    return is_null_homotopic(identity_chain_map(X)).has_value();
}

bool homotopy_equivalent(const ChainMap& f)
{
    return is_contractible(cone(f));
}

Module homology(const BoundedComplex& X, int i)
{
    const FieldSpec& F = X.A->field;
    Module Xi = X.at(i).mod;
    SubQuot Z = submodule(Xi, kernel_matrix(F, X.d(i)));
    // boundaries in Z-coordinates
    Mat dprev = X.d(i - 1);
    auto Y = solve_matrix(F, Z.map.m, dprev);
    require(Y.has_value(), Err::Internal, "homology: boundaries not inside cocycles");
    return quotient_module(Z.mod, *Y).mod;
}

/******** duality ********/

namespace {

struct VertexDual {
    DualData dd;   // dual data of e_v A
    StdProj sp;    // standardization of (e_v A)* over A^op
};

std::mutex g_dual_mutex;
std::map<std::pair<const Algebra*, uint32_t>, VertexDual> g_dual_cache;
std::vector<AlgebraPtr> g_dual_pins;

const VertexDual& vertex_dual(const AlgebraPtr& A, uint32_t v)
{
    std::lock_guard<std::mutex> lk(g_dual_mutex);
    auto it = g_dual_cache.find({A.get(), v});
    if (it != g_dual_cache.end())
        return it->second;
    VertexDual vd{star_dual_full(indecomposable_projective(A, v)), {}};
    vd.sp = standardize_projective(vd.dd.dual);
    require(vd.sp.summands == std::vector<uint32_t>{v}, Err::Internal,
            "dual of e_v A is not e_v A^op");
    g_dual_pins.push_back(A);
    return g_dual_cache.emplace(std::make_pair(A.get(), v), std::move(vd)).first->second;
}

}  // namespace

BoundedComplex dualize_complex(const BoundedComplex& X)
{
    const AlgebraPtr& A = X.A;
    AlgebraPtr Aop = opposite_algebra(A);
    const FieldSpec& F = A->field;
    if (X.empty())
        return zero_complex(Aop);
    int a = -X.hi(), b = -X.lo;
    BoundedComplex Y{Aop, a, {}, {}};
    for (int j = a; j <= b; ++j)
        Y.comp.push_back(make_comp(Aop, X.at(-j).summands));
    for (int j = a; j < b; ++j) {
        // d_Y(j): (X^{-j})* -> (X^{-j-1})*, the dual of d_X(-j-1)
        int i = -j - 1;
        ProjSummands ls = proj_layout(A, X.at(i).summands);
        ProjSummands lt = proj_layout(A, X.at(i + 1).summands);
        ProjSummands dls = proj_layout(Aop, X.at(i + 1).summands);
        ProjSummands dlt = proj_layout(Aop, X.at(i).summands);
        Mat dx = X.d(i);
        Mat out(dlt.offsets.back(), dls.offsets.back());
        for (size_t s = 0; s < ls.summands.size(); ++s)
            for (size_t t = 0; t < lt.summands.size(); ++t) {
                uint32_t v = ls.summands[s], w = lt.summands[t];
                const VertexDual& vdv = vertex_dual(A, v);
                const VertexDual& vdw = vertex_dual(A, w);
                Module Pv = indecomposable_projective(A, v), Pw = indecomposable_projective(A, w);
                Mat blockf(Pw.dim, Pv.dim);
                for (uint32_t r = 0; r < Pw.dim; ++r)
                    for (uint32_t c = 0; c < Pv.dim; ++c)
                        blockf.at(r, c) = dx.at(lt.offsets[t] + r, ls.offsets[s] + c);
                ModuleMap g = star_dual_map(ModuleMap{Pv, Pw, blockf}, vdv.dd, vdw.dd);
                Mat dual_block = mul(F, vdv.sp.to.m, mul(F, g.m, vdw.sp.from.m));
                for (uint32_t r = 0; r < dual_block.rows; ++r)
                    for (uint32_t c = 0; c < dual_block.cols; ++c)
                        out.at(dlt.offsets[s] + r, dls.offsets[t] + c) = dual_block.at(r, c);
            }
        Y.diff.push_back(std::move(out));
    }
    return Y;
}

/******** spliced complexes ********/

void SplicedComplex::check() const
{
    require(!window.empty(), Err::Internal, "spliced: empty window");
    window.check();
    const FieldSpec& F = ctx->A->field;
    require(left_seam.m.rows == window.dim_at(lo()) && left_seam.m.cols == left.dim, Err::Internal,
            "spliced: left seam shape");
    left_seam.check();
    require(rank(F, left_seam.m) == left.dim, Err::Internal, "spliced: left seam not mono");
    right_seam.check();
    require(rank(F, right_seam.m) == right.dim, Err::Internal, "spliced: right seam not epi");
    if (hi() > lo()) {
        require(mul(F, window.d(lo()), left_seam.m).is_zero(), Err::Internal,
                "spliced: d∘left_seam != 0");
        require(mul(F, right_seam.m, window.d(hi() - 1)).is_zero(), Err::Internal,
                "spliced: right_seam∘d != 0");
    } else {
        require(mul(F, right_seam.m, left_seam.m).is_zero(), Err::Internal,
                "spliced: seam composite != 0");
    }
    require(is_member(right, ctx), Err::NotMember, "spliced: right module is not a member");
    if (ctx->mode == FrobeniusContext::Mode::ExplicitList)
        require(is_member(left, ctx), Err::NotMember,
                "spliced: left module is not a member (explicit-list context)");
}

SplicedComplex make_spliced(const CtxPtr& ctx, BoundedComplex window, Module left,
                            ModuleMap left_seam, Module right, ModuleMap right_seam)
{
    SplicedComplex S{ctx, std::move(window), std::move(left), std::move(left_seam),
                     std::move(right), std::move(right_seam)};
    S.check();
    return S;
}

SplicedComplex spliced_of_bounded(const CtxPtr& ctx, const BoundedComplex& X)
{
    BoundedComplex W = trim(X);
    if (W.empty())
        W = BoundedComplex{ctx->A, 0, {make_comp(ctx->A, {})}, {}};
    Module z = zero_module(ctx->A);
    return make_spliced(ctx, W, z, ModuleMap{z, W.at(W.lo).mod, Mat(W.dim_at(W.lo), 0)}, z,
                        ModuleMap{W.at(W.hi()).mod, z, Mat(0, W.dim_at(W.hi()))});
}

SplicedComplex extend_window(const SplicedComplex& S, int lo, int hi)
{
    SplicedComplex T = S;
    const FieldSpec& F = S.ctx->A->field;
    while (T.lo() > lo) {
        SyzygyData sd = syzygy_data(T.left);
        ProjComp c = make_comp(T.ctx->A, sd.cover.summands);
        Mat dnew = mul(F, T.left_seam.m, sd.cover.epi.m);
        T.window.comp.insert(T.window.comp.begin(), c);
        T.window.diff.insert(T.window.diff.begin(), dnew);
        T.window.lo -= 1;
        T.left = sd.omega;
        T.left_seam = ModuleMap{sd.omega, c.mod, sd.incl.m};
    }
    while (T.hi() < hi) {
        CosyzygyData cz = cosyzygy(T.right, T.ctx);
        ProjComp c = make_comp(T.ctx->A, cz.summands);
        Mat dnew = mul(F, cz.mono.m, T.right_seam.m);
        T.window.comp.push_back(c);
        T.window.diff.push_back(dnew);
        T.right = cz.cok;
        T.right_seam = ModuleMap{c.mod, cz.cok, cz.cokmap.m};
    }
    return T;
}

BoundedComplex materialize(const SplicedComplex& S, int lo, int hi)
{
    SplicedComplex T = extend_window(S, lo, hi);
    BoundedComplex W{T.ctx->A, lo, {}, {}};
    for (int i = lo; i <= hi; ++i)
        W.comp.push_back(T.window.at(i));
    for (int i = lo; i < hi; ++i)
        W.diff.push_back(T.window.d(i));
    return W;
}

SplicedComplex shift_spliced(const SplicedComplex& S, int k)
{
    SplicedComplex T = S;
    T.window = shift(S.window, k);
    return T;
}

Module spliced_homology(const SplicedComplex& S, int i)
{
    BoundedComplex W = materialize(S, std::min(i - 1, S.lo()), std::max(i + 1, S.hi()));
    return homology(W, i);
}

bool spliced_exact_everywhere(const SplicedComplex& S)
{
    for (int i = S.lo() - 1; i <= S.hi() + 1; ++i)
        if (spliced_homology(S, i).dim != 0)
            return false;
    return true;
}

bool cert_plus_bounded(const SplicedComplex& S)
{
    return is_projective(S.left);
}

bool cert_minus_bounded(const SplicedComplex& S)
{
    return is_projective(S.right);
}

bool cert_acyclic(const SplicedComplex& S)
{
    if (!spliced_exact_everywhere(S))
        return false;
    if (S.ctx->mode == FrobeniusContext::Mode::ExplicitList) {
        // cocycles must be members for the complex to live in K^{∞,∅}(P,F)
        BoundedComplex W = materialize(S, S.lo() - 1, S.hi() + 2);
        const FieldSpec& F = S.ctx->A->field;
        for (int i = S.lo(); i <= S.hi() + 1; ++i) {
            SubQuot Z = submodule(W.at(i).mod, kernel_matrix(F, W.d(i)));
            if (!is_member(Z.mod, S.ctx))
                return false;
        }
    }
    return true;
}

bool cert_bounded(const SplicedComplex& S)
{
    return is_projective(S.left) && is_projective(S.right);
}

bool spliced_contractible(const SplicedComplex& S)
{
    if (!cert_bounded(S))
        return false;
    BoundedComplex W = materialize(S, S.lo() - 2, S.hi() + 2);
    return is_contractible(trim(W));
}

SplicedComplex complete_resolution(const Module& M, const CtxPtr& ctx, int lo, int hi)
{
    require(lo <= 0 && 0 < hi, Err::InputError, "complete_resolution needs lo <= 0 < hi");
    require(is_member(M, ctx), Err::NotMember, "complete_resolution of a non-member");
    const FieldSpec& F = ctx->A->field;
    SyzygyData sd = syzygy_data(M);
    CosyzygyData cz = cosyzygy(M, ctx);
    BoundedComplex W{ctx->A, 0, {make_comp(ctx->A, sd.cover.summands), make_comp(ctx->A, cz.summands)},
                     {mul(F, cz.mono.m, sd.cover.epi.m)}};
    SplicedComplex S = make_spliced(ctx, W, sd.omega,
                                    ModuleMap{sd.omega, W.at(0).mod, sd.incl.m}, cz.cok,
                                    ModuleMap{W.at(1).mod, cz.cok, cz.cokmap.m});
    return extend_window(S, lo, hi);
}

/******** spliced maps ********/

Mat SplicedMap::part(int i) const
{
    if (i >= src.lo() && i <= src.hi())
        return parts[size_t(i - src.lo())];
    return Mat(tgt.window.dim_at(i), src.window.dim_at(i));
}

void SplicedMap::check() const
{
    require(src.lo() == tgt.lo() && src.hi() == tgt.hi(), Err::Internal,
            "spliced map: windows not aligned");
    const FieldSpec& F = src.ctx->A->field;
    require((int)parts.size() == src.hi() - src.lo() + 1, Err::Internal, "spliced map: part count");
    for (int i = src.lo(); i <= src.hi(); ++i) {
        ModuleMap{src.window.at(i).mod, tgt.window.at(i).mod, part(i)}.check();
        if (i < src.hi())
            require(mul(F, tgt.window.d(i), part(i)) == mul(F, part(i + 1), src.window.d(i)),
                    Err::Internal, "spliced map: chain condition fails");
    }
    lmap.check();
    rmap.check();
    require(mul(F, part(src.lo()), src.left_seam.m) == mul(F, tgt.left_seam.m, lmap.m),
            Err::Internal, "spliced map: left seam compatibility fails");
    require(mul(F, rmap.m, src.right_seam.m) == mul(F, tgt.right_seam.m, part(src.hi())),
            Err::Internal, "spliced map: right seam compatibility fails");
}

SplicedMap extend_map(const SplicedMap& f, int lo, int hi)
{
    SplicedMap g = f;
    const FieldSpec& F = f.src.ctx->A->field;
    while (g.src.lo() > lo) {
        SyzygyData ss = syzygy_data(g.src.left);
        SyzygyData st = syzygy_data(g.tgt.left);
        // phi: P(L_s) -> P(L_t) with epi_t∘phi = lmap∘epi_s
        auto phi = solve_module_map_pre(ss.cover.P, st.cover.P, st.cover.epi.m,
                                    mul(F, g.lmap.m, ss.cover.epi.m));
        require(phi.has_value(), Err::Internal, "extend_map: cover lift failed");
        // new lmap: restriction to syzygies, incl_t∘l' = phi∘incl_s
        auto lnew = solve_matrix(F, st.incl.m, mul(F, *phi, ss.incl.m));
        require(lnew.has_value(), Err::Internal, "extend_map: syzygy restriction failed");
        g.src = extend_window(g.src, g.src.lo() - 1, g.src.hi());
        g.tgt = extend_window(g.tgt, g.tgt.lo() - 1, g.tgt.hi());
        g.parts.insert(g.parts.begin(), *phi);
        g.lmap = ModuleMap{g.src.left, g.tgt.left, *lnew};
    }
    while (g.src.hi() < hi) {
        CosyzygyData cs = cosyzygy(g.src.right, g.src.ctx);
        CosyzygyData ct = cosyzygy(g.tgt.right, g.tgt.ctx);
        // psi: Q(C_s) -> Q(C_t) with psi∘mono_s = mono_t∘rmap
        auto psi = solve_module_map_post(cs.P, ct.P, cs.mono.m, mul(F, ct.mono.m, g.rmap.m));
        require(psi.has_value(), Err::Internal, "extend_map: cosyzygy extension failed");
        // new rmap: induced on cokernels, r'∘cok_s = cok_t∘psi
        Mat rhs = mul(F, ct.cokmap.m, *psi);
        auto rnew = solve_module_map_post(cs.cok, ct.cok, cs.cokmap.m, rhs);
        require(rnew.has_value(), Err::Internal, "extend_map: cokernel descent failed");
        g.src = extend_window(g.src, g.src.lo(), g.src.hi() + 1);
        g.tgt = extend_window(g.tgt, g.tgt.lo(), g.tgt.hi() + 1);
        g.parts.push_back(*psi);
        g.rmap = ModuleMap{g.src.right, g.tgt.right, *rnew};
    }
    return g;
}

SplicedMap align_identity(const SplicedComplex& S, int lo, int hi)
{
    SplicedComplex T = extend_window(S, std::min(lo, S.lo()), std::max(hi, S.hi()));
    SplicedMap f{T, T, {}, identity_map(T.left), identity_map(T.right)};
    for (int i = T.lo(); i <= T.hi(); ++i)
        f.parts.push_back(Mat::identity(T.window.dim_at(i)));
    return f;
}

SplicedMap compose_spliced(const SplicedMap& f, const SplicedMap& g)
{
    // f: T -> U, g: S -> T
    int lo = std::min(f.src.lo(), g.src.lo());
    int hi = std::max(f.src.hi(), g.src.hi());
    SplicedMap fe = extend_map(f, lo, hi), ge = extend_map(g, lo, hi);
    const FieldSpec& F = f.src.ctx->A->field;
    SplicedMap h{ge.src, fe.tgt, {}, compose(fe.lmap, ge.lmap), compose(fe.rmap, ge.rmap)};
    for (int i = lo; i <= hi; ++i)
        h.parts.push_back(mul(F, fe.part(i), ge.part(i)));
    return h;
}

SplicedMap make_spliced_map(const SplicedComplex& src0, const SplicedComplex& tgt0,
                            int parts_lo, const std::vector<Mat>& parts_in)
{
    int lo = std::min(src0.lo(), tgt0.lo()), hi = std::max(src0.hi(), tgt0.hi());
    lo = std::min(lo, parts_lo);
    hi = std::max(hi, parts_lo + (int)parts_in.size() - 1);
    SplicedComplex src = extend_window(src0, lo, hi), tgt = extend_window(tgt0, lo, hi);
    const FieldSpec& F = src.ctx->A->field;
    SplicedMap f{src, tgt, {}, {}, {}};
    for (int i = lo; i <= hi; ++i) {
        int k = i - parts_lo;
        if (k >= 0 && k < (int)parts_in.size())
            f.parts.push_back(parts_in[size_t(k)]);
        else
            f.parts.push_back(Mat(tgt.window.dim_at(i), src.window.dim_at(i)));
    }
    // derive lmap from tgt.left_seam ∘ lmap = part(lo) ∘ src.left_seam
    Mat lrhs = mul(F, f.parts.front(), src.left_seam.m);
    auto lm = solve_module_map_pre(src.left, tgt.left, tgt.left_seam.m, lrhs);
    require(lm.has_value(), Err::Internal, "make_spliced_map: left tails incompatible");
    f.lmap = ModuleMap{src.left, tgt.left, *lm};
    // derive rmap from rmap ∘ src.right_seam = tgt.right_seam ∘ part(hi)
    Mat rrhs = mul(F, tgt.right_seam.m, f.parts.back());
    auto rm = solve_module_map_post(src.right, tgt.right, src.right_seam.m, rrhs);
    require(rm.has_value(), Err::Internal, "make_spliced_map: right tails incompatible");
    f.rmap = ModuleMap{src.right, tgt.right, *rm};
    f.check();
    return f;
}

SplicedCone cone_spliced(const SplicedMap& f0)
{
    const CtxPtr& ctx = f0.src.ctx;
    const AlgebraPtr& A = ctx->A;
    const FieldSpec& F = A->field;
    int m0 = f0.src.lo(), n0 = f0.src.hi();
    SplicedMap f = extend_map(f0, m0 - 3, n0 + 5);
    // bounded cone on [m0-3, n0+4]
    int a = m0 - 3, b = n0 + 4;
    BoundedComplex Z{A, a, {}, {}};
    for (int i = a; i <= b; ++i) {
        std::vector<uint32_t> s = f.src.window.at(i + 1).summands;
        auto t = f.tgt.window.at(i).summands;
        s.insert(s.end(), t.begin(), t.end());
        Z.comp.push_back(make_comp(A, s));
    }
    for (int i = a; i < b; ++i) {
        uint32_t x1 = f.src.window.dim_at(i + 1), x2 = f.src.window.dim_at(i + 2);
        uint32_t y1 = f.tgt.window.dim_at(i), y2 = f.tgt.window.dim_at(i + 1);
        Mat m(x2 + y2, x1 + y1);
        Mat dx = f.src.window.d(i + 1), dy = f.tgt.window.d(i), fp = f.part(i + 1);
        for (uint32_t r = 0; r < x2; ++r)
            for (uint32_t c = 0; c < x1; ++c)
                m.at(r, c) = F.neg(dx.at(r, c));
        for (uint32_t r = 0; r < y2; ++r) {
            for (uint32_t c = 0; c < x1; ++c)
                m.at(x2 + r, c) = fp.at(r, c);
            for (uint32_t c = 0; c < y1; ++c)
                m.at(x2 + r, x1 + c) = dy.at(r, c);
        }
        Z.diff.push_back(std::move(m));
    }
    // wrap as spliced: window [m0-2, n0+2]
    int wlo = m0 - 2, whi = n0 + 2;
    SubQuot L = submodule(Z.at(wlo).mod, Z.d(wlo - 1));
    SubQuot C = submodule(Z.at(whi + 1).mod, kernel_matrix(F, Z.d(whi + 1)));
    auto seam = solve_matrix(F, C.map.m, Z.d(whi));
    require(seam.has_value(), Err::Internal, "cone_spliced: seam corestriction failed");
    require(rank(F, *seam) == C.mod.dim, Err::Internal,
            "cone_spliced: homology persists above the window");
    BoundedComplex W{A, wlo, {}, {}};
    for (int i = wlo; i <= whi; ++i)
        W.comp.push_back(Z.at(i));
    for (int i = wlo; i < whi; ++i)
        W.diff.push_back(Z.d(i));
    SplicedCone out;
    out.cone = make_spliced(ctx, W, L.mod, ModuleMap{L.mod, W.at(wlo).mod, L.map.m}, C.mod,
                            ModuleMap{W.at(whi).mod, C.mod, *seam});
    out.lo = wlo;
    for (int i = wlo; i <= whi; ++i)
        out.src_dims.push_back(f.src.window.dim_at(i + 1));
    return out;
}

/******** truncation triangles ********/

TruncationTriangle truncation_triangle(const SplicedComplex& S, int n)
{
    SplicedComplex E = extend_window(S, std::min(S.lo(), n), std::max(S.hi(), n + 1));
    int m = E.lo(), N = E.hi();
    const AlgebraPtr& A = E.ctx->A;
    Module z = zero_module(A);

    // upper = τ_{>= n+1}: window [n+1, N], zero left tail
    BoundedComplex WU{A, n + 1, {}, {}};
    for (int i = n + 1; i <= N; ++i)
        WU.comp.push_back(E.window.at(i));
    for (int i = n + 1; i < N; ++i)
        WU.diff.push_back(E.window.d(i));
    SplicedComplex U = make_spliced(E.ctx, WU, z, ModuleMap{z, WU.at(n + 1).mod, Mat(WU.dim_at(n + 1), 0)},
                                    E.right, E.right_seam);

    // lower = τ_{<= n}: window [m, n], zero right tail
    BoundedComplex WL{A, m, {}, {}};
    for (int i = m; i <= n; ++i)
        WL.comp.push_back(E.window.at(i));
    for (int i = m; i < n; ++i)
        WL.diff.push_back(E.window.d(i));
    SplicedComplex Lw = make_spliced(E.ctx, WL, E.left, E.left_seam, z,
                                     ModuleMap{WL.at(n).mod, z, Mat(0, WL.dim_at(n))});

    // inclusion: extend U to [m, N] (its zero left tail fills with zeros)
    SplicedComplex Ue = extend_window(U, m, N);
    SplicedMap incl{Ue, E, {}, ModuleMap{z, E.left, Mat(E.left.dim, 0)}, identity_map(E.right)};
    for (int i = m; i <= N; ++i) {
        Mat p(E.window.dim_at(i), Ue.window.dim_at(i));
        if (i >= n + 1)
            p = Mat::identity(E.window.dim_at(i));
        incl.parts.push_back(std::move(p));
    }

    SplicedComplex Le = extend_window(Lw, m, N);
    SplicedMap proj{E, Le, {}, identity_map(E.left), ModuleMap{E.right, z, Mat(0, E.right.dim)}};
    for (int i = m; i <= N; ++i) {
        Mat p(Le.window.dim_at(i), E.window.dim_at(i));
        if (i <= n)
            p = Mat::identity(E.window.dim_at(i));
        proj.parts.push_back(std::move(p));
    }

    incl.check();
    proj.check();
    return TruncationTriangle{U, Lw, incl, proj};
}

SplicedComplex truncate_spliced(const SplicedComplex& S, TruncMode mode, int n)
{
    if (mode == TruncMode::Ge)
        return truncation_triangle(S, n - 1).upper;
    return truncation_triangle(S, n).lower;
}

}  // namespace homcat
