#include "homcat/module.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace homcat {

Mat Module::act_of(const Vec& x) const
{
    Mat m(dim, dim);
    for (uint32_t j = 0; j < A->dim; ++j)
        if (x[j] % A->field.p) {
            uint32_t c = x[j] % A->field.p;
            for (size_t t = 0; t < m.a.size(); ++t)
                m.a[t] = A->field.add(m.a[t], A->field.mul(c, act[j].a[t]));
        }
    return m;
}

void Module::check() const
{
    const FieldSpec& F = A->field;
    require(act.size() == A->dim, Err::InputError, "module: one action matrix per basis element required");
    for (auto& m : act)
        require(m.rows == dim && m.cols == dim, Err::InputError, "module: action matrix shape");
    require(act_of(A->unit) == Mat::identity(dim), Err::InputError, "module: unit does not act as identity");
    for (uint32_t i = 0; i < A->dim; ++i)
        for (uint32_t j = 0; j < A->dim; ++j) {
            Mat lhs = act_of(A->mult[size_t(i) * A->dim + j]);
            Mat rhs = mul(F, act[j], act[i]);
            require(lhs == rhs, Err::InputError, "module: action not multiplicative");
        }
}

void ModuleMap::check() const
{
    require(src.A->same(*tgt.A), Err::AlgebraMismatch, "map between modules over different algebras");
    require(m.rows == tgt.dim && m.cols == src.dim, Err::InputError, "map matrix shape");
    const FieldSpec& F = src.A->field;
    for (uint32_t b = 0; b < src.A->dim; ++b)
        require(mul(F, m, src.act[b]) == mul(F, tgt.act[b], m), Err::InputError,
                "map does not intertwine the actions");
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g)
{
    require(g.tgt.dim == f.src.dim, Err::Internal, "compose: dimension mismatch");
    return ModuleMap{g.src, f.tgt, mul(f.src.A->field, f.m, g.m)};
}

ModuleMap identity_map(const Module& M)
{
    return ModuleMap{M, M, Mat::identity(M.dim)};
}

ModuleMap zero_map(const Module& src, const Module& tgt)
{
    return ModuleMap{src, tgt, Mat(tgt.dim, src.dim)};
}

ModuleMap map_between(const Module& src, const Module& tgt, Mat m)
{
    return ModuleMap{src, tgt, std::move(m)};
}

Module zero_module(const AlgebraPtr& A)
{
    Module M{A, 0, std::vector<Mat>(A->dim, Mat(0, 0))};
    return M;
}

Module regular_module(const AlgebraPtr& A)
{
    Module M{A, A->dim, A->right_mult};
    return M;
}

/******** projectives, submodules, quotients ********/

namespace {

std::mutex g_cache_mutex;
std::map<std::pair<const Algebra*, uint32_t>, Module> g_proj_cache;
std::map<std::pair<const Algebra*, std::pair<uint32_t, uint32_t>>, std::vector<Mat>> g_projhom_cache;
std::vector<AlgebraPtr> g_pinned;

void pin_algebra(const AlgebraPtr& A)
{
    for (auto& p : g_pinned)
        if (p.get() == A.get())
            return;
    g_pinned.push_back(A);
}

}  // namespace

SubQuot submodule(const Module& M, const Mat& span)
{
    const FieldSpec& F = M.A->field;
    // canonical basis of the column space
    RowSpace rs(F, span.transpose());
    Mat B = rs.R.transpose();  // M.dim x k
    Module S{M.A, B.cols, {}};
    S.act.reserve(M.A->dim);
    for (uint32_t b = 0; b < M.A->dim; ++b) {
        auto X = solve_matrix(F, B, mul(F, M.act[b], B));
        require(X.has_value(), Err::Internal, "submodule span is not invariant");
        S.act.push_back(*X);
    }
    return SubQuot{S, ModuleMap{S, M, B}};
}

SubQuot quotient_module(const Module& M, const Mat& span)
{
    const FieldSpec& F = M.A->field;
    RowSpace rs(F, span.transpose());
    std::vector<bool> piv(M.dim, false);
    for (uint32_t c : rs.pivots)
        piv[c] = true;
    std::vector<uint32_t> keep;
    for (uint32_t i = 0; i < M.dim; ++i)
        if (!piv[i])
            keep.push_back(i);
    // projection: reduce then read off non-pivot coordinates
    Mat P((uint32_t)keep.size(), M.dim);
    for (uint32_t i = 0; i < M.dim; ++i) {
        Vec e(M.dim, 0);
        e[i] = 1;
        Vec r = rs.reduce(e);
        for (uint32_t k = 0; k < keep.size(); ++k)
            P.at(k, i) = r[keep[k]];
    }
    // section: embed non-pivot coordinates
    Mat S(M.dim, (uint32_t)keep.size());
    for (uint32_t k = 0; k < keep.size(); ++k)
        S.at(keep[k], k) = 1;
    Module Q{M.A, (uint32_t)keep.size(), {}};
    for (uint32_t b = 0; b < M.A->dim; ++b)
        Q.act.push_back(mul(F, P, mul(F, M.act[b], S)));
    return SubQuot{Q, ModuleMap{M, Q, P}};
}

Module indecomposable_projective(const AlgebraPtr& A, uint32_t vertex)
{
    require(vertex < A->vertex_count(), Err::InputError, "vertex out of range");
    {
        std::lock_guard<std::mutex> lk(g_cache_mutex);
        auto it = g_proj_cache.find({A.get(), vertex});
        if (it != g_proj_cache.end())
            return it->second;
    }
    // e_v A = image of left multiplication by e_v on the regular module
    Module R = regular_module(A);
    Mat L = A->left_mult_of(A->idempotents[vertex]);
    Module P = submodule(R, L).mod;
    std::lock_guard<std::mutex> lk(g_cache_mutex);
    pin_algebra(A);
    g_proj_cache.emplace(std::make_pair(A.get(), vertex), P);
    return P;
}

ProjSummands proj_layout(const AlgebraPtr& A, const std::vector<uint32_t>& summands)
{
    ProjSummands ps;
    ps.summands = summands;
    uint32_t off = 0;
    for (uint32_t v : summands) {
        ps.offsets.push_back(off);
        off += indecomposable_projective(A, v).dim;
    }
    ps.offsets.push_back(off);
    return ps;
}

Module proj_module(const AlgebraPtr& A, const std::vector<uint32_t>& summands)
{
    std::vector<Module> parts;
    parts.reserve(summands.size());
    for (uint32_t v : summands)
        parts.push_back(indecomposable_projective(A, v));
    if (parts.empty())
        return zero_module(A);
    return direct_sum(parts).mod;
}

SumData direct_sum(const std::vector<Module>& parts)
{
    require(!parts.empty(), Err::Internal, "direct_sum of nothing");
    const AlgebraPtr& A = parts[0].A;
    const FieldSpec& F = A->field;
    uint32_t total = 0;
    for (auto& p : parts) {
        require(p.A->same(*A), Err::AlgebraMismatch, "direct_sum over mixed algebras");
        total += p.dim;
    }
    Module S{A, total, std::vector<Mat>(A->dim, Mat(total, total))};
    uint32_t off = 0;
    std::vector<uint32_t> offs;
    for (auto& p : parts) {
        offs.push_back(off);
        for (uint32_t b = 0; b < A->dim; ++b)
            for (uint32_t i = 0; i < p.dim; ++i)
                for (uint32_t j = 0; j < p.dim; ++j)
                    S.act[b].at(off + i, off + j) = p.act[b].at(i, j);
        off += p.dim;
    }
    (void)F;
    SumData out{S, {}, {}};
    for (size_t k = 0; k < parts.size(); ++k) {
        Mat in(total, parts[k].dim), pr(parts[k].dim, total);
        for (uint32_t i = 0; i < parts[k].dim; ++i) {
            in.at(offs[k] + i, i) = 1;
            pr.at(i, offs[k] + i) = 1;
        }
        out.incl.push_back(ModuleMap{parts[k], S, in});
        out.proj.push_back(ModuleMap{S, parts[k], pr});
    }
    return out;
}

Module simple_module(const AlgebraPtr& A, uint32_t vertex)
{
    Module P = indecomposable_projective(A, vertex);
    // radical span inside P
    std::vector<Vec> cols;
    for (uint32_t r : A->radical_idx) {
        Vec e(A->dim, 0);
        e[r] = 1;
        Mat ar = P.act_of(e);
        for (uint32_t j = 0; j < P.dim; ++j)
            cols.push_back(ar.column(j));
    }
    Mat span = cols.empty() ? Mat(P.dim, 0) : Mat::from_rows(cols, P.dim).transpose();
    return quotient_module(P, span).mod;
}

Mat radical_span(const Module& M)
{
    std::vector<Vec> cols;
    for (uint32_t r : M.A->radical_idx)
        for (uint32_t j = 0; j < M.dim; ++j)
            cols.push_back(M.act[r].column(j));
    return cols.empty() ? Mat(M.dim, 0) : Mat::from_rows(cols, M.dim).transpose();
}

SubQuot radical_submodule(const Module& M)
{
    return submodule(M, radical_span(M));
}

SubQuot socle_submodule(const Module& M)
{
    // kernel of the stacked radical actions
    Mat stacked(0, M.dim);
    for (uint32_t r : M.A->radical_idx)
        stacked = vstack(stacked, M.act[r]);
    return submodule(M, kernel_matrix(M.A->field, stacked));
}

SubQuot socle_quotient(const Module& M)
{
    return quotient_module(M, socle_submodule(M).map.m);
}

SubQuot top_quotient(const Module& M)
{
    return quotient_module(M, radical_span(M));
}

/******** hom spaces ********/

std::vector<Mat> module_hom_basis(const Module& M, const Module& N)
{
    require(M.A->same(*N.A), Err::AlgebraMismatch, "hom between modules over different algebras");
    const FieldSpec& F = M.A->field;
    const uint32_t n = N.dim, m = M.dim;
    if (n == 0 || m == 0)
        return {};
    const auto& gens = M.A->generators();
    // unknowns: vec(H), H an n x m matrix; constraints H·act_M(g) = act_N(g)·H
    Mat C((uint32_t)gens.size() * n * m, n * m);
    uint32_t row = 0;
    for (const Vec& g : gens) {
        Mat am = M.act_of(g), an = N.act_of(g);
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = 0; j < m; ++j) {
                // sum_k H[i,k] am[k,j] - an[i,k] H[k,j] = 0
                for (uint32_t k = 0; k < m; ++k)
                    C.at(row, i * m + k) = F.add(C.at(row, i * m + k), am.at(k, j));
                for (uint32_t k = 0; k < n; ++k)
                    C.at(row, k * m + j) = F.sub(C.at(row, k * m + j), an.at(i, k));
                ++row;
            }
    }
    std::vector<Mat> out;
    for (auto& v : kernel_basis(F, C)) {
        Mat H(n, m);
        H.a.assign(v.begin(), v.end());
        out.push_back(std::move(H));
    }
    return out;
}

std::vector<Mat> proj_hom_basis(const AlgebraPtr& A, const std::vector<uint32_t>& srcs,
                                const std::vector<uint32_t>& tgts)
{
    ProjSummands ls = proj_layout(A, srcs), lt = proj_layout(A, tgts);
    uint32_t n = lt.offsets.back(), m = ls.offsets.back();
    std::vector<Mat> out;
    for (size_t i = 0; i < srcs.size(); ++i)
        for (size_t j = 0; j < tgts.size(); ++j) {
            std::vector<Mat> blocks;
            {
                std::lock_guard<std::mutex> lk(g_cache_mutex);
                auto it = g_projhom_cache.find({A.get(), {srcs[i], tgts[j]}});
                if (it != g_projhom_cache.end())
                    blocks = it->second;
            }
            if (blocks.empty()) {
                blocks = module_hom_basis(indecomposable_projective(A, srcs[i]),
                                          indecomposable_projective(A, tgts[j]));
                std::lock_guard<std::mutex> lk(g_cache_mutex);
                pin_algebra(A);
                g_projhom_cache.emplace(std::make_pair(A.get(), std::make_pair(srcs[i], tgts[j])), blocks);
            }
            for (const Mat& b : blocks) {
                Mat H(n, m);
                for (uint32_t r = 0; r < b.rows; ++r)
                    for (uint32_t c = 0; c < b.cols; ++c)
                        H.at(lt.offsets[j] + r, ls.offsets[i] + c) = b.at(r, c);
                out.push_back(std::move(H));
            }
        }
    return out;
}

/******** kernels, images, covers ********/

Factorization factorize(const ModuleMap& f)
{
    const FieldSpec& F = f.src.A->field;
    Factorization out{submodule(f.src, kernel_matrix(F, f.m)), submodule(f.tgt, f.m), {}, {}};
    const Mat& B = out.image.map.m;  // tgt.dim x k
    auto X = solve_matrix(F, B, f.m);
    require(X.has_value(), Err::Internal, "factorize: image corestriction failed");
    out.onto_image = ModuleMap{f.src, out.image.mod, *X};
    out.cokernel = quotient_module(f.tgt, f.m);
    return out;
}

CoverData projective_cover(const Module& M)
{
    const AlgebraPtr& A = M.A;
    const FieldSpec& F = A->field;
    if (M.dim == 0) {
        Module P = zero_module(A);
        return CoverData{P, std::vector<uint32_t>(A->vertex_count(), 0), {}, ModuleMap{P, M, Mat(0, 0)}};
    }
    // top = M / M·rad
    std::vector<Vec> cols;
    for (uint32_t r : A->radical_idx)
        for (uint32_t j = 0; j < M.dim; ++j)
            cols.push_back(M.act[r].column(j));
    Mat radspan = cols.empty() ? Mat(M.dim, 0) : Mat::from_rows(cols, M.dim).transpose();
    SubQuot top = quotient_module(M, radspan);

    CoverData out;
    out.mults.assign(A->vertex_count(), 0);
    std::vector<Vec> generators;  // elements of M, one per cover summand
    for (uint32_t v = 0; v < A->vertex_count(); ++v) {
        Mat ev = top.mod.act_of(A->idempotents[v]);
        RowSpace comp(F, ev.transpose());
        out.mults[v] = comp.dim();
        for (uint32_t k = 0; k < comp.dim(); ++k) {
            Vec t = comp.R.row(k);
            auto x = solve_linear(F, top.map.m, t);
            require(x.has_value(), Err::Internal, "cover: top lift failed");
            Vec g = mul_vec(F, M.act_of(A->idempotents[v]), *x);
            generators.push_back(g);
            out.summands.push_back(v);
        }
    }
    out.P = proj_module(A, out.summands);
    ProjSummands lay = proj_layout(A, out.summands);
    Mat epi(M.dim, out.P.dim);
    for (size_t s = 0; s < out.summands.size(); ++s) {
        Module Pv = indecomposable_projective(A, out.summands[s]);
        // basis element k of P_v is an algebra element; generator · it
        Module R = regular_module(A);
        Mat L = A->left_mult_of(A->idempotents[out.summands[s]]);
        Mat B = submodule(R, L).map.m;  // A-coordinates of P_v basis
        for (uint32_t k = 0; k < Pv.dim; ++k) {
            Vec col = mul_vec(F, M.act_of(B.column(k)), generators[s]);
            for (uint32_t i = 0; i < M.dim; ++i)
                epi.at(i, lay.offsets[s] + k) = col[i];
        }
    }
    out.epi = ModuleMap{out.P, M, epi};
    require(rank(F, epi) == M.dim, Err::Internal, "cover: not surjective");
    // minimality: kernel contained in P·rad
    {
        std::vector<Vec> rcols;
        for (uint32_t r : A->radical_idx)
            for (uint32_t j = 0; j < out.P.dim; ++j)
                rcols.push_back(out.P.act[r].column(j));
        Mat radP = rcols.empty() ? Mat(out.P.dim, 0) : Mat::from_rows(rcols, out.P.dim).transpose();
        RowSpace rs(F, radP.transpose());
        for (auto& kvec : kernel_basis(F, epi))
            require(rs.contains(kvec), Err::Internal, "cover: kernel not in radical (not minimal)");
    }
    return out;
}

SyzygyData syzygy_data(const Module& M)
{
    CoverData cov = projective_cover(M);
    const FieldSpec& F = M.A->field;
    SubQuot ker = submodule(cov.P, kernel_matrix(F, cov.epi.m));
    return SyzygyData{ker.mod, ker.map, std::move(cov)};
}

Module syzygy(const Module& M)
{
    return syzygy_data(M).omega;
}

bool is_projective(const Module& M)
{
    if (M.dim == 0)
        return true;
    CoverData cov = projective_cover(M);
    const FieldSpec& F = M.A->field;
    // right inverse s of the cover epi, intertwining: solve jointly
    const uint32_t n = cov.P.dim, m = M.dim;
    const auto& gens = M.A->generators();
    uint32_t nrows = (uint32_t)gens.size() * n * m + m * m;
    Mat C(nrows, n * m);
    Vec rhs(nrows, 0);
    uint32_t row = 0;
    for (const Vec& g : gens) {
        Mat am = M.act_of(g), an = cov.P.act_of(g);
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = 0; j < m; ++j) {
                for (uint32_t k = 0; k < m; ++k)
                    C.at(row, i * m + k) = F.add(C.at(row, i * m + k), am.at(k, j));
                for (uint32_t k = 0; k < n; ++k)
                    C.at(row, k * m + j) = F.sub(C.at(row, k * m + j), an.at(i, k));
                ++row;
            }
    }
    for (uint32_t i = 0; i < m; ++i)
        for (uint32_t j = 0; j < m; ++j) {
            for (uint32_t k = 0; k < n; ++k)
                C.at(row, k * m + j) = F.add(C.at(row, k * m + j), cov.epi.m.at(i, k));
            rhs[row] = (i == j) ? 1 : 0;
            ++row;
        }
    return solve_linear(F, C, rhs).has_value();
}

/******** duality ********/

DualData star_dual_full(const Module& M)
{
    const AlgebraPtr& A = M.A;
    const FieldSpec& F = A->field;
    AlgebraPtr Aop = opposite_algebra(A);
    DualData out;
    out.homs = module_hom_basis(M, regular_module(A));
    uint32_t d = (uint32_t)out.homs.size();
    out.dual.A = Aop;
    out.dual.dim = d;
    if (d == 0) {
        out.dual.act.assign(Aop->dim, Mat(0, 0));
        return out;
    }
    // coordinates: stack vec(homs) as columns
    Mat coords(A->dim * M.dim, d);
    for (uint32_t j = 0; j < d; ++j)
        for (uint32_t t = 0; t < A->dim * M.dim; ++t)
            coords.at(t, j) = out.homs[j].a[t];
    out.dual.act.reserve(Aop->dim);
    for (uint32_t b = 0; b < Aop->dim; ++b) {
        // f ·op b = b·f, i.e. postcompose with left multiplication by b
        Mat rhs(A->dim * M.dim, d);
        for (uint32_t j = 0; j < d; ++j) {
            Mat g = mul(F, A->left_mult[b], out.homs[j]);
            for (uint32_t t = 0; t < A->dim * M.dim; ++t)
                rhs.at(t, j) = g.a[t];
        }
        auto X = solve_matrix(F, coords, rhs);
        require(X.has_value(), Err::Internal, "star_dual: action fell outside the hom space");
        out.dual.act.push_back(*X);
    }
    return out;
}

Module star_dual(const Module& M)
{
    return star_dual_full(M).dual;
}

ModuleMap star_dual_map(const ModuleMap& f, const DualData& dsrc, const DualData& dtgt)
{
    // input f: M -> N; output N* -> M*: g ↦ g∘f. dsrc = dual of M, dtgt = dual of N.
    const FieldSpec& F = f.src.A->field;
    uint32_t dn = dtgt.dual.dim, dm = dsrc.dual.dim;
    Mat out(dm, dn);
    if (dn == 0 || dm == 0)
        return ModuleMap{dtgt.dual, dsrc.dual, out};
    uint32_t rows = f.src.A->dim * f.src.dim;
    Mat coords(rows, dm);
    for (uint32_t j = 0; j < dm; ++j)
        for (uint32_t t = 0; t < rows; ++t)
            coords.at(t, j) = dsrc.homs[j].a[t];
    for (uint32_t j = 0; j < dn; ++j) {
        Mat gf = mul(F, dtgt.homs[j], f.m);
        Vec v(gf.a.begin(), gf.a.end());
        auto x = solve_linear(F, coords, v);
        require(x.has_value(), Err::Internal, "star_dual_map: outside hom space");
        for (uint32_t i = 0; i < dm; ++i)
            out.at(i, j) = (*x)[i];
    }
    return ModuleMap{dtgt.dual, dsrc.dual, out};
}

ModuleMap double_dual_unit(const Module& M, const DualData& d1, const DualData& d2)
{
    // d1 = dual of M (over Aop), d2 = dual of d1.dual (over A again)
    const FieldSpec& F = M.A->field;
    uint32_t dd = d2.dual.dim;
    Mat out(dd, M.dim);
    if (dd == 0 || M.dim == 0)
        return ModuleMap{M, d2.dual, out};
    uint32_t rows = M.A->dim * d1.dual.dim;
    Mat coords(rows, dd);
    for (uint32_t j = 0; j < dd; ++j)
        for (uint32_t t = 0; t < rows; ++t)
            coords.at(t, j) = d2.homs[j].a[t];
    for (uint32_t c = 0; c < M.dim; ++c) {
        // eta(m): M* -> A, f ↦ f(m)
        Mat G(M.A->dim, d1.dual.dim);
        for (uint32_t j = 0; j < d1.dual.dim; ++j)
            for (uint32_t i = 0; i < M.A->dim; ++i)
                G.at(i, j) = d1.homs[j].at(i, c);
        Vec v(G.a.begin(), G.a.end());
        auto x = solve_linear(F, coords, v);
        require(x.has_value(), Err::Internal, "double_dual_unit: outside hom space");
        for (uint32_t i = 0; i < dd; ++i)
            out.at(i, c) = (*x)[i];
    }
    return ModuleMap{M, d2.dual, out};
}

/******** stable homs ********/

StableHom stable_hom(const Module& M, const Module& N)
{
    const FieldSpec& F = M.A->field;
    StableHom out{0, {}, module_hom_basis(M, N), RowSpace(F, N.dim * M.dim)};
    if (out.hom_basis.empty())
        return out;
    CoverData cov = projective_cover(N);
    for (const Mat& g : module_hom_basis(M, cov.P)) {
        Mat eg = mul(F, cov.epi.m, g);
        out.factoring.add_row(Vec(eg.a.begin(), eg.a.end()));
    }
    RowSpace seen = out.factoring;
    for (const Mat& h : out.hom_basis) {
        Vec v(h.a.begin(), h.a.end());
        if (seen.add_row(v))
            out.reps.push_back(h);
    }
    out.dim = (uint32_t)out.reps.size();
    return out;
}

bool factors_through_projective(const ModuleMap& f)
{
    StableHom sh = stable_hom(f.src, f.tgt);
    return sh.factoring.contains(Vec(f.m.a.begin(), f.m.a.end()));
}

/******** isomorphism and decomposition ********/

bool for_each_combination(const FieldSpec& F, uint32_t k, uint64_t budget,
                          const std::function<bool(const Vec&)>& f)
{
    Vec c(k, 0);
    uint64_t count = 0;
    while (true) {
        // increment odometer
        uint32_t i = 0;
        while (i < k) {
            c[i] = (c[i] + 1) % F.p;
            if (c[i] != 0)
                break;
            ++i;
        }
        if (i == k)
            return false;  // wrapped around: exhausted
        if (++count > budget)
            return false;
        if (f(c))
            return true;
    }
}

static uint64_t pow_or_cap(uint64_t p, uint32_t k, uint64_t cap)
{
    uint64_t r = 1;
    for (uint32_t i = 0; i < k; ++i) {
        if (r > cap / p)
            return cap + 1;
        r *= p;
    }
    return r;
}

IsoResult is_isomorphic(const Module& M, const Module& N, uint64_t budget)
{
    IsoResult out;
    if (!M.A->same(*N.A) || M.dim != N.dim) {
        out.verdict = Tri::No;
        return out;
    }
    if (M.dim == 0) {
        out.verdict = Tri::Yes;
        out.iso = ModuleMap{M, N, Mat(0, 0)};
        return out;
    }
    const FieldSpec& F = M.A->field;
    auto homs = module_hom_basis(M, N);
    if (homs.empty()) {
        out.verdict = Tri::No;
        return out;
    }
    uint64_t total = pow_or_cap(F.p, (uint32_t)homs.size(), budget);
    bool exhaustive = total <= budget;
    Mat found(0, 0);
    auto trial = [&](const Vec& c) {
        Mat H(N.dim, M.dim);
        for (size_t i = 0; i < homs.size(); ++i)
            if (c[i])
                H = add(F, H, scale(F, c[i], homs[i]));
        if (inverse(F, H)) {
            found = H;
            return true;
        }
        return false;
    };
    if (for_each_combination(F, (uint32_t)homs.size(), budget, trial)) {
        out.verdict = Tri::Yes;
        out.iso = ModuleMap{M, N, found};
        return out;
    }
    out.verdict = exhaustive ? Tri::No : Tri::Undecided;
    return out;
}

bool isomorphic(const Module& M, const Module& N)
{
    IsoResult r = is_isomorphic(M, N);
    require(r.verdict != Tri::Undecided, Err::FieldTooSmallForSplit,
            "isomorphism test exceeded its search budget");
    return r.verdict == Tri::Yes;
}

namespace {

// Fitting: stabilize phi^(2^k); a proper stabilized power splits M.
std::optional<std::pair<Mat, Mat>> fitting_split(const FieldSpec& F, const Mat& phi, uint32_t dim)
{
    Mat pw = phi;
    uint32_t r = rank(F, pw);
    for (uint32_t step = 0; step < 32; ++step) {
        Mat sq = mul(F, pw, pw);
        uint32_t r2 = rank(F, sq);
        if (r2 == r)
            break;
        pw = sq;
        r = r2;
    }
    if (r == 0 || r == dim)
        return std::nullopt;
    return std::make_pair(kernel_matrix(F, pw), pw /* image spanned by columns */);
}

void decompose_rec(const Module& M, uint64_t budget, std::vector<Module>& out)
{
    if (M.dim == 0)
        return;
    const FieldSpec& F = M.A->field;
    auto ends = module_hom_basis(M, M);
    uint64_t total = pow_or_cap(F.p, (uint32_t)ends.size(), budget);
    bool exhaustive = total <= budget;
    std::optional<std::pair<Mat, Mat>> split;
    auto trial = [&](const Vec& c) {
        Mat H(M.dim, M.dim);
        for (size_t i = 0; i < ends.size(); ++i)
            if (c[i])
                H = add(F, H, scale(F, c[i], ends[i]));
        split = fitting_split(F, H, M.dim);
        return split.has_value();
    };
    if (for_each_combination(F, (uint32_t)ends.size(), budget, trial) && split) {
        decompose_rec(submodule(M, split->first).mod, budget, out);
        decompose_rec(submodule(M, split->second).mod, budget, out);
        return;
    }
    require(exhaustive, Err::FieldTooSmallForSplit,
            "no splitting endomorphism found within budget; indecomposability not certified");
    out.push_back(M);
}

}  // namespace

std::vector<Module> decompose_indecomposables(const Module& M, uint64_t budget)
{
    std::vector<Module> out;
    decompose_rec(M, budget, out);
    return out;
}

std::vector<Module> enumerate_modules(const AlgebraPtr& A, uint32_t dim)
{
    require(A->has_path_info(), Err::InputError,
            "enumerate_modules needs a quiver-built algebra");
    const FieldSpec& F = A->field;
    const uint32_t V = A->vertex_count();
    std::vector<Module> out;
    if (dim == 0) {
        out.push_back(zero_module(A));
        return out;
    }
    // vertex assignment per basis slot (sorted, to cut permutation duplicates)
    std::vector<uint32_t> assign(dim, 0);
    auto push_candidates = [&]() {
        // arrow a maps the e_{tgt}-slots into the e_{src}-slots
        std::vector<std::pair<uint32_t, uint32_t>> cells;  // (row slot, col slot) per arrow entry
        std::vector<uint32_t> arrow_of_cell;
        for (size_t ai = 0; ai < A->arrow_basis.size(); ++ai) {
            const auto& info = A->path_info[A->arrow_basis[ai]];
            for (uint32_t r = 0; r < dim; ++r)
                for (uint32_t c = 0; c < dim; ++c)
                    if (assign[r] == info.src && assign[c] == info.tgt) {
                        cells.push_back({r, c});
                        arrow_of_cell.push_back((uint32_t)ai);
                    }
        }
        uint64_t total = 1;
        for (size_t i = 0; i < cells.size(); ++i) {
            total *= F.p;
            if (total > (1u << 20))
                fail(Err::InputError, "enumerate_modules: arrow entry space too large");
        }
        for (uint64_t code = 0; code < total; ++code) {
            std::vector<Mat> arrow_act(A->arrow_basis.size(), Mat(dim, dim));
            uint64_t x = code;
            for (size_t i = 0; i < cells.size(); ++i) {
                arrow_act[arrow_of_cell[i]].at(cells[i].first, cells[i].second) =
                    uint32_t(x % F.p);
                x /= F.p;
            }
            Module M{A, dim, {}};
            bool ok = true;
            for (uint32_t b = 0; b < A->dim && ok; ++b) {
                const auto& info = A->path_info[b];
                if (info.arrows.empty()) {
                    Mat e(dim, dim);
                    for (uint32_t r = 0; r < dim; ++r)
                        if (assign[r] == info.src)
                            e.at(r, r) = 1;
                    M.act.push_back(std::move(e));
                } else {
                    // rho(a1*...*ak) = rho(ak)···rho(a1)
                    Mat acc = Mat::identity(dim);
                    for (uint32_t ai : info.arrows)
                        acc = mul(F, arrow_act[ai], acc);
                    M.act.push_back(acc);
                }
            }
            try {
                M.check();
            } catch (const Error&) {
                ok = false;
            }
            if (!ok)
                continue;
            bool dup = false;
            for (auto& N : out)
                if (is_isomorphic(M, N).verdict == Tri::Yes) {
                    dup = true;
                    break;
                }
            if (!dup)
                out.push_back(std::move(M));
        }
    };
    // enumerate non-decreasing assignments
    while (true) {
        bool sorted = true;
        for (uint32_t i = 1; i < dim; ++i)
            sorted = sorted && assign[i - 1] <= assign[i];
        if (sorted)
            push_candidates();
        uint32_t i = 0;
        while (i < dim) {
            assign[i] = (assign[i] + 1) % V;
            if (assign[i] != 0)
                break;
            ++i;
        }
        if (i == dim)
            break;
    }
    return out;
}

std::optional<Mat> solve_module_map_pre(const Module& U, const Module& V, const Mat& E, const Mat& R)
{
    const FieldSpec& F = U.A->field;
    auto homs = module_hom_basis(U, V);
    if (homs.empty())
        return R.is_zero() ? std::optional<Mat>(Mat(V.dim, U.dim)) : std::nullopt;
    Mat C(E.rows * U.dim, (uint32_t)homs.size());
    for (uint32_t k = 0; k < homs.size(); ++k) {
        Mat eh = mul(F, E, homs[k]);
        for (uint32_t t = 0; t < C.rows; ++t)
            C.at(t, k) = eh.a[t];
    }
    auto x = solve_linear(F, C, Vec(R.a.begin(), R.a.end()));
    if (!x)
        return std::nullopt;
    Mat u(V.dim, U.dim);
    for (uint32_t k = 0; k < homs.size(); ++k)
        if ((*x)[k])
            u = add(F, u, scale(F, (*x)[k], homs[k]));
    return u;
}

std::optional<Mat> solve_module_map_post(const Module& U, const Module& V, const Mat& E,
                                         const Mat& R)
{
    const FieldSpec& F = U.A->field;
    auto homs = module_hom_basis(U, V);
    if (homs.empty())
        return R.is_zero() ? std::optional<Mat>(Mat(V.dim, U.dim)) : std::nullopt;
    Mat C(R.rows * R.cols, (uint32_t)homs.size());
    for (uint32_t k = 0; k < homs.size(); ++k) {
        Mat he = mul(F, homs[k], E);
        for (uint32_t t = 0; t < C.rows; ++t)
            C.at(t, k) = he.a[t];
    }
    auto x = solve_linear(F, C, Vec(R.a.begin(), R.a.end()));
    if (!x)
        return std::nullopt;
    Mat u(V.dim, U.dim);
    for (uint32_t k = 0; k < homs.size(); ++k)
        if ((*x)[k])
            u = add(F, u, scale(F, (*x)[k], homs[k]));
    return u;
}

bool in_additive_closure(const Module& M, const std::vector<Module>& gens)
{
    std::vector<Module> parts = decompose_indecomposables(M);
    std::vector<Module> genparts;
    for (auto& g : gens)
        for (auto& p : decompose_indecomposables(g))
            genparts.push_back(p);
    for (auto& p : parts) {
        bool hit = false;
        for (auto& g : genparts)
            if (isomorphic(p, g)) {
                hit = true;
                break;
            }
        if (!hit)
            return false;
    }
    return true;
}

}  // namespace homcat
