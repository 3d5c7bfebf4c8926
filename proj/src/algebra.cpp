#include "homcat/algebra.hpp"

#include <algorithm>
#include <map>

namespace homcat {

Vec Algebra::product(const Vec& x, const Vec& y) const
{
    Vec out(dim, 0);
    for (uint32_t i = 0; i < dim; ++i) {
        if (!x[i])
            continue;
        for (uint32_t j = 0; j < dim; ++j) {
            if (!y[j])
                continue;
            uint32_t c = field.mul(x[i], y[j]);
            const Vec& m = mult[size_t(i) * dim + j];
            for (uint32_t k = 0; k < dim; ++k)
                out[k] = field.add(out[k], field.mul(c, m[k]));
        }
    }
    return out;
}

Mat Algebra::right_mult_of(const Vec& x) const
{
    Mat m(dim, dim);
    for (uint32_t j = 0; j < dim; ++j)
        if (x[j]) {
            for (uint32_t r = 0; r < dim; ++r)
                for (uint32_t c = 0; c < dim; ++c)
                    m.at(r, c) = field.add(m.at(r, c), field.mul(x[j], right_mult[j].at(r, c)));
        }
    return m;
}

Mat Algebra::left_mult_of(const Vec& x) const
{
    Mat m(dim, dim);
    for (uint32_t j = 0; j < dim; ++j)
        if (x[j]) {
            for (uint32_t r = 0; r < dim; ++r)
                for (uint32_t c = 0; c < dim; ++c)
                    m.at(r, c) = field.add(m.at(r, c), field.mul(x[j], left_mult[j].at(r, c)));
        }
    return m;
}

bool Algebra::same(const Algebra& o) const
{
    if (this == &o)
        return true;
    return field == o.field && dim == o.dim && mult == o.mult;
}

static bool is_zero_vec(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
}

void finalize_algebra(Algebra& A)
{
    const FieldSpec& F = A.field;
    const uint32_t d = A.dim;
    require(A.mult.size() == size_t(d) * d, Err::Internal, "mult table size");
    require(A.unit.size() == d, Err::Internal, "unit size");

    A.right_mult.assign(d, Mat(d, d));
    A.left_mult.assign(d, Mat(d, d));
    for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = 0; j < d; ++j) {
            const Vec& m = A.mult[size_t(i) * d + j];
            for (uint32_t k = 0; k < d; ++k) {
                A.right_mult[j].at(k, i) = m[k];  // column i of rho(b_j) is b_i*b_j
                A.left_mult[i].at(k, j) = m[k];   // column j of lambda(b_i) is b_i*b_j
            }
        }

    // unit acts as identity
    require(A.right_mult_of(A.unit) == Mat::identity(d) && A.left_mult_of(A.unit) == Mat::identity(d),
            Err::Internal, "unit is not an identity");

    // associativity on basis triples: rho(b_j b_k) = rho(b_k) rho(b_j)
    for (uint32_t j = 0; j < d; ++j)
        for (uint32_t k = 0; k < d; ++k) {
            Mat lhs = A.right_mult_of(A.mult[size_t(j) * d + k]);
            Mat rhs = mul(F, A.right_mult[k], A.right_mult[j]);
            require(lhs == rhs, Err::Internal, "associativity fails on basis pair");
        }

    // idempotents: orthogonal, idempotent, sum to unit
    Vec s(d, 0);
    for (size_t i = 0; i < A.idempotents.size(); ++i) {
        for (size_t j = 0; j < A.idempotents.size(); ++j) {
            Vec pr = A.product(A.idempotents[i], A.idempotents[j]);
            if (i == j)
                require(pr == A.idempotents[i], Err::Internal, "idempotent not idempotent");
            else
                require(is_zero_vec(pr), Err::Internal, "idempotents not orthogonal");
        }
        for (uint32_t k = 0; k < d; ++k)
            s[k] = F.add(s[k], A.idempotents[i][k]);
    }
    require(s == A.unit, Err::Internal, "idempotents do not sum to the unit");

    // radical spans a nilpotent ideal: powers of the span eventually vanish
    Mat span(d, (uint32_t)A.radical_idx.size());
    for (uint32_t j = 0; j < span.cols; ++j)
        span.at(A.radical_idx[j], j) = 1;
    Mat cur = span;
    for (uint32_t step = 0; step <= d + 1 && cur.cols > 0; ++step) {
        // next = span of { x*y : x in cur, y in radical basis }
        std::vector<Vec> prods;
        for (uint32_t i = 0; i < cur.cols; ++i)
            for (uint32_t j : A.radical_idx)
                prods.push_back(A.product(cur.column(i), [&] {
                    Vec e(d, 0);
                    e[j] = 1;
                    return e;
                }()));
        RowSpace rs(F, Mat::from_rows(prods, d));
        if (rs.dim() == 0) {
            cur = Mat(d, 0);
            break;
        }
        cur = rs.R.transpose();
    }
    require(cur.cols == 0, Err::Internal, "radical span is not nilpotent");

    if (A.gens.empty()) {
        for (uint32_t i = 0; i < d; ++i) {
            Vec e(d, 0);
            e[i] = 1;
            A.gens.push_back(std::move(e));
        }
    }
}

/******** quiver presentations ********/

std::string path_label(const QuiverPresentation& pres, const PathWord& w)
{
    if (w.arrows.empty())
        return "e_" + pres.vertices[w.src];
    std::string s;
    for (size_t i = 0; i < w.arrows.size(); ++i) {
        if (i)
            s += "*";
        s += pres.arrows[w.arrows[i]].name;
    }
    return s;
}

namespace {

struct PathEnum {
    const QuiverPresentation& pres;
    std::vector<uint32_t> vsrc, vtgt;           // per arrow
    std::vector<std::vector<PathWord>> by_len;  // paths grouped by length

    explicit PathEnum(const QuiverPresentation& p, uint32_t maxlen) : pres(p)
    {
        std::map<std::string, uint32_t> vidx;
        for (uint32_t i = 0; i < p.vertices.size(); ++i) {
            require(!vidx.count(p.vertices[i]), Err::InputError, "duplicate vertex " + p.vertices[i]);
            vidx[p.vertices[i]] = i;
        }
        for (auto& a : p.arrows) {
            require(vidx.count(a.src) && vidx.count(a.tgt), Err::InputError,
                    "arrow " + a.name + " references unknown vertex");
            vsrc.push_back(vidx[a.src]);
            vtgt.push_back(vidx[a.tgt]);
        }
        by_len.resize(maxlen + 1);
        for (uint32_t v = 0; v < p.vertices.size(); ++v)
            by_len[0].push_back(PathWord{v, v, {}});
        for (uint32_t len = 1; len <= maxlen; ++len)
            for (const PathWord& w : by_len[len - 1])
                for (uint32_t a = 0; a < p.arrows.size(); ++a)
                    if (vsrc[a] == w.tgt)
                        // new path = a ∘ w
                        by_len[len].push_back(PathWord{w.src, vtgt[a], [&] {
                                                           std::vector<uint32_t> ar{a};
                                                           ar.insert(ar.end(), w.arrows.begin(), w.arrows.end());
                                                           return ar;
                                                       }()});
    }

    std::optional<PathWord> compose(const PathWord& p, const PathWord& q) const
    {
        // product p*q = p∘q, needs tgt(q) = src(p)
        if (q.tgt != p.src)
            return std::nullopt;
        PathWord w;
        w.src = q.src;
        w.tgt = p.tgt;
        w.arrows = p.arrows;
        w.arrows.insert(w.arrows.end(), q.arrows.begin(), q.arrows.end());
        return w;
    }
};

}  // namespace

AlgebraPtr build_algebra(const QuiverPresentation& pres)
{
    const FieldSpec F = pres.field;
    const uint32_t N = pres.nilpotency_bound;
    require(N >= 2, Err::InputError, "nilpotency bound must be >= 2");

    PathEnum pe(pres, N);

    // index all paths of length <= N; the algebra lives on lengths < N,
    // lengths == N are used only to validate the bound
    std::vector<PathWord> paths;
    std::vector<size_t> len_offset(N + 2, 0);
    for (uint32_t len = 0; len <= N; ++len) {
        len_offset[len] = paths.size();
        for (auto& w : pe.by_len[len])
            paths.push_back(w);
    }
    len_offset[N + 1] = paths.size();
    const size_t nshort = len_offset[N];  // paths of length < N

    std::map<std::string, size_t> path_index;
    auto key = [&](const PathWord& w) {
        std::string k = std::to_string(w.src) + ";";
        for (uint32_t a : w.arrows)
            k += std::to_string(a) + ",";
        return k;
    };
    for (size_t i = 0; i < paths.size(); ++i)
        path_index[key(paths[i])] = i;

    // parse relations into path-index vectors
    std::map<std::string, uint32_t> arrow_idx;
    for (uint32_t i = 0; i < pres.arrows.size(); ++i) {
        require(!arrow_idx.count(pres.arrows[i].name), Err::InputError,
                "duplicate arrow name " + pres.arrows[i].name);
        arrow_idx[pres.arrows[i].name] = i;
    }

    struct Rel {
        Vec full;  // over all paths length <= N
        uint32_t src, tgt;
        uint32_t min_len;
    };
    std::vector<Rel> rels;
    for (auto& rel : pres.relations) {
        require(!rel.empty(), Err::InputError, "empty relation");
        Rel r;
        r.full.assign(paths.size(), 0);
        r.min_len = N + 1;
        bool first = true;
        for (auto& term : rel) {
            require(term.path.size() >= 2, Err::NonAdmissibleRelations,
                    "relation term of length < 2 is not admissible");
            require(term.path.size() <= N, Err::InputError,
                    "relation term longer than the nilpotency bound");
            PathWord w;
            bool ok = true;
            for (size_t i = term.path.size(); i-- > 0;) {
                require(arrow_idx.count(term.path[i]), Err::InputError,
                        "unknown arrow " + term.path[i] + " in relation");
                uint32_t a = arrow_idx[term.path[i]];
                if (i + 1 == term.path.size()) {
                    w.src = pe.vsrc[a];
                    w.tgt = pe.vtgt[a];
                    w.arrows = {a};
                } else {
                    if (pe.vsrc[a] != w.tgt) {
                        ok = false;
                        break;
                    }
                    w.tgt = pe.vtgt[a];
                    w.arrows.insert(w.arrows.begin(), a);
                }
            }
            require(ok, Err::InputError, "relation path is not composable");
            if (first) {
                r.src = w.src;
                r.tgt = w.tgt;
                first = false;
            } else {
                require(r.src == w.src && r.tgt == w.tgt, Err::InputError,
                        "relation terms are not parallel");
            }
            r.min_len = std::min<uint32_t>(r.min_len, (uint32_t)w.arrows.size());
            size_t idx = path_index.at(key(w));
            r.full[idx] = F.add(r.full[idx], term.coeff % F.p);
        }
        rels.push_back(std::move(r));
    }

    // span of { u * r * w : total length <= N }, working modulo length > N
    RowSpace ideal(F, (uint32_t)paths.size());
    for (auto& r : rels) {
        for (uint32_t lu = 0; lu + r.min_len <= N; ++lu)
            for (const PathWord& u : pe.by_len[lu]) {
                if (u.src != r.tgt)
                    continue;
                for (uint32_t lw = 0; lu + r.min_len + lw <= N; ++lw)
                    for (const PathWord& w : pe.by_len[lw]) {
                        if (w.tgt != r.src)
                            continue;
                        Vec row(paths.size(), 0);
                        bool nonzero = false;
                        for (size_t t = 0; t < paths.size(); ++t) {
                            if (!r.full[t])
                                continue;
                            auto uw1 = pe.compose(u, paths[t]);
                            if (!uw1)
                                continue;
                            auto uw2 = pe.compose(*uw1, w);
                            if (!uw2 || uw2->arrows.size() > N)
                                continue;
                            size_t idx = path_index.at(key(*uw2));
                            row[idx] = F.add(row[idx], r.full[t]);
                            nonzero = true;
                        }
                        if (nonzero)
                            ideal.add_row(row);
                    }
            }
    }

    // the bound is valid iff every length-N path lies in the ideal (mod J^{N+1})
    for (size_t i = len_offset[N]; i < len_offset[N + 1]; ++i) {
        Vec v(paths.size(), 0);
        v[i] = 1;
        require(ideal.contains(v), Err::BoundTooSmall,
                "path of length N survives: " + path_label(pres, paths[i]) + "; increase nilpotency_bound");
    }

    // quotient basis = non-pivot paths of length < N
    std::vector<bool> pivot(paths.size(), false);
    for (uint32_t c : ideal.pivots)
        pivot[c] = true;
    std::vector<size_t> basis_paths;
    for (size_t i = 0; i < nshort; ++i)
        if (!pivot[i])
            basis_paths.push_back(i);

    std::vector<int64_t> quot_index(paths.size(), -1);
    for (size_t b = 0; b < basis_paths.size(); ++b)
        quot_index[basis_paths[b]] = (int64_t)b;

    auto to_quotient = [&](Vec full) -> Vec {
        full.resize(paths.size(), 0);
        Vec red = ideal.reduce(full);
        Vec out(basis_paths.size(), 0);
        for (size_t i = 0; i < paths.size(); ++i) {
            if (!red[i])
                continue;
            require(quot_index[i] >= 0 && i < nshort, Err::Internal, "reduction left a pivot path");
            out[(size_t)quot_index[i]] = red[i];
        }
        return out;
    };

    auto A = std::make_shared<Algebra>();
    A->field = F;
    A->dim = (uint32_t)basis_paths.size();
    for (size_t b : basis_paths)
        A->labels.push_back(path_label(pres, paths[b]));

    A->mult.assign(size_t(A->dim) * A->dim, Vec(A->dim, 0));
    for (uint32_t i = 0; i < A->dim; ++i)
        for (uint32_t j = 0; j < A->dim; ++j) {
            auto pq = pe.compose(paths[basis_paths[i]], paths[basis_paths[j]]);
            if (!pq || pq->arrows.size() >= N)
                continue;  // zero: not composable, or lies in J^N
            Vec full(paths.size(), 0);
            full[path_index.at(key(*pq))] = 1;
            A->mult[size_t(i) * A->dim + j] = to_quotient(full);
        }

    A->unit.assign(A->dim, 0);
    for (uint32_t v = 0; v < pres.vertices.size(); ++v) {
        Vec e(A->dim, 0);
        size_t pi = path_index.at(key(pe.by_len[0][v]));
        require(quot_index[pi] >= 0, Err::Internal, "trivial path eliminated");
        e[(size_t)quot_index[pi]] = 1;
        A->idempotents.push_back(e);
        A->unit[(size_t)quot_index[pi]] = 1;
    }

    for (size_t b = 0; b < basis_paths.size(); ++b)
        if (!paths[basis_paths[b]].arrows.empty())
            A->radical_idx.push_back((uint32_t)b);

    A->gens = A->idempotents;
    for (size_t b = 0; b < basis_paths.size(); ++b)
        if (paths[basis_paths[b]].arrows.size() == 1) {
            Vec g(A->dim, 0);
            g[b] = 1;
            A->gens.push_back(std::move(g));
        }

    // path metadata for the small-module enumerator; arrow indices in
    // path_info refer to positions in arrow_basis
    std::map<uint32_t, uint32_t> arrow_pos;  // presentation arrow -> arrow_basis slot
    for (size_t b = 0; b < basis_paths.size(); ++b)
        if (paths[basis_paths[b]].arrows.size() == 1) {
            arrow_pos[paths[basis_paths[b]].arrows[0]] = (uint32_t)A->arrow_basis.size();
            A->arrow_basis.push_back((uint32_t)b);
        }
    for (size_t b = 0; b < basis_paths.size(); ++b) {
        const PathWord& w = paths[basis_paths[b]];
        Algebra::BasisPath bp;
        bp.src = w.src;
        bp.tgt = w.tgt;
        for (uint32_t a : w.arrows)
            bp.arrows.push_back(arrow_pos.at(a));
        A->path_info.push_back(std::move(bp));
    }

    finalize_algebra(*A);
    return A;
}

AlgebraPtr opposite_algebra(const AlgebraPtr& A)
{
    {
        std::lock_guard<std::mutex> lk(A->op_mutex);
        if (A->op_cache)
            return A->op_cache;
    }
    auto B = std::make_shared<Algebra>();
    B->field = A->field;
    B->dim = A->dim;
    B->labels = A->labels;
    B->mult.assign(size_t(A->dim) * A->dim, Vec());
    for (uint32_t i = 0; i < A->dim; ++i)
        for (uint32_t j = 0; j < A->dim; ++j)
            B->mult[size_t(i) * A->dim + j] = A->mult[size_t(j) * A->dim + i];
    B->unit = A->unit;
    B->idempotents = A->idempotents;
    B->radical_idx = A->radical_idx;
    B->gens = A->gens;
    finalize_algebra(*B);
    {
        std::lock_guard<std::mutex> lk(B->op_mutex);
        B->op_cache = A;
    }
    std::lock_guard<std::mutex> lk(A->op_mutex);
    if (!A->op_cache)
        A->op_cache = B;
    return A->op_cache;
}

AlgebraPtr triangular2(const AlgebraPtr& A)
{
    const uint32_t d = A->dim;
    const FieldSpec& F = A->field;
    auto T = std::make_shared<Algebra>();
    T->field = F;
    T->dim = 3 * d;
    // slots: 0 = E11, 1 = E12, 2 = E22
    const char* slot_name[3] = {"E11", "E12", "E22"};
    for (int s = 0; s < 3; ++s)
        for (uint32_t i = 0; i < d; ++i)
            T->labels.push_back(std::string(slot_name[s]) + "*" + A->labels[i]);

    auto idx = [&](int s, uint32_t i) { return uint32_t(s) * d + i; };
    // (E_s ⊗ a)(E_t ⊗ b): matrix-unit calculus on upper triangular 2x2
    // E11*E11=E11, E11*E12=E12, E12*E22=E12, E22*E22=E22, rest 0.
    auto slot_prod = [](int s, int t) -> int {
        if (s == 0 && t == 0)
            return 0;
        if (s == 0 && t == 1)
            return 1;
        if (s == 1 && t == 2)
            return 1;
        if (s == 2 && t == 2)
            return 2;
        return -1;
    };
    T->mult.assign(size_t(T->dim) * T->dim, Vec(T->dim, 0));
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) {
            int u = slot_prod(s, t);
            if (u < 0)
                continue;
            for (uint32_t i = 0; i < d; ++i)
                for (uint32_t j = 0; j < d; ++j) {
                    const Vec& ab = A->mult[size_t(i) * d + j];
                    Vec& out = T->mult[size_t(idx(s, i)) * T->dim + idx(t, j)];
                    for (uint32_t k = 0; k < d; ++k)
                        out[idx(u, k)] = ab[k];
                }
        }

    T->unit.assign(T->dim, 0);
    for (uint32_t k = 0; k < d; ++k) {
        T->unit[idx(0, k)] = A->unit[k];
        T->unit[idx(2, k)] = A->unit[k];
    }
    for (int s : {0, 2})
        for (auto& e : A->idempotents) {
            Vec ee(T->dim, 0);
            for (uint32_t k = 0; k < d; ++k)
                ee[idx(s, k)] = e[k];
            T->idempotents.push_back(ee);
        }
    for (uint32_t r : A->radical_idx) {
        T->radical_idx.push_back(idx(0, r));
        T->radical_idx.push_back(idx(2, r));
    }
    for (uint32_t i = 0; i < d; ++i)
        T->radical_idx.push_back(idx(1, i));
    std::sort(T->radical_idx.begin(), T->radical_idx.end());

    for (int s : {0, 2})
        for (const Vec& g : A->gens) {
            Vec gg(T->dim, 0);
            for (uint32_t k = 0; k < d; ++k)
                gg[idx(s, k)] = g[k];
            T->gens.push_back(std::move(gg));
        }
    {
        Vec e12(T->dim, 0);
        for (uint32_t k = 0; k < d; ++k)
            e12[idx(1, k)] = A->unit[k];
        T->gens.push_back(std::move(e12));
    }

    finalize_algebra(*T);
    return T;
}

}  // namespace homcat
