#include "homcat/fp.hpp"

#include <algorithm>

namespace homcat {

bool is_prime(uint32_t n)
{
    if (n < 2)
        return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec::FieldSpec(uint32_t p_) : p(p_)
{
    require(is_prime(p), Err::InputError, "field modulus " + std::to_string(p) + " is not prime");
}

uint32_t FieldSpec::inv(uint32_t a) const
{
    a %= p;
    require(a != 0, Err::Internal, "inverse of zero");
    // Fermat: a^(p-2)
    uint64_t base = a, acc = 1, e = p - 2;
    while (e) {
        if (e & 1)
            acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return uint32_t(acc);
}

Mat::Mat(uint32_t r, uint32_t c, Vec entries) : rows(r), cols(c), a(std::move(entries))
{
    require(a.size() == size_t(r) * c, Err::InputError, "matrix entry count mismatch");
}

Mat Mat::identity(uint32_t n)
{
    Mat m(n, n);
    for (uint32_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows_in, uint32_t cols)
{
    Mat m((uint32_t)rows_in.size(), cols);
    for (uint32_t i = 0; i < m.rows; ++i) {
        require(rows_in[i].size() == cols, Err::InputError, "row length mismatch");
        std::copy(rows_in[i].begin(), rows_in[i].end(), m.a.begin() + size_t(i) * cols);
    }
    return m;
}

Mat Mat::col(const Vec& v)
{
    Mat m((uint32_t)v.size(), 1);
    for (uint32_t i = 0; i < m.rows; ++i)
        m.at(i, 0) = v[i];
    return m;
}

bool Mat::is_zero() const
{
    return std::all_of(a.begin(), a.end(), [](uint32_t x) { return x == 0; });
}

Mat Mat::transpose() const
{
    Mat t(cols, rows);
    for (uint32_t i = 0; i < rows; ++i)
        for (uint32_t j = 0; j < cols; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

Vec Mat::column(uint32_t j) const
{
    Vec v(rows);
    for (uint32_t i = 0; i < rows; ++i)
        v[i] = at(i, j);
    return v;
}

Vec Mat::row(uint32_t i) const
{
    return Vec(a.begin() + size_t(i) * cols, a.begin() + size_t(i + 1) * cols);
}

Mat mul(const FieldSpec& F, const Mat& A, const Mat& B)
{
    require(A.cols == B.rows, Err::Internal, "mul: dimension mismatch");
    Mat C(A.rows, B.cols);
    for (uint32_t i = 0; i < A.rows; ++i)
        for (uint32_t k = 0; k < A.cols; ++k) {
            uint32_t aik = A.at(i, k);
            if (!aik)
                continue;
            for (uint32_t j = 0; j < B.cols; ++j)
                C.at(i, j) = uint32_t((C.at(i, j) + uint64_t(aik) * B.at(k, j)) % F.p);
        }
    return C;
}

Mat add(const FieldSpec& F, const Mat& A, const Mat& B)
{
    require(A.rows == B.rows && A.cols == B.cols, Err::Internal, "add: shape mismatch");
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < C.a.size(); ++i)
        C.a[i] = F.add(A.a[i], B.a[i]);
    return C;
}

Mat sub(const FieldSpec& F, const Mat& A, const Mat& B)
{
    require(A.rows == B.rows && A.cols == B.cols, Err::Internal, "sub: shape mismatch");
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < C.a.size(); ++i)
        C.a[i] = F.sub(A.a[i], B.a[i]);
    return C;
}

Mat scale(const FieldSpec& F, uint32_t c, const Mat& A)
{
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < C.a.size(); ++i)
        C.a[i] = F.mul(c, A.a[i]);
    return C;
}

Vec mul_vec(const FieldSpec& F, const Mat& A, const Vec& v)
{
    require(A.cols == v.size(), Err::Internal, "mul_vec: dimension mismatch");
    Vec out(A.rows, 0);
    for (uint32_t i = 0; i < A.rows; ++i) {
        uint64_t s = 0;
        for (uint32_t j = 0; j < A.cols; ++j)
            s += uint64_t(A.at(i, j)) * v[j];
        out[i] = uint32_t(s % F.p);
    }
    return out;
}

Mat hstack(const Mat& A, const Mat& B)
{
    require(A.rows == B.rows, Err::Internal, "hstack: row mismatch");
    Mat C(A.rows, A.cols + B.cols);
    for (uint32_t i = 0; i < A.rows; ++i) {
        for (uint32_t j = 0; j < A.cols; ++j)
            C.at(i, j) = A.at(i, j);
        for (uint32_t j = 0; j < B.cols; ++j)
            C.at(i, A.cols + j) = B.at(i, j);
    }
    return C;
}

Mat vstack(const Mat& A, const Mat& B)
{
    require(A.cols == B.cols, Err::Internal, "vstack: col mismatch");
    Mat C(A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), C.a.begin());
    std::copy(B.a.begin(), B.a.end(), C.a.begin() + A.a.size());
    return C;
}

namespace {

// F_2 fast path: rows packed into 64-bit words, elimination by XOR.
Rref rref2(const Mat& M)
{
    Rref out;
    const uint32_t words = (M.cols + 63) / 64;
    std::vector<uint64_t> rows(size_t(M.rows) * words, 0);
    for (uint32_t i = 0; i < M.rows; ++i)
        for (uint32_t j = 0; j < M.cols; ++j)
            if (M.at(i, j) & 1)
                rows[size_t(i) * words + (j >> 6)] |= uint64_t(1) << (j & 63);
    uint32_t r = 0;
    for (uint32_t c = 0; c < M.cols && r < M.rows; ++c) {
        const uint32_t w = c >> 6;
        const uint64_t bit = uint64_t(1) << (c & 63);
        uint32_t piv = r;
        while (piv < M.rows && !(rows[size_t(piv) * words + w] & bit))
            ++piv;
        if (piv == M.rows)
            continue;
        if (piv != r)
            for (uint32_t k = 0; k < words; ++k)
                std::swap(rows[size_t(piv) * words + k], rows[size_t(r) * words + k]);
        for (uint32_t i = 0; i < M.rows; ++i) {
            if (i == r || !(rows[size_t(i) * words + w] & bit))
                continue;
            for (uint32_t k = w; k < words; ++k)
                rows[size_t(i) * words + k] ^= rows[size_t(r) * words + k];
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.R = Mat(M.rows, M.cols);
    for (uint32_t i = 0; i < M.rows; ++i)
        for (uint32_t j = 0; j < M.cols; ++j)
            out.R.at(i, j) = (rows[size_t(i) * words + (j >> 6)] >> (j & 63)) & 1;
    return out;
}

}  // namespace

Rref rref(const FieldSpec& F, const Mat& M)
{
    if (F.p == 2)
        return rref2(M);
    Rref out;
    out.R = M;
    Mat& R = out.R;
    uint32_t r = 0;
    for (uint32_t c = 0; c < R.cols && r < R.rows; ++c) {
        uint32_t piv = r;
        while (piv < R.rows && R.at(piv, c) == 0)
            ++piv;
        if (piv == R.rows)
            continue;
        if (piv != r)
            for (uint32_t j = 0; j < R.cols; ++j)
                std::swap(R.at(piv, j), R.at(r, j));
        uint32_t s = F.inv(R.at(r, c));
        for (uint32_t j = c; j < R.cols; ++j)
            R.at(r, j) = F.mul(s, R.at(r, j));
        for (uint32_t i = 0; i < R.rows; ++i) {
            if (i == r || R.at(i, c) == 0)
                continue;
            uint32_t f = R.at(i, c);
            for (uint32_t j = c; j < R.cols; ++j)
                R.at(i, j) = F.sub(R.at(i, j), F.mul(f, R.at(r, j)));
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

uint32_t rank(const FieldSpec& F, const Mat& M)
{
    return (uint32_t)rref(F, M).pivots.size();
}

std::optional<Vec> solve_linear(const FieldSpec& F, const Mat& A, const Vec& b)
{
    require(b.size() == A.rows, Err::Internal, "solve_linear: rhs dimension mismatch");
    Mat aug = hstack(A, Mat::col(b));
    Rref rr = rref(F, aug);
    Vec x(A.cols, 0);
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == A.cols)
            return std::nullopt;  // pivot in the rhs column: inconsistent
        x[rr.pivots[i]] = rr.R.at((uint32_t)i, A.cols);
    }
    return x;
}

std::optional<Mat> solve_matrix(const FieldSpec& F, const Mat& A, const Mat& B)
{
    require(B.rows == A.rows, Err::Internal, "solve_matrix: shape mismatch");
    Mat aug = hstack(A, B);
    Rref rr = rref(F, aug);
    Mat X(A.cols, B.cols);
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] >= A.cols)
            return std::nullopt;
        for (uint32_t j = 0; j < B.cols; ++j)
            X.at(rr.pivots[i], j) = rr.R.at((uint32_t)i, A.cols + j);
    }
    return X;
}

std::vector<Vec> kernel_basis(const FieldSpec& F, const Mat& A)
{
    Rref rr = rref(F, A);
    std::vector<bool> is_pivot(A.cols, false);
    for (uint32_t c : rr.pivots)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (uint32_t c = 0; c < A.cols; ++c) {
        if (is_pivot[c])
            continue;
        Vec v(A.cols, 0);
        v[c] = 1;
        for (size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = F.neg(rr.R.at((uint32_t)i, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat kernel_matrix(const FieldSpec& F, const Mat& A)
{
    auto basis = kernel_basis(F, A);
    Mat K(A.cols, (uint32_t)basis.size());
    for (uint32_t j = 0; j < K.cols; ++j)
        for (uint32_t i = 0; i < K.rows; ++i)
            K.at(i, j) = basis[j][i];
    return K;
}

std::optional<Mat> inverse(const FieldSpec& F, const Mat& A)
{
    if (A.rows != A.cols)
        return std::nullopt;
    auto X = solve_matrix(F, A, Mat::identity(A.rows));
    if (!X)
        return std::nullopt;
    if (!(mul(F, A, *X) == Mat::identity(A.rows)))
        return std::nullopt;
    return X;
}

RowSpace::RowSpace(const FieldSpec& f, uint32_t width) : F(f), R(0, width) {}

RowSpace::RowSpace(const FieldSpec& f, const Mat& span_rows) : F(f), R(0, span_rows.cols)
{
    Rref rr = rref(F, span_rows);
    pivots = rr.pivots;
    R = Mat((uint32_t)pivots.size(), span_rows.cols);
    for (uint32_t i = 0; i < R.rows; ++i)
        for (uint32_t j = 0; j < R.cols; ++j)
            R.at(i, j) = rr.R.at(i, j);
}

bool RowSpace::contains(const Vec& v) const
{
    Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

Vec RowSpace::reduce(Vec v) const
{
    require(v.size() == R.cols, Err::Internal, "RowSpace::reduce width mismatch");
    for (uint32_t i = 0; i < R.rows; ++i) {
        uint32_t c = pivots[i];
        uint32_t f = v[c] % F.p;
        if (!f)
            continue;
        for (uint32_t j = 0; j < R.cols; ++j)
            v[j] = F.sub(v[j], F.mul(f, R.at(i, j)));
    }
    return v;
}

bool RowSpace::add_row(const Vec& v)
{
    Vec r = reduce(v);
    uint32_t lead = R.cols;
    for (uint32_t j = 0; j < R.cols; ++j)
        if (r[j]) {
            lead = j;
            break;
        }
    if (lead == R.cols)
        return false;
    uint32_t s = F.inv(r[lead]);
    for (auto& x : r)
        x = F.mul(s, x);
    // Back-substitute into existing rows, then insert keeping pivot order.
    for (uint32_t i = 0; i < R.rows; ++i) {
        uint32_t f = R.at(i, lead);
        if (!f)
            continue;
        for (uint32_t j = 0; j < R.cols; ++j)
            R.at(i, j) = F.sub(R.at(i, j), F.mul(f, r[j]));
    }
    size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < lead)
        ++pos;
    std::vector<Vec> rows;
    for (uint32_t i = 0; i < R.rows; ++i)
        rows.push_back(R.row(i));
    rows.insert(rows.begin() + pos, r);
    pivots.insert(pivots.begin() + pos, lead);
    R = Mat::from_rows(rows, R.cols);
    return true;
}

}  // namespace homcat
