#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace homcat {

// Error codes shared across the library.
enum class Err {
    InputError,
    NonAdmissibleRelations,
    BoundTooSmall,
    AlgebraMismatch,
    NotGorenstein,
    NotFrobeniusClosed,
    NoAdmissibleMono,
    NotSurjective,
    NotInjective,
    NotMember,
    ContextMismatch,
    FieldTooSmallForSplit,
    StabilizationFailed,
    NotGorensteinContext,
    Internal,
};

struct Error : std::runtime_error {
    Err code;
    Error(Err c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, Err c, const std::string& msg)
{
    if (!ok)
        fail(c, msg);
}

// Prime field F_p, p small.
struct FieldSpec {
    uint32_t p = 2;

    explicit FieldSpec(uint32_t p_ = 2);

    uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p; }
    uint32_t sub(uint32_t a, uint32_t b) const { return (a + p - b % p) % p; }
    uint32_t neg(uint32_t a) const { return (p - a % p) % p; }
    uint32_t mul(uint32_t a, uint32_t b) const { return uint32_t((uint64_t(a) * b) % p); }
    uint32_t inv(uint32_t a) const;

    bool operator==(const FieldSpec& o) const { return p == o.p; }
};

bool is_prime(uint32_t n);

using Vec = std::vector<uint32_t>;

// Dense row-major matrix over F_p. Dimensions may be zero.
struct Mat {
    uint32_t rows = 0, cols = 0;
    Vec a;

    Mat() = default;
    Mat(uint32_t r, uint32_t c) : rows(r), cols(c), a(size_t(r) * c, 0) {}
    Mat(uint32_t r, uint32_t c, Vec entries);

    uint32_t& at(uint32_t i, uint32_t j) { return a[size_t(i) * cols + j]; }
    uint32_t at(uint32_t i, uint32_t j) const { return a[size_t(i) * cols + j]; }

    static Mat identity(uint32_t n);
    static Mat zero(uint32_t r, uint32_t c) { return Mat(r, c); }
    static Mat from_rows(const std::vector<Vec>& rows_in, uint32_t cols);
    static Mat col(const Vec& v);

    bool is_zero() const;
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    Mat transpose() const;
    Vec column(uint32_t j) const;
    Vec row(uint32_t i) const;
};

Mat mul(const FieldSpec& F, const Mat& A, const Mat& B);
Mat add(const FieldSpec& F, const Mat& A, const Mat& B);
Mat sub(const FieldSpec& F, const Mat& A, const Mat& B);
Mat scale(const FieldSpec& F, uint32_t c, const Mat& A);
Vec mul_vec(const FieldSpec& F, const Mat& A, const Vec& v);

// Stack blocks: [A | B] and [A ; B].
Mat hstack(const Mat& A, const Mat& B);
Mat vstack(const Mat& A, const Mat& B);

struct Rref {
    Mat R;
    std::vector<uint32_t> pivots;  // pivot column per nonzero row, increasing
};

// Reduced row echelon form, leftmost-pivot elimination. Deterministic.
Rref rref(const FieldSpec& F, const Mat& M);

uint32_t rank(const FieldSpec& F, const Mat& M);

// Some x with A x = b, or nullopt. Free variables are set to 0, so the
// result is the unique pivot-variable solution.
std::optional<Vec> solve_linear(const FieldSpec& F, const Mat& A, const Vec& b);

// Columnwise solve: X with A X = B, or nullopt if some column fails.
std::optional<Mat> solve_matrix(const FieldSpec& F, const Mat& A, const Mat& B);

// Basis of {x : A x = 0}, as columns.
std::vector<Vec> kernel_basis(const FieldSpec& F, const Mat& A);
Mat kernel_matrix(const FieldSpec& F, const Mat& A);  // basis vectors as columns

std::optional<Mat> inverse(const FieldSpec& F, const Mat& A);

// Row-space membership and subspace utilities. Rows of S span the subspace.
struct RowSpace {
    FieldSpec F;
    Mat R;                          // rref'd spanning rows (zero rows dropped)
    std::vector<uint32_t> pivots;

    explicit RowSpace(const FieldSpec& f, uint32_t width);
    RowSpace(const FieldSpec& f, const Mat& span_rows);

    uint32_t dim() const { return (uint32_t)pivots.size(); }
    uint32_t width() const { return R.cols; }
    bool contains(const Vec& v) const;
    // v minus its projection onto the space: canonical coset representative.
    Vec reduce(Vec v) const;
    // Extends the space by v; returns true if dim grew.
    bool add_row(const Vec& v);
};

}  // namespace homcat
