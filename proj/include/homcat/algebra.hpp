#pragma once

#include "homcat/fp.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace homcat {

// A path in composition order: arrows[0] is applied last, so
// {a,b} denotes a∘b ("first b, then a"). Indices refer to the
// presentation's arrow list.
struct PathWord {
    uint32_t src = 0, tgt = 0;
    std::vector<uint32_t> arrows;
};

struct RelationTerm {
    uint32_t coeff = 1;
    std::vector<std::string> path;  // arrow names, composition order
};

struct QuiverPresentation {
    FieldSpec field;
    std::vector<std::string> vertices;
    struct Arrow {
        std::string name, src, tgt;
    };
    std::vector<Arrow> arrows;
    std::vector<std::vector<RelationTerm>> relations;
    uint32_t nilpotency_bound = 2;
};

// Finite-dimensional algebra given by basis and structure constants.
// Immutable after construction.
struct Algebra {
    FieldSpec field;
    uint32_t dim = 0;
    std::vector<std::string> labels;
    // mult[i*dim+j] = coordinates of b_i * b_j
    std::vector<Vec> mult;
    Vec unit;
    std::vector<Vec> idempotents;       // e_0..e_{V-1}, orthogonal, sum = 1
    std::vector<uint32_t> radical_idx;  // basis indices spanning rad(A)
    std::vector<Vec> gens;              // algebra generators; defaults to the basis

    // quiver metadata (filled by build_algebra): each basis element as a
    // path, with its endpoints; arrows are the paths of length 1
    struct BasisPath {
        uint32_t src = 0, tgt = 0;
        std::vector<uint32_t> arrows;  // indices into arrow_basis
    };
    std::vector<BasisPath> path_info;
    std::vector<uint32_t> arrow_basis;  // basis indices of the arrows

    const std::vector<Vec>& generators() const { return gens; }
    bool has_path_info() const { return !path_info.empty(); }

    // caches
    std::vector<Mat> right_mult;  // rho(b_j): b_i -> b_i * b_j
    std::vector<Mat> left_mult;   // lambda(b_j): b_i -> b_j * b_i

    uint32_t vertex_count() const { return (uint32_t)idempotents.size(); }

    Vec product(const Vec& x, const Vec& y) const;
    Mat right_mult_of(const Vec& x) const;  // rho(x), x an algebra element
    Mat left_mult_of(const Vec& x) const;

    bool same(const Algebra& o) const;

    mutable std::shared_ptr<const Algebra> op_cache;
    mutable std::mutex op_mutex;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Validates invariants (associativity, unit, idempotents, nilpotent radical)
// and fills the multiplication caches. Every constructor below calls this.
void finalize_algebra(Algebra& A);

AlgebraPtr build_algebra(const QuiverPresentation& pres);
AlgebraPtr opposite_algebra(const AlgebraPtr& A);
AlgebraPtr triangular2(const AlgebraPtr& A);

// Label of basis path i under the conventions of build_algebra:
// trivial paths "e_<v>", arrows by name, longer paths "a*b" (= a∘b).
std::string path_label(const QuiverPresentation& pres, const PathWord& w);

struct GorensteinVerdict {
    bool gorenstein = false;
    bool determined = true;  // false when a cap was exceeded
    uint32_t d = 0;
};

// idim of the regular module on one side, as pdim of the vector-space dual
// over the appropriate side; nullopt when the cap is exceeded.
enum class Side { Left, Right };
std::optional<uint32_t> injective_dimension(const AlgebraPtr& A, Side side, uint32_t cap);
GorensteinVerdict is_iwanaga_gorenstein(const AlgebraPtr& A, uint32_t cap);

}  // namespace homcat
