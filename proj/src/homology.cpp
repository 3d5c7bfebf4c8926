#include "homcat/algebra.hpp"
#include "homcat/module.hpp"

namespace homcat {

namespace {

// Vector-space dual of the regular module on the requested side, as a right
// module over the other side's algebra.
Module regular_dual(const AlgebraPtr& A, Side side)
{
    if (side == Side::Right) {
        // D(A_A) is a left A-module = right A^op-module
        AlgebraPtr Aop = opposite_algebra(A);
        Module M{Aop, A->dim, {}};
        for (uint32_t b = 0; b < A->dim; ++b)
            M.act.push_back(A->right_mult[b].transpose());
        return M;
    }
    // left regular module = right A^op-module with the left multiplications;
    // its dual is a right A-module
    Module M{A, A->dim, {}};
    for (uint32_t b = 0; b < A->dim; ++b)
        M.act.push_back(A->left_mult[b].transpose());
    return M;
}

}  // namespace

std::optional<uint32_t> injective_dimension(const AlgebraPtr& A, Side side, uint32_t cap)
{
    require(cap >= 1, Err::InputError, "cap must be >= 1");
    Module cur = regular_dual(A, side);
    cur.check();
    for (uint32_t k = 0; k <= cap; ++k) {
        if (is_projective(cur))
            return k;
        cur = syzygy(cur);
    }
    return std::nullopt;
}

GorensteinVerdict is_iwanaga_gorenstein(const AlgebraPtr& A, uint32_t cap)
{
    GorensteinVerdict v;
    auto l = injective_dimension(A, Side::Left, cap);
    auto r = injective_dimension(A, Side::Right, cap);
    if (!l || !r) {
        v.determined = false;
        v.gorenstein = false;
        return v;
    }
    v.gorenstein = true;
    v.d = std::max(*l, *r);
    return v;
}

}  // namespace homcat
