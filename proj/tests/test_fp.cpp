#include "homcat/fp.hpp"

#include <doctest.h>

using namespace homcat;

TEST_CASE("rref identity and zero")
{
    FieldSpec F(2);
    Mat I = Mat::identity(2);
    auto r = rref(F, I);
    CHECK(r.R == I);
    CHECK(r.pivots == std::vector<uint32_t>{0, 1});

    Mat Z(3, 3);
    auto rz = rref(F, Z);
    CHECK(rz.R == Z);
    CHECK(rz.pivots.empty());
}

TEST_CASE("rref of [[1,1],[1,1]] over F2")
{
    FieldSpec F(2);
    Mat M(2, 2, {1, 1, 1, 1});
    auto r = rref(F, M);
    CHECK(r.R == Mat(2, 2, {1, 1, 0, 0}));
    CHECK(r.pivots == std::vector<uint32_t>{0});
}

TEST_CASE("rref is idempotent")
{
    FieldSpec F(5);
    Mat M(3, 4, {1, 2, 3, 4, 2, 4, 1, 3, 0, 0, 4, 2});
    auto r1 = rref(F, M);
    auto r2 = rref(F, r1.R);
    CHECK(r1.R == r2.R);
}

TEST_CASE("solve_linear basics")
{
    FieldSpec F(2);
    SUBCASE("identity")
    {
        Mat I = Mat::identity(3);
        Vec b{1, 0, 1};
        auto x = solve_linear(F, I, b);
        REQUIRE(x.has_value());
        CHECK(*x == b);
    }
    SUBCASE("zero matrix, nonzero rhs")
    {
        Mat Z(2, 2);
        CHECK(!solve_linear(F, Z, {1, 0}).has_value());
    }
    SUBCASE("pivot-variable solution")
    {
        // A = [[1,1],[0,0]], b = (1,0): expected x = (1,0) by free-var = 0
        Mat A(2, 2, {1, 1, 0, 0});
        auto x = solve_linear(F, A, {1, 0});
        REQUIRE(x.has_value());
        CHECK(*x == Vec{1, 0});
        // oracle: enumerate all x in F2^2
        int solutions = 0;
        for (uint32_t a = 0; a < 2; ++a)
            for (uint32_t b2 = 0; b2 < 2; ++b2)
                if (((a + b2) % 2 == 1))
                    ++solutions;
        CHECK(solutions == 2);  // (1,0) and (0,1); deterministic choice picks (1,0)
    }
}

TEST_CASE("kernel_basis")
{
    FieldSpec F(2);
    CHECK(kernel_basis(F, Mat::identity(2)).empty());
    CHECK(kernel_basis(F, Mat(2, 2)).size() == 2);
    auto k = kernel_basis(F, Mat(1, 2, {1, 1}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vec{1, 1});
}

TEST_CASE("rank-nullity on random shapes")
{
    FieldSpec F(3);
    uint32_t seed = 12345;
    auto rnd = [&]() { return seed = seed * 1103515245 + 12345; };
    for (int t = 0; t < 30; ++t) {
        uint32_t r = rnd() % 5, c = rnd() % 5;
        Mat M(r, c);
        for (auto& e : M.a)
            e = rnd() % 3;
        CHECK(rank(F, M) + kernel_basis(F, M).size() == c);
        // solve consistency: A x = b exactly when solution returned
        Vec b(r);
        for (auto& e : b)
            e = rnd() % 3;
        auto x = solve_linear(F, M, b);
        if (x)
            CHECK(mul_vec(F, M, *x) == b);
    }
}

TEST_CASE("inverse and RowSpace")
{
    FieldSpec F(2);
    Mat A(2, 2, {1, 1, 0, 1});
    auto Ainv = inverse(F, A);
    REQUIRE(Ainv.has_value());
    CHECK(mul(F, A, *Ainv) == Mat::identity(2));
    CHECK(!inverse(F, Mat(2, 2, {1, 1, 1, 1})).has_value());

    RowSpace rs(F, 3);
    CHECK(rs.add_row({1, 1, 0}));
    CHECK(rs.add_row({0, 1, 1}));
    CHECK(!rs.add_row({1, 0, 1}));  // dependent
    CHECK(rs.contains({1, 0, 1}));
    CHECK(!rs.contains({1, 0, 0}));
    CHECK(rs.dim() == 2);
}
