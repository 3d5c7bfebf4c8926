#include "homcat/frobenius.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace homcat;

namespace {

Module m1()
{
    return simple_module(fixtures::a9(), 0);
}
Module m2()
{
    return socle_quotient(indecomposable_projective(fixtures::a9(), 1)).mod;
}

std::vector<Module> atfr4_gens()
{
    auto A9 = fixtures::a9();
    std::vector<Module> g;
    for (uint32_t v = 0; v < 3; ++v)
        g.push_back(indecomposable_projective(A9, v));
    g.push_back(m1());
    g.push_back(m2());
    return g;
}

}  // namespace

TEST_CASE("ext dimensions")
{
    auto R2 = fixtures::r2();
    Module k = simple_module(R2, 0);
    Module R = regular_module(R2);
    SUBCASE("ext^0 is hom")
    {
        CHECK(ext_dim(k, k, 0) == module_hom_basis(k, k).size());
        CHECK(ext_dim(R, R, 0) == module_hom_basis(R, R).size());
    }
    SUBCASE("ext^1(k,k) over r2 is 1")
    {
        CHECK(ext_dim(k, k, 1) == 1);
        CHECK(ext_dim(k, k, 2) == 1);  // periodic resolution
    }
    SUBCASE("higher ext out of projectives vanishes")
    {
        CHECK(ext_dim(R, k, 1) == 0);
        CHECK(ext_dim(R, k, 3) == 0);
    }
    SUBCASE("t6 sees ext^1 against the regular module")
    {
        // the simple at the E11 vertex of T2(r2) is not Cohen-Macaulay; the
        // one at the E22 vertex is (it corresponds to the mono 0 ↪ k)
        auto T6 = fixtures::t6();
        CHECK(ext_dim(simple_module(T6, 0), regular_module(T6), 1) != 0);
        for (uint32_t i = 1; i <= 1; ++i)
            CHECK(ext_dim(simple_module(T6, 1), regular_module(T6), i) == 0);
    }
}

TEST_CASE("gorenstein contexts")
{
    auto ctx = make_context(fixtures::r2());
    CHECK(ctx->d == 0);
    CHECK(is_member(simple_module(fixtures::r2(), 0), ctx));
    CHECK(is_member(regular_module(fixtures::r2()), ctx));

    auto t6ctx = make_context(fixtures::t6());
    CHECK(t6ctx->d == 1);
    CHECK(is_member(regular_module(fixtures::t6()), t6ctx));
    CHECK(!is_member(simple_module(fixtures::t6(), 0), t6ctx));
    CHECK(is_member(simple_module(fixtures::t6(), 1), t6ctx));
}

TEST_CASE("explicit list context validates Frobenius closure")
{
    auto A9 = fixtures::a9();
    SUBCASE("the ATFR4 list is closed")
    {
        auto ctx = make_context_list(A9, atfr4_gens());
        CHECK(is_member(m1(), ctx));
        CHECK(is_member(m2(), ctx));
        CHECK(is_member(indecomposable_projective(A9, 2), ctx));
        CHECK(!is_member(simple_module(A9, 1), ctx));
    }
    SUBCASE("dropping M2 breaks closure")
    {
        std::vector<Module> gens;
        for (uint32_t v = 0; v < 3; ++v)
            gens.push_back(indecomposable_projective(A9, v));
        gens.push_back(m1());
        try {
            (void)make_context_list(A9, gens);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code == Err::NotFrobeniusClosed);
        }
    }
}

TEST_CASE("cosyzygy")
{
    auto R2 = fixtures::r2();
    auto ctx = make_context(R2);
    SUBCASE("cosyzygy of the simple over r2")
    {
        Module k = simple_module(R2, 0);
        auto cz = cosyzygy(k, ctx);
        CHECK(cz.P.dim == 2);
        CHECK(cz.summands == std::vector<uint32_t>{0});
        CHECK(isomorphic(cz.cok, k));
        // exactness
        auto F = R2->field;
        CHECK(rank(F, cz.mono.m) == 1);
        CHECK(mul(F, cz.cokmap.m, cz.mono.m).is_zero());
        cz.mono.check();
        cz.cokmap.check();
    }
    SUBCASE("projectives are their own cosyzygy with zero cokernel")
    {
        auto cz = cosyzygy(regular_module(R2), ctx);
        CHECK(cz.cok.dim == 0);
        CHECK(inverse(R2->field, cz.mono.m).has_value());
    }
    SUBCASE("cosyzygy swaps M1 and M2 over a9, in both context modes")
    {
        auto A9 = fixtures::a9();
        auto gctx = make_context(A9);
        auto lctx = make_context_list(A9, atfr4_gens());
        for (auto& c : {gctx, lctx}) {
            auto cz1 = cosyzygy(m1(), c);
            CHECK(isomorphic(cz1.cok, m2()));
            auto cz2 = cosyzygy(m2(), c);
            CHECK(isomorphic(cz2.cok, m1()));
        }
    }
    SUBCASE("cosyzygy over t6 lands in CM")
    {
        auto T6 = fixtures::t6();
        auto tctx = make_context(T6);
        // the module (k ↪ R2) from the Mor side is a dim-3 CM module; here
        // just check cosyzygy of the regular summands behaves
        Module P0 = indecomposable_projective(T6, 0);
        auto cz = cosyzygy(P0, tctx);
        CHECK(cz.cok.dim == 0);
    }
}
