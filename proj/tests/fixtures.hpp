#pragma once

#include "homcat/algebra.hpp"

// The four fixture algebras used across the test suites.
// r2: one vertex, one loop x with x^2 = 0.
// a9: three-cycle gamma:1->3, beta:3->2, alpha:2->1, paths of length 3 vanish.
// b4: two vertices, delta:1->2, alpha:2->1, both length-2 cycles vanish.
// t6 = triangular2(r2), always re-derived.
namespace fixtures {

inline homcat::QuiverPresentation r2_pres()
{
    homcat::QuiverPresentation p;
    p.field = homcat::FieldSpec(2);
    p.vertices = {"1"};
    p.arrows = {{"x", "1", "1"}};
    p.relations = {{{1, {"x", "x"}}}};
    p.nilpotency_bound = 2;
    return p;
}

inline homcat::QuiverPresentation a9_pres()
{
    homcat::QuiverPresentation p;
    p.field = homcat::FieldSpec(2);
    p.vertices = {"1", "2", "3"};
    p.arrows = {{"g", "1", "3"}, {"b", "3", "2"}, {"a", "2", "1"}};
    p.relations = {{{1, {"a", "b", "g"}}}, {{1, {"b", "g", "a"}}}, {{1, {"g", "a", "b"}}}};
    p.nilpotency_bound = 3;
    return p;
}

inline homcat::QuiverPresentation b4_pres()
{
    homcat::QuiverPresentation p;
    p.field = homcat::FieldSpec(2);
    p.vertices = {"1", "2"};
    p.arrows = {{"d", "1", "2"}, {"a", "2", "1"}};
    p.relations = {{{1, {"a", "d"}}}, {{1, {"d", "a"}}}};
    p.nilpotency_bound = 2;
    return p;
}

inline homcat::AlgebraPtr r2()
{
    static homcat::AlgebraPtr A = homcat::build_algebra(r2_pres());
    return A;
}

inline homcat::AlgebraPtr a9()
{
    static homcat::AlgebraPtr A = homcat::build_algebra(a9_pres());
    return A;
}

inline homcat::AlgebraPtr b4()
{
    static homcat::AlgebraPtr A = homcat::build_algebra(b4_pres());
    return A;
}

inline homcat::AlgebraPtr t6()
{
    static homcat::AlgebraPtr A = homcat::triangular2(r2());
    return A;
}

}  // namespace fixtures
