#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "weylcurves/classify.hpp"
#include "weylcurves/cremona.hpp"

using namespace weylcurves;

namespace {

struct Gen {
    std::mt19937_64 rng{77};

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    CurveClass curve(Space sp, long range = 50)
    {
        std::uniform_int_distribution<long> v(-range, range);
        std::vector<Integer> m(sp.s);
        for (auto& x : m) x = v(rng);
        return CurveClass(sp, Integer(v(rng)), m);
    }

    DivisorClass divisor(Space sp, long range = 50)
    {
        auto c = curve(sp, range);
        return DivisorClass(sp, c.d(), c.m());
    }

    IndexSet indices(Space sp)
    {
        std::vector<int> all(sp.s);
        for (int i = 0; i < sp.s; ++i) all[i] = i + 1;
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(sp.r + 1);
        return IndexSet(sp, all);
    }
};

} // namespace

TEST_SUITE("properties")
{
    TEST_CASE("Cremona steps preserve every invariant")
    {
        Gen g;
        for (int k = 0; k < 300; ++k) {
            Space sp(g.pick(2, 8), 0);
            sp = Space(sp.r, sp.r + 1 + g.pick(0, 6));
            auto c = g.curve(sp), c2 = g.curve(sp);
            auto D = g.divisor(sp);
            auto I = g.indices(sp);
            auto pc = cremona_curve(c, I);
            auto pD = cremona_divisor(D, I);
            CHECK(cremona_curve(pc, I) == c);
            CHECK(cremona_divisor(pD, I) == D);
            CHECK(intersect(pD, pc) == intersect(D, c));
            CHECK(q_curve(pc) == q_curve(c));
            CHECK(q_divisor(pD) == q_divisor(D));
            CHECK(bilinear_curve(pc, cremona_curve(c2, I)) == bilinear_curve(c, c2));
            CHECK(numerical_type(pc) == numerical_type(c));
            CHECK(quadratic_signature(pc) == quadratic_signature(c));
            CHECK(cremona_divisor(canonical_class(sp), I) == canonical_class(sp));
            CHECK(cremona_curve(anticanonical_curve_class(sp), I) == anticanonical_curve_class(sp));
            CHECK(2 * bilinear_curve(c, c2) == q_curve(c + c2) - q_curve(c) - q_curve(c2));
            CHECK(2 * bilinear_divisor(D, pD) == q_divisor(D + pD) - q_divisor(D) - q_divisor(pD));
        }
    }

    TEST_CASE("projection commutes with Cremona at points of I")
    {
        Gen g;
        for (int k = 0; k < 300; ++k) {
            int r = g.pick(3, 8);
            Space sp(r, r + 1 + g.pick(0, 5));
            auto c = g.curve(sp);
            auto I = g.indices(sp);
            int i = I.indices()[g.pick(0, r)];
            std::vector<int> rest;
            for (int j : I.indices())
                if (j != i) rest.push_back(j > i ? j - 1 : j);
            Space low(r - 1, sp.s - 1);
            CHECK(project(cremona_curve(c, I), i) == cremona_curve(project(c, i), IndexSet(low, rest)));
        }
    }

    TEST_CASE("reduction keeps the canonical pairing")
    {
        Gen g;
        for (int k = 0; k < 200; ++k) {
            int r = g.pick(2, 6);
            Space sp(r, r + 1 + g.pick(0, 5));
            std::vector<Integer> m(sp.s);
            Integer sum = 0;
            for (auto& x : m) {
                x = g.pick(0, 8);
                sum += x;
            }
            CurveClass c(sp, sum + g.pick(0, 4), m);
            auto t = cremona_reduce(c);
            for (const auto& x : t.path()) CHECK(anticanonical_degree(x) == anticanonical_degree(c));
        }
    }
}
