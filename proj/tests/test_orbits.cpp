#include <doctest.h>

#include "oracles.hpp"
#include "weylcurves/cremona.hpp"
#include "weylcurves/errors.hpp"
#include "weylcurves/orbits.hpp"

using namespace weylcurves;

namespace {

// labelled classes of the brute-force orbit, canonicalized
std::set<oracle::Vec> shapes_of(const oracle::LabelledOrbit& o)
{
    std::set<oracle::Vec> out;
    for (auto v : o.members) {
        std::sort(v.m.rbegin(), v.m.rend());
        out.insert(v);
    }
    return out;
}

} // namespace

TEST_SUITE("weylorbits")
{
    TEST_CASE("finiteness")
    {
        CHECK(is_weyl_finite(Space(4, 8)));
        CHECK_FALSE(is_weyl_finite(Space(5, 9)));
        CHECK_FALSE(is_weyl_finite(Space(2, 9)));
        CHECK(is_weyl_finite(Space(2, 8)));
    }

    TEST_CASE("seeds")
    {
        Space sp(4, 7);
        CHECK(weyl_seed(sp, 1) == h(sp));
        CHECK(weyl_seed(sp, 0) == h(sp) - e(sp, 1));
        CHECK(weyl_seed(sp, -1) == line_through(sp, 1, 2));
        CHECK(divisorial_seed(sp, 0) == DivisorClass(sp, 1, {1, 1, 1, 0, 0, 0, 0}));
    }

    TEST_CASE("canonical form and labellings")
    {
        CurveClass c(Space(3, 5), 4, {1, 3, 0, 3, 1});
        CHECK(canonical(c) == CurveClass(Space(3, 5), 4, {3, 3, 1, 1, 0}));
        CHECK(is_canonical(canonical(c)));
        CHECK_FALSE(is_canonical(c));
        CHECK(labelled_multiplicity(c) == 30);
    }

    TEST_CASE("small orbits against brute force")
    {
        struct Case {
            int r, s, i;
        };
        for (Case k : {Case{2, 5, 1}, Case{2, 6, -1}, Case{2, 4, -1}, Case{3, 6, -1}, Case{3, 6, 0}, Case{3, 6, 1},
                       Case{4, 7, -1}, Case{4, 7, 0}, Case{2, 7, -1}, Case{3, 5, 1}}) {
            Space sp(k.r, k.s);
            auto seed = weyl_seed(sp, k.i);
            auto orbit = enumerate_orbit(seed, OrbitBound::unbounded());
            auto full = enumerate_orbit(seed, OrbitBound::unbounded(), OrbitMode::full_subsets);
            auto brute = oracle::labelled_orbit(k.r, oracle::from(seed), 200000);
            REQUIRE(brute.complete);
            CHECK(orbit.complete);
            CHECK(orbit.labelled_count() == brute.members.size());
            CHECK(orbit.shape_count() == shapes_of(brute).size());
            CHECK(full.representatives == orbit.representatives);
            for (const auto& c : orbit.representatives) {
                CHECK(q_curve(c) == q_curve(seed));
                CHECK(anticanonical_degree(c) == anticanonical_degree(seed));
            }
        }
    }

    TEST_CASE("extremal-only search misses a shape in Y^3_6")
    {
        auto seed = weyl_seed(Space(3, 6), -1);
        auto extremal = enumerate_orbit(seed, OrbitBound::unbounded(), OrbitMode::extremal);
        auto exact = enumerate_orbit(seed, OrbitBound::unbounded());
        CHECK(extremal.shape_count() < exact.shape_count());
        CHECK(exact.contains(CurveClass(Space(3, 6), 3, {1, 1, 1, 1, 1, 1})));
    }

    TEST_CASE("censuses")
    {
        auto y36 = census(enumerate_orbit(weyl_seed(Space(3, 6), -1)));
        CHECK(y36.effective == 16);
        CHECK(y36.effective_shapes == 2);
        auto y26 = census(enumerate_orbit(weyl_seed(Space(2, 6), -1)));
        CHECK(y26.effective + y26.exceptional == 27);
        CHECK(enumerate_orbit(h(Space(2, 5))).labelled_count() == 16);
        for (int r = 2; r <= 6; ++r) {
            auto a = census(enumerate_orbit(weyl_seed(Space(r, r + 3), 0)));
            CHECK(a.effective == 2 * (r + 3));
        }
    }

    TEST_CASE("bounds are reported, not thrown")
    {
        for (Space sp : {Space(2, 9), Space(3, 8), Space(5, 9)})
            for (int i : {0, 1}) {
                auto o = enumerate_orbit(weyl_seed(sp, i), OrbitBound{Integer(200), std::nullopt});
                CHECK_FALSE(o.complete);
                REQUIRE(o.bound_hit.has_value());
                CHECK(o.bound_hit->which == BoundHit::degree);
            }
        auto o = enumerate_orbit(weyl_seed(Space(3, 8), 1), OrbitBound{std::nullopt, std::size_t{50}});
        CHECK_FALSE(o.complete);
        CHECK(o.bound_hit->which == BoundHit::count);
        CHECK(enumerate_orbit(h(Space(3, 3))).shape_count() == 1);
    }

    TEST_CASE("deterministic across thread counts")
    {
        auto seed = weyl_seed(Space(4, 8), 1);
        setenv("WEYLCURVES_THREADS", "1", 1);
        auto a = enumerate_orbit(seed);
        setenv("WEYLCURVES_THREADS", "3", 1);
        auto b = enumerate_orbit(seed);
        unsetenv("WEYLCURVES_THREADS");
        CHECK(a.representatives == b.representatives);
        CHECK(a.labelled_count() == 17280);
    }

    TEST_CASE("iterate_lowest")
    {
        auto y38 = iterate_lowest(CurveClass(Space(3, 8), 1, {0, 0, 0, 0, 0, 0, 0, 1}), 30);
        REQUIRE(y38.size() == 31);
        for (long i = 0; i <= 30; ++i) CHECK(y38[i].d() == i * i + i + 1);
        auto y29 = iterate_lowest(CurveClass(Space(2, 9), 1, {0, 0, 0, 0, 0, 0, 0, 0, 1}), 30);
        for (long i = 0; i <= 30; ++i) CHECK(y29[i].d() == 1 + i * (i + 1) / 2);
        auto y49 = iterate_lowest(CurveClass(Space(4, 9), 1, {0, 0, 0, 0, 0, 0, 0, 1, 1}), 6);
        CHECK(to_string(y49[1]) == "(4;0,0,1,1,1,1,1,1,1)_4");
        CHECK(to_string(y49[4]) == "(22;3,3,3,3,4,5,5,5,6)_4");
        CHECK(to_string(y49[5]) == "(40;5,5,5,6,9,9,9,9,10)_4");
        for (const auto& c : y49) CHECK(std::is_sorted(c.m().begin(), c.m().end()));
    }

    TEST_CASE("recursion guards")
    {
        CHECK(recursion_guard(CurveClass(Space(4, 9), 40, {5, 5, 5, 6, 9, 9, 9, 9, 10}), Family::rigid_s_r5));
        for (int r = 3; r <= 7; ++r) {
            std::vector<Integer> m(r + 5);
            m[r + 3] = m[r + 4] = 1;
            CHECK_FALSE(recursion_guard(CurveClass(Space(r, r + 5), Integer(1), m), Family::rigid_s_r5));
        }
        CHECK_FALSE(recursion_guard(CurveClass::zero(Space(2, 9)), Family::r2_s9));
        CHECK_THROWS_AS(recursion_guard(h(Space(3, 9)), Family::r2_s9), DomainError);
        CHECK_THROWS_AS(recursion_guard(CurveClass(Space(2, 9), 3, {1, 0, 0, 0, 0, 0, 0, 0, 0}), Family::r2_s9), DomainError);
    }

    TEST_CASE("guards persist along iterates")
    {
        struct Case {
            Family f;
            int r, s, i;
        };
        for (Case k : {Case{Family::r_ge5_s_r4, 5, 9, 0}, Case{Family::r_ge5_s_r4, 7, 11, 1}, Case{Family::r34_s_r5, 3, 8, 0},
                       Case{Family::r34_s_r5, 4, 9, -1}, Case{Family::r2_s9, 2, 9, 0}, Case{Family::rigid_s_r5, 4, 9, -1},
                       Case{Family::rigid_s_r5, 6, 11, -1}}) {
            Space sp(k.r, k.s);
            std::vector<Integer> m(sp.s);
            for (int j = 0; j < 1 - k.i; ++j) m[sp.s - 1 - j] = 1;
            auto it = iterate_lowest(CurveClass(sp, Integer(1), m), 30);
            int start = -1;
            for (int j = 0; j <= 30; ++j) {
                bool g = recursion_guard(it[j], k.f);
                if (g && start < 0) start = j;
                if (start >= 0) {
                    CHECK(g);
                    if (j > start) CHECK(it[j].d() > it[j - 1].d());
                }
            }
            CHECK(start >= 0);
        }
    }

    TEST_CASE("line orbits in Y^r_{r+5} are infinite")
    {
        for (int r = 3; r <= 6; ++r) {
            std::vector<Integer> m(r + 5);
            m[r + 3] = m[r + 4] = 1;
            auto it = iterate_lowest(CurveClass(Space(r, r + 5), Integer(1), m), 50);
            for (std::size_t j = 1; j < it.size(); ++j) CHECK(it[j].d() > it[j - 1].d());
        }
    }

    TEST_CASE("convex hull certificate")
    {
        auto y38 = iterate_lowest(CurveClass(Space(3, 8), 1, {0, 0, 0, 0, 0, 0, 0, 1}), 9);
        auto cert = convex_hull_independence(y38);
        CHECK(cert.holds);
        CHECK(cert.pairing == Integer(2));
        std::vector<CurveClass> twice{y38[0], y38[1], y38[0]};
        auto rep = convex_hull_independence(twice);
        CHECK_FALSE(rep.holds);
        CHECK(rep.reason == HullCertificate::repeated_class);
        CHECK_THROWS_AS(convex_hull_independence({}), ArgumentError);

        // the (-1) family in r = 3 pairs to zero with F
        auto lines = iterate_lowest(CurveClass(Space(3, 8), 1, {0, 0, 0, 0, 0, 0, 1, 1}), 5);
        auto zero = convex_hull_independence(lines);
        CHECK_FALSE(zero.holds);
        CHECK(zero.reason == HullCertificate::zero_pairing);
    }
}
