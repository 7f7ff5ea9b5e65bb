#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "weylcurves/cones.hpp"
#include "weylcurves/errors.hpp"

using namespace weylcurves;

namespace {

DivisorClass uniform(int r, int s, long d, long m)
{
    return DivisorClass(Space(r, s), Integer(d), std::vector<Integer>(s, Integer(m)));
}

} // namespace

TEST_SUITE("cones")
{
    TEST_CASE("facet examples")
    {
        auto facets = effective_membership(uniform(4, 7, 10, 6));
        for (const auto& f : facets) {
            CHECK(f.satisfied);
            if (f.id.type == FacetId::B) CHECK(f.value == 10);
        }
        for (int r = 2; r <= 6; ++r) {
            Space sp(r, r + 3);
            CHECK(is_effective(H(sp) - E(sp, 1)));
            std::vector<Integer> m(sp.s);
            for (int i = 0; i <= r; ++i) m[i] = 1;
            DivisorClass D(sp, Integer(1), m);
            CHECK_FALSE(is_effective(D));
            bool found = false;
            for (const auto& f : effective_membership(D))
                if (f.id.type == FacetId::B && f.id.t == 0 && f.value == -1) found = true;
            CHECK(found);
        }
        CHECK(is_effective(H(Space(3, 5)) - E(Space(3, 5), 2)));
        CHECK_THROWS_AS(effective_membership(H(Space(3, 7))), DomainError);
        CHECK_THROWS_AS(effective_membership(H(Space(3, 4))), DomainError);
    }

    TEST_CASE("facet values match the direct formulas")
    {
        std::mt19937_64 rng(21);
        for (int k = 0; k < 100; ++k) {
            int r = 2 + k % 5;
            std::uniform_int_distribution<long> v(-3, 12);
            oracle::Vec D{v(rng), {}};
            for (int i = 0; i < r + 3; ++i) D.m.push_back(v(rng));
            std::vector<long> got;
            for (const auto& f : effective_membership(oracle::divisor(r, D))) got.push_back(f.value.get_si());
            auto want = oracle::facet_values(r, D);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            CHECK(got == want);
        }
    }

    TEST_CASE("rays of Y^2_5")
    {
        auto rays = movable_extremal_rays(Space(2, 5));
        std::map<std::string, int> shapes;
        for (const auto& ray : rays) ++shapes[to_string(canonical(ray.c))];
        CHECK(shapes["(1;1,0,0,0,0)_2"] == 5);
        CHECK(shapes["(2;1,1,1,1,0)_2"] == 5);
        CHECK(shapes["(1;0,0,0,0,0)_2"] == 1);
        CHECK(shapes["(2;1,1,1,0,0)_2"] == 10);
        CHECK(shapes["(3;2,1,1,1,1)_2"] == 5);
        CHECK(rays.size() == 26);
        CHECK_THROWS_AS(movable_extremal_rays(Space(2, 4)), DomainError);
    }

    TEST_CASE("rays pair with their facets and lie in the (0) or (1) orbits")
    {
        for (int r = 2; r <= 6; ++r) {
            Space sp(r, r + 3);
            auto rays = movable_extremal_rays(sp);
            auto orbit1 = enumerate_orbit(weyl_seed(sp, 1));
            auto orbit0 = enumerate_orbit(weyl_seed(sp, 0));
            DivisorClass D = uniform(r, r + 3, 7, 2);
            auto facets = effective_membership(D);
            REQUIRE(facets.size() == rays.size());
            for (std::size_t k = 0; k < rays.size(); ++k) {
                CHECK(rays[k].id == facets[k].id);
                CHECK(intersect(D, rays[k].c) == facets[k].value);
                auto t = numerical_type(rays[k].c);
                REQUIRE(t.has_value());
                CHECK((*t == 0 || *t == 1));
                CHECK((orbit0.contains(rays[k].c) || orbit1.contains(rays[k].c)));
            }
        }
        CHECK(beta_class(Space(3, 6), 1, {1, 2}) == CurveClass(Space(3, 6), 5, {2, 2, 1, 1, 1, 1}));
        CHECK(beta_class(Space(5, 8), -1, {1, 2, 3, 4, 5, 6, 7, 8}) == h(Space(5, 8)));
    }

    TEST_CASE("Cremona climbs the beta ladder")
    {
        auto step = cremona_to_beta(Space(2, 5), -1);
        CHECK(step.image == CurveClass(Space(2, 5), 2, {1, 1, 1, 0, 0}));
        CHECK(step.matches_next);
        for (int r = 2; r <= 7; ++r) {
            auto levels = legal_beta_levels(Space(r, r + 3));
            for (std::size_t k = 0; k + 1 < levels.size(); ++k)
                CHECK_MESSAGE(cremona_to_beta(Space(r, r + 3), levels[k]).matches_next, "r=" << r << " t=" << levels[k]);
        }
        CHECK_THROWS_AS(cremona_to_beta(Space(4, 7), 9), ArgumentError);
    }

    TEST_CASE("zero-divisorial screen")
    {
        auto a = zero_divisorial_nonneg(h(Space(3, 6)));
        CHECK(a.answer == WeylVerdict::yes);
        auto b = zero_divisorial_nonneg(line_through(Space(4, 7), 1, 2));
        CHECK(b.answer == WeylVerdict::no);
        REQUIRE(b.witness.has_value());
        CHECK(intersect(*b.witness, line_through(Space(4, 7), 1, 2)) < 0);
        for (int r = 2; r <= 5; ++r) {
            auto f = zero_divisorial_nonneg(anticanonical_curve_class(Space(r, r + 3)));
            CHECK(f.answer == WeylVerdict::yes);
        }
        // on a del Pezzo surface the (0)-classes are nef
        CHECK(zero_divisorial_nonneg(line_through(Space(2, 8), 1, 2)).answer == WeylVerdict::yes);
        auto c = zero_divisorial_nonneg(h(Space(3, 8)), OrbitBound{Integer(50), std::nullopt});
        CHECK(c.answer == WeylVerdict::unknown);
    }

    TEST_CASE("zero-divisorial minimum over relabellings")
    {
        Space sp(3, 6);
        CurveClass c(sp, 3, {2, 0, 1, 0, 1, 1});
        auto res = zero_divisorial_nonneg(c);
        REQUIRE(res.minimum.has_value());
        Integer brute;
        bool first = true;
        for (const auto& D : enumerate_orbit(divisorial_seed(sp, 0)).representatives)
            for (const auto& L : labellings(D, 100000)) {
                Integer v = intersect(L, c);
                if (first || v < brute) brute = v;
                first = false;
            }
        CHECK(*res.minimum == brute);
    }

    TEST_CASE("orthogonality audit")
    {
        DivisorClass D = uniform(4, 7, 10, 6);
        auto audit = base_locus_orthogonality_audit(D);
        CHECK(audit.curves_complete);
        CHECK(audit.violations.empty());
        CHECK(audit.negative_curves.size() == 22);

        DivisorClass P(Space(3, 6), 2, {2, 2, 2, 0, 0, 0}); // a double plane
        auto p = base_locus_orthogonality_audit(P);
        CHECK(p.violations.empty());
        CHECK(p.curves_inside_hyperplanes > 0);

        auto empty = base_locus_orthogonality_audit(H(Space(3, 6)));
        CHECK(empty.negative_curves.empty());
        CHECK(empty.negative_hyperplanes.empty());
    }

    TEST_CASE("curve pairs can fail to be orthogonal")
    {
        Space sp(5, 9);
        DivisorClass D = uniform(5, 9, 6, 4);
        CurveClass C(sp, 5, {1, 1, 1, 1, 1, 1, 1, 1, 0});
        CurveClass L(sp, 1, {1, 0, 0, 0, 0, 0, 0, 0, 1});
        CHECK(intersect(D, C) < 0);
        CHECK(intersect(D, L) < 0);
        CHECK(bilinear_curve(C, L) == 1);
    }

    TEST_CASE("exact cone membership")
    {
        using V = std::vector<mpq_class>;
        std::vector<V> gens{{1, 0}, {1, 1}};
        CHECK(exact_cone_membership(gens, {3, 1}).has_value());
        CHECK_FALSE(exact_cone_membership(gens, {1, 2}).has_value());
        CHECK_FALSE(exact_cone_membership(gens, {-1, 0}).has_value());
        auto lambda = exact_cone_membership(gens, {mpq_class(5, 2), mpq_class(1, 3)});
        REQUIRE(lambda.has_value());
        CHECK((*lambda)[0] * 1 + (*lambda)[1] * 1 == mpq_class(5, 2));
        CHECK((*lambda)[1] == mpq_class(1, 3));

        // every (-1)-line of Y^3_6 has sum m = 2d, so F is outside their cone
        Space sp(3, 6);
        std::vector<V> lines;
        for (const auto& c : minus1_lines(sp)) lines.push_back(coordinates(c));
        CHECK(lines.size() == 16);
        CHECK(exact_cone_membership(lines, coordinates(CurveClass(sp, 4, {2, 2, 1, 1, 1, 1}))).has_value());
        CHECK(exact_cone_membership(lines, coordinates(CurveClass(sp, 6, {2, 2, 2, 2, 2, 2}))).has_value());
        CHECK_FALSE(exact_cone_membership(lines, coordinates(anticanonical_curve_class(sp))).has_value());
        CHECK_FALSE(exact_cone_membership(lines, coordinates(-h(sp))).has_value());
    }
}
