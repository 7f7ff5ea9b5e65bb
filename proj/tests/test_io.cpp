#include <doctest.h>

#include <random>

#include "weylcurves/errors.hpp"
#include "weylcurves/io.hpp"

using namespace weylcurves;

TEST_SUITE("io")
{
    TEST_CASE("class round trip")
    {
        std::mt19937_64 rng(2);
        std::uniform_int_distribution<long> v(-1000, 1000);
        for (int k = 0; k < 100; ++k) {
            int r = 2 + k % 5, s = k % 9;
            std::vector<Integer> m(s);
            for (auto& x : m) x = v(rng);
            CurveClass c(Space(r, s), Integer(v(rng)), m);
            DivisorClass D(Space(r, s), Integer(v(rng)), m);
            CHECK(parse_curve(to_json(c).dump()) == c);
            CHECK(parse_divisor(to_json(D).dump()) == D);
        }
    }

    TEST_CASE("large integers become strings")
    {
        Integer big = Integer(1) << 60;
        CurveClass c(Space(2, 2), big, {Integer(3), -big});
        json j = to_json(c);
        CHECK(j["d"].is_string());
        CHECK(j["m"][0].is_number_integer());
        CHECK(j["m"][1].get<std::string>() == "-1152921504606846976");
        CHECK(parse_curve(j.dump()) == c);
        CHECK(encode_integer(Integer("9007199254740991")).is_number_integer());
        CHECK(encode_integer(Integer("9007199254740992")).is_string());
    }

    TEST_CASE("malformed input")
    {
        CHECK_THROWS_AS(parse_class("{"), ArgumentError);
        CHECK_THROWS_AS(parse_class("[1,2]"), ArgumentError);
        CHECK_THROWS_AS(parse_class(R"({"kind":"curve","r":3,"s":2,"d":1,"m":[0]})"), ArgumentError);
        CHECK_THROWS_AS(parse_class(R"({"kind":"surface","r":3,"s":1,"d":1,"m":[0]})"), ArgumentError);
        CHECK_THROWS_AS(parse_class(R"({"kind":"curve","r":1,"s":1,"d":1,"m":[0]})"), DomainError);
        CHECK_THROWS_AS(parse_class(R"({"kind":"curve","r":3,"s":1,"d":"x","m":[0]})"), ArgumentError);
        CHECK_THROWS_AS(parse_curve(R"({"kind":"divisor","r":3,"s":1,"d":1,"m":[0]})"), ArgumentError);
        CHECK(parse_curve(R"({"kind":"curve","r":3,"s":1,"d":"12","m":[-4]})") == CurveClass(Space(3, 1), 12, {-4}));
    }

    TEST_CASE("report fields")
    {
        auto rep = to_json(classify(CurveClass(Space(4, 7), 13, {4, 3, 3, 3, 3, 3, 3}), std::nullopt));
        CHECK(rep["numerical_type"] == -1);
        CHECK(rep["quadratic"] == -41);
        CHECK(rep["weyl_class"] == "no");
        auto orbit = to_json(enumerate_orbit(h(Space(2, 5))), true);
        CHECK(orbit["complete"] == true);
        CHECK(orbit["count"] == 16);
        CHECK(orbit["shapes"].size() == 3);
        for (const auto& s : orbit["shapes"]) CHECK(std::holds_alternative<CurveClass>(class_from_json(s)));
    }
}
