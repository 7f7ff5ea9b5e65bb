#include "weylcurves/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "weylcurves/classify.hpp"
#include "weylcurves/cones.hpp"
#include "weylcurves/dimension.hpp"
#include "weylcurves/errors.hpp"

namespace weylcurves {

bool FixtureSummary::passed() const { return failures() == 0; }

std::size_t FixtureSummary::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const FixtureCheck& c) { return !c.passed; }));
}

std::vector<std::string> fixture_suites() { return {"paper-numbers", "orbit-counts", "invariance"}; }

namespace {

class Recorder {
public:
    explicit Recorder(std::string suite) { out_.suite = std::move(suite); }

    void check(std::string name, bool ok, std::string detail = {})
    {
        out_.checks.push_back({std::move(name), ok, std::move(detail)});
    }

    template <class A, class B>
    void equal(std::string name, const A& got, const B& want)
    {
        std::ostringstream os;
        os << "got " << got << ", want " << want;
        check(std::move(name), got == want, os.str());
    }

    // a failing computation is a failed check, not an aborted suite
    void guarded(const std::string& name, const std::function<void()>& body)
    {
        try {
            body();
        } catch (const std::exception& e) {
            check(name, false, std::string("threw: ") + e.what());
        }
    }

    FixtureSummary take() { return std::move(out_); }

private:
    FixtureSummary out_;
};

CurveClass curve(int r, long d, std::initializer_list<long> m)
{
    return CurveClass(Space(r, static_cast<int>(m.size())), d, m);
}

CurveClass uniform_curve(int r, int s, long d, long m)
{
    return CurveClass(Space(r, s), Integer(d), std::vector<Integer>(s, Integer(m)));
}

DivisorClass uniform_divisor(int r, int s, long d, long m)
{
    return DivisorClass(Space(r, s), Integer(d), std::vector<Integer>(s, Integer(m)));
}

std::vector<Integer> sorted(std::vector<Integer> m)
{
    std::sort(m.begin(), m.end());
    return m;
}

std::vector<Integer> repeated(std::initializer_list<std::pair<long, int>> parts)
{
    std::vector<Integer> out;
    for (auto [value, times] : parts)
        for (int k = 0; k < times; ++k) out.emplace_back(value);
    return sorted(out);
}

void paper_numbers(Recorder& rec)
{
    rec.guarded("dimension", [&] {
        DivisorClass D6 = uniform_divisor(4, 7, 10, 6);
        rec.equal("naive chi 10H-6E in P4", naive_chi(D6), Integer(119));
        rec.equal("corrected dimension 10H-6E in P4", corrected_dimension(D6, auto_curves(D6.space())).total, Integer(141));
        DivisorClass D7 = uniform_divisor(5, 9, 6, 4);
        rec.equal("naive chi 6H-4E in P5", naive_chi(D7), Integer(-42));
        rec.equal("corrected dimension 6H-4E in P5", corrected_dimension(D7, auto_curves(D7.space())).total, Integer(3));
        auto chain = restriction_chain_fixture().values();
        rec.check("restriction chain 79 64 37 22 3",
                  chain == std::vector<Integer>{79, 64, 37, 22, 3});
    });

    rec.guarded("counterexamples", [&] {
        CurveClass a = curve(4, 13, {4, 3, 3, 3, 3, 3, 3});
        rec.equal("(13;4,3^6)_4 -K.C", intersect(canonical_class(a.space()), a), Integer(1));
        rec.equal("(13;4,3^6)_4 <c,F>", anticanonical_degree(a), Integer(-1));
        rec.equal("(13;4,3^6)_4 <c,c>", q_curve(a), Integer(-41));
        rec.equal("(13;4,3^6)_4 weyl class", to_string(is_weyl_class(a, -1).answer), "no");
        rec.equal("(13;4,3^6)_4 first reduction", to_string(canonical(cremona_curve(a, largest_indices(a)))),
                  "(4;3,3,1,0,0,0,0)_4");
        rec.check("(4;3,3,1,0^4)_4 violates (b)", [] {
            auto v = irreducibility_screen(curve(4, 4, {3, 3, 1, 0, 0, 0, 0}));
            return std::any_of(v.begin(), v.end(), [](const ScreenViolation& x) { return x.clause == 'b'; });
        }());

        CurveClass b = uniform_curve(6, 10, 21, 3);
        rec.equal("3F in Y^6_10 <c,F>", anticanonical_degree(b), Integer(-3));
        rec.equal("3F in Y^6_10 <c,c>", q_curve(b), Integer(-9));
        rec.check("3F in Y^6_10 cremona reduced", is_cremona_reduced(b));
        rec.equal("3F in Y^6_10 weyl class", to_string(is_weyl_class(b, -1).answer), "no");

        CurveClass c = curve(3, 7, {4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
        rec.equal("(7;4,1^10)_3 <c,F>", anticanonical_degree(c), Integer(0));
        rec.equal("(7;4,1^10)_3 <c,c>", q_curve(c), Integer(-3));
        rec.equal("(7;4,1^10)_3 weyl class", to_string(is_weyl_class(c, -1).answer), "no");
    });

    rec.guarded("pairings", [&] {
        CurveClass C = curve(5, 5, {1, 1, 1, 1, 1, 1, 1, 1, 0});
        CurveClass L = curve(5, 1, {1, 0, 0, 0, 0, 0, 0, 0, 1});
        rec.equal("<C,L19>_1 in Y^5_9", bilinear_curve(C, L), Integer(1));
        rec.equal("F in Y^3_8", to_string(anticanonical_curve_class(Space(3, 8))), "(4;1,1,1,1,1,1,1,1)_3");
        rec.equal("<H,H>_1 in Y^4_0", q_divisor(H(Space(4, 0))), Integer(3));
        rec.equal("phi(h) in Y^3_5", to_string(cremona_curve(h(Space(3, 5)), IndexSet(Space(3, 5), {1, 2, 3, 4}))),
                  "(3;1,1,1,1,0)_3");
    });

    rec.guarded("planar", [&] {
        rec.check("(5;3,3,1^8)_2 violates (b)", [] {
            auto v = irreducibility_screen(curve(2, 5, {3, 3, 1, 1, 1, 1, 1, 1, 1, 1}));
            return std::any_of(v.begin(), v.end(), [](const ScreenViolation& x) { return x.clause == 'b'; });
        }());
        auto p = planar_classify(curve(2, 6, {2, 2, 2, 2, 2, 2, 2, 2}));
        rec.check("(6;2^8) numerical (0)", p.numerical_type == 0);
        rec.equal("(6;2^8) weyl (0)", to_string(is_weyl_class(curve(2, 6, {2, 2, 2, 2, 2, 2, 2, 2}), 0).answer), "no");
        rec.check("(10;2^8)_4 bound j=0", lemma_crnum_bound(curve(4, 10, {2, 2, 2, 2, 2, 2, 2, 2}), 0).holds);
    });

    rec.guarded("classification", [&] {
        for (int r = 2; r <= 8; ++r) {
            auto sol = mds_minus1_solutions(Space(r, r + 3));
            rec.check("only line and RNC in Y^" + std::to_string(r) + "_" + std::to_string(r + 3),
                      sol.line_and_rnc_only);
        }
        auto y59 = mds_minus1_solutions(Space(5, 9));
        rec.check("only line and RNC in Y^5_9", y59.line_and_rnc_only);
        rec.check("Y^4_8 finite, Y^5_9 infinite", is_weyl_finite(Space(4, 8)) && !is_weyl_finite(Space(5, 9)));
    });

    rec.guarded("families", [&] {
        auto y38 = iterate_lowest(CurveClass(Space(3, 8), 1, {0, 0, 0, 0, 0, 0, 0, 1}), 20);
        bool deg = true, mult = true;
        for (long i = 0; i < static_cast<long>(y38.size()); ++i) {
            deg = deg && y38[i].d() == i * i + i + 1;
            long k = i / 2;
            auto want = i % 2 == 0 ? repeated({{k * k, 4}, {k * k + k, 3}, {k * k + k + 1, 1}})
                                   : repeated({{k * k + k, 3}, {k * k + k + 1, 1}, {k * k + 2 * k + 1, 4}});
            mult = mult && sorted(y38[i].m()) == want;
        }
        rec.check("Y^3_8 degrees i^2+i+1", deg);
        rec.check("Y^3_8 multiplicities", mult);

        auto y29 = iterate_lowest(CurveClass(Space(2, 9), 1, {0, 0, 0, 0, 0, 0, 0, 0, 1}), 20);
        deg = mult = true;
        for (long i = 0; i < static_cast<long>(y29.size()); ++i) {
            deg = deg && y29[i].d() == 1 + i * (i + 1) / 2;
            long k = i / 3;
            long a = k + 3 * k * (k - 1) / 2, b = 2 * k + 3 * k * (k - 1) / 2, c = 3 * k * (k + 1) / 2;
            long e = (k + 1) * (2 + 3 * k) / 2, f = (k + 1) * (4 + 3 * k) / 2;
            std::vector<Integer> want;
            if (i % 3 == 0) want = repeated({{a, 3}, {b, 3}, {c, 2}, {c + 1, 1}});
            if (i % 3 == 1) want = repeated({{c, 2}, {c + 1, 1}, {e, 3}, {b, 3}});
            if (i % 3 == 2) want = repeated({{c, 2}, {c + 1, 1}, {e, 3}, {f, 3}});
            mult = mult && sorted(y29[i].m()) == want;
        }
        rec.check("Y^2_9 degrees 1+i(i+1)/2", deg);
        rec.check("Y^2_9 multiplicities", mult);

        auto y49 = iterate_lowest(CurveClass(Space(4, 9), 1, {0, 0, 0, 0, 0, 0, 0, 1, 1}), 6);
        rec.equal("Y^4_9 L_5", to_string(y49[4]), "(22;3,3,3,3,4,5,5,5,6)_4");
        rec.check("Y^4_9 next iterate satisfies the guard", recursion_guard(y49[5], Family::rigid_s_r5));
        rec.check("Y^r_{r+5} L_1 fails the guard",
                  !recursion_guard(CurveClass(Space(3, 8), 1, {0, 0, 0, 0, 0, 0, 1, 1}), Family::rigid_s_r5));
    });

    rec.guarded("cones", [&] {
        rec.check("10H-6E in Y^4_7 effective", is_effective(uniform_divisor(4, 7, 10, 6)));
        for (int r = 2; r <= 5; ++r) {
            Space sp(r, r + 3);
            std::vector<Integer> m(sp.s);
            rec.check("H-E1 effective in " + to_string(sp), is_effective(H(sp) - E(sp, 1)));
            for (int i = 0; i <= r; ++i) m[i] = 1;
            rec.check("H-E1-..-E_{r+1} not effective in " + to_string(sp), !is_effective(DivisorClass(sp, Integer(1), m)));
        }
    });
}

template <class Fn>
void for_mds(Fn fn)
{
    for (int r = 2; r <= 6; ++r)
        for (int s = r + 1; s <= r + 3; ++s) fn(Space(r, s));
}

void orbit_counts(Recorder& rec)
{
    for (int r = 2; r <= 6; ++r) {
        rec.guarded("r=" + std::to_string(r), [&] {
            auto a = census(enumerate_orbit(weyl_seed(Space(r, r + 2), -1)));
            rec.equal("effective (-1) count in Y^" + std::to_string(r) + "_" + std::to_string(r + 2), a.effective,
                      binom(r + 2, 2));
            auto b = census(enumerate_orbit(weyl_seed(Space(r, r + 3), -1)));
            rec.equal("effective (-1) count in Y^" + std::to_string(r) + "_" + std::to_string(r + 3), b.effective,
                      binom(r + 3, 2) + 1);
            rec.equal("effective (-1) shapes in Y^" + std::to_string(r) + "_" + std::to_string(r + 3), b.effective_shapes,
                      std::size_t{2});
        });
    }
    rec.guarded("surfaces", [&] {
        auto y26 = census(enumerate_orbit(weyl_seed(Space(2, 6), -1)));
        rec.equal("Y^2_6 lines", y26.effective + y26.exceptional, Integer(27));
        rec.equal("Y^2_5 (1) count", enumerate_orbit(h(Space(2, 5))).labelled_count(), Integer(16));
        rec.equal("Y^2_8 (-1) count", enumerate_orbit(weyl_seed(Space(2, 8), -1)).labelled_count(), Integer(240));
    });
    for_mds([&](Space sp) {
        rec.guarded(to_string(sp), [&] {
            for (int i = -1; i <= 1; ++i) {
                if (sp.s < 1 - i) continue;
                auto o = enumerate_orbit(weyl_seed(sp, i));
                rec.check("closure of (" + std::to_string(i) + ")-seed in " + to_string(sp), o.complete);
            }
        });
    });
}

CurveClass random_curve(std::mt19937_64& rng, Space sp, long range)
{
    std::uniform_int_distribution<long> dist(-range, range);
    std::vector<Integer> m(sp.s);
    for (auto& x : m) x = dist(rng);
    return CurveClass(sp, Integer(dist(rng)), std::move(m));
}

DivisorClass random_divisor(std::mt19937_64& rng, Space sp, long range)
{
    CurveClass c = random_curve(rng, sp, range);
    return DivisorClass(sp, c.d(), c.m());
}

Space random_space(std::mt19937_64& rng, int min_extra = 1)
{
    std::uniform_int_distribution<int> rd(3, 7), sd(0, 5);
    int r = rd(rng);
    return Space(r, r + min_extra + sd(rng));
}

IndexSet random_indices(std::mt19937_64& rng, Space sp)
{
    std::vector<int> all(sp.s);
    for (int i = 0; i < sp.s; ++i) all[i] = i + 1;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(sp.r + 1);
    return IndexSet(sp, all);
}

void invariance(Recorder& rec, unsigned long seed)
{
    std::mt19937_64 rng(seed);
    const int n = 200;
    int involution = 0, pairing = 0, fixed = 0, qform = 0, projection = 0, polarization = 0, anticanonical = 0;
    for (int k = 0; k < n; ++k) {
        Space sp = random_space(rng);
        CurveClass c = random_curve(rng, sp, 40), c2 = random_curve(rng, sp, 40);
        DivisorClass D = random_divisor(rng, sp, 40);
        IndexSet I = random_indices(rng, sp);
        CurveClass pc = cremona_curve(c, I);
        DivisorClass pD = cremona_divisor(D, I);
        involution += cremona_curve(pc, I) == c && cremona_divisor(pD, I) == D;
        pairing += intersect(pD, pc) == intersect(D, c);
        fixed += cremona_divisor(canonical_class(sp), I) == canonical_class(sp) &&
                 cremona_curve(anticanonical_curve_class(sp), I) == anticanonical_curve_class(sp);
        qform += q_curve(pc) == q_curve(c) && q_divisor(pD) == q_divisor(D) &&
                 bilinear_curve(pc, cremona_curve(c2, I)) == bilinear_curve(c, c2);
        polarization += 2 * bilinear_curve(c, c2) == q_curve(c + c2) - q_curve(c) - q_curve(c2);
        anticanonical += -intersect(canonical_class(sp), c) == anticanonical_degree(c);

        // project from point 1, Cremona at the remaining labels of {1..r+1}
        std::vector<int> top(sp.r + 1), rest(sp.r);
        for (int i = 0; i <= sp.r; ++i) top[i] = i + 1;
        for (int i = 0; i < sp.r; ++i) rest[i] = i + 1;
        Space low(sp.r - 1, sp.s - 1);
        projection += project(cremona_curve(c, IndexSet(sp, top)), 1) == cremona_curve(project(c, 1), IndexSet(low, rest));
    }
    auto report = [&](const char* name, int ok) {
        rec.check(name, ok == n, std::to_string(ok) + "/" + std::to_string(n));
    };
    report("cremona involution", involution);
    report("pairing invariance", pairing);
    report("K and F fixed", fixed);
    report("q-form invariance", qform);
    report("projection commutes with cremona", projection);
    report("polarization", polarization);
    report("-K.c = <c,F>", anticanonical);
}

} // namespace

FixtureSummary run_fixtures(const std::string& suite, unsigned long seed)
{
    Recorder rec(suite);
    if (suite == "paper-numbers")
        paper_numbers(rec);
    else if (suite == "orbit-counts")
        orbit_counts(rec);
    else if (suite == "invariance")
        invariance(rec, seed);
    else
        throw ArgumentError("unknown fixture suite \"" + suite + "\" (paper-numbers, orbit-counts, invariance)");
    return rec.take();
}

} // namespace weylcurves
