#include "weylcurves/dimension.hpp"

#include <algorithm>
#include <tuple>

#include "weylcurves/classify.hpp"
#include "weylcurves/errors.hpp"
#include "weylcurves/orbits.hpp"

namespace weylcurves {

Integer binom(const Integer& n, const Integer& k)
{
    if (k < 0 || n < k) return 0;
    if (!k.fits_ulong_p()) throw DomainError("binomial argument too large: " + k.get_str());
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return out;
}

Integer naive_chi(const DivisorClass& D)
{
    const Integer r = D.r();
    Integer out = binom(D.d() + r, r);
    for (int i = 1; i <= D.s(); ++i) {
        if (D.mult(i) < 0) throw DomainError("naive_chi needs non-negative multiplicities, m" + std::to_string(i) + " = " + D.mult(i).get_str());
        out -= binom(D.mult(i) + r - 1, r);
    }
    return out;
}

Integer containment_multiplicity(const DivisorClass& D, const CurveClass& C)
{
    Integer k = -intersect(D, C);
    return k > 0 ? k : Integer(0);
}

namespace {

bool class_less(const CurveClass& a, const CurveClass& b)
{
    if (a.d() != b.d()) return a.d() < b.d();
    return std::lexicographical_compare(a.m().begin(), a.m().end(), b.m().begin(), b.m().end(),
                                        [](const Integer& x, const Integer& y) { return x > y; });
}

} // namespace

CorrectionLedger corrected_dimension(const DivisorClass& D, const std::vector<CurveClass>& curves,
                                     std::optional<Integer> ldim)
{
    CorrectionLedger out;
    out.base = naive_chi(D);
    std::vector<CurveClass> sorted = curves;
    std::sort(sorted.begin(), sorted.end(), class_less);
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw ArgumentError("curve " + to_string(sorted[i]) + " listed twice");
    out.total = out.base;
    const Integer r = D.r();
    for (auto& c : sorted) {
        Integer k = containment_multiplicity(D, c);
        if (k < 1) continue;
        Integer contribution = binom(r + k - 2, r);
        out.total += contribution;
        out.entries.push_back({std::move(c), std::move(k), std::move(contribution)});
    }
    if (ldim) {
        out.ldim = ldim;
        Integer sum = *ldim;
        for (const auto& e : out.entries) sum += e.contribution;
        out.total_with_ldim = sum;
    }
    if (!auto_curves_are_complete(D.space()))
        out.notes.push_back("curve list is not known to exhaust the (-1)-curves of " + to_string(D.space()));
    return out;
}

bool auto_curves_are_complete(Space sp)
{
    return is_weyl_finite(sp) || (sp.r == 5 && sp.s == 9);
}

std::vector<CurveClass> auto_curves(Space sp)
{
    std::vector<CurveClass> out;
    for (int i = 1; i <= sp.s; ++i)
        for (int j = i + 1; j <= sp.s; ++j) out.push_back(line_through(sp, i, j));
    const int n = sp.r + 3;
    if (sp.s >= n) {
        std::vector<bool> pick(sp.s, false);
        std::fill(pick.begin(), pick.begin() + n, true);
        do {
            std::vector<Integer> m(sp.s);
            for (int i = 0; i < sp.s; ++i) m[i] = pick[i] ? 1 : 0;
            out.emplace_back(sp, Integer(sp.r), std::move(m));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

std::vector<Integer> RestrictionChain::values() const
{
    std::vector<Integer> out{start};
    for (const auto& s : steps) out.push_back(s.value);
    return out;
}

RestrictionChain restriction_chain_fixture()
{
    // strict transform of 6H - 4(E_1..E_7) - 2E_8 - 2E_9 after removing the 21 lines
    RestrictionChain chain;
    chain.start = binom(11, 5) - 7 * binom(8, 5) - 2 * binom(6, 5) + binom(7, 2);

    // restrictions are hypersurfaces in an exceptional P^4
    const std::vector<std::tuple<std::string, Integer>> restrictions{
        {"F1 = F0~ - E8, quadric on E8", binom(6, 4)},
        {"F2 = F1~ - E8, cubic through 8 points on E8", binom(7, 4) - 8},
        {"F3 = F2~ - E9, quadric on E9", binom(6, 4)},
        {"F4 = F3~ - E9, cubic through 16 points on E9", binom(7, 4) - 16},
    };
    Integer value = chain.start;
    for (const auto& [label, rest] : restrictions) {
        value -= rest;
        chain.steps.push_back({label, rest, value});
    }
    return chain;
}

} // namespace weylcurves
