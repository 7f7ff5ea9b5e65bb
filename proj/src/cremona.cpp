#include "weylcurves/cremona.hpp"

#include <algorithm>
#include <numeric>

namespace weylcurves {

IndexSet::IndexSet(Space sp, std::vector<int> indices) : indices_(std::move(indices))
{
    if (indices_.size() != static_cast<std::size_t>(sp.r + 1))
        throw ArgumentError("index set must have r+1 = " + std::to_string(sp.r + 1) + " elements, got " +
                            std::to_string(indices_.size()));
    std::sort(indices_.begin(), indices_.end());
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (indices_[k] < 1 || indices_[k] > sp.s)
            throw ArgumentError("point index " + std::to_string(indices_[k]) + " outside 1.." + std::to_string(sp.s));
        if (k && indices_[k] == indices_[k - 1])
            throw ArgumentError("repeated point index " + std::to_string(indices_[k]));
    }
}

bool IndexSet::contains(int i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

std::string to_string(const IndexSet& I)
{
    std::string out = "{";
    for (std::size_t k = 0; k < I.indices().size(); ++k) out += (k ? "," : "") + std::to_string(I.indices()[k]);
    return out + "}";
}

namespace {

void require_cremona_space(const Space& sp)
{
    if (sp.s < sp.r + 1)
        throw DomainError("Cremona transformation needs s >= r+1 points in " + to_string(sp));
}

void require_index_space(const Space& sp, const IndexSet& I)
{
    if (I.indices().back() > sp.s)
        throw ArgumentError("index set " + to_string(I) + " does not fit " + to_string(sp));
}

} // namespace

CurveClass cremona_curve(const CurveClass& c, const IndexSet& I)
{
    require_cremona_space(c.space());
    require_index_space(c.space(), I);
    Integer t = c.d();
    for (int i : I.indices()) t -= c.mult(i);
    std::vector<Integer> m = c.m();
    for (int i : I.indices()) m[i - 1] += t;
    return CurveClass(c.space(), c.d() + (c.r() - 1) * t, std::move(m));
}

DivisorClass cremona_divisor(const DivisorClass& D, const IndexSet& I)
{
    require_cremona_space(D.space());
    require_index_space(D.space(), I);
    Integer t = (D.r() - 1) * D.d();
    for (int i : I.indices()) t -= D.mult(i);
    std::vector<Integer> m = D.m();
    for (int i : I.indices()) m[i - 1] += t;
    return DivisorClass(D.space(), D.d() + t, std::move(m));
}

CurveClass project(const CurveClass& c, int i)
{
    if (c.r() < 3) throw DomainError("projection needs r >= 3, got " + to_string(c.space()));
    if (i < 1 || i > c.s()) throw ArgumentError("point index " + std::to_string(i) + " outside 1.." + std::to_string(c.s()));
    std::vector<Integer> m;
    m.reserve(c.m().size() - 1);
    for (int k = 1; k <= c.s(); ++k)
        if (k != i) m.push_back(c.mult(k));
    return CurveClass(Space(c.r() - 1, c.s() - 1), c.d() - c.mult(i), std::move(m));
}

bool projection_expectation_screen(const CurveClass& c)
{
    if (c.s() == 0) return false;
    Integer top = *std::max_element(c.m().begin(), c.m().end());
    return c.d() + top <= c.multiplicity_sum() - top;
}

namespace {

// labels ordered by multiplicity (descending or ascending), ties to the lowest label
std::vector<int> ranked_labels(const CurveClass& c, bool descending)
{
    std::vector<int> idx(c.s());
    std::iota(idx.begin(), idx.end(), 1);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return descending ? c.mult(a) > c.mult(b) : c.mult(a) < c.mult(b);
    });
    return idx;
}

IndexSet first_block(const CurveClass& c, bool descending)
{
    require_cremona_space(c.space());
    auto idx = ranked_labels(c, descending);
    idx.resize(c.r() + 1);
    return IndexSet(c.space(), std::move(idx));
}

} // namespace

Integer top_sum(const CurveClass& c)
{
    std::vector<Integer> m = c.m();
    std::sort(m.begin(), m.end(), std::greater<>());
    Integer t = 0;
    for (std::size_t k = 0; k < m.size() && k < static_cast<std::size_t>(c.r() + 1); ++k) t += m[k];
    return t;
}

IndexSet largest_indices(const CurveClass& c) { return first_block(c, true); }
IndexSet lowest_indices(const CurveClass& c) { return first_block(c, false); }

bool is_cremona_reduced(const CurveClass& c)
{
    if (c.d() < 2) return true;
    if (c.s() < c.r() + 1) return true;
    return c.d() >= top_sum(c);
}

CurveClass ReductionTrace::replay() const
{
    CurveClass x = start;
    for (const auto& I : steps) x = cremona_curve(x, I);
    return x;
}

std::vector<CurveClass> ReductionTrace::path() const
{
    std::vector<CurveClass> out{start};
    for (const auto& I : steps) out.push_back(cremona_curve(out.back(), I));
    return out;
}

ReductionTrace cremona_reduce(const CurveClass& c)
{
    ReductionTrace tr{c, {}, c, std::nullopt};
    // each step lowers the degree, so this stops once d <= 1
    while (!is_cremona_reduced(tr.end)) {
        IndexSet I = largest_indices(tr.end);
        tr.end = cremona_curve(tr.end, I);
        tr.steps.push_back(std::move(I));
        if (!tr.first_screen_failure && !irreducibility_screen(tr.end).empty())
            tr.first_screen_failure = tr.steps.size() - 1;
        if (tr.end.d() <= 0) break;
    }
    return tr;
}

Descent chamber_descent(const CurveClass& c, std::size_t max_steps)
{
    Descent out{ReductionTrace{c, {}, c, std::nullopt}, false};
    if (c.s() < c.r() + 1) {
        out.reached_chamber = true;
        return out;
    }
    auto& tr = out.trace;
    while (tr.end.d() < top_sum(tr.end)) {
        if (tr.steps.size() >= max_steps) return out;
        IndexSet I = largest_indices(tr.end);
        tr.end = cremona_curve(tr.end, I);
        tr.steps.push_back(std::move(I));
    }
    out.reached_chamber = true;
    return out;
}

std::vector<ScreenViolation> irreducibility_screen(const CurveClass& c)
{
    std::vector<ScreenViolation> out;
    const auto& d = c.d();
    for (int i = 1; i <= c.s(); ++i) {
        if (c.mult(i) < 0)
            out.push_back({'a', {i}, "negative multiplicity m_" + std::to_string(i)});
        else if (c.mult(i) > d)
            out.push_back({'a', {i}, "m_" + std::to_string(i) + " exceeds the degree"});
    }
    if (d >= 2) {
        for (int i = 1; i <= c.s(); ++i)
            for (int j = i + 1; j <= c.s(); ++j)
                if (c.mult(i) + c.mult(j) > d)
                    out.push_back({'b', {i, j},
                                   "d < m_" + std::to_string(i) + " + m_" + std::to_string(j) + " (" + d.get_str() +
                                       " < " + Integer(c.mult(i) + c.mult(j)).get_str() + ")"});
    }
    auto order = ranked_labels(c, true);
    Integer partial = 0;
    for (int k = 1; k <= c.r() && k <= c.s(); ++k) {
        partial += c.mult(order[k - 1]);
        if (d < partial) {
            std::vector<int> bad;
            for (int q = k; q < c.s(); ++q)
                if (c.mult(order[q]) != 0) bad.push_back(order[q]);
            if (!bad.empty()) {
                out.push_back({'c', bad,
                               "d < sum of the " + std::to_string(k) +
                                   " largest multiplicities but further points carry multiplicity"});
                break;
            }
        }
    }
    return out;
}

} // namespace weylcurves
