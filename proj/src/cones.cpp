#include "weylcurves/cones.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace weylcurves {

std::string FacetId::label() const
{
    switch (type) {
    case A_degree: return "A" + std::to_string(index) + ":d>=m" + std::to_string(index);
    case A_span: return "A" + std::to_string(index) + ":rd>=sum_{j!=" + std::to_string(index) + "}m_j";
    case B: {
        std::string s = "B(t=" + std::to_string(t) + ";I={";
        for (std::size_t k = 0; k < set.size(); ++k) s += (k ? "," : "") + std::to_string(set[k]);
        return s + "})";
    }
    }
    return "?";
}

namespace {

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == k) {
            fn(cur);
            return;
        }
        for (int i = from; i <= n - (k - static_cast<int>(cur.size())) + 1; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(1);
}

void require_cone_range(const Space& sp)
{
    if (sp.s != sp.r + 2 && sp.s != sp.r + 3)
        throw DomainError("effective cone facets are known here only for s = r+2 or r+3, got " + to_string(sp));
}

std::vector<FacetId> facet_ids(const Space& sp)
{
    std::vector<FacetId> ids;
    for (int i = 1; i <= sp.s; ++i) {
        ids.push_back({FacetId::A_degree, i, 0, {}});
        ids.push_back({FacetId::A_span, i, 0, {}});
    }
    if (sp.s == sp.r + 3)
        for (int t : legal_beta_levels(sp))
            for_each_subset(sp.s, sp.r - 2 * t + 1, [&](const std::vector<int>& I) {
                ids.push_back({FacetId::B, 0, t, I});
            });
    return ids;
}

Integer facet_value(const DivisorClass& D, const FacetId& id)
{
    const int r = D.r();
    switch (id.type) {
    case FacetId::A_degree: return D.d() - D.mult(id.index);
    case FacetId::A_span: return r * D.d() - (D.multiplicity_sum() - D.mult(id.index));
    case FacetId::B: {
        Integer v = ((id.t + 1) * r - id.t) * D.d() - id.t * D.multiplicity_sum();
        for (int i : id.set) v -= D.mult(i);
        return v;
    }
    }
    return 0;
}

} // namespace

std::vector<int> legal_beta_levels(Space sp)
{
    std::vector<int> out;
    const int l = sp.r / 2, alpha = sp.r % 2;
    for (int t = -1; t <= l + alpha; ++t) {
        int size = sp.r - 2 * t + 1;
        if (size >= 0 && size <= sp.s) out.push_back(t);
    }
    return out;
}

std::vector<FacetReport> effective_membership(const DivisorClass& D)
{
    require_cone_range(D.space());
    std::vector<FacetReport> out;
    for (auto& id : facet_ids(D.space())) {
        Integer v = facet_value(D, id);
        bool ok = v >= 0;
        out.push_back({std::move(id), std::move(v), ok});
    }
    return out;
}

bool is_effective(const DivisorClass& D)
{
    auto facets = effective_membership(D);
    return std::all_of(facets.begin(), facets.end(), [](const FacetReport& f) { return f.satisfied; });
}

CurveClass beta_class(Space sp, int t, const std::vector<int>& I)
{
    std::vector<Integer> m(sp.s, Integer(t));
    for (int i : I) {
        if (i < 1 || i > sp.s) throw ArgumentError("point index " + std::to_string(i) + " out of range");
        m[i - 1] = t + 1;
    }
    return CurveClass(sp, Integer((t + 1) * sp.r - t), std::move(m));
}

std::vector<Ray> movable_extremal_rays(Space sp)
{
    if (sp.s != sp.r + 3) throw DomainError("movable_extremal_rays needs s = r+3, got " + to_string(sp));
    std::vector<Ray> out;
    for (auto& id : facet_ids(sp)) {
        switch (id.type) {
        case FacetId::A_degree: {
            std::vector<Integer> m(sp.s);
            m[id.index - 1] = 1;
            out.push_back({id, CurveClass(sp, Integer(1), std::move(m))});
            break;
        }
        case FacetId::A_span: {
            std::vector<Integer> m(sp.s, Integer(1));
            m[id.index - 1] = 0;
            out.push_back({id, CurveClass(sp, Integer(sp.r), std::move(m))});
            break;
        }
        case FacetId::B: out.push_back({id, beta_class(sp, id.t, id.set)}); break;
        }
    }
    return out;
}

std::optional<int> beta_level(const CurveClass& c)
{
    if (c.s() != c.r() + 3) return std::nullopt;
    for (int t : legal_beta_levels(c.space())) {
        std::vector<int> I(c.r() - 2 * t + 1);
        std::iota(I.begin(), I.end(), 1);
        if (canonical(c) == beta_class(c.space(), t, I)) return t;
    }
    return std::nullopt;
}

BetaStep cremona_to_beta(Space sp, int t)
{
    if (sp.s != sp.r + 3) throw DomainError("cremona_to_beta needs s = r+3");
    auto levels = legal_beta_levels(sp);
    if (std::find(levels.begin(), levels.end(), t) == levels.end())
        throw ArgumentError("t = " + std::to_string(t) + " is not a legal level for " + to_string(sp));
    std::vector<int> I(sp.r - 2 * t + 1);
    std::iota(I.begin(), I.end(), 1);
    BetaStep step{beta_class(sp, t, I), beta_class(sp, t, I), std::nullopt, false};
    step.image = canonical(cremona_curve(step.beta, lowest_indices(step.beta)));
    step.image_level = beta_level(step.image);
    step.matches_next = step.image_level == t + 1;
    return step;
}

template <Kind K>
std::vector<ClassVector<K>> labellings(const ClassVector<K>& c, std::size_t limit)
{
    std::vector<Integer> m = c.m();
    std::sort(m.begin(), m.end());
    std::vector<ClassVector<K>> out;
    do {
        if (out.size() >= limit) throw DomainError("more than " + std::to_string(limit) + " labellings");
        out.emplace_back(c.space(), c.d(), m);
    } while (std::next_permutation(m.begin(), m.end()));
    return out;
}

template std::vector<CurveClass> labellings(const CurveClass&, std::size_t);
template std::vector<DivisorClass> labellings(const DivisorClass&, std::size_t);

namespace {

constexpr std::size_t kLabelLimit = 2000000;

// realize the rearrangement that pairs the largest entries of D with the largest of c
DivisorClass align_to(const DivisorClass& sorted_desc, const CurveClass& c)
{
    std::vector<int> order(c.s());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return c.m()[a] > c.m()[b]; });
    std::vector<Integer> m(c.s());
    for (int k = 0; k < c.s(); ++k) m[order[k]] = sorted_desc.m()[k];
    return DivisorClass(c.space(), sorted_desc.d(), std::move(m));
}

} // namespace

ZeroDivisorialCheck zero_divisorial_nonneg(const CurveClass& c, const OrbitBound& bound)
{
    ZeroDivisorialCheck out;
    auto orbit = enumerate_orbit(divisorial_seed(c.space(), 0), bound);
    out.orbit_complete = orbit.complete;
    out.shapes = orbit.shape_count();
    for (const auto& D : orbit.representatives) {
        // the least value over all labellings of D (rearrangement inequality)
        DivisorClass aligned = align_to(D, c);
        Integer v = intersect(aligned, c);
        if (!out.minimum || v < *out.minimum) {
            out.minimum = v;
            out.witness = aligned;
        }
    }
    if (out.minimum && *out.minimum < 0)
        out.answer = WeylVerdict::no;
    else
        out.answer = orbit.complete ? WeylVerdict::yes : WeylVerdict::unknown;
    if (out.answer != WeylVerdict::no) out.witness.reset();
    return out;
}

std::vector<CurveClass> minus1_lines(Space sp, const OrbitBound& bound)
{
    std::vector<CurveClass> out;
    if (sp.s < 2) return out;
    auto orbit = enumerate_orbit(weyl_seed(sp, -1), bound);
    for (const auto& c : orbit.representatives)
        if (is_effective_shape(c) || is_exceptional_shape(c))
            for (auto& x : labellings(c, kLabelLimit)) out.push_back(std::move(x));
    return out;
}

OrthogonalityAudit base_locus_orthogonality_audit(const DivisorClass& D, const OrbitBound& bound)
{
    OrthogonalityAudit out;
    const Space sp = D.space();

    if (sp.s >= 2) {
        auto lines = enumerate_orbit(weyl_seed(sp, -1), bound);
        out.curves_complete = lines.complete;
        for (const auto& c : lines.representatives) {
            if (!is_effective_shape(c) && !is_exceptional_shape(c)) continue;
            for (auto& x : labellings(c, kLabelLimit))
                if (intersect(D, x) < 0) out.negative_curves.push_back(std::move(x));
        }
    } else {
        out.curves_complete = true;
    }
    if (sp.s >= 1) {
        auto planes = enumerate_orbit(E(sp, 1), bound);
        out.hyperplanes_complete = planes.complete;
        for (const auto& G : planes.representatives) {
            // effective divisors only: E_i, or positive degree with m >= 0
            bool exceptional = G.d() == 0;
            bool effective = G.d() > 0 && std::all_of(G.m().begin(), G.m().end(), [](const Integer& x) { return x >= 0; });
            if (!exceptional && !effective) continue;
            for (auto& x : labellings(G, kLabelLimit))
                if (bilinear_divisor(D, x) < 0) out.negative_hyperplanes.push_back(std::move(x));
        }
    } else {
        out.hyperplanes_complete = true;
    }

    for (std::size_t a = 0; a < out.negative_curves.size(); ++a)
        for (std::size_t b = 0; b < out.negative_hyperplanes.size(); ++b) {
            Integer v = intersect(out.negative_hyperplanes[b], out.negative_curves[a]);
            // a line lying inside G meets it negatively; only (C.G) >= 1 is excluded
            if (v < 0) ++out.curves_inside_hyperplanes;
            if (v > 0)
                out.violations.push_back("(C.G) = " + v.get_str() + " for C = " + to_string(out.negative_curves[a]) +
                                         ", G = " + to_string(out.negative_hyperplanes[b]));
            out.curve_hyperplane.push_back({a, b, std::move(v)});
        }
    for (std::size_t a = 0; a < out.negative_hyperplanes.size(); ++a)
        for (std::size_t b = a + 1; b < out.negative_hyperplanes.size(); ++b) {
            Integer v = bilinear_divisor(out.negative_hyperplanes[a], out.negative_hyperplanes[b]);
            if (v != 0)
                out.violations.push_back("<G1,G2>_1 = " + v.get_str() + " for " + to_string(out.negative_hyperplanes[a]) +
                                         ", " + to_string(out.negative_hyperplanes[b]));
            out.hyperplane_hyperplane.push_back({a, b, std::move(v)});
        }
    for (std::size_t a = 0; a < out.negative_curves.size(); ++a)
        for (std::size_t b = a + 1; b < out.negative_curves.size(); ++b)
            out.curve_curve.push_back({a, b, bilinear_curve(out.negative_curves[a], out.negative_curves[b])});
    return out;
}

std::vector<mpq_class> coordinates(const CurveClass& c)
{
    std::vector<mpq_class> out{mpq_class(c.d())};
    for (const auto& x : c.m()) out.emplace_back(x);
    return out;
}

std::optional<std::vector<mpq_class>> exact_cone_membership(const std::vector<std::vector<mpq_class>>& generators,
                                                            const std::vector<mpq_class>& target)
{
    const std::size_t m = target.size(), n = generators.size();
    for (const auto& g : generators)
        if (g.size() != m) throw ArgumentError("generator length differs from target length");
    const std::size_t cols = n + m, rhs = n + m;

    // rows scaled so that the right-hand side is non-negative; one artificial per row
    std::vector<std::vector<mpq_class>> T(m, std::vector<mpq_class>(cols + 1));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        int sign = target[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) T[i][j] = sign * generators[j][i];
        T[i][n + i] = 1;
        T[i][rhs] = sign * target[i];
        basis[i] = n + i;
    }
    // w = R[rhs] - sum_j R[j] x_j over non-basic x
    std::vector<mpq_class> R(cols + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) R[j] += T[i][j];
        R[rhs] += T[i][rhs];
    }

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (R[j] > 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = m;
        mpq_class best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            mpq_class ratio = T[i][rhs] / T[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break; // cannot happen: w is bounded below by 0
        mpq_class p = T[leave][enter];
        for (auto& x : T[leave]) x /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            mpq_class f = T[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
        }
        mpq_class f = R[enter];
        for (std::size_t j = 0; j <= cols; ++j) R[j] -= f * T[leave][j];
        basis[leave] = enter;
    }
    if (R[rhs] != 0) return std::nullopt;
    std::vector<mpq_class> lambda(n);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) lambda[basis[i]] = T[i][rhs];
    return lambda;
}

} // namespace weylcurves
