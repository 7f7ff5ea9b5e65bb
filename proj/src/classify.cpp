#include "weylcurves/classify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace weylcurves {

std::optional<int> numerical_type(const CurveClass& c)
{
    const Integer p = anticanonical_degree(c);
    for (int i = -1; i <= 1; ++i)
        if (p == 2 + i * (c.r() - 1)) return i;
    return std::nullopt;
}

std::optional<int> quadratic_signature(const CurveClass& c)
{
    const Integer q = q_curve(c);
    for (int i = -1; i <= 1; ++i)
        if (q == 1 + (i - 1) * (c.r() - 1)) return i;
    return std::nullopt;
}

std::string to_string(WeylVerdict::Answer a)
{
    switch (a) {
    case WeylVerdict::yes: return "yes";
    case WeylVerdict::no: return "no";
    case WeylVerdict::unknown: return "unknown";
    }
    return "?";
}

namespace {

constexpr std::size_t kDescentSteps = 10000;

WeylVerdict verdict(WeylVerdict::Answer a, std::string reason, std::optional<ReductionTrace> trace = std::nullopt)
{
    WeylVerdict v;
    v.answer = a;
    v.reason = std::move(reason);
    if (trace) v.witness = trace->end;
    v.trace = std::move(trace);
    return v;
}

WeylVerdict decide_weyl_class(const CurveClass& c, int i, const OrbitBound& bound)
{
    const Space sp = c.space();
    if (sp.s < 1 - i) return verdict(WeylVerdict::no, "the space has fewer than " + std::to_string(1 - i) + " points");
    const CurveClass seed = weyl_seed(sp, i);
    const CurveClass seed_key = canonical(seed);

    // <c,F> and <c,c> are Weyl invariants
    if (anticanonical_degree(c) != anticanonical_degree(seed))
        return verdict(WeylVerdict::no, "<c,F> differs from the seed's", cremona_reduce(c));
    if (q_curve(c) != q_curve(seed))
        return verdict(WeylVerdict::no, "<c,c> differs from the seed's", cremona_reduce(c));

    ReductionTrace greedy = cremona_reduce(c);
    if (canonical(greedy.end) == seed_key)
        return verdict(WeylVerdict::yes, "greedy reduction reaches the seed up to relabelling", greedy);
    if (sp.s < sp.r + 1) return verdict(WeylVerdict::no, "no Cremona step exists; the classes differ by more than a permutation", greedy);

    // Each Weyl orbit meets the closed fundamental chamber (sorted, d >= top sum)
    // at most once, and greedy descent never raises the degree.
    Descent from_c = chamber_descent(c, kDescentSteps);
    Descent from_seed = chamber_descent(seed, kDescentSteps);
    if (from_c.reached_chamber && from_seed.reached_chamber) {
        if (canonical(from_c.trace.end) == canonical(from_seed.trace.end))
            return verdict(WeylVerdict::yes, "c and the seed descend to the same chamber point", from_c.trace);
        return verdict(WeylVerdict::no, "c and the seed descend to different chamber points", from_c.trace);
    }
    if (from_c.reached_chamber && from_c.trace.end.d() > seed.d())
        return verdict(WeylVerdict::no,
                       "c descends to a chamber point of degree " + from_c.trace.end.d().get_str() +
                           ", above the seed's degree",
                       from_c.trace);

    auto orbit_c = enumerate_orbit(c, bound);
    if (orbit_c.contains(seed)) return verdict(WeylVerdict::yes, "the bounded orbit of c contains the seed", greedy);
    if (orbit_c.complete) return verdict(WeylVerdict::no, "the orbit of c is finite and misses the seed", greedy);
    auto orbit_seed = enumerate_orbit(seed, bound);
    if (orbit_seed.contains(c)) return verdict(WeylVerdict::yes, "the bounded orbit of the seed contains c", greedy);
    if (orbit_seed.complete) return verdict(WeylVerdict::no, "the seed orbit is finite and misses c", greedy);
    return verdict(WeylVerdict::unknown, "bounded orbits from both ends did not meet", greedy);
}

} // namespace

WeylVerdict is_weyl_class(const CurveClass& c, int i, const OrbitBound& bound)
{
    if (i < -1 || i > 1) throw ArgumentError("Weyl class type must be -1, 0 or 1");
    WeylVerdict v = decide_weyl_class(c, i, bound);
    if (v.answer != WeylVerdict::unknown && is_weyl_finite(c.space()) && c.s() >= 1 - i) {
        auto orbit = enumerate_orbit(weyl_seed(c.space(), i), OrbitBound::defaults());
        if (orbit.complete && orbit.contains(c) != (v.answer == WeylVerdict::yes))
            throw std::logic_error("Weyl class verdict disagrees with the finite orbit for " + to_string(c));
    }
    return v;
}

std::vector<CurveClass> scan_classes(Space sp, long d_min, long d_max, const Integer& pairing_F, const Integer& self)
{
    std::vector<CurveClass> out;
    const long r1 = sp.r - 1;
    std::vector<long> cur;
    for (long d = std::max(1L, d_min); d <= d_max; ++d) {
        // (r-1) sum m = (r+1) d - <c,F>,  (r-1) sum m^2 = d^2 - <c,c>
        Integer a = Integer(sp.r + 1) * d - pairing_F;
        Integer b = Integer(d) * d - self;
        if (a < 0 || b < 0 || a % r1 != 0 || b % r1 != 0) continue;
        if (!a.fits_slong_p() || !b.fits_slong_p()) throw DomainError("scan parameters too large");
        const long N1 = Integer(a / r1).get_si();
        const long N2 = Integer(b / r1).get_si();
        cur.assign(sp.s, 0);
        std::function<void(int, long, long, long)> place = [&](int slot, long cap, long R1, long R2) {
            if (R1 == 0 || R2 == 0) {
                if (R1 != 0 || R2 != 0) return;
                std::vector<Integer> m;
                for (long x : cur) m.emplace_back(x);
                out.emplace_back(sp, Integer(d), std::move(m));
                return;
            }
            const long k = sp.s - slot;
            if (k == 0) return;
            if (R1 > k * cap) return;
            if (static_cast<__int128>(R1) * R1 > static_cast<__int128>(k) * R2) return;
            if (static_cast<__int128>(R2) > static_cast<__int128>(R1) * cap) return;
            long top = std::min(cap, R1);
            while (top > 0 && top * top > R2) --top;
            for (long v = top; v >= 1; --v) {
                cur[slot] = v;
                place(slot + 1, v, R1 - v, R2 - v * v);
                cur[slot] = 0;
            }
        };
        if (N1 == 0 && N2 == 0) {
            out.emplace_back(sp, Integer(d), std::vector<Integer>(sp.s));
            continue;
        }
        place(0, N1, N1, N2);
    }
    return out;
}

std::optional<long> minus1_degree_bound(Space sp)
{
    const long r = sp.r, s = sp.s;
    // f(d) = s(r-1)(d^2 + 2r - 3) - ((r+1)d + r - 3)^2 must be >= 0
    auto f = [&](long d) -> Integer {
        Integer u = Integer(r + 1) * d + (r - 3);
        return Integer(s * (r - 1)) * (Integer(d) * d + 2 * r - 3) - u * u;
    };
    const long A = s * (r - 1) - (r + 1) * (r + 1);
    const long B = -2 * (r + 1) * (r - 3);
    if (A > 0 || (A == 0 && B >= 0)) return std::nullopt;
    long last = 0;
    for (long d = 1;; ++d) {
        if (f(d) >= 0) last = d;
        else if (A * (2 * d + 1) + B < 0) break;
    }
    return last;
}

Minus1Solutions mds_minus1_solutions(Space sp)
{
    if (!is_weyl_finite(sp) && !(sp.r == 5 && sp.s == 9))
        throw DomainError(to_string(sp) + " is neither a Mori dream space nor Y^5_9");
    Minus1Solutions out;
    auto bound = minus1_degree_bound(sp);
    if (!bound) throw std::logic_error("no degree bound for " + to_string(sp));
    out.degree_bound = *bound;
    out.classes = scan_classes(sp, 1, *bound, Integer(3 - sp.r), Integer(3 - 2 * sp.r));

    std::vector<CurveClass> expected;
    if (sp.s >= 2) expected.push_back(canonical(line_through(sp, 1, 2)));
    if (sp.s >= sp.r + 3) {
        std::vector<Integer> m(sp.s);
        for (int k = 0; k < sp.r + 3; ++k) m[k] = 1;
        expected.emplace_back(sp, Integer(sp.r), std::move(m));
    }
    out.line_and_rnc_only = out.classes == expected;
    return out;
}

OneClassResult one_class_decomposition(const CurveClass& c)
{
    const int r = c.r();
    if (c.s() != r + 3) throw DomainError("one_class_decomposition needs s = r+3, got " + to_string(c.space()));
    if (numerical_type(c) != 1) throw DomainError("not a numerical (1)-class: " + to_string(c));
    for (const auto& x : c.m())
        if (x < 0) throw DomainError("one_class_decomposition needs non-negative multiplicities");

    WeylVerdict v = is_weyl_class(c, 1);
    if (v.answer == WeylVerdict::yes) return WeylLine{v};

    const CurveClass reduced = canonical(cremona_reduce(c).end);
    if (r % 2 == 0)
        return NoDecomposition{reduced, "r is even and c is not a (1)-Weyl class"};
    const CurveClass F = anticanonical_curve_class(c.space());
    for (long m = 0; m <= (r + 1) / 4; ++m) {
        CurveClass rest = reduced - Integer(m) * F;
        bool ok = rest.d() == Integer((r + 1) / 2 - 2 * m) && rest.d() == rest.multiplicity_sum();
        for (int i = 1; ok && i <= c.s(); ++i) {
            if (rest.mult(i) < 0) ok = false;
            if (i >= r - 1 && rest.mult(i) != 0) ok = false;
        }
        if (ok) {
            if (!(Integer(m) * F + rest == reduced)) throw std::logic_error("decomposition does not reconstruct");
            return Decomposition{m, reduced, rest};
        }
    }
    return NoDecomposition{reduced, "the reduced class is neither a (1)-Weyl line nor of the form mF + c'"};
}

Integer vdim(const CurveClass& c)
{
    return (c.r() + 1) * (c.d() + 1) - (c.r() - 1) * c.multiplicity_sum() - 4;
}

Integer chi_normal(const CurveClass& c, long genus)
{
    if (genus < 0) throw DomainError("genus must be non-negative");
    return Integer(c.r() - 3) * (1 - genus) + anticanonical_degree(c);
}

PlanarReport planar_classify(const CurveClass& c)
{
    if (c.r() != 2) throw DomainError("planar_classify needs r = 2, got " + to_string(c.space()));
    PlanarReport rep;
    rep.self_intersection = q_curve(c);
    rep.canonical_degree = -anticanonical_degree(c);
    // both numerators are even for integral classes
    rep.arithmetic_genus = (2 + rep.self_intersection + rep.canonical_degree) / 2;
    // Riemann-Roch; without the leading 1 the four conditions would not be pairwise equivalent
    rep.euler_characteristic = 1 + (rep.self_intersection - rep.canonical_degree) / 2;
    for (int i = -1; i <= 1; ++i) {
        PlanarConditions pc;
        pc.i = i;
        pc.arithmetic_genus_zero = rep.arithmetic_genus == 0;
        pc.euler_characteristic = rep.euler_characteristic == 2 + i;
        pc.self_intersection = rep.self_intersection == i;
        pc.canonical_degree = rep.canonical_degree == -2 - i;
        rep.conditions.push_back(pc);
        if (pc.self_intersection && pc.canonical_degree) rep.curve_class_type = i;
    }
    rep.numerical_type = numerical_type(c);
    rep.below_nine_points = c.s() <= 8;
    if (!rep.below_nine_points) rep.curve_class_type.reset();
    rep.screens = irreducibility_screen(c);

    const CurveClass key = canonical(c);
    const Space sp = c.space();
    const CurveClass F = anticanonical_curve_class(sp);
    if (sp.s == 8 && key == F)
        rep.known_exception = "-K of Y^2_8: irreducible numerical (-1)-class that is not a (-1)-curve";
    else if (sp.s == 7 && key == F)
        rep.known_exception = "F of Y^2_7: irreducible numerical (0)-class that is not a (0)-curve";
    else if (sp.s == 8 && key == Integer(2) * F)
        rep.known_exception = "2F of Y^2_8: irreducible numerical (0)-class that is not a (0)-curve";
    return rep;
}

std::optional<int> divisorial_numerical_type(const DivisorClass& D)
{
    const Integer self = q_divisor(D);
    // <D,-K>_1 = (r-1)((r+1)d - sum m)
    const Integer ratio = (D.r() + 1) * D.d() - D.multiplicity_sum();
    for (int i = -1; i <= 1; ++i)
        if (self == i && ratio == 2 + i) return i;
    return std::nullopt;
}

CrnumBound lemma_crnum_bound(const CurveClass& c, int j)
{
    const int r = c.r();
    if (c.d() <= 0) throw DomainError("lemma_crnum_bound needs positive degree");
    if (!std::is_sorted(c.m().begin(), c.m().end(), std::greater<>()))
        throw DomainError("lemma_crnum_bound needs multiplicities sorted descending");
    for (const auto& x : c.m())
        if (x < 0) throw DomainError("lemma_crnum_bound needs non-negative multiplicities");
    if (c.d() < top_sum(c)) throw DomainError("lemma_crnum_bound needs a Cremona reduced class");
    if (numerical_type(c) != j) throw DomainError("class is not a numerical (" + std::to_string(j) + ")-class");
    CrnumBound out;
    Integer head = 0, tail = 0;
    for (int i = 1; i <= c.s(); ++i) (i <= r + 1 ? head : tail) += c.mult(i);
    out.lhs = (r - 1) * tail;
    out.rhs = -2 - j * (r - 1) + 2 * head;
    out.holds = out.lhs >= out.rhs;
    return out;
}

ClassificationReport classify(const CurveClass& c, std::optional<int> type, const OrbitBound& bound)
{
    ClassificationReport rep{c, anticanonical_degree(c), q_curve(c), numerical_type(c), quadratic_signature(c), type,
                             {}, irreducibility_screen(c), is_cremona_reduced(c), std::nullopt, vdim(c), "", std::nullopt,
                             {}};
    if (!rep.queried_type) rep.queried_type = rep.numerical_type;
    if (rep.queried_type) {
        rep.weyl_class = is_weyl_class(c, *rep.queried_type, bound);
    } else {
        rep.weyl_class.answer = WeylVerdict::no;
        rep.weyl_class.reason = "not a numerical (i)-class for any i in {-1,0,1}";
    }
    bool nonnegative = std::all_of(c.m().begin(), c.m().end(), [](const Integer& x) { return x >= 0; });
    if (nonnegative) rep.projection_screen = projection_expectation_screen(c);
    if (rep.virtual_dimension == 0)
        rep.rigidity = "expected rigid";
    else if (rep.virtual_dimension > 0)
        rep.rigidity = "expected to move in a family of dimension " + rep.virtual_dimension.get_str();
    else
        rep.rigidity = "negative virtual dimension";
    if (c.s() == c.r() + 3 && rep.numerical_type == 1 && nonnegative) rep.decomposition = one_class_decomposition(c);
    rep.notes.push_back("verdicts are about classes; statements about curves are conditional on irreducibility");
    return rep;
}

} // namespace weylcurves
