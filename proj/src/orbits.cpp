#include "weylcurves/orbits.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <thread>
#include <unordered_set>

namespace weylcurves {

bool is_weyl_finite(Space sp) { return F_squared(sp) > 0; }

CurveClass weyl_seed(Space sp, int i)
{
    if (i < -1 || i > 1) throw ArgumentError("Weyl line type must be -1, 0 or 1");
    int through = 1 - i;
    if (sp.s < through) throw DomainError("a line through " + std::to_string(through) + " points needs s >= " + std::to_string(through));
    std::vector<Integer> m(sp.s);
    for (int k = 0; k < through; ++k) m[k] = 1;
    return CurveClass(sp, Integer(1), std::move(m));
}

DivisorClass divisorial_seed(Space sp, int i)
{
    if (i < -1 || i > 1) throw ArgumentError("Weyl hyperplane type must be -1, 0 or 1");
    int through = sp.r - 1 - i;
    if (through < 0 || sp.s < through)
        throw DomainError("a hyperplane through " + std::to_string(through) + " points does not fit " + to_string(sp));
    std::vector<Integer> m(sp.s);
    for (int k = 0; k < through; ++k) m[k] = 1;
    return DivisorClass(sp, Integer(1), std::move(m));
}

template <Kind K>
ClassVector<K> canonical(const ClassVector<K>& c)
{
    std::vector<Integer> m = c.m();
    std::sort(m.begin(), m.end(), std::greater<>());
    return ClassVector<K>(c.space(), c.d(), std::move(m));
}

template <Kind K>
bool is_canonical(const ClassVector<K>& c)
{
    return std::is_sorted(c.m().begin(), c.m().end(), std::greater<>());
}

template <Kind K>
Integer labelled_multiplicity(const ClassVector<K>& c)
{
    std::map<Integer, unsigned long, std::less<>> counts;
    for (const auto& x : c.m()) ++counts[x];
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(c.s()));
    for (const auto& [v, k] : counts) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), k);
        out /= f;
    }
    return out;
}

template ClassVector<Kind::curve> canonical(const ClassVector<Kind::curve>&);
template ClassVector<Kind::divisor> canonical(const ClassVector<Kind::divisor>&);
template bool is_canonical(const ClassVector<Kind::curve>&);
template bool is_canonical(const ClassVector<Kind::divisor>&);
template Integer labelled_multiplicity(const ClassVector<Kind::curve>&);
template Integer labelled_multiplicity(const ClassVector<Kind::divisor>&);

template <Kind K>
Integer OrbitResult<K>::labelled_count() const
{
    Integer t = 0;
    for (const auto& c : representatives) t += labelled_multiplicity(c);
    return t;
}

template <Kind K>
bool OrbitResult<K>::contains(const ClassVector<K>& c) const
{
    auto key = canonical(c);
    return std::find(representatives.begin(), representatives.end(), key) != representatives.end();
}

template struct OrbitResult<Kind::curve>;
template struct OrbitResult<Kind::divisor>;

unsigned worker_threads()
{
    if (const char* env = std::getenv("WEYLCURVES_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace {

// State layout: x[0] = d, x[1..s] = multiplicities sorted non-increasing.
template <class T>
struct StateHash {
    std::size_t operator()(const std::vector<T>& x) const
    {
        std::size_t h = x.size();
        for (const auto& v : x) {
            std::size_t u;
            if constexpr (std::is_same_v<T, Integer>)
                u = mpz_fdiv_ui(v.get_mpz_t(), 4294967291UL) * 2 + (sgn(v) < 0);
            else
                u = static_cast<std::size_t>(v);
            h ^= u + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

template <class T>
T absval(const T& x)
{
    if constexpr (std::is_same_v<T, Integer>)
        return abs(x);
    else
        return x < 0 ? -x : x;
}

template <class T>
struct Engine {
    int r;
    int s;
    Kind kind;
    OrbitMode mode;

    // apply the Cremona at the given positions of the canonical state
    void apply(const std::vector<T>& x, const std::vector<int>& pos, std::vector<std::vector<T>>& out) const
    {
        T sel = 0;
        for (int p : pos) sel += x[p + 1];
        T t = kind == Kind::curve ? T(x[0] - sel) : T((r - 1) * x[0] - sel);
        if (t == 0) return;
        std::vector<T> y = x;
        y[0] = kind == Kind::curve ? T(x[0] + (r - 1) * t) : T(x[0] + t);
        for (int p : pos) y[p + 1] += t;
        std::sort(y.begin() + 1, y.end(), std::greater<T>());
        out.push_back(std::move(y));
    }

    void successors(const std::vector<T>& x, std::vector<std::vector<T>>& out) const
    {
        const int k = r + 1;
        std::vector<int> pos;
        switch (mode) {
        case OrbitMode::extremal:
            for (int p = 0; p < k; ++p) pos.push_back(p);
            apply(x, pos, out);
            return;
        case OrbitMode::full_subsets:
            subsets(x, 0, k, pos, out);
            return;
        case OrbitMode::multiset: {
            // groups of equal values; choose how many from each group
            std::vector<std::pair<int, int>> groups; // (first position, size)
            for (int p = 0; p < s;) {
                int q = p;
                while (q < s && x[q + 1] == x[p + 1]) ++q;
                groups.emplace_back(p, q - p);
                p = q;
            }
            choose(x, groups, 0, k, pos, out);
            return;
        }
        }
    }

    void subsets(const std::vector<T>& x, int from, int left, std::vector<int>& pos,
                 std::vector<std::vector<T>>& out) const
    {
        if (left == 0) {
            apply(x, pos, out);
            return;
        }
        for (int p = from; p <= s - left; ++p) {
            pos.push_back(p);
            subsets(x, p + 1, left - 1, pos, out);
            pos.pop_back();
        }
    }

    void choose(const std::vector<T>& x, const std::vector<std::pair<int, int>>& groups, std::size_t g, int left,
                std::vector<int>& pos, std::vector<std::vector<T>>& out) const
    {
        if (left == 0) {
            apply(x, pos, out);
            return;
        }
        if (g == groups.size()) return;
        int remaining = 0;
        for (std::size_t h = g + 1; h < groups.size(); ++h) remaining += groups[h].second;
        auto [first, size] = groups[g];
        for (int take = std::min(size, left); take >= 0; --take) {
            if (left - take > remaining) break;
            for (int q = 0; q < take; ++q) pos.push_back(first + q);
            choose(x, groups, g + 1, left - take, pos, out);
            pos.resize(pos.size() - take);
        }
    }
};

template <class T>
struct BfsOutcome {
    std::vector<std::vector<T>> states;
    std::optional<BoundHit> hit;
};

template <class T>
BfsOutcome<T> bfs(const Engine<T>& eng, std::vector<T> seed, const std::optional<T>& max_degree,
                  const std::optional<std::size_t>& max_count)
{
    std::unordered_set<std::vector<T>, StateHash<T>> seen;
    std::vector<const std::vector<T>*> order;
    BfsOutcome<T> result;

    auto finish = [&]() {
        result.states.reserve(order.size());
        for (auto* p : order) result.states.push_back(*p);
        return result;
    };

    std::vector<const std::vector<T>*> frontier{&*seen.insert(std::move(seed)).first};
    order.push_back(frontier.front());
    if (max_degree && absval((*frontier.front())[0]) > *max_degree) {
        result.hit = BoundHit{BoundHit::degree, "seed degree exceeds the degree bound"};
        return finish();
    }

    const unsigned threads = worker_threads();
    // blocks of the frontier are expanded and merged in order, so a bound is
    // noticed without expanding the whole layer
    const std::size_t block = 4096;
    while (!frontier.empty()) {
        std::vector<const std::vector<T>*> next;
        for (std::size_t base = 0; base < frontier.size(); base += block) {
            const std::size_t len = std::min(block, frontier.size() - base);
            std::vector<std::vector<std::vector<T>>> produced(len);
            auto work = [&](std::size_t lo, std::size_t hi) {
                for (std::size_t k = lo; k < hi; ++k) eng.successors(*frontier[base + k], produced[k]);
            };
            std::size_t n_threads = std::min<std::size_t>(threads, 1 + len / 256);
            if (n_threads <= 1) {
                work(0, len);
            } else {
                std::vector<std::thread> pool;
                std::size_t chunk = (len + n_threads - 1) / n_threads;
                for (std::size_t lo = 0; lo < len; lo += chunk) pool.emplace_back(work, lo, std::min(len, lo + chunk));
                for (auto& th : pool) th.join();
            }

            for (auto& batch : produced) {
                for (auto& y : batch) {
                    if (seen.count(y)) continue;
                    if (max_degree && absval(y[0]) > *max_degree) {
                        result.hit = BoundHit{BoundHit::degree, "degree bound exceeded"};
                        return finish();
                    }
                    if (max_count && order.size() >= *max_count) {
                        result.hit = BoundHit{BoundHit::count, "representative count bound reached"};
                        return finish();
                    }
                    auto* p = &*seen.insert(std::move(y)).first;
                    order.push_back(p);
                    next.push_back(p);
                }
            }
        }
        frontier = std::move(next);
    }
    return finish();
}

// int64 is safe when the degree bound and the invariant form keep every entry,
// and every intermediate of one Cremona step, far below 2^62
template <Kind K>
bool fits_machine_words(const ClassVector<K>& seed, const OrbitBound& bound)
{
    if (!bound.max_degree) return false;
    Integer q = q_form(seed);
    Integer root;
    mpz_sqrt(root.get_mpz_t(), Integer(abs(q)).get_mpz_t());
    const int r = seed.r();
    Integer M = r * *bound.max_degree + root + 1;
    Integer limit = Integer(1) << 62;
    if ((r + 2) * (r + 2) * M >= limit) return false;
    if (abs(seed.d()) > M) return false;
    for (const auto& x : seed.m())
        if (abs(x) > M) return false;
    return true;
}

template <Kind K, class T>
OrbitResult<K> run_bfs(const ClassVector<K>& seed, const OrbitBound& bound, OrbitMode mode)
{
    auto to_t = [](const Integer& x) {
        if constexpr (std::is_same_v<T, Integer>)
            return x;
        else
            return static_cast<T>(x.get_si());
    };
    auto from_t = [](const T& x) {
        if constexpr (std::is_same_v<T, Integer>)
            return x;
        else
            return Integer(static_cast<long>(x));
    };

    ClassVector<K> c = canonical(seed);
    std::vector<T> start;
    start.push_back(to_t(c.d()));
    for (const auto& x : c.m()) start.push_back(to_t(x));
    std::optional<T> maxdeg;
    if (bound.max_degree) {
        if constexpr (std::is_same_v<T, Integer>)
            maxdeg = *bound.max_degree;
        else
            maxdeg = to_t(*bound.max_degree);
    }

    Engine<T> eng{seed.r(), seed.s(), K, mode};
    auto outcome = bfs(eng, std::move(start), maxdeg, bound.max_count);

    OrbitResult<K> res;
    res.bound_hit = outcome.hit;
    res.complete = !outcome.hit;
    res.representatives.reserve(outcome.states.size());
    for (const auto& x : outcome.states) {
        std::vector<Integer> m;
        m.reserve(x.size() - 1);
        for (std::size_t k = 1; k < x.size(); ++k) m.push_back(from_t(x[k]));
        res.representatives.emplace_back(seed.space(), from_t(x[0]), std::move(m));
    }
    std::sort(res.representatives.begin(), res.representatives.end(), [](const auto& a, const auto& b) {
        if (a.d() != b.d()) return a.d() < b.d();
        return a.m() < b.m();
    });
    return res;
}

} // namespace

template <Kind K>
OrbitResult<K> enumerate_orbit(const ClassVector<K>& seed, const OrbitBound& bound, OrbitMode mode)
{
    if (seed.s() < seed.r() + 1) {
        OrbitResult<K> res;
        res.representatives.push_back(canonical(seed));
        res.complete = true;
        return res;
    }
    if (fits_machine_words(seed, bound)) return run_bfs<K, std::int64_t>(seed, bound, mode);
    return run_bfs<K, Integer>(seed, bound, mode);
}

template OrbitResult<Kind::curve> enumerate_orbit(const CurveClass&, const OrbitBound&, OrbitMode);
template OrbitResult<Kind::divisor> enumerate_orbit(const DivisorClass&, const OrbitBound&, OrbitMode);

bool is_effective_shape(const CurveClass& c)
{
    if (c.d() <= 0) return false;
    return std::all_of(c.m().begin(), c.m().end(), [](const Integer& x) { return x >= 0; });
}

bool is_exceptional_shape(const CurveClass& c)
{
    if (c.d() != 0) return false;
    int negative = 0;
    for (const auto& x : c.m()) {
        if (x > 0) return false;
        if (x < 0) ++negative;
    }
    return negative == 1;
}

OrbitCensus census(const OrbitResult<Kind::curve>& orbit)
{
    OrbitCensus out{0, 0, 0, 0, 0};
    for (const auto& c : orbit.representatives) {
        Integer n = labelled_multiplicity(c);
        out.total += n;
        if (is_effective_shape(c)) {
            out.effective += n;
            ++out.effective_shapes;
        } else if (is_exceptional_shape(c)) {
            out.exceptional += n;
        } else {
            out.other += n;
        }
    }
    return out;
}

std::vector<CurveClass> iterate_lowest(const CurveClass& seed, std::size_t n)
{
    if (seed.s() < seed.r() + 1) throw DomainError("iterate_lowest needs s >= r+1");
    std::vector<CurveClass> out{seed};
    out.reserve(n + 1);
    for (std::size_t k = 0; k < n; ++k) {
        CurveClass next = cremona_curve(out.back(), lowest_indices(out.back()));
        std::vector<Integer> m = next.m();
        std::sort(m.begin(), m.end());
        out.emplace_back(next.space(), next.d(), std::move(m));
    }
    return out;
}

std::string to_string(Family f)
{
    switch (f) {
    case Family::r_ge5_s_r4: return "r>=5, s=r+4";
    case Family::r34_s_r5: return "r in {3,4}, s=r+5";
    case Family::r2_s9: return "r=2, s=9";
    case Family::rigid_s_r5: return "rigid, r>=3, s=r+5";
    }
    return "?";
}

bool family_admits(Family f, Space sp)
{
    switch (f) {
    case Family::r_ge5_s_r4: return sp.r >= 5 && sp.s == sp.r + 4;
    case Family::r34_s_r5: return (sp.r == 3 || sp.r == 4) && sp.s == sp.r + 5;
    case Family::r2_s9: return sp.r == 2 && sp.s == 9;
    case Family::rigid_s_r5: return sp.r >= 3 && sp.s == sp.r + 5;
    }
    return false;
}

bool recursion_guard(const CurveClass& c, Family f)
{
    if (!family_admits(f, c.space()))
        throw DomainError("family " + to_string(f) + " does not apply to " + to_string(c.space()));
    if (!std::is_sorted(c.m().begin(), c.m().end()))
        throw DomainError("recursion_guard expects multiplicities in ascending order");
    const int r = c.r();
    auto m = [&](int i) -> const Integer& { return c.mult(i); };
    Integer S = 0;
    const Integer* last = nullptr;
    switch (f) {
    case Family::r_ge5_s_r4:
        // complement of {1, 4, 7}
        for (int i = 2; i <= r + 4; ++i)
            if (i != 4 && i != 7) S += m(i);
        last = &m(r + 4);
        break;
    case Family::r34_s_r5:
    case Family::rigid_s_r5:
        S = m(3) + m(4);
        for (int i = 7; i <= r + 5; ++i) S += m(i);
        last = &m(r + 5);
        break;
    case Family::r2_s9:
        S = m(3) + m(6) + m(9);
        last = &m(9);
        break;
    }
    if (c.d() > S) return true;
    if (f == Family::rigid_s_r5) return false;
    return c.d() == S && *last > m(1);
}

HullCertificate convex_hull_independence(const std::vector<CurveClass>& classes)
{
    if (classes.empty()) throw ArgumentError("convex_hull_independence needs at least one class");
    for (const auto& c : classes) require_same_space(classes.front().space(), c.space());

    HullCertificate cert;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (classes[i] == classes[j]) {
                cert.reason = HullCertificate::repeated_class;
                cert.explanation = "classes " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
                return cert;
            }

    const Integer p = anticanonical_degree(classes.front());
    for (const auto& c : classes)
        if (anticanonical_degree(c) != p) {
            cert.reason = HullCertificate::nonconstant_pairing;
            cert.explanation = "<c,F> is not constant along the list";
            return cert;
        }
    cert.pairing = p;
    if (p == 0) {
        cert.reason = HullCertificate::zero_pairing;
        cert.explanation = "<c,F> = 0 for every class, so the degree argument does not apply";
        return cert;
    }
    for (std::size_t i = 1; i < classes.size(); ++i)
        if (classes[i].d() <= classes[i - 1].d()) {
            cert.reason = HullCertificate::degrees_not_increasing;
            cert.explanation = "degree of class " + std::to_string(i) + " does not exceed its predecessor";
            return cert;
        }
    cert.holds = true;
    cert.reason = HullCertificate::independent;
    cert.explanation = "<c,F> = " + p.get_str() + " throughout and degrees strictly increase";
    return cert;
}

} // namespace weylcurves
