#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylcurves/chow.hpp"
#include "weylcurves/cremona.hpp"

namespace weylcurves {

bool is_weyl_finite(Space sp);

// class of a line through 1-i of the points: h-e1-e2, h-e1, h
CurveClass weyl_seed(Space sp, int i);
// hyperplane through r-1-i of the points
DivisorClass divisorial_seed(Space sp, int i);

// multiplicities sorted non-increasing
template <Kind K>
ClassVector<K> canonical(const ClassVector<K>& c);

template <Kind K>
bool is_canonical(const ClassVector<K>& c);

// number of distinct relabellings of a class: s! / prod(k_v!) over repeated values
template <Kind K>
Integer labelled_multiplicity(const ClassVector<K>& c);

struct OrbitBound {
    std::optional<Integer> max_degree; // on |d|
    std::optional<std::size_t> max_count;

    static OrbitBound defaults() { return {Integer(1000000), std::size_t{100000}}; }
    static OrbitBound unbounded() { return {}; }
};

enum class OrbitMode {
    multiset,     // every distinct (r+1)-sub-multiset of the canonical form; exact
    full_subsets, // every (r+1)-subset of positions; oracle
    extremal,     // only the r+1 largest entries; not the full orbit in general
};

struct BoundHit {
    enum Which { degree, count } which;
    std::string description;
};

template <Kind K>
struct OrbitResult {
    std::vector<ClassVector<K>> representatives; // canonical, sorted by (d, m)
    bool complete = false;
    std::optional<BoundHit> bound_hit;

    std::size_t shape_count() const { return representatives.size(); }
    Integer labelled_count() const;
    bool contains(const ClassVector<K>& c) const;
};

template <Kind K>
OrbitResult<K> enumerate_orbit(const ClassVector<K>& seed, const OrbitBound& bound = OrbitBound::defaults(),
                               OrbitMode mode = OrbitMode::multiset);

// Orbit members split by what they can be the class of.
struct OrbitCensus {
    Integer total;
    Integer effective;   // d > 0, all m >= 0
    Integer exceptional; // d = 0 with a single negative entry: a curve inside some E_i
    Integer other;       // everything else (negative degree, mixed signs)
    std::size_t effective_shapes = 0;
};

OrbitCensus census(const OrbitResult<Kind::curve>& orbit);

bool is_effective_shape(const CurveClass& c);
bool is_exceptional_shape(const CurveClass& c);

// element 0 is the seed; each next element applies the Cremona at the r+1
// lowest multiplicities and re-sorts ascending
std::vector<CurveClass> iterate_lowest(const CurveClass& seed, std::size_t n);

enum class Family {
    r_ge5_s_r4,   // r >= 5, s = r+4
    r34_s_r5,     // r in {3,4}, s = r+5
    r2_s9,        // r = 2, s = 9
    rigid_s_r5,   // rigid lines, r >= 3, s = r+5
};

std::string to_string(Family f);
bool family_admits(Family f, Space sp);

// multiplicities must be sorted ascending
bool recursion_guard(const CurveClass& c, Family f);

struct HullCertificate {
    enum Reason { independent, zero_pairing, nonconstant_pairing, degrees_not_increasing, repeated_class };
    bool holds = false;
    Reason reason = independent;
    std::optional<Integer> pairing; // the common <c,F> when constant
    std::string explanation;
};

HullCertificate convex_hull_independence(const std::vector<CurveClass>& classes);

// WEYLCURVES_THREADS, 0 or unset meaning hardware concurrency
unsigned worker_threads();

} // namespace weylcurves
