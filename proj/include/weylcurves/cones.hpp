#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "weylcurves/chow.hpp"
#include "weylcurves/classify.hpp"
#include "weylcurves/orbits.hpp"

namespace weylcurves {

struct FacetId {
    enum Type { A_degree, A_span, B } type = A_degree;
    int index = 0;        // A facets: the point i
    int t = 0;            // B facets
    std::vector<int> set; // B facets: I(t)

    std::string label() const;
    friend bool operator==(const FacetId&, const FacetId&) = default;
};

struct FacetReport {
    FacetId id;
    Integer value;
    bool satisfied = false;
};

// Facets of the effective cone for s = r+2 (A only) and s = r+3 (A and B).
std::vector<FacetReport> effective_membership(const DivisorClass& D);
bool is_effective(const DivisorClass& D);

struct Ray {
    FacetId id; // the facet this ray cuts out
    CurveClass c;
};

// alpha_i, alpha'_i and beta_{t,I}, for s = r+3, in the same order as the facets
std::vector<Ray> movable_extremal_rays(Space sp);

CurveClass beta_class(Space sp, int t, const std::vector<int>& I);
// legal t for s = r+3: -1 <= t <= l+alpha with 0 <= r-2t+1 <= s
std::vector<int> legal_beta_levels(Space sp);
// t if c is some beta_{t,I} up to relabelling
std::optional<int> beta_level(const CurveClass& c);

struct BetaStep {
    CurveClass beta;
    CurveClass image;
    std::optional<int> image_level;
    bool matches_next = false; // image is beta_{t+1,.}
};

BetaStep cremona_to_beta(Space sp, int t);

struct ZeroDivisorialCheck {
    WeylVerdict::Answer answer = WeylVerdict::unknown;
    std::optional<DivisorClass> witness; // labelled to realize the minimum against c
    std::optional<Integer> minimum;
    bool orbit_complete = false;
    std::size_t shapes = 0;
};

ZeroDivisorialCheck zero_divisorial_nonneg(const CurveClass& c, const OrbitBound& bound = OrbitBound::defaults());

struct CurveHyperplanePair {
    std::size_t curve, hyperplane;
    Integer value;
};
struct HyperplanePair {
    std::size_t first, second;
    Integer value;
};
struct CurvePair {
    std::size_t first, second;
    Integer value;
};

struct OrthogonalityAudit {
    std::vector<CurveClass> negative_curves;        // (-1)-Weyl lines with D.C < 0
    std::vector<DivisorClass> negative_hyperplanes; // (-1)-Weyl hyperplanes with <D,G>_1 < 0
    std::vector<CurveHyperplanePair> curve_hyperplane;
    std::vector<HyperplanePair> hyperplane_hyperplane;
    std::vector<CurvePair> curve_curve; // informational only
    std::vector<std::string> violations; // (C.G) > 0 or <G1,G2>_1 != 0
    std::size_t curves_inside_hyperplanes = 0; // pairs with (C.G) < 0, not violations
    bool curves_complete = false;
    bool hyperplanes_complete = false;
};

OrthogonalityAudit base_locus_orthogonality_audit(const DivisorClass& D,
                                                   const OrbitBound& bound = OrbitBound::defaults());

// All labelled versions of a class: distinct permutations of its multiplicities.
template <Kind K>
std::vector<ClassVector<K>> labellings(const ClassVector<K>& c, std::size_t limit);

// effective (d > 0, m >= 0) members of the (-1)-Weyl line orbit, with labels
std::vector<CurveClass> minus1_lines(Space sp, const OrbitBound& bound = OrbitBound::defaults());

// Exact feasibility of target = sum lambda_j g_j with lambda >= 0 (phase-one simplex,
// Bland's rule). Returns the coefficients when feasible.
std::optional<std::vector<mpq_class>> exact_cone_membership(const std::vector<std::vector<mpq_class>>& generators,
                                                            const std::vector<mpq_class>& target);

std::vector<mpq_class> coordinates(const CurveClass& c);

} // namespace weylcurves
