#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weylcurves/chow.hpp"
#include "weylcurves/cremona.hpp"
#include "weylcurves/orbits.hpp"

namespace weylcurves {

// i with <c,F> = 2 + i(r-1), for i in {-1,0,1}
std::optional<int> numerical_type(const CurveClass& c);
// i with <c,c> = 1 + (i-1)(r-1)
std::optional<int> quadratic_signature(const CurveClass& c);

struct WeylVerdict {
    enum Answer { yes, no, unknown };
    Answer answer = unknown;
    std::string reason;
    std::optional<ReductionTrace> trace;   // c towards the seed (or its chamber point)
    std::optional<CurveClass> witness;     // reduced representative reached from c
};

std::string to_string(WeylVerdict::Answer a);

WeylVerdict is_weyl_class(const CurveClass& c, int i, const OrbitBound& bound = OrbitBound::defaults());

// Classes with d >= 1, m >= 0, sorted non-increasing, with the given <c,F> and <c,c>,
// for degrees in [d_min, d_max].
std::vector<CurveClass> scan_classes(Space sp, long d_min, long d_max, const Integer& pairing_F,
                                     const Integer& self);

// Largest degree allowed for a non-negative numerical (-1)-class with <c,c> = 3-2r,
// from Cauchy-Schwarz on the multiplicities. Needs F^2 >= 0 to be finite.
std::optional<long> minus1_degree_bound(Space sp);

struct Minus1Solutions {
    long degree_bound = 0;
    std::vector<CurveClass> classes;
    bool line_and_rnc_only = false; // the expected answer: the line, plus the RNC when s >= r+3
};

Minus1Solutions mds_minus1_solutions(Space sp);

struct WeylLine {
    WeylVerdict verdict;
};

struct Decomposition {
    long m = 0;
    CurveClass reduced;   // Cremona reduced representative of c
    CurveClass remainder; // c' with reduced = m F + c'
};

struct NoDecomposition {
    CurveClass reduced;
    std::string explanation;
};

using OneClassResult = std::variant<WeylLine, Decomposition, NoDecomposition>;

OneClassResult one_class_decomposition(const CurveClass& c);

Integer vdim(const CurveClass& c);
Integer chi_normal(const CurveClass& c, long genus);

struct PlanarConditions {
    int i = 0;
    bool arithmetic_genus_zero = false; // p_a = 0
    bool euler_characteristic = false;  // chi = 2 + i
    bool self_intersection = false;     // c.c = i
    bool canonical_degree = false;      // c.K = -2 - i
};

struct PlanarReport {
    Integer self_intersection;
    Integer canonical_degree; // c.K
    Integer arithmetic_genus;
    Integer euler_characteristic;
    std::vector<PlanarConditions> conditions; // i = -1, 0, 1
    std::optional<int> numerical_type;
    std::optional<int> curve_class_type; // s <= 8: i with c.c = i and c.K = -2-i
    bool below_nine_points = false;
    std::optional<std::string> known_exception;
    std::vector<ScreenViolation> screens;
};

PlanarReport planar_classify(const CurveClass& c);

// i with <D,D>_1 = i and <D,-K>_1/(r-1) = 2+i
std::optional<int> divisorial_numerical_type(const DivisorClass& D);

struct CrnumBound {
    bool holds = false;
    Integer lhs; // (r-1) sum_{i>r+1} m_i
    Integer rhs; // -2 - j(r-1) + 2 sum_{i<=r+1} m_i
};

CrnumBound lemma_crnum_bound(const CurveClass& c, int j);

struct ClassificationReport {
    CurveClass c;
    Integer pairing_F;
    Integer self;
    std::optional<int> numerical_type;
    std::optional<int> quadratic_match;
    std::optional<int> queried_type;
    WeylVerdict weyl_class;
    std::vector<ScreenViolation> screens;
    bool cremona_reduced = false;
    std::optional<bool> projection_screen;
    Integer virtual_dimension;
    std::string rigidity; // "expected rigid" when vdim = 0
    std::optional<OneClassResult> decomposition;
    std::vector<std::string> notes;
};

ClassificationReport classify(const CurveClass& c, std::optional<int> type,
                              const OrbitBound& bound = OrbitBound::defaults());

} // namespace weylcurves
