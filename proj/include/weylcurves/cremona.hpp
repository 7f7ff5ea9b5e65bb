#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylcurves/chow.hpp"

namespace weylcurves {

// r+1 distinct point labels (1-based), stored sorted.
class IndexSet {
public:
    IndexSet(Space sp, std::vector<int> indices);

    const std::vector<int>& indices() const { return indices_; }
    bool contains(int i) const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<int> indices_;
};

std::string to_string(const IndexSet& I);

CurveClass cremona_curve(const CurveClass& c, const IndexSet& I);
DivisorClass cremona_divisor(const DivisorClass& D, const IndexSet& I);

// Projection from point i; lands in Y^{r-1}_{s-1}.
CurveClass project(const CurveClass& c, int i);

bool projection_expectation_screen(const CurveClass& c);

// sum of the r+1 largest multiplicities, missing entries counting as 0
Integer top_sum(const CurveClass& c);

// r+1 largest (resp. smallest) multiplicities, ties to the lowest label
IndexSet largest_indices(const CurveClass& c);
IndexSet lowest_indices(const CurveClass& c);

bool is_cremona_reduced(const CurveClass& c);

struct ReductionTrace {
    CurveClass start;
    std::vector<IndexSet> steps;
    CurveClass end;
    // index of the first step whose output fails irreducibility_screen, if any
    std::optional<std::size_t> first_screen_failure;

    CurveClass replay() const;
    std::vector<CurveClass> path() const;
};

ReductionTrace cremona_reduce(const CurveClass& c);

// Greedy descent without the degree-one convention: stops only when d is at
// least the top sum (the closed fundamental chamber, up to sorting).
struct Descent {
    ReductionTrace trace;
    bool reached_chamber = false;
};

Descent chamber_descent(const CurveClass& c, std::size_t max_steps);

struct ScreenViolation {
    char clause; // 'a', 'b' or 'c'
    std::vector<int> indices;
    std::string message;
};

std::vector<ScreenViolation> irreducibility_screen(const CurveClass& c);

} // namespace weylcurves
