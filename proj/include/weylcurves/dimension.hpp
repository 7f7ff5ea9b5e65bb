#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylcurves/chow.hpp"

namespace weylcurves {

// Zero for k < 0 or n < k.
Integer binom(const Integer& n, const Integer& k);

// binom(d+r, r) - sum binom(m_i+r-1, r)
Integer naive_chi(const DivisorClass& D);

// max(0, -(D.C))
Integer containment_multiplicity(const DivisorClass& D, const CurveClass& C);

struct LedgerEntry {
    CurveClass curve;
    Integer k;
    Integer contribution; // binom(r+k-2, r)
};

struct CorrectionLedger {
    Integer base;
    std::vector<LedgerEntry> entries;
    Integer total;
    std::optional<Integer> ldim;
    std::optional<Integer> total_with_ldim;
    std::string remainder = "unresolved";
    std::vector<std::string> notes;
};

// Curves with k_C < 1 are skipped. Entries come out sorted, so the ledger does
// not depend on the order of `curves`.
CorrectionLedger corrected_dimension(const DivisorClass& D, const std::vector<CurveClass>& curves,
                                     std::optional<Integer> ldim = std::nullopt);

// Lines through two points and degree r rational normal curves through r+3 points.
std::vector<CurveClass> auto_curves(Space sp);
bool auto_curves_are_complete(Space sp);

struct RestrictionStep {
    std::string label;
    Integer restriction; // h^0 of the restriction to the exceptional divisor
    Integer value;       // bound after subtracting
};

struct RestrictionChain {
    Integer start;
    std::vector<RestrictionStep> steps;
    std::vector<Integer> values() const;
};

// 6H - 4(E_1+..+E_9) in P^5 peeled one exceptional divisor at a time
RestrictionChain restriction_chain_fixture();

} // namespace weylcurves
