#pragma once

#include <string>
#include <vector>

namespace weylcurves {

struct FixtureCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct FixtureSummary {
    std::string suite;
    std::vector<FixtureCheck> checks;

    bool passed() const;
    std::size_t failures() const;
};

std::vector<std::string> fixture_suites();

// throws ArgumentError for an unknown suite
FixtureSummary run_fixtures(const std::string& suite, unsigned long seed = 20240607);

} // namespace weylcurves
