#pragma once

#include <string>
#include <vector>

#include "bredon/abelian.hpp"

namespace bredon {

/// Structured result of a (co)homology run, printed as text or JSON.
struct HomologyRun {
    std::string command; // "homology" or "cohomology"
    std::string group;
    std::string family;
    std::string coefficients;
    std::size_t degree = 0;
    std::vector<AbGroupInvariants> groups;
    std::size_t truncation = 0;
    std::vector<std::size_t> orbit_counts;
    std::vector<std::size_t> chain_ranks;
    double seconds = 0;

    friend bool operator==(const HomologyRun&, const HomologyRun&) = default;
};

/// `H_n = ...` (or `H^n = ...`) lines.
std::string to_text(const HomologyRun& run);
std::string to_json(const HomologyRun& run);
/// Inverse of to_json; throws Parse.
HomologyRun homology_run_from_json(const std::string& text);

} // namespace bredon
