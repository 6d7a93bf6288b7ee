#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace cliffkit {

/// One adjudicated formula discrepancy: the value as printed in the source
/// formulas, the value an independent oracle computes, and the verdict.
struct LedgerEntry {
    std::string claim;
    std::string paper_value;
    std::string oracle_value;
    std::string verdict;
    nlohmann::json detail;
    bool conclusive = true;
};

/// Runs every tracked oracle. Oracle failures mark the entry "inconclusive"
/// but never abort the run; results are deterministic given the seed.
std::vector<LedgerEntry> run_ledger(std::uint64_t seed = 20240915ull);

nlohmann::json ledger_to_json(const std::vector<LedgerEntry>& entries);

}  // namespace cliffkit
