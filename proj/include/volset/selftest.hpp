#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace volset {

struct SuiteResult {
    std::string name;
    std::uint32_t q = 0;
    std::size_t dim = 0;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    /// First few failure descriptions.
    std::vector<std::string> messages;

    bool passed() const { return failures == 0; }
};

/// Invariant suites at q in {3, 5}, d in {2, 3}.
std::vector<SuiteResult> run_selftest(std::uint64_t seed);

} // namespace volset
