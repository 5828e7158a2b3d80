#ifndef HODGEPOLY_VERIFY_HPP
#define HODGEPOLY_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hodge {

/// Parameter grid for the invariant suite. Ranges are inclusive.
struct GridConfig {
    long g_min = 2;
    long g_max = 3;
    long d1_min = -3;
    long d1_max = 8;
    long d2_min = -2;
    long d2_max = 0;
    long pair_d_min = 1;
    long pair_d_max = 6;
    std::vector<long> bundle_degrees{1, 3};
    std::vector<std::string> checks;  ///< empty selects every check
    std::uint64_t seed = 20061;
    unsigned random_cases = 100;
    /// Name of a check whose computed side is deliberately corrupted. Only
    /// used to exercise the harness's failure path.
    std::string inject_fault;
};

enum class CheckStatus { Pass, Fail };

struct CheckReport {
    std::string check_name;
    std::string parameters;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;

    friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct SuiteSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
};

/// Every check name the suite knows, in execution order.
const std::vector<std::string>& check_names();

/// Runs the selected checks over the grid. Deterministic for a fixed config.
/// Throws Error(InvalidArgument) for an empty range, g < 2, or an unknown
/// check name.
std::vector<CheckReport> run_suite(const GridConfig& config);

SuiteSummary summarize(const std::vector<CheckReport>& reports);

} // namespace hodge

#endif
