#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace minorb {

using ojson = nlohmann::ordered_json;

// Check classes; they decide the default tolerance.
enum class CheckKind { Exact, Invariant, ClosedForm, FiniteDifference };
const char* kind_name(CheckKind k);
double default_tolerance(CheckKind k);

// One named identity with its outcome. Exact and invariant checks carry deviation 0
// or a boolean; sampled checks fill the sampling fields.
struct CheckResult {
    std::string name;
    CheckKind kind = CheckKind::Exact;
    bool pass = false;
    bool skipped = false;
    double max_abs_deviation = 0;
    double tolerance = 0;
    std::string detail;
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> events;
    ojson data;  // optional structured payload (null when absent)
};

CheckResult exact_check(std::string name, double deviation, std::string detail = {});
CheckResult bool_check(std::string name, bool ok, std::string detail = {});
CheckResult skipped_check(std::string name, std::string reason);

inline bool all_pass(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs)
        if (!r.skipped && !r.pass) return false;
    return true;
}

inline void append(std::vector<CheckResult>& to, const std::vector<CheckResult>& from) {
    to.insert(to.end(), from.begin(), from.end());
}

}  // namespace minorb
