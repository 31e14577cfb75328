#pragma once

#include "minorb/check.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace minorb {

inline constexpr const char* kVersion = "1.0.0";

struct RunConfig {
    std::string command;  // catalog | invariants | table | model-check | verify
    std::optional<std::string> form_id;
    std::vector<std::string> check_names;
    std::size_t samples = 100;
    std::optional<double> tol;
    std::uint64_t seed = 42;
    std::optional<std::string> catalog_path;
    std::string format = "md";
    std::optional<std::string> out;
    bool timing = false;
    unsigned workers = 1;
};

struct ReportDocument {
    RunConfig config;
    std::vector<CheckResult> checks;
    bool pass = false;
    std::optional<double> elapsed_ms;
};

// Raised for configuration problems (unknown form, unsupported model, bad check name).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::vector<std::string>& verify_check_names();

ReportDocument cmd_catalog(const RunConfig& cfg);
ReportDocument cmd_invariants(const RunConfig& cfg);
ReportDocument cmd_table(const RunConfig& cfg);
ReportDocument cmd_model_check(const RunConfig& cfg);
ReportDocument cmd_verify(const RunConfig& cfg);
ReportDocument run_command(const RunConfig& cfg);

ojson report_json(const ReportDocument& doc);
std::string render_json(const ReportDocument& doc);
std::string render_md(const ReportDocument& doc);

// Exit status: 0 all checks pass, 1 some check fails, 2 usage or catalog error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace minorb
