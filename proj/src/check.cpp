#include "minorb/check.hpp"

namespace minorb {

const char* kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::Exact: return "exact";
        case CheckKind::Invariant: return "invariant";
        case CheckKind::ClosedForm: return "closed-form";
        case CheckKind::FiniteDifference: return "finite-difference";
    }
    return "?";
}

double default_tolerance(CheckKind k) {
    switch (k) {
        case CheckKind::ClosedForm: return 1e-9;
        case CheckKind::FiniteDifference: return 1e-6;
        default: return 0;
    }
}

CheckResult exact_check(std::string name, double deviation, std::string detail) {
    CheckResult r;
    r.name = std::move(name);
    r.kind = CheckKind::Exact;
    r.max_abs_deviation = deviation;
    r.pass = deviation == 0;
    r.detail = std::move(detail);
    return r;
}

CheckResult bool_check(std::string name, bool ok, std::string detail) {
    CheckResult r;
    r.name = std::move(name);
    r.kind = CheckKind::Invariant;
    r.pass = ok;
    r.detail = std::move(detail);
    return r;
}

CheckResult skipped_check(std::string name, std::string reason) {
    CheckResult r;
    r.name = std::move(name);
    r.kind = CheckKind::Invariant;
    r.skipped = true;
    r.pass = true;
    r.detail = std::move(reason);
    return r;
}

}  // namespace minorb
