#pragma once

#include <map>
#include <string>
#include <vector>

namespace fueterlab {

/// Structured outcome of one identity check. Exact-mode passes carry
/// max_abs_err == 0; "flagged" marks checks that pass under the engine's
/// conventions but disagree with a published constant, never engine failures.
struct VerificationReport {
    enum class Status { pass, fail, flagged };
    enum class Mode { exact, floating };

    std::string check_name;
    std::map<std::string, long> params;
    Mode mode = Mode::exact;
    Status status = Status::fail;
    double max_abs_err = 0.0;
    std::string notes;

    bool ok() const { return status != Status::fail; }

    static VerificationReport exact_check(std::string name,
                                          std::map<std::string, long> params,
                                          bool passed, std::string notes = "") {
        VerificationReport r;
        r.check_name = std::move(name);
        r.params = std::move(params);
        r.mode = Mode::exact;
        r.status = passed ? Status::pass : Status::fail;
        r.max_abs_err = 0.0;
        r.notes = std::move(notes);
        return r;
    }

    static VerificationReport float_check(std::string name,
                                          std::map<std::string, long> params,
                                          double err, double tol,
                                          std::string notes = "") {
        VerificationReport r;
        r.check_name = std::move(name);
        r.params = std::move(params);
        r.mode = Mode::floating;
        r.status = err <= tol ? Status::pass : Status::fail;
        r.max_abs_err = err;
        r.notes = std::move(notes);
        return r;
    }
};

inline const char* to_string(VerificationReport::Status s) {
    switch (s) {
        case VerificationReport::Status::pass: return "pass";
        case VerificationReport::Status::fail: return "fail";
        default: return "flagged";
    }
}

inline const char* to_string(VerificationReport::Mode m) {
    return m == VerificationReport::Mode::exact ? "exact" : "float";
}

}  // namespace fueterlab
