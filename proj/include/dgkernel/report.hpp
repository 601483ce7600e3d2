#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace dgk {

using Json = nlohmann::ordered_json;

/// Raised when a theorem-backed assertion fails. Indicates an implementation
/// bug, never a mathematical possibility; the CLI maps it to exit code 2.
struct TheoremViolation : std::logic_error {
    explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

/// Raised when an operation needs exhaustive enumeration over an infinite
/// field. Certificate verification is offered instead where applicable.
struct UnsupportedField : std::invalid_argument {
    explicit UnsupportedField(const std::string& what) : std::invalid_argument(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Structured verdict with witnesses and certificates.
struct Report {
    std::string operation;
    Json inputs = Json::object();
    std::string verdict;
    Json witnesses = Json::object();
    Json certificates = Json::object();
    std::vector<std::string> notes;
    bool ok = true;     // false = the operation could not produce a verdict
    bool alarm = false; // theorem-backed assertion failed

    Report() = default;
    explicit Report(std::string op) : operation(std::move(op)) {}

    void note(const std::string& s) { notes.push_back(s); }
    void fail(const std::string& v)
    {
        ok = false;
        verdict = v;
    }

    Json to_json() const;
    std::string to_text() const;
};

/// FNV-1a hex digest, used to identify inputs in reports.
std::string content_hash(const std::string& data);

} // namespace dgk
