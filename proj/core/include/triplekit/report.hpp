#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace triplekit {

enum class CheckStatus { Pass, Fail, Vacuous, Error };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Vacuous: return "vacuous";
        case CheckStatus::Error: return "error";
    }
    return "?";
}

/// First failing instance of an identity: the basis tuple it failed on and
/// both sides of the identity evaluated there.
struct Counterexample {
    std::vector<std::size_t> tuple;
    std::string lhs;
    std::string rhs;
    std::string note;
};

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::optional<Counterexample> counterexample;
    std::string note;
};

/// Ordered collection of named check outcomes plus derived facts
/// (dimensions, witnesses).  Serialized as deterministic JSON.
class Report {
  public:
    void add(CheckResult r) { checks_.push_back(std::move(r)); }
    void add_pass(std::string name, std::string note = "") {
        checks_.push_back({std::move(name), CheckStatus::Pass, std::nullopt, std::move(note)});
    }
    void add_vacuous(std::string name, std::string note = "") {
        checks_.push_back({std::move(name), CheckStatus::Vacuous, std::nullopt, std::move(note)});
    }
    void add_fail(std::string name, Counterexample ce, std::string note = "") {
        checks_.push_back({std::move(name), CheckStatus::Fail, std::move(ce), std::move(note)});
    }
    void add_error(std::string name, std::string message) {
        checks_.push_back({std::move(name), CheckStatus::Error, std::nullopt, std::move(message)});
    }
    void add_bool(std::string name, bool pass, std::string note = "") {
        checks_.push_back({std::move(name),
                           pass ? CheckStatus::Pass : CheckStatus::Fail,
                           std::nullopt,
                           std::move(note)});
    }

    void fact(std::string key, std::string value) {
        facts_.emplace_back(std::move(key), std::move(value));
    }

    /// Append all entries of `sub`, prefixing check names with "prefix.".
    void merge(const std::string& prefix, const Report& sub) {
        for (auto c : sub.checks_) {
            c.name = prefix + "." + c.name;
            checks_.push_back(std::move(c));
        }
        for (const auto& [k, v] : sub.facts_) facts_.emplace_back(prefix + "." + k, v);
    }

    bool ok() const {
        for (const auto& c : checks_)
            if (c.status == CheckStatus::Fail || c.status == CheckStatus::Error) return false;
        return true;
    }

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks_)
            if (c.name == name) return &c;
        return nullptr;
    }

    const std::vector<CheckResult>& checks() const { return checks_; }
    const std::vector<std::pair<std::string, std::string>>& facts() const { return facts_; }

  private:
    std::vector<CheckResult> checks_;
    std::vector<std::pair<std::string, std::string>> facts_;
};

/// Render the report as JSON; stable key and entry order for byte-identical
/// output on identical inputs.  Implemented in report.cpp.
std::string report_to_json(const Report& report, bool pretty);

} // namespace triplekit
