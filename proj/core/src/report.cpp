#include "triplekit/report.hpp"

#include "json.hpp"

namespace triplekit {

std::string report_to_json(const Report& report, bool pretty) {
    using Json = nlohmann::ordered_json;
    Json j;
    j["ok"] = report.ok();
    Json checks = Json::array();
    for (const auto& c : report.checks()) {
        Json e;
        e["name"] = c.name;
        e["status"] = to_string(c.status);
        if (!c.note.empty()) e["note"] = c.note;
        if (c.counterexample) {
            const Counterexample& ce = *c.counterexample;
            Json w;
            w["tuple"] = ce.tuple;
            w["lhs"] = ce.lhs;
            w["rhs"] = ce.rhs;
            if (!ce.note.empty()) w["note"] = ce.note;
            e["counterexample"] = std::move(w);
        }
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    Json facts = Json::object();
    for (const auto& [k, v] : report.facts()) facts[k] = v;
    j["facts"] = std::move(facts);
    return pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

} // namespace triplekit
