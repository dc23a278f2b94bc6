#include "ultra/report.hpp"

#include "json.hpp"

namespace ultra {

void Report::input(std::string key, std::string value) {
    inputs.emplace_back(std::move(key), std::move(value));
}

void Report::certify(Certificate c) { certificates.push_back(std::move(c)); }

bool Report::all_pass() const {
    for (const auto& c : certificates)
        if (!c.pass) return false;
    return true;
}

std::string Report::outcome() const {
    if (!error.empty()) return "error";
    if (certificates.empty()) return "error";
    return all_pass() ? "pass" : "fail";
}

std::string Report::render() const {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    nlohmann::ordered_json ins = nlohmann::ordered_json::object();
    for (const auto& [k, v] : inputs) ins[k] = v;
    doc["inputs"] = std::move(ins);
    doc["outcome"] = outcome();
    nlohmann::ordered_json certs = nlohmann::ordered_json::array();
    for (const auto& c : certificates) {
        nlohmann::ordered_json jc;
        jc["claim"] = c.claim;
        jc["lhs"] = c.lhs;
        jc["relation"] = c.relation;
        jc["rhs"] = c.rhs;
        jc["witness"] = c.witness;
        jc["pass"] = c.pass;
        certs.push_back(std::move(jc));
    }
    doc["certificates"] = std::move(certs);
    if (!error.empty()) doc["error"] = error;
    return doc.dump(2) + "\n";
}

} // namespace ultra
