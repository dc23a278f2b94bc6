#pragma once

#include <string>
#include <utility>
#include <vector>

// Machine-readable verdicts for the command-line front end. Every command
// ends in a Report: an echo of the command line, the parsed inputs in
// canonical text form, and a list of certificates. A certificate states one
// checked claim as lhs RELATION rhs; lhs and rhs are always values printed
// in a canonical reparseable form (rational, norm value, valuation, or
// integer count), never prose, so a reader can re-verify the relation with
// their own arithmetic. The witness field is free text naming the object
// that realizes the claim (an index, a tower element, a step count).
//
// The overall outcome is "pass" when every certificate passed, "fail" when
// at least one was falsified, and "error" when the command never got as far
// as a verdict (bad usage, violated precondition, precision exhaustion).
// Rendering is deterministic: fixed field order, no timestamps, so the same
// command with the same seed produces byte-identical output.

namespace ultra {

struct Certificate {
    std::string claim;    // stable dotted id of the property checked
    std::string lhs;      // left value, canonical text
    std::string relation; // "=", "<", "<=", ">=", ">"
    std::string rhs;      // right value, canonical text
    std::string witness;  // optional free-text witness
    bool pass = false;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<Certificate> certificates;
    std::string error; // nonempty exactly when the outcome is "error"

    void input(std::string key, std::string value);
    void certify(Certificate c);

    bool all_pass() const;
    // "error" if an error is recorded, otherwise "pass"/"fail" by the
    // conjunction of certificates. A command that produced no certificates
    // and no error counts as an error: verdicts require evidence.
    std::string outcome() const;

    // JSON document with stable key order and a trailing newline.
    std::string render() const;
};

} // namespace ultra
