#pragma once

#include <stdexcept>
#include <string>

// Every failure mode the library can certify gets its own exception type so
// callers (and the CLI exit-code mapping) can tell an undecidable question
// apart from a malformed input. All of them derive from ultra_error.

namespace ultra {

struct ultra_error : std::runtime_error {
    explicit ultra_error(const std::string& what) : std::runtime_error(what) {}
};

// An add/sub cancelled every tracked digit: the result's valuation is
// unknowable at the working precision. Never silently mapped to zero.
struct precision_loss : ultra_error {
    explicit precision_loss(const std::string& what) : ultra_error(what) {}
};

struct division_by_zero : ultra_error {
    explicit division_by_zero(const std::string& what) : ultra_error(what) {}
};

struct hensel_condition_failed : ultra_error {
    explicit hensel_condition_failed(const std::string& what) : ultra_error(what) {}
};

struct not_monic : ultra_error {
    explicit not_monic(const std::string& what) : ultra_error(what) {}
};

struct degree_mismatch : ultra_error {
    explicit degree_mismatch(const std::string& what) : ultra_error(what) {}
};

struct root_check_failed : ultra_error {
    explicit root_check_failed(const std::string& what) : ultra_error(what) {}
};

struct level_cap_exceeded : ultra_error {
    explicit level_cap_exceeded(const std::string& what) : ultra_error(what) {}
};

struct not_a_chain : ultra_error {
    explicit not_a_chain(const std::string& what) : ultra_error(what) {}
};

struct radii_invalid : ultra_error {
    explicit radii_invalid(const std::string& what) : ultra_error(what) {}
};

struct subspace_is_full : ultra_error {
    explicit subspace_is_full(const std::string& what) : ultra_error(what) {}
};

struct not_isometric : ultra_error {
    explicit not_isometric(const std::string& what) : ultra_error(what) {}
};

struct inconsistent_map : ultra_error {
    explicit inconsistent_map(const std::string& what) : ultra_error(what) {}
};

struct precondition_failed : ultra_error {
    explicit precondition_failed(const std::string& what) : ultra_error(what) {}
};

// Bad literals, unparseable files, unknown flags. CLI maps this to exit 2 as
// well, but keeps the message verbatim in the report.
struct parse_error : ultra_error {
    explicit parse_error(const std::string& what) : ultra_error(what) {}
};

} // namespace ultra
