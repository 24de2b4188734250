#pragma once

#include <stdexcept>
#include <string>

namespace gridpaths {

// Every failure mode the library can raise, each mapped to a distinct
// process exit code by the CLI (0 = success, 1 = diagnostics reported
// findings; those two are outcomes, not errors).
enum class Errc {
    ok = 0,
    diagnostics_failed = 1,
    usage = 2,
    parse_error = 3,
    duplicate_id = 4,
    unknown_type = 5,
    missing_status = 6,
    invalid_threshold = 7,
    unknown_key = 8,
    unknown_step = 9,
    empty_candidate_set = 10,
    unknown_element = 11,
    not_a_customer = 12,
    enumeration_cap_exceeded = 13,
    switch_space_too_large = 14,
    overflow = 15,
    no_attachment_target = 16,
    unsupported_format = 17,
    io_error = 18,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ok: return "ok";
        case Errc::diagnostics_failed: return "diagnostics_failed";
        case Errc::usage: return "usage";
        case Errc::parse_error: return "parse_error";
        case Errc::duplicate_id: return "duplicate_id";
        case Errc::unknown_type: return "unknown_type";
        case Errc::missing_status: return "missing_status";
        case Errc::invalid_threshold: return "invalid_threshold";
        case Errc::unknown_key: return "unknown_key";
        case Errc::unknown_step: return "unknown_step";
        case Errc::empty_candidate_set: return "empty_candidate_set";
        case Errc::unknown_element: return "unknown_element";
        case Errc::not_a_customer: return "not_a_customer";
        case Errc::enumeration_cap_exceeded: return "enumeration_cap_exceeded";
        case Errc::switch_space_too_large: return "switch_space_too_large";
        case Errc::overflow: return "overflow";
        case Errc::no_attachment_target: return "no_attachment_target";
        case Errc::unsupported_format: return "unsupported_format";
        case Errc::io_error: return "io_error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }
    int exit_code() const { return static_cast<int>(code_); }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace gridpaths
