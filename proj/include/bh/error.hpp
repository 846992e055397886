#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bh {

enum class errc {
    bad_input,
    degree_mismatch,
    relation_violated,
    not_transitive,
    trivial_branch_point,
    index_out_of_range,
    alphabet_mismatch,
    relator_not_preserved,
    not_closed_under_inverses,
    orbit_limit_exceeded,
    unsupported_signature,
    malformed_cut,
    chi_nonnegative,
    hypotheses_unmet,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

// Rejection that lists every violated invariant of the input at once.
class ValidationError : public Error {
public:
    ValidationError(errc first_code, std::vector<std::string> violations)
        : Error(first_code, join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s;
        for (const auto& item : v) {
            if (!s.empty()) s += "; ";
            s += item;
        }
        return s;
    }
    std::vector<std::string> violations_;
};

} // namespace bh
