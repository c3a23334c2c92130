#pragma once

/**
 * @file verdict.hpp
 * @brief Outcome of one theorem check on one instance.
 */

#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "npure/element_set.hpp"
#include "npure/ideal.hpp"

namespace npure {

enum class Status { pass, fail, skipped, vacuous };

inline std::string_view to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    case Status::vacuous: return "vacuous";
    }
    return "?";
}

/// A fail carries a counterexample witness; a skip carries the violated cap.
struct Verdict {
    std::string check_id;
    std::string subject;
    Status status = Status::pass;
    nlohmann::json witness;
    double elapsed_ms = 0.0;

    bool passed() const { return status == Status::pass; }
    bool failed() const { return status == Status::fail; }

    static Verdict make(std::string id, std::string subject, Status s, nlohmann::json w = nullptr) {
        return Verdict{std::move(id), std::move(subject), s, std::move(w), 0.0};
    }
    /// pass when `ok`, otherwise fail with `witness`.
    static Verdict check(std::string id, std::string subject, bool ok, nlohmann::json witness) {
        return make(std::move(id), std::move(subject), ok ? Status::pass : Status::fail, std::move(witness));
    }
};

inline nlohmann::json members_json(const ElementSet& s) { return s.members(); }

/// "<ring spec> I=[members]"
inline std::string subject_of(const Ideal& i) {
    return i.ring().spec_string() + " I=" + members_json(i.members()).dump();
}

} // namespace npure
