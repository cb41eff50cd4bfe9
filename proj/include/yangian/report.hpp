#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yangian/element.hpp"

namespace yangian {

enum class CheckStatus : std::uint8_t { Pass, Fail, Skipped };

// One verified (or skipped) identity instance. On failure the witness holds
// the normalized difference of the two sides.
struct CheckReport {
    std::string id;
    std::string params;
    CheckStatus status = CheckStatus::Pass;
    std::optional<Element> witness;
    std::string note;

    static CheckReport pass(std::string id, std::string params) {
        return {std::move(id), std::move(params), CheckStatus::Pass, {}, {}};
    }
    static CheckReport fail(std::string id, std::string params, Element diff) {
        return {std::move(id), std::move(params), CheckStatus::Fail,
                std::move(diff), {}};
    }
    static CheckReport skipped(std::string id, std::string params,
                               std::string why) {
        return {std::move(id), std::move(params), CheckStatus::Skipped, {},
                std::move(why)};
    }
    // Pass iff diff is zero.
    static CheckReport from_difference(std::string id, std::string params,
                                       Element diff) {
        if (diff.is_zero())
            return pass(std::move(id), std::move(params));
        return fail(std::move(id), std::move(params), std::move(diff));
    }
};

// Certificate for a centrality claim: the element was commuted against every
// member of the recorded finite test family. A pass certifies only the
// tested budget.
struct CentralityCertificate {
    std::string label;
    std::string scope;  // "full(S=3)" or "shifted(S=3)"
    bool pass = true;
    std::string failing_generator;
    std::optional<Element> failing_commutator;

    CheckReport to_check_report() const {
        if (pass)
            return CheckReport::pass("centrality:" + label, scope);
        CheckReport r = CheckReport::fail("centrality:" + label, scope,
                                          *failing_commutator);
        r.note = "fails against " + failing_generator;
        return r;
    }
};

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

}  // namespace yangian
