#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qappell/multipoly.hpp"

namespace qappell {

using json = nlohmann::json;

inline json poly_to_json(const MultiPoly& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["e"] = {e[0], e[1], e[2], e[3], e[4]};
        term["c"] = c.str();
        arr.push_back(term);
    }
    return arr;
}

template <typename Series> // TruncSeries; kept a template to avoid the include cycle
inline json series_to_json(const Series& s) {
    json j;
    j["order"] = s.order();
    j["coeffs"] = json::array();
    for (int n = 0; n <= s.order(); ++n) j["coeffs"].push_back(poly_to_json(s.coeff(n)));
    return j;
}

struct FailureDetail {
    json coeff_index; // an integer, or [n,m] for bi-series checks
    MultiPoly lhs;
    MultiPoly rhs;
};

// Outcome of checking one identity at one parameter point. A failed
// comparison never throws: it lands here, with the first offending
// coefficient kept verbatim.
struct VerificationReport {
    std::string identity;
    std::map<std::string, std::string> params;
    int order = 0;
    bool pass = true;
    std::optional<FailureDetail> first_failure;
    std::vector<std::string> notes;

    void require(bool ok, json coeff_index, const MultiPoly& lhs, const MultiPoly& rhs) {
        if (ok || !pass) return;
        pass = false;
        first_failure = FailureDetail{std::move(coeff_index), lhs, rhs};
    }
    void note(std::string n) { notes.push_back(std::move(n)); }

    json to_json() const {
        json j;
        j["identity"] = identity;
        j["params"] = json::object();
        for (const auto& [k, v] : params) j["params"][k] = v;
        j["order"] = order;
        j["pass"] = pass;
        if (first_failure) {
            j["first_failure"] = {{"coeff_index", first_failure->coeff_index},
                                  {"lhs", poly_to_json(first_failure->lhs)},
                                  {"rhs", poly_to_json(first_failure->rhs)}};
        } else {
            j["first_failure"] = nullptr;
        }
        j["notes"] = notes;
        return j;
    }
};

} // namespace qappell
