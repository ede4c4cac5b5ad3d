#pragma once

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qappell/errors.hpp"
#include "qappell/rational.hpp"

namespace qappell {

struct GridPoint {
    Rational q;
    Rational u;
};

// A u-entry is a literal rational or one of the tokens "q" / "q^2",
// resolved per q value.
struct USpecEntry {
    enum class Kind { literal, q, q_squared } kind = Kind::literal;
    Rational value;

    static USpecEntry parse(const std::string& s) {
        USpecEntry e;
        if (s == "q") {
            e.kind = Kind::q;
        } else if (s == "q^2" || s == "q2") {
            e.kind = Kind::q_squared;
        } else {
            e.value = Rational::parse(s);
        }
        return e;
    }
    Rational resolve(const Rational& q) const {
        switch (kind) {
            case Kind::q: return q;
            case Kind::q_squared: return q * q;
            case Kind::literal: break;
        }
        return value;
    }
};

// Cross product of q values and per-q-resolved u entries; duplicates after
// resolution are dropped (first occurrence wins), so point order is stable.
struct GridSpec {
    std::vector<Rational> q_values;
    std::vector<USpecEntry> u_values;

    static GridSpec default_grid() {
        GridSpec g;
        g.q_values = {Rational(1, 2), Rational(2, 3), Rational(2), Rational(3)};
        g.u_values = {USpecEntry{USpecEntry::Kind::literal, Rational(0)},
                      USpecEntry{USpecEntry::Kind::literal, Rational(1)},
                      USpecEntry{USpecEntry::Kind::literal, Rational(1, 2)},
                      USpecEntry{USpecEntry::Kind::q, Rational(0)},
                      USpecEntry{USpecEntry::Kind::q_squared, Rational(0)}};
        return g;
    }

    // {"q": ["1/2", ...], "u": ["0", "1", "q", "q^2", ...]}
    static GridSpec from_json(const nlohmann::json& j) {
        GridSpec g;
        if (!j.is_object() || !j.contains("q") || !j.contains("u") || !j["q"].is_array() ||
            !j["u"].is_array())
            throw ParseError("grid file must be an object with \"q\" and \"u\" arrays");
        try {
            for (const auto& v : j["q"])
                g.q_values.push_back(Rational::parse(v.get<std::string>()));
            for (const auto& v : j["u"])
                g.u_values.push_back(USpecEntry::parse(v.get<std::string>()));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("grid entries must be strings: ") + e.what());
        }
        if (g.q_values.empty() || g.u_values.empty()) throw ParseError("grid file lists no points");
        return g;
    }

    static GridSpec from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open grid file: " + path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad grid file: ") + e.what());
        }
        return from_json(j);
    }

    std::vector<GridPoint> points() const {
        std::vector<GridPoint> pts;
        for (const auto& q : q_values) {
            std::vector<Rational> seen;
            for (const auto& ue : u_values) {
                Rational u = ue.resolve(q);
                bool dup = false;
                for (const auto& s : seen) dup = dup || s == u;
                if (dup) continue;
                seen.push_back(u);
                pts.push_back(GridPoint{q, u});
            }
        }
        return pts;
    }
};

struct ExcludedPoint {
    GridPoint point;
    std::string reason;
};

// Drops the points a suite may not run on and records why.
inline std::vector<GridPoint> filter_grid(const std::vector<GridPoint>& pts, bool exclude_q1,
                                          bool exclude_u0, std::vector<ExcludedPoint>* excluded) {
    std::vector<GridPoint> out;
    for (const auto& p : pts) {
        if (exclude_q1 && p.q.is_one()) {
            if (excluded) excluded->push_back({p, "q = 1 rejected by this suite"});
            continue;
        }
        if (exclude_u0 && p.u.is_zero()) {
            if (excluded) excluded->push_back({p, "u = 0 rejected by this suite"});
            continue;
        }
        out.push_back(p);
    }
    return out;
}

} // namespace qappell
