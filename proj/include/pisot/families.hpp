#pragma once

// Parametric recurrence families E(x, k*x^2 + j): initial terms and
// coefficients are integer polynomials in the family parameter k. Templates
// live in a JSON fixture file so conjectured families can be added without
// touching code; verify_family instantiates each k, runs the full pipeline
// and checks the guessed recurrence matches the template exactly.

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pisot/decision.hpp"
#include "pisot/exact.hpp"
#include "pisot/recurrence.hpp"

namespace pisot {

// Integer polynomial in k, ascending coefficients.
struct KPoly {
    std::vector<Int> coeffs;

    Int eval(const Int& k) const {
        Int acc(0);
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * k + coeffs[i];
        return acc;
    }
};

struct FamilyTemplate {
    Int x;
    Int residue;                      // y = k*x^2 + residue
    std::vector<KPoly> initial;       // d_1..d_m as polynomials in k
    std::vector<KPoly> coefficients;  // A_1..A_m as polynomials in k
    bool allow_k0 = false;
    long k_min = 1;
    long k_max = 5;
    std::string name;

    Int y_at(const Int& k) const { return k * x * x + residue; }

    LinearRecurrence instantiate(const Int& k) const {
        LinearRecurrence rec;
        rec.order_k = static_cast<unsigned>(coefficients.size());
        for (const KPoly& p : initial) rec.initial_terms.push_back(p.eval(k));
        for (const KPoly& p : coefficients) rec.coefficients.push_back(p.eval(k));
        rec.validate();
        return rec;
    }
};

struct FamilyCheckRow {
    long k = 0;
    Int y;
    bool skipped = false;
    bool guess_matches = false;   // guessed recurrence == template instantiation
    Verdict verdict = Verdict::Inconclusive;
    std::string detail;
};

struct FamilyCheck {
    FamilyTemplate tmpl;
    std::vector<FamilyCheckRow> rows;
    bool all_passed = true;  // every non-skipped row Proved with matching guess
};

namespace detail {

inline KPoly kpoly_from_json(const nlohmann::ordered_json& j) {
    KPoly p;
    for (const auto& c : j) {
        if (c.is_string()) p.coeffs.emplace_back(c.get<std::string>());
        else p.coeffs.emplace_back(static_cast<long>(c.get<long long>()));
    }
    return p;
}

}  // namespace detail

inline std::vector<FamilyTemplate> load_family_templates(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open family template file: " + path);
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(in);
    std::vector<FamilyTemplate> out;
    for (const auto& j : doc.at("families")) {
        FamilyTemplate t;
        t.x = Int(static_cast<long>(j.at("x").get<long long>()));
        t.residue = Int(static_cast<long>(j.at("residue").get<long long>()));
        for (const auto& p : j.at("initial")) t.initial.push_back(detail::kpoly_from_json(p));
        for (const auto& p : j.at("coefficients"))
            t.coefficients.push_back(detail::kpoly_from_json(p));
        if (j.contains("allow_k0")) t.allow_k0 = j.at("allow_k0").get<bool>();
        if (j.contains("k_min")) t.k_min = j.at("k_min").get<long>();
        if (j.contains("k_max")) t.k_max = j.at("k_max").get<long>();
        t.name = j.contains("name") ? j.at("name").get<std::string>()
                                    : "E(" + t.x.get_str() + "," + t.x.get_str() + "^2*k+" +
                                          t.residue.get_str() + ")";
        if (t.initial.size() != t.coefficients.size())
            throw std::runtime_error("family template '" + t.name + "': order mismatch");
        out.push_back(std::move(t));
    }
    return out;
}

// Instantiate the template for each k in range, run the pipeline, and
// require the guess to equal the template and the verdict to be Proved.
// A mismatched guess is reported in the row, not fatal.
inline FamilyCheck verify_family(const FamilyTemplate& tmpl, unsigned max_order = 12,
                                 long check_limit = 50000) {
    FamilyCheck out;
    out.tmpl = tmpl;
    long k0 = tmpl.allow_k0 ? std::min<long>(0, tmpl.k_min) : std::max<long>(1, tmpl.k_min);
    for (long kv = k0; kv <= tmpl.k_max; ++kv) {
        FamilyCheckRow row;
        row.k = kv;
        Int k(kv);
        row.y = tmpl.y_at(k);
        if (tmpl.x <= 0 || row.y <= tmpl.x) {
            row.skipped = true;
            row.detail = "degenerate instantiation (needs 0 < x < y)";
            out.rows.push_back(std::move(row));
            continue;
        }
        LinearRecurrence expected = tmpl.instantiate(k);

        PisotParams params;
        params.x = tmpl.x;
        params.y = row.y;
        params.r = Rat(1, 2);
        DecisionReport rep = end_to_end(params, max_order, check_limit);
        row.verdict = rep.verdict;
        row.guess_matches = rep.recurrence && *rep.recurrence == expected;
        if (!row.guess_matches) row.detail = "guessed recurrence differs from template";
        else if (rep.verdict != Verdict::Proved) row.detail = rep.reason;
        if (!row.skipped && (!row.guess_matches || row.verdict != Verdict::Proved))
            out.all_passed = false;
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace pisot
