#pragma once

// JSON / b-file serialization. Arbitrary-precision integers are emitted as
// decimal strings (they exceed native integer and double ranges); enclosure
// centers and radii are dyadic rationals and print as exact finite decimals;
// bound constants print as "p/q" fractions. Reports use ordered_json so a
// parse/dump round-trip is bit-identical.

#include <ostream>
#include <string>

#include <json.hpp>

#include "pisot/decision.hpp"
#include "pisot/recurrence.hpp"
#include "pisot/roots.hpp"
#include "pisot/sequence.hpp"

namespace pisot {

using Json = nlohmann::ordered_json;

inline std::string rat_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return c.get_den() == 1 ? c.get_num().get_str() : c.get_str();
}

inline Json params_to_json(const PisotParams& p) {
    Json j;
    j["x"] = p.x.get_str();
    j["y"] = p.y.get_str();
    j["r"] = rat_string(p.r);
    j["s"] = p.order_s;
    if (!p.extra_initial_terms.empty()) {
        Json extras = Json::array();
        for (const Int& t : p.extra_initial_terms) extras.push_back(t.get_str());
        j["extra_initial_terms"] = extras;
    }
    return j;
}

// Pair-of-lists form [[d_1..d_k], [A_1..A_k]].
inline Json recurrence_to_json(const LinearRecurrence& rec) {
    Json init = Json::array(), coef = Json::array();
    for (const Int& d : rec.initial_terms) init.push_back(d.get_str());
    for (const Int& a : rec.coefficients) coef.push_back(a.get_str());
    return Json::array({init, coef});
}

inline LinearRecurrence recurrence_from_json(const Json& j) {
    LinearRecurrence rec;
    for (const auto& d : j.at(0)) rec.initial_terms.emplace_back(d.get<std::string>());
    for (const auto& a : j.at(1)) rec.coefficients.emplace_back(a.get<std::string>());
    rec.order_k = static_cast<unsigned>(rec.coefficients.size());
    rec.validate();
    return rec;
}

inline Json prefix_to_json(const SequencePrefix& p) {
    Json terms = Json::array();
    for (const Int& t : p.terms) terms.push_back(t.get_str());
    return terms;
}

// OEIS b-file: one "n a_n" line per term, n from 0.
inline void write_bfile(std::ostream& os, const SequencePrefix& p) {
    for (std::size_t n = 0; n < p.terms.size(); ++n)
        os << n << " " << p.terms[n].get_str() << "\n";
}

inline Json enclosure_to_json(const RootEnclosure& e) {
    Json j;
    j["center_re"] = dyadic_decimal_string(e.center.re);
    j["center_im"] = dyadic_decimal_string(e.center.im);
    j["radius"] = dyadic_decimal_string(e.radius);
    return j;
}

inline const char* spectrum_kind_string(SpectrumKind k) {
    switch (k) {
        case SpectrumKind::DominantContracting: return "DominantContracting";
        case SpectrumKind::SecondRootOutside: return "SecondRootOutside";
        case SpectrumKind::UnitCircleSpecial: return "UnitCircleSpecial";
        case SpectrumKind::DominantUnfit: return "DominantUnfit";
        case SpectrumKind::Ambiguous: return "Ambiguous";
    }
    return "?";
}

inline Json report_to_json(const DecisionReport& rep) {
    Json j;
    j["params"] = params_to_json(rep.params);
    j["recurrence"] = rep.recurrence ? recurrence_to_json(*rep.recurrence) : Json(nullptr);
    j["verdict"] = to_string(rep.verdict);
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    j["n0"] = rep.n0 >= 0 ? Json(rep.n0) : Json(nullptr);
    j["predicted_breakdown"] =
        rep.predicted_breakdown >= 0 ? Json(rep.predicted_breakdown) : Json(nullptr);
    j["first_failure"] = rep.first_failure >= 0 ? Json(rep.first_failure) : Json(nullptr);
    j["checked_up_to"] = rep.checked_up_to >= 0 ? Json(rep.checked_up_to) : Json(nullptr);
    j["k"] = rat_string(rep.bound_K);
    j["rho"] = rat_string(rep.bound_rho);
    j["spectrum"] = spectrum_kind_string(rep.spectrum.kind);
    j["second_root_modulus_bounds"] = Json::array(
        {rat_string(rep.spectrum.second_modulus_lower), rat_string(rep.spectrum.second_modulus_upper)});
    j["precision_bits_used"] = rep.precision_bits_used;
    return j;
}

}  // namespace pisot
