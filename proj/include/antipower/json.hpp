#pragma once

// JSON forms of witnesses, classifications, constants and scan reports. Requires
// nlohmann/json on the include path.

#include <nlohmann/json.hpp>

#include "antipower/antipower.hpp"
#include "antipower/construct.hpp"
#include "antipower/morphism.hpp"
#include "antipower/verify.hpp"

namespace antipower {

using Json = nlohmann::ordered_json;

/// {"start", "k", "block_length", "c", "blocks", "tag"}
inline Json to_json(const AntiPowerWitness& w) {
  Json blocks = Json::array();
  for (const auto& b : w.blocks) blocks.push_back(std::string(b.str()));
  Json out;
  out["start"] = w.start;
  out["k"] = w.k;
  out["block_length"] = w.block_length;
  out["c"] = w.candidate_c ? Json(*w.candidate_c) : Json(nullptr);
  out["blocks"] = std::move(blocks);
  out["tag"] = to_string(w.tag);
  return out;
}

inline Json frame_json(const OccurrencePattern& p, const FrameParameters& f, Index ell) {
  Json out;
  out["i1"] = p.i1;
  out["i2"] = p.i2;
  out["i3"] = p.i3;
  out["i4"] = p.i4;
  out["d1"] = p.d1;
  out["d2"] = p.d2;
  out["j0"] = f.j0;
  out["j1"] = f.j1;
  out["j2"] = f.j2;
  out["D"] = f.D;
  out["ell"] = ell;
  return out;
}

/// Witness object with the extra "frame" member.
inline Json to_json(const FiveAntiPower& ap) {
  Json out = to_json(ap.witness);
  out["frame"] = frame_json(ap.pattern, ap.frame, ap.anchor.ell);
  return out;
}

inline Json to_json(const Classification& c) {
  Json out;
  out["aperiodic"] = c.aperiodic;
  out["uniformly_recurrent"] = c.uniformly_recurrent;
  out["reason"] = to_string(c.reason);
  return out;
}

inline Json to_json(const RecurrenceConstant& rc) {
  Json out;
  out["c1"] = rc.c1;
  out["marker"] = std::string(rc.marker.str());
  out["C"] = rc.C;
  return out;
}

inline Json to_json(const Finding& f) {
  Json out;
  out["what"] = f.what;
  for (const auto& [name, value] : f.at) out[name] = value;
  return out;
}

/// {"property", "checked", "violations", "params"}, plus "observations" when there are any.
inline Json to_json(const ScanReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  Json params = Json::object();
  for (const auto& [name, value] : r.parameters) params[name] = value;
  Json out;
  out["property"] = to_string(r.property);
  out["checked"] = r.instances_checked;
  out["violations"] = std::move(violations);
  out["params"] = std::move(params);
  if (!r.observations.empty()) {
    Json obs = Json::array();
    for (const auto& o : r.observations) obs.push_back(to_json(o));
    out["observations"] = std::move(obs);
  }
  return out;
}

}  // namespace antipower
