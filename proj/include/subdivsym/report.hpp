#ifndef SUBDIVSYM_REPORT_HPP
#define SUBDIVSYM_REPORT_HPP

#include <string>

#include <json.hpp>

#include "subdivsym/symmetry.hpp"

namespace subdivsym {

using Json = nlohmann::ordered_json;

inline Json to_json(const Witness& w) {
  Json j;
  j["reason"] = w.reason;
  j["vertex"] = w.vertex ? Json(*w.vertex) : Json(nullptr);
  j["level"] = w.level;
  j["first"] = w.first;
  j["second"] = w.second;
  return j;
}

/// Field order is part of the format; see docs/report_schema.md.
inline Json to_json(const TransitivityReport& r) {
  Json j;
  j["kind"] = r.kind.name();
  j["s"] = r.kind.s;
  j["verdict"] = r.verdict;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["orbit_counts"] = r.orbit_counts;
  return j;
}

}  // namespace subdivsym

#endif  // SUBDIVSYM_REPORT_HPP
