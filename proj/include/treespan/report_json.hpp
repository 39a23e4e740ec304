#ifndef TREESPAN_REPORT_JSON_HPP_
#define TREESPAN_REPORT_JSON_HPP_

#include "json.hpp"
#include "treespan/spanner.hpp"
#include "treespan/verify.hpp"

namespace treespan {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kToolVersion = "0.1.0";

inline nlohmann::json to_json(const StretchReport& r) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["mode"] = r.mode;
  j["max_additive"] = r.max_additive;
  j["max_multiplicative"] = {{"num", r.max_multiplicative.num},
                             {"den", r.max_multiplicative.den},
                             {"value", r.max_multiplicative.value()}};
  j["witness_add"] = {r.witness_add.u, r.witness_add.v};
  j["witness_mult"] = {r.witness_mult.u, r.witness_mult.v};
  if (r.bound_checked)
    j["bound_checked"] = *r.bound_checked;
  else
    j["bound_checked"] = nullptr;
  j["bound_holds"] = r.bound_holds;
  j["pairs_checked"] = r.pairs_checked;
  if (r.mode == "sampled") j["seed"] = r.seed;
  return j;
}

inline nlohmann::json to_json(const BuildTrace& t) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : t.levels) {
    nlohmann::json lj;
    lj["level"] = l.level;
    lj["added"] = l.added_targets;
    lj["subtree_size"] = l.subtree_size;
    if (l.measured_additive_slack)
      lj["additive_slack"] = *l.measured_additive_slack;
    else
      lj["additive_slack"] = nullptr;
    lj["seconds"] = l.seconds;
    levels.push_back(std::move(lj));
  }
  return nlohmann::json{{"depth", t.depth}, {"levels", std::move(levels)}};
}

inline nlohmann::json to_json(const BuildResult& r) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["rho"] = r.rho;
  j["d"] = r.depth;
  j["bound"] = r.bound;
  j["stretch"] = to_json(r.report);
  j["trace"] = to_json(r.trace);
  return j;
}

}  // namespace treespan

#endif  // TREESPAN_REPORT_JSON_HPP_
