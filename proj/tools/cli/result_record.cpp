#include "result_record.hpp"

#include <json.hpp>

#include <sfvs/errors.hpp>

namespace sfvs::cli {

using nlohmann::ordered_json;

namespace {

ordered_json ids(const VertexSet& s) {
  ordered_json a = ordered_json::array();
  s.for_each([&](Vertex v) { a.push_back(v + 1); });
  return a;
}

}  // namespace

std::string format_record(const Instance& inst, const SolveReport& report, const RecordOptions& options) {
  const Solution& best = report.best;
  const VertexSet deleted = best.deleted();
  ordered_json j;
  j["n"] = inst.order();
  j["mode"] = options.mode;
  j["s"] = options.s;
  j["backend"] = options.backend;
  j["optimum_weight"] = best.weight.str();
  j["deleted_weight"] = inst.weight_of(deleted).str();
  j["forest"] = ids(best.forest);
  j["deleted"] = ids(deleted);
  j["certified"] = best.certified;
  if (inst.threshold()) {
    j["threshold"] = inst.threshold()->str();
    j["decision"] = report.decision.value_or(false);
  }
  ordered_json cls;
  cls["status"] = std::string(to_string(report.class_check.status));
  cls["s"] = report.class_check.s;
  if (report.class_check.witness) {
    ordered_json w = ordered_json::array();
    for (Vertex v : report.class_check.witness->vertices) w.push_back(v + 1);
    cls["witness"] = w;
  }
  j["class_check"] = cls;
  ordered_json stats;
  for (Branch b : kBranches) {
    const auto& s = report.stats[static_cast<std::size_t>(b)];
    stats[std::string(to_string(b))] = {{"tried", s.tried}, {"discarded", s.discarded}, {"certified", s.certified}};
  }
  j["branch_stats"] = stats;
  if (options.elapsed_ms) j["timings"] = {{"total_ms", *options.elapsed_ms}};
  return j.dump(2) + "\n";
}

ParsedRecord parse_record(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("result record is not valid JSON: ") + e.what());
  }
  try {
    ParsedRecord r;
    r.n = j.at("n").get<int>();
    r.forest = j.at("forest").get<std::vector<long long>>();
    r.deleted = j.at("deleted").get<std::vector<long long>>();
    if (j.contains("optimum_weight")) r.optimum_weight = Rational::parse(j["optimum_weight"].get<std::string>());
    if (j.contains("deleted_weight")) r.deleted_weight = Rational::parse(j["deleted_weight"].get<std::string>());
    if (j.contains("certified")) r.certified = j["certified"].get<bool>();
    if (j.contains("decision")) r.decision = j["decision"].get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed result record: ") + e.what());
  }
}

}  // namespace sfvs::cli
