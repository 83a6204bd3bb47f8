#include "umbrella/report.hpp"

#include "umbrella/literal.hpp"

namespace umb {

ReportTarget target_of(const PresentationMeta& meta) { return {meta.family, meta.r, meta.s}; }

json envelope(const std::string& check, const ReportTarget& target, bool verdict, json failures, double elapsed_ms) {
  json t;
  t["family"] = target.family;
  t["r"] = target.r >= 0 ? json(target.r) : json(nullptr);
  t["s"] = target.s >= 0 ? json(target.s) : json(nullptr);
  json out;
  out["check"] = check;
  out["target"] = std::move(t);
  out["verdict"] = verdict ? "pass" : "fail";
  out["failures"] = failures.is_null() ? json::array() : std::move(failures);
  out["elapsed_ms"] = elapsed_ms;
  return out;
}

json to_json(const ConfluenceReport& report, const Alphabet& alphabet) {
  json failed = json::array();
  for (const auto& f : report.triples_failed) {
    failed.push_back({{"i", f.i},
                      {"j", f.j},
                      {"k", f.k},
                      {"generators", {alphabet[f.i].name, alphabet[f.j].name, alphabet[f.k].name}},
                      {"residue", format_polynomial(f.residue)}});
  }
  return {{"triples_total", report.triples_total},
          {"triples_failed", std::move(failed)},
          {"confluent", report.confluent},
          {"methods_agree", report.methods_agree},
          {"elapsed_ms", report.elapsed_ms}};
}

json failures_json(const CheckResult& result) {
  json out = json::array();
  for (const auto& f : result.failures) out.push_back({{"what", f.what}, {"residue", f.residue}});
  return out;
}

}  // namespace umb
