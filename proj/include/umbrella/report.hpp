#pragma once

#include <json.hpp>
#include <string>

#include "umbrella/crossed.hpp"
#include "umbrella/filtration.hpp"
#include "umbrella/hopf.hpp"
#include "umbrella/nakayama.hpp"
#include "umbrella/rewrite.hpp"

namespace umb {

using json = nlohmann::json;

struct ReportTarget {
  std::string family;
  int r = -1;
  int s = -1;
};

ReportTarget target_of(const PresentationMeta& meta);

/// {check, target:{family,r,s}, verdict, failures, elapsed_ms}; r and s are
/// null when the presentation carries no family parameters.
json envelope(const std::string& check, const ReportTarget& target, bool verdict, json failures, double elapsed_ms);

/// {triples_total, triples_failed:[{i,j,k,residue}], confluent, elapsed_ms}
json to_json(const ConfluenceReport& report, const Alphabet& alphabet);
json failures_json(const CheckResult& result);

}  // namespace umb
