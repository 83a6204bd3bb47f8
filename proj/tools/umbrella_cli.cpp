#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "umbrella/crossed.hpp"
#include "umbrella/filtration.hpp"
#include "umbrella/hopf.hpp"
#include "umbrella/io.hpp"
#include "umbrella/literal.hpp"
#include "umbrella/nakayama.hpp"
#include "umbrella/report.hpp"
#include "umbrella/umbrella.hpp"

using namespace umb;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kUnverified = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  int r = -1;
  int s = -1;
  std::string matrix;
  std::string wzz;
  int cutoff = -1;
  int k = 1;
  std::string expr;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  bool force = false;
  bool no_timing = false;
  std::string kind;
};

void add_input_options(CLI::App* cmd, RunConfig& cfg, bool positional) {
  if (positional) cmd->add_option("input", cfg.input, "presentation file (JSON)");
  cmd->add_option("--r", cfg.r, "rank parameter r of UM(r,2s)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--s", cfg.s, "half-rank s of the form")->check(CLI::NonNegativeNumber);
  cmd->add_option("--matrix", cfg.matrix, "antisymmetric matrix file for UM(A)");
  cmd->add_option("--wzz", cfg.wzz, "3-generator example with the given lambda");
  cmd->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", cfg.out, "write the JSON output here");
}

void add_check_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--seed", cfg.seed, "seed for sampled monomials");
  cmd->add_flag("--no-timing", cfg.no_timing, "report elapsed_ms as 0");
}

struct Loaded {
  Presentation presentation;
  HopfData hopf;
  std::optional<UmbrellaAlgebra> um;
  std::optional<json> file;  // parsed input file, if any
};

bool same_structure(const Presentation& p, const HopfData& h, const UmbrellaAlgebra& U) {
  json a = presentation_to_json(p, h);
  json b = presentation_to_json(U.presentation, U.hopf);
  return a["generators"] == b["generators"] && a["relations"] == b["relations"] && a["hopf"] == b["hopf"];
}

Loaded load(const RunConfig& cfg) {
  const int sources = !cfg.input.empty() + (cfg.r >= 0 || cfg.s >= 0) + !cfg.matrix.empty() + !cfg.wzz.empty();
  if (sources != 1) throw UsageError("give exactly one of: a presentation file, --r/--s, --matrix, --wzz");
  if (cfg.r >= 0 || cfg.s >= 0) {
    if (cfg.r < 0 || cfg.s < 0) throw UsageError("--r and --s go together");
    if (cfg.r < 2 * cfg.s) throw UsageError("need r >= 2s >= 0");
    UmbrellaAlgebra U = build_umbrella(cfg.r, cfg.s);
    return {U.presentation, U.hopf, U, std::nullopt};
  }
  if (!cfg.matrix.empty()) {
    UmbrellaAlgebra U = build_umbrella(load_antisymmetric_matrix(cfg.matrix));
    return {U.presentation, U.hopf, U, std::nullopt};
  }
  if (!cfg.wzz.empty()) {
    WzzExample W = build_wzz_example(parse_scalar(cfg.wzz));
    return {std::move(W.presentation), std::move(W.hopf), std::nullopt, std::nullopt};
  }
  json j = read_json_file(cfg.input);
  PresentationFile pf = presentation_from_json(j);
  Loaded out{std::move(pf.presentation), std::move(pf.hopf), std::nullopt, std::move(j)};
  const PresentationMeta& m = out.presentation.meta;
  if (m.family == "UM" && m.A && m.A->is_antisymmetric()) {
    UmbrellaAlgebra U = build_umbrella(*m.A);
    if (same_structure(out.presentation, out.hopf, U)) out.um = std::move(U);
  }
  return out;
}

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    if (!enabled_) return 0;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

void emit(const RunConfig& cfg, const json& report, const std::string& text) {
  const std::string dumped = report.dump(2) + "\n";
  if (!cfg.out.empty()) write_text_file(cfg.out, dumped);
  if (cfg.format == "json")
    std::cout << dumped;
  else
    std::cout << text;
}

json failure_list(const CheckResult& r, const std::string& stage) {
  json out = json::array();
  for (const auto& f : r.failures) out.push_back({{"stage", stage}, {"what", f.what}, {"residue", f.residue}});
  return out;
}

void append(json& a, const json& b) {
  for (const auto& x : b) a.push_back(x);
}

int cmd_gen(const RunConfig& cfg) {
  Loaded L = load(cfg);
  if (L.file) throw UsageError("gen builds presentations; use --r/--s, --matrix or --wzz");
  json pres = presentation_to_json(L.presentation, L.hopf);
  const std::size_t n = L.presentation.size();
  std::ostringstream text;
  text << "generators = " << n << "\n";
  if (L.um) text << "GKdim = " << gkdim(L.um->r, L.um->s) << "\n";
  if (!cfg.out.empty()) {
    write_text_file(cfg.out, pres.dump(2) + "\n");
    text << "wrote " << cfg.out << "\n";
  }
  if (cfg.format == "json")
    std::cout << pres.dump(2) << "\n";
  else
    std::cout << text.str();
  return kOk;
}

int cmd_check(const RunConfig& cfg) {
  Timer timer(!cfg.no_timing);
  Loaded L = load(cfg);
  const ReportTarget target = target_of(L.presentation.meta);
  json failures = json::array();
  json stages = json::object();
  bool pass = false;
  std::ostringstream text;
  try {
    QuotientHopf H(L.presentation, L.hopf);
    auto v = H.verify(cfg.seed);
    json conf = to_json(v.confluence, H.alphabet());
    if (cfg.no_timing) conf["elapsed_ms"] = 0.0;
    stages["confluence"] = conf;
    for (const auto& f : v.confluence.triples_failed) {
      const Alphabet& a = H.alphabet();
      failures.push_back({{"stage", "confluence"},
                          {"what", "triple (" + a[f.i].name + "," + a[f.j].name + "," + a[f.k].name + ")"},
                          {"residue", format_polynomial(f.residue)}});
    }
    text << "confluence: " << (v.confluence.confluent ? "pass" : "FAIL") << " (" << v.confluence.triples_total
         << " triples, " << v.confluence.triples_failed.size() << " failed)\n";
    if (v.hopf_ideal) {
      stages["hopf_ideal"] = v.hopf_ideal->pass ? "pass" : "fail";
      append(failures, failure_list(*v.hopf_ideal, "hopf_ideal"));
      text << "hopf ideal: " << (v.hopf_ideal->pass ? "pass" : "FAIL") << "\n";
    }
    if (v.coalgebra) {
      stages["coalgebra"] = v.coalgebra->pass ? "pass" : "fail";
      append(failures, failure_list(*v.coalgebra, "coalgebra"));
      text << "coalgebra axioms: " << (v.coalgebra->pass ? "pass" : "FAIL") << "\n";
    }
    pass = v.pass;
  } catch (const std::invalid_argument& e) {
    // weight conditions of the reduction system
    failures.push_back({{"stage", "reduction_system"}, {"what", e.what()}, {"residue", ""}});
    text << "reduction system: FAIL (" << e.what() << ")\n";
  }
  for (const auto& f : failures)
    text << "  " << f["stage"].get<std::string>() << ": " << f["what"].get<std::string>() << " -> "
         << f["residue"].get<std::string>() << "\n";
  text << "verdict: " << (pass ? "pass" : "FAIL") << "\n";
  json report = envelope("check", target, pass, failures, timer.ms());
  report["stages"] = stages;
  report["seed"] = cfg.seed;
  if (pass && L.file) {
    json stamped = *L.file;
    stamp(stamped);
    write_text_file(cfg.input, stamped.dump(2) + "\n");
    text << "stamped " << cfg.input << "\n";
  }
  emit(cfg, report, text.str());
  return pass ? kOk : kVerifyFailed;
}

const UmbrellaAlgebra& need_um(const Loaded& L, const std::string& kind) {
  if (!L.um) throw UsageError("query " + kind + " needs an umbrella presentation UM(A)");
  return *L.um;
}

int cmd_query(const RunConfig& cfg) {
  Timer timer(!cfg.no_timing);
  const std::string& kind = cfg.kind;

  if (kind == "iso") {
    if (cfg.matrix.empty()) throw UsageError("query iso needs --matrix");
    const RationalMatrix A = load_antisymmetric_matrix(cfg.matrix);
    const CongruenceResult c = congruence_normalize(A);
    const UmbrellaAlgebra src = build_umbrella(A);
    const UmbrellaAlgebra dst = build_umbrella(c.B);
    const IsoReport rep = iso_map(src, dst, c.P);
    json failures = json::array();
    for (const auto& f : rep.failures) failures.push_back({{"what", f}});
    json images = json::object();
    for (std::size_t id = 0; id < rep.images.size(); ++id)
      images[src.alphabet->operator[](static_cast<int>(id)).name] = format_polynomial(rep.images[id]);
    json report = envelope("query iso", {"UM", c.B.rows() ? static_cast<int>(c.B.rows()) : 0, c.s}, rep.verified,
                           failures, timer.ms());
    report["result"] = {{"P", matrix_to_json(c.P)}, {"B", matrix_to_json(c.B)}, {"s", c.s}, {"images", images}};
    std::ostringstream text;
    text << "s = " << c.s << "\n";
    for (const auto& [name, img] : images.items()) text << name << " -> " << img.get<std::string>() << "\n";
    text << "verdict: " << (rep.verified ? "verified" : "FAILED") << "\n";
    for (const auto& f : rep.failures) text << "  " << f << "\n";
    emit(cfg, report, text.str());
    return rep.verified ? kOk : kVerifyFailed;
  }

  Loaded L = load(cfg);
  QuotientHopf H(L.presentation, L.hopf);
  if (L.file) {
    if (!stamp_valid(*L.file) && !cfg.force) {
      std::cerr << "refused: " << cfg.input << " carries no valid verification stamp (run check, or pass --force)\n";
      return kUnverified;
    }
    H.system().check_confluence();
    H.assume_verified();
  } else if (!H.verify(cfg.seed).pass) {
    if (!cfg.force) {
      std::cerr << "refused: presentation failed verification (pass --force to query anyway)\n";
      return kUnverified;
    }
    H.assume_verified();
  }
  const ReportTarget target = target_of(L.presentation.meta);
  json result;
  json failures = json::array();
  bool pass = true;
  std::ostringstream text;

  if (kind == "nf") {
    if (cfg.expr.empty()) throw UsageError("query nf needs --expr");
    const NCPoly f = H.nf(parse_polynomial(H.alphabet_ptr(), cfg.expr));
    result = {{"expr", cfg.expr}, {"normal_form", format_polynomial(f)}};
    text << format_polynomial(f) << "\n";
  } else if (kind == "order") {
    if (cfg.expr.empty()) throw UsageError("query order needs --expr");
    const NCPoly f = parse_polynomial(H.alphabet_ptr(), cfg.expr);
    if (H.nf(f).is_zero()) throw UsageError("order of zero is undefined");
    const int m = order(H, f, cfg.cutoff >= 0 ? cfg.cutoff : 12);
    result = {{"expr", cfg.expr}, {"order", m}};
    text << "order = " << m << "\n";
  } else if (kind == "primitives") {
    const int cutoff = cfg.cutoff >= 0 ? cfg.cutoff : 2;
    const auto basis = primitive_space(H, cutoff);
    json b = json::array();
    for (const auto& p : basis) b.push_back(format_polynomial(p));
    result = {{"cutoff", cutoff}, {"dim", basis.size()}, {"basis", b}};
    text << "dim = " << basis.size() << "\n";
    for (const auto& p : basis) text << "  " << format_polynomial(p) << "\n";
  } else if (kind == "hilbert") {
    const int cutoff = cfg.cutoff >= 0 ? cfg.cutoff : 2;
    const auto words = enumerate_normal_words(H.system(), cutoff);
    std::vector<int> weights;
    for (const auto& g : H.alphabet().generators()) weights.push_back(g.weight);
    const auto pbw = pbw_monomial_count(weights, cutoff);
    pass = words.count == pbw;
    if (!pass) failures.push_back({{"what", "normal words != exponent vectors"}});
    result = {{"cutoff", cutoff}, {"normal_words", words.count}, {"pbw_monomials", pbw}};
    text << words.count << "\n";
  } else if (kind == "nakayama") {
    const UmbrellaAlgebra& U = need_um(L, kind);
    const auto rep = verify_nakayama(U, H.system(), nakayama_candidate(U));
    append(failures, failure_list(rep.automorphism, "automorphism"));
    append(failures, failure_list(rep.agreement, "agreement"));
    append(failures, failure_list(rep.calabi_yau, "calabi_yau"));
    json phi = json::object();
    for (std::size_t id = 0; id < rep.phi.size(); ++id)
      if (U.is_lie(static_cast<int>(id))) phi[U.alphabet->operator[](static_cast<int>(id)).name] = to_string(rep.phi[id]);
    pass = rep.pass;
    result = {{"phi_eta", phi}, {"calabi_yau", U.r == 2 * U.s}};
    text << "automorphism: " << (rep.automorphism.pass ? "pass" : "FAIL") << "\n"
         << "agreement with phi_eta: " << (rep.agreement.pass ? "pass" : "FAIL") << "\n";
    if (U.r == 2 * U.s) text << "r = 2s, sigma is the identity: " << (rep.calabi_yau.pass ? "pass" : "FAIL") << "\n";
    for (const auto& [name, v] : phi.items()) text << "  phi_eta(" << name << ") = " << v.get<std::string>() << "\n";
  } else if (kind == "crossed") {
    const UmbrellaAlgebra& U = need_um(L, kind);
    const int cutoff = cfg.cutoff >= 0 ? cfg.cutoff : 4;
    const auto rep = verify_crossed_product(U, H, cutoff);
    const std::pair<const char*, const CheckResult*> parts[] = {
        {"normalization_and_cocycle", &rep.normalization_and_cocycle},
        {"cocycle_values", &rep.cocycle_values},
        {"convolution_inverse", &rep.convolution_inverse},
        {"product_formula", &rep.product_formula},
        {"cococycle", &rep.cococycle},
        {"action", &rep.action}};
    for (const auto& [name, r] : parts) {
      append(failures, failure_list(*r, name));
      result[name] = r->pass ? "pass" : "fail";
      text << name << ": " << (r->pass ? "pass" : "FAIL") << "\n";
    }
    result["action_orientation"] = rep.action_orientation;
    result["cutoff"] = cutoff;
    text << "action orientation matching H: " << rep.action_orientation << "\n";
    pass = rep.pass;
  } else if (kind == "commfilt") {
    const int bound = cfg.cutoff >= 0 ? cfg.cutoff : 5;
    const auto rep = check_commutator_filtration(H, cfg.k, bound);
    append(failures, failure_list(rep.result, "commutator_filtration"));
    pass = rep.result.pass;
    result = {{"k", cfg.k},
              {"bound", bound},
              {"pairs", rep.pairs},
              {"violations", rep.violations},
              {"worst_slack", rep.worst_slack},
              {"witness", rep.witness}};
    text << "pairs = " << rep.pairs << ", violations = " << rep.violations << ", worst slack = " << rep.worst_slack
         << "\n"
         << "witness: " << rep.witness << "\n";
  } else {
    throw UsageError("unknown query " + kind);
  }
  json report = envelope("query " + kind, target, pass, failures, timer.ms());
  report["result"] = result;
  emit(cfg, report, text.str());
  return pass ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"umbrella: PBW, Hopf and crossed-product checks for umbrella Hopf algebras"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* gen = app.add_subcommand("gen", "write the presentation of UM(r,2s), UM(A) or the 3-generator example");
  add_input_options(gen, cfg, false);

  CLI::App* check = app.add_subcommand("check", "confluence, Hopf ideal and coalgebra axioms");
  add_input_options(check, cfg, true);
  add_check_options(check, cfg);

  CLI::App* query = app.add_subcommand("query", "nf | order | primitives | hilbert | nakayama | crossed | commfilt | iso");
  query->add_option("kind", cfg.kind, "query kind")
      ->required()
      ->check(CLI::IsMember({"nf", "order", "primitives", "hilbert", "nakayama", "crossed", "commfilt", "iso"}));
  add_input_options(query, cfg, true);
  add_check_options(query, cfg);
  query->add_option("--cutoff", cfg.cutoff, "weight, degree or order-sum cutoff")->check(CLI::NonNegativeNumber);
  query->add_option("--expr", cfg.expr, "polynomial literal");
  query->add_option("--k", cfg.k, "filtration shift for commfilt");
  query->add_flag("--force", cfg.force, "answer even without a verification stamp");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    if (gen->parsed()) return cmd_gen(cfg);
    if (check->parsed()) return cmd_check(cfg);
    return cmd_query(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
