#include "umbrella/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "umbrella/literal.hpp"

namespace umb {

namespace {

Scalar scalar_from_json(const json& v) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  throw std::invalid_argument("matrix entries must be \"p/q\" strings or integers");
}

}  // namespace

RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be a JSON array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("matrix rows must have equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(j[i][k]);
  }
  return m;
}

json matrix_to_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

RationalMatrix load_antisymmetric_matrix(const std::string& path) {
  const json j = read_json_file(path);
  RationalMatrix m = matrix_from_json(j.is_object() && j.contains("A") ? j["A"] : j);
  if (!m.is_antisymmetric()) throw std::invalid_argument("matrix in " + path + " is not antisymmetric");
  return m;
}

json presentation_to_json(const Presentation& p, const HopfData& h) {
  const Alphabet& a = p.alphabet();
  json gens = json::array();
  for (const auto& g : a.generators()) gens.push_back({{"name", g.name}, {"weight", g.weight}});
  json rels = json::array();
  const int n = static_cast<int>(a.size());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) rels.push_back({{"pair", {i, j}}, {"f", format_polynomial(p.f(i, j))}});
  json delta = json::object(), antipode = json::object(), counit = json::object();
  for (int id = 0; id < n; ++id) {
    json terms = json::array();
    for (auto it = h.delta[id].terms().rbegin(); it != h.delta[id].terms().rend(); ++it)
      terms.push_back({to_string(it->second), format_word(a, it->first[0]), format_word(a, it->first[1])});
    delta[a[id].name] = std::move(terms);
    antipode[a[id].name] = format_polynomial(h.antipode[id]);
    counit[a[id].name] = to_string(h.counit[id]);
  }
  json meta;
  meta["family"] = p.meta.family;
  meta["r"] = p.meta.r >= 0 ? json(p.meta.r) : json(nullptr);
  meta["s"] = p.meta.s >= 0 ? json(p.meta.s) : json(nullptr);
  meta["A"] = p.meta.A ? matrix_to_json(*p.meta.A) : json(nullptr);
  if (p.meta.lambda) meta["lambda"] = to_string(*p.meta.lambda);
  return {{"generators", std::move(gens)},
          {"relations", std::move(rels)},
          {"hopf", {{"delta", std::move(delta)}, {"antipode", std::move(antipode)}, {"counit", std::move(counit)}}},
          {"meta", std::move(meta)}};
}

PresentationFile presentation_from_json(const json& j) {
  try {
    std::vector<Alphabet::Entry> entries;
    for (const auto& g : j.at("generators")) entries.push_back({g.at("name").get<std::string>(), g.at("weight").get<int>()});
    AlphabetPtr alpha = make_alphabet(entries);
    const Alphabet& a = *alpha;
    Presentation p(alpha);
    for (const auto& rel : j.at("relations")) {
      const int i = rel.at("pair").at(0).get<int>();
      const int k = rel.at("pair").at(1).get<int>();
      if (i >= k) throw std::invalid_argument("relation pair must be increasing");
      p.set_f(i, k, parse_polynomial(alpha, rel.at("f").get<std::string>()));
    }
    HopfData h = primitive_hopf_data(alpha);
    const json& hopf = j.at("hopf");
    for (const auto& [name, terms] : hopf.at("delta").items()) {
      const int id = a.id_of(name);
      TensorPoly t(alpha, 2);
      for (const auto& term : terms) {
        if (!term.is_array() || term.size() != 3) throw std::invalid_argument("delta terms are [coef, left, right]");
        t.add_term({parse_word(a, term[1].get<std::string>()), parse_word(a, term[2].get<std::string>())},
                   parse_scalar(term[0].get<std::string>()));
      }
      h.delta[id] = std::move(t);
    }
    if (hopf.contains("antipode"))
      for (const auto& [name, lit] : hopf["antipode"].items())
        h.antipode[a.id_of(name)] = parse_polynomial(alpha, lit.get<std::string>());
    if (hopf.contains("counit"))
      for (const auto& [name, lit] : hopf["counit"].items()) h.counit[a.id_of(name)] = parse_scalar(lit.get<std::string>());
    if (j.contains("meta")) {
      const json& m = j["meta"];
      if (m.contains("family") && m["family"].is_string()) p.meta.family = m["family"].get<std::string>();
      if (m.contains("r") && m["r"].is_number_integer()) p.meta.r = m["r"].get<int>();
      if (m.contains("s") && m["s"].is_number_integer()) p.meta.s = m["s"].get<int>();
      if (m.contains("A") && m["A"].is_array()) p.meta.A = matrix_from_json(m["A"]);
      if (m.contains("lambda") && m["lambda"].is_string()) p.meta.lambda = parse_scalar(m["lambda"].get<std::string>());
    }
    return {std::move(p), std::move(h)};
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed presentation: ") + e.what());
  }
}

std::string content_hash(const json& j) {
  json copy = j;
  if (copy.is_object()) copy.erase("verified");
  const std::string text = copy.dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool stamp_valid(const json& j) {
  return j.is_object() && j.contains("verified") && j["verified"].is_object() && j["verified"].contains("hash") &&
         j["verified"]["hash"] == content_hash(j);
}

void stamp(json& j) { j["verified"] = {{"hash", content_hash(j)}}; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
  if (!out) throw std::invalid_argument("write failed for " + path);
}

}  // namespace umb
