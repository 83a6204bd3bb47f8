#pragma once

#include <optional>
#include <string>

#include "umbrella/report.hpp"
#include "umbrella/umbrella.hpp"

namespace umb {

/// Matrix as a JSON array of rows of "p/q" strings (integers also accepted).
RationalMatrix matrix_from_json(const json& j);
json matrix_to_json(const RationalMatrix& m);
/// Reads a matrix file and checks antisymmetry. Throws std::invalid_argument.
RationalMatrix load_antisymmetric_matrix(const std::string& path);

struct PresentationFile {
  Presentation presentation;
  HopfData hopf;
};

/// {generators, relations, hopf:{delta, antipode, counit}, meta}. The
/// "verified" stamp, when present, is ignored here.
json presentation_to_json(const Presentation& p, const HopfData& h);
PresentationFile presentation_from_json(const json& j);

/// FNV-1a 64 of the compact dump of j without its "verified" member, as hex.
std::string content_hash(const json& j);
/// True when j carries a "verified" stamp matching its content.
bool stamp_valid(const json& j);
void stamp(json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace umb
