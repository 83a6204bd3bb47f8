#include "umbrella/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "umbrella/scalar.hpp"

namespace umb {

Scalar parse_scalar(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Scalar q;
  q.get_num() = mpz_class(n, 10);
  q.get_den() = mpz_class(std::string(den), 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

Alphabet::Alphabet(const std::vector<Entry>& entries) {
  generators_.reserve(entries.size());
  if (entries.size() > 0xFFFF) throw std::invalid_argument("too many generators");
  for (const auto& e : entries) {
    const int id = static_cast<int>(generators_.size());
    if (e.name.empty()) throw std::invalid_argument("generator name must be nonempty");
    if (e.weight < 1) throw std::invalid_argument("generator '" + e.name + "' has weight < 1");
    if (!by_name_.emplace(e.name, id).second) {
      throw std::invalid_argument("duplicate generator name '" + e.name + "'");
    }
    generators_.push_back({id, e.name, e.weight});
  }
}

std::optional<int> Alphabet::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

int Alphabet::id_of(const std::string& name) const {
  if (auto id = find(name)) return *id;
  throw std::invalid_argument("unknown generator '" + name + "'");
}

bool Alphabet::operator==(const Alphabet& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (generators_[i].name != other.generators_[i].name ||
        generators_[i].weight != other.generators_[i].weight) {
      return false;
    }
  }
  return true;
}

AlphabetPtr make_alphabet(const std::vector<Alphabet::Entry>& entries) {
  return std::make_shared<const Alphabet>(entries);
}

Word::Word(std::initializer_list<int> ids) {
  letters_.reserve(ids.size());
  for (int id : ids) letters_.push_back(static_cast<char16_t>(id));
}

Word::Word(const std::vector<int>& ids) {
  letters_.reserve(ids.size());
  for (int id : ids) letters_.push_back(static_cast<char16_t>(id));
}

bool Word::is_sorted() const { return std::is_sorted(letters_.begin(), letters_.end()); }

std::strong_ordering lex_compare(const Word& u, const Word& v) {
  const int c = u.letters().compare(v.letters());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int weight(const Alphabet& alphabet, const Word& w) {
  int total = 0;
  for (char16_t c : w.letters()) total += alphabet.weight(static_cast<int>(c));
  return total;
}

std::strong_ordering wlex_compare(const Alphabet& alphabet, const Word& u, const Word& v) {
  const int wu = weight(alphabet, u);
  const int wv = weight(alphabet, v);
  if (wu != wv) return wu <=> wv;
  return lex_compare(u, v);
}

}  // namespace umb
