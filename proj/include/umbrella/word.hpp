#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace umb {

struct Generator {
  int id = 0;
  std::string name;
  int weight = 1;
};

/// Ordered generator list. Ids are positions, so the declared order is the id order.
class Alphabet {
 public:
  struct Entry {
    std::string name;
    int weight = 1;
  };

  explicit Alphabet(const std::vector<Entry>& entries);

  std::size_t size() const { return generators_.size(); }
  const Generator& operator[](int id) const { return generators_.at(static_cast<std::size_t>(id)); }
  const std::vector<Generator>& generators() const { return generators_; }
  int weight(int id) const { return generators_[static_cast<std::size_t>(id)].weight; }
  std::optional<int> find(const std::string& name) const;
  /// Throws std::invalid_argument when the name is not declared.
  int id_of(const std::string& name) const;

  bool operator==(const Alphabet& other) const;

 private:
  std::vector<Generator> generators_;
  std::unordered_map<std::string, int> by_name_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(const std::vector<Alphabet::Entry>& entries);

/// A word in the free monoid: a flat sequence of generator ids.
class Word {
 public:
  using Letters = std::u16string;

  Word() = default;
  Word(std::initializer_list<int> ids);
  explicit Word(const std::vector<int>& ids);
  explicit Word(Letters letters) : letters_(std::move(letters)) {}

  static Word letter(int id) { return Word(Letters(1, static_cast<char16_t>(id))); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return static_cast<int>(letters_[i]); }
  const Letters& letters() const { return letters_; }

  Word subword(std::size_t pos, std::size_t len = Letters::npos) const {
    return Word(letters_.substr(pos, len));
  }
  Word& operator+=(const Word& w) {
    letters_ += w.letters_;
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  bool operator==(const Word& other) const = default;

  /// Letters are nondecreasing in id (the PBW normal words).
  bool is_sorted() const;

 private:
  Letters letters_;
};

/// Plain lexicographic order: a proper prefix is smaller, otherwise the first
/// differing letter decides.
std::strong_ordering lex_compare(const Word& u, const Word& v);

int weight(const Alphabet& alphabet, const Word& w);

/// Weight first, ties broken by lex_compare.
std::strong_ordering wlex_compare(const Alphabet& alphabet, const Word& u, const Word& v);

struct WlexLess {
  const Alphabet* alphabet = nullptr;
  bool operator()(const Word& u, const Word& v) const {
    return wlex_compare(*alphabet, u, v) == std::strong_ordering::less;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<Word::Letters>{}(w.letters());
  }
};

}  // namespace umb
