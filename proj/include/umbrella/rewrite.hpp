#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "umbrella/matrix.hpp"
#include "umbrella/ncpoly.hpp"

namespace umb {

struct PresentationMeta {
  std::string family;  // "UM", "WZZ", "custom", ...
  int r = -1;
  int s = -1;
  std::optional<RationalMatrix> A;
  std::optional<Scalar> lambda;
};

/// Total commutator presentation: one polynomial f_ij for every pair i < j,
/// standing for the relation g_ij = z_j z_i - z_i z_j + f_ij.
class Presentation {
 public:
  explicit Presentation(AlphabetPtr alphabet);

  const Alphabet& alphabet() const { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
  std::size_t size() const { return alphabet_->size(); }

  /// Requires i < j. Unset pairs default to 0.
  void set_f(int i, int j, NCPoly f);
  const NCPoly& f(int i, int j) const;
  /// f_ij for i < j and -f_ji for i > j; zero on the diagonal.
  NCPoly f_signed(int i, int j) const;
  NCPoly relation(int i, int j) const;
  std::size_t relation_count() const { return f_.size(); }

  NCPoly gen(int id) const { return NCPoly::generator(alphabet_, id); }

  PresentationMeta meta;

 private:
  std::size_t index(int i, int j) const;

  AlphabetPtr alphabet_;
  std::vector<NCPoly> f_;
};

struct Rule {
  Word lhs;    // z_j z_i, j > i
  NCPoly rhs;  // z_i z_j - f_ij
};

enum class Strategy { leftmost, rightmost };
enum class Confluence { unknown, yes, no };

struct TripleFailure {
  int i = 0, j = 0, k = 0;
  NCPoly residue;
};

struct ConfluenceReport {
  std::size_t triples_total = 0;
  std::vector<TripleFailure> triples_failed;  // sorted by (i,j,k)
  bool confluent = false;
  /// The two-path comparison and the Jacobi-sum test gave the same verdict
  /// on every triple.
  bool methods_agree = true;
  double elapsed_ms = 0;
};

struct Triple {
  int i, j, k;
  bool operator==(const Triple&) const = default;
};

class ReductionSystem {
 public:
  /// Validates the weight conditions; throws std::invalid_argument with
  /// "condition (1) failed at (i,j)" or "condition (2) failed at (i,j)".
  explicit ReductionSystem(Presentation presentation);

  const Presentation& presentation() const { return presentation_; }
  const Alphabet& alphabet() const { return presentation_.alphabet(); }
  const AlphabetPtr& alphabet_ptr() const { return presentation_.alphabet_ptr(); }

  std::size_t rule_count() const { return rules_.size(); }
  const Rule& rule(int i, int j) const;
  const std::vector<Rule>& rules() const { return rules_; }

  /// Deterministic fixpoint. Leftmost agrees with rewriting the leftmost
  /// descent of the wlex-greatest reducible word at every step.
  NCPoly normal_form(const NCPoly& f, Strategy strategy = Strategy::leftmost) const;
  NCPoly normal_form(const Word& w, Strategy strategy = Strategy::leftmost) const;

  struct Trace {
    NCPoly result;
    std::size_t steps = 0;
  };
  /// Uncached literal loop: repeatedly rewrite the leftmost descent of the
  /// wlex-greatest reducible word. Same result as normal_form(leftmost).
  Trace reduce_traced(const NCPoly& f) const;

  Confluence confluence() const { return confluence_; }
  ConfluenceReport check_confluence();

 private:
  const NCPoly& word_nf(const Word& w, Strategy strategy) const;

  Presentation presentation_;
  std::vector<Rule> rules_;
  Confluence confluence_ = Confluence::unknown;

  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<Word, NCPoly, WordHash> memo_left_;
  mutable std::unordered_map<Word, NCPoly, WordHash> memo_right_;
};

/// All triples i < j < k, lexicographic. Commutator systems have no inclusion
/// ambiguities, so these are all the ambiguities.
std::vector<Triple> overlap_ambiguities(const ReductionSystem& R);

/// [f_ij, z_k] + [f_jk, z_i] + [f_ki, z_j] in the free algebra.
NCPoly jacobi_sum(const Presentation& p, int i, int j, int k);

struct NormalWords {
  std::uint64_t count = 0;
  std::vector<Word> words;  // filled only on request
};

/// Nondecreasing words of weight <= cutoff. Throws on cutoff < 0 and on a
/// system already known to be non-confluent.
NormalWords enumerate_normal_words(const ReductionSystem& R, int weight_cutoff, bool collect = false);

/// Number of exponent vectors d with sum d_i w_i <= cutoff.
std::uint64_t pbw_monomial_count(const std::vector<int>& weights, int cutoff);

/// Number of all words (sorted or not) of weight <= W; bounds reduction length.
std::uint64_t word_count_up_to(const Alphabet& alphabet, int W);

bool is_pbw(ReductionSystem& R);

}  // namespace umb
