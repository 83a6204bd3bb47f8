#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "umbrella/rewrite.hpp"
#include "umbrella/tensor.hpp"
#include "umbrella/umbrella.hpp"

namespace umb {

struct Failure {
  std::string what;     // relation or element the failure is about
  std::string residue;  // literal of the nonzero remainder
};

struct CheckResult {
  bool pass = true;
  std::vector<Failure> failures;
  std::vector<std::string> notes;
  void fail(std::string what, std::string residue) {
    pass = false;
    failures.push_back({std::move(what), std::move(residue)});
  }
};

constexpr std::uint64_t kDefaultSeed = 20240611;

/// Quotient of the free algebra by a confluent commutator presentation,
/// with Hopf data on the generators. Queries are only answered once the
/// pipeline (confluence, Hopf ideal, coalgebra axioms) has passed, or after
/// an explicit assume_verified().
class QuotientHopf {
 public:
  QuotientHopf(Presentation presentation, HopfData data);

  const ReductionSystem& system() const { return *system_; }
  ReductionSystem& system() { return *system_; }
  const Presentation& presentation() const { return system_->presentation(); }
  const HopfData& data() const { return data_; }
  const AlphabetPtr& alphabet_ptr() const { return system_->alphabet_ptr(); }
  const Alphabet& alphabet() const { return system_->alphabet(); }

  struct Verification {
    ConfluenceReport confluence;
    std::optional<CheckResult> hopf_ideal;
    std::optional<CheckResult> coalgebra;
    bool pass = false;
  };
  Verification verify(std::uint64_t seed = kDefaultSeed, int samples = 60);
  bool verified() const { return verified_; }
  void assume_verified() { verified_ = true; }
  void require_verified() const;

  NCPoly nf(const NCPoly& f) const { return system_->normal_form(f); }
  /// Componentwise normal form.
  TensorPoly nf(const TensorPoly& t) const;
  /// Componentwise product followed by componentwise normal form.
  TensorPoly mul_nf(const TensorPoly& a, const TensorPoly& b) const;

  /// Delta extended multiplicatively, componentwise normal.
  TensorPoly coproduct(const NCPoly& f) const;
  TensorPoly coproduct(const Word& w) const;
  /// Delta f - f(x)1 - 1(x)f; throws when eps(f) != 0.
  TensorPoly delta_reduced(const NCPoly& f) const;
  /// Reduced coproduct of a nonempty normal word, cached.
  const TensorPoly& reduced_coproduct(const Word& w) const;
  Scalar counit(const NCPoly& f) const;
  /// Anti-multiplicative extension, normal form.
  NCPoly antipode(const NCPoly& f) const;

 private:
  std::unique_ptr<ReductionSystem> system_;
  HopfData data_;
  bool verified_ = false;
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<Word, TensorPoly, WordHash> coproduct_memo_;
  mutable std::unordered_map<Word, TensorPoly, WordHash> reduced_memo_;
};

/// Generators of the relation ideal map into ker(NF(x)NF); eps and S too.
/// Refuses (throws) when the system is not confluent.
CheckResult check_hopf_ideal(QuotientHopf& H);

/// Coassociativity, counit and antipode axioms on every generator and on
/// `samples` random normal monomials of weight <= 4.
CheckResult check_coalgebra_axioms(const QuotientHopf& H, std::uint64_t seed = kDefaultSeed, int samples = 60);

/// Apply the reduced coproduct to the first tensor factor.
TensorPoly delta_first(const QuotientHopf& H, const TensorPoly& t);

/// Coradical order: 0 for nonzero scalars, else the least m >= 1 with the
/// m-fold application of delta to f - eps(f) vanishing. Throws
/// std::runtime_error("order > cutoff") past the cutoff, and on f = 0.
int order(const QuotientHopf& H, const NCPoly& f, int cutoff = 12);

/// Basis of the primitive elements spanned by normal words of weight <= cutoff.
std::vector<NCPoly> primitive_space(const QuotientHopf& H, int weight_cutoff);

struct CommutatorFiltrationReport {
  CheckResult result;
  std::size_t pairs = 0;
  std::size_t violations = 0;  // only the first 50 are itemized
  int worst_slack = 0;  // min over nonzero commutators of ord(u)+ord(v)-k-ord([u,v])
  std::string witness;
};
CommutatorFiltrationReport check_commutator_filtration(const QuotientHopf& H, int k, int bound);

/// Random normal monomials of weight in [1, max_weight]; deterministic in seed.
std::vector<Word> sample_normal_words(const Alphabet& alphabet, int max_weight, int count, std::uint64_t seed);

}  // namespace umb
