#include "umbrella/hopf.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "umbrella/literal.hpp"
#include "umbrella/matrix.hpp"

namespace umb {

QuotientHopf::QuotientHopf(Presentation presentation, HopfData data)
    : system_(std::make_unique<ReductionSystem>(std::move(presentation))), data_(std::move(data)) {
  const std::size_t n = system_->alphabet().size();
  if (data_.delta.size() != n || data_.counit.size() != n || data_.antipode.size() != n)
    throw std::invalid_argument("Hopf data must cover every generator");
  for (const auto& d : data_.delta)
    if (d.arity() != 2) throw std::invalid_argument("coproduct values must lie in the tensor square");
}

void QuotientHopf::require_verified() const {
  if (!verified_) throw std::logic_error("Hopf structure has not been verified");
}

QuotientHopf::Verification QuotientHopf::verify(std::uint64_t seed, int samples) {
  Verification v;
  v.confluence = system_->check_confluence();
  if (v.confluence.confluent) {
    v.hopf_ideal = check_hopf_ideal(*this);
    if (v.hopf_ideal->pass) v.coalgebra = check_coalgebra_axioms(*this, seed, samples);
  }
  v.pass = v.confluence.confluent && v.hopf_ideal && v.hopf_ideal->pass && v.coalgebra && v.coalgebra->pass;
  verified_ = v.pass;
  return v;
}

TensorPoly QuotientHopf::nf(const TensorPoly& t) const {
  TensorPoly out(alphabet_ptr(), t.arity());
  for (const auto& [tuple, c] : t.terms()) {
    // expand the product of the componentwise normal forms
    std::vector<std::pair<WordTuple, Scalar>> partial{{WordTuple{}, c}};
    for (const auto& w : tuple) {
      const NCPoly& f = system_->normal_form(w);
      std::vector<std::pair<WordTuple, Scalar>> next;
      next.reserve(partial.size() * f.size());
      for (const auto& [pt, pc] : partial) {
        for (const auto& [u, a] : f.terms()) {
          WordTuple nt = pt;
          nt.push_back(u);
          next.emplace_back(std::move(nt), pc * a);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [pt, pc] : partial) out.add_term(pt, pc);
  }
  return out;
}

TensorPoly QuotientHopf::mul_nf(const TensorPoly& a, const TensorPoly& b) const { return nf(mul(a, b)); }

TensorPoly QuotientHopf::coproduct(const Word& w) const {
  {
    std::lock_guard lock(memo_mutex_);
    auto it = coproduct_memo_.find(w);
    if (it != coproduct_memo_.end()) return it->second;
  }
  TensorPoly out(alphabet_ptr(), 2);
  if (w.empty()) {
    out.add_term({Word{}, Word{}}, 1);
  } else if (w.size() == 1) {
    out = nf(data_.delta[static_cast<std::size_t>(w[0])]);
  } else {
    out = mul_nf(coproduct(w.subword(0, w.size() - 1)), coproduct(w.subword(w.size() - 1)));
  }
  std::lock_guard lock(memo_mutex_);
  return coproduct_memo_.try_emplace(w, std::move(out)).first->second;
}

TensorPoly QuotientHopf::coproduct(const NCPoly& f) const {
  TensorPoly out(alphabet_ptr(), 2);
  for (const auto& [w, c] : f.terms()) out.add_scaled(coproduct(w), c);
  return out;
}

Scalar QuotientHopf::counit(const NCPoly& f) const {
  Scalar total = 0;
  for (const auto& [w, c] : f.terms()) {
    Scalar t = c;
    for (std::size_t k = 0; k < w.size() && !is_zero(t); ++k) t *= data_.counit[static_cast<std::size_t>(w[k])];
    total += t;
  }
  return total;
}

TensorPoly QuotientHopf::delta_reduced(const NCPoly& f) const {
  if (!is_zero(counit(f))) throw std::invalid_argument("reduced coproduct needs counit zero");
  const NCPoly g = nf(f);
  const NCPoly one = NCPoly::constant(alphabet_ptr(), 1);
  return coproduct(g) - TensorPoly::pure(g, one) - TensorPoly::pure(one, g);
}

const TensorPoly& QuotientHopf::reduced_coproduct(const Word& w) const {
  {
    std::lock_guard lock(memo_mutex_);
    auto it = reduced_memo_.find(w);
    if (it != reduced_memo_.end()) return it->second;
  }
  TensorPoly d = delta_reduced(NCPoly(alphabet_ptr(), w));
  std::lock_guard lock(memo_mutex_);
  return reduced_memo_.try_emplace(w, std::move(d)).first->second;
}

NCPoly QuotientHopf::antipode(const NCPoly& f) const {
  NCPoly out(alphabet_ptr());
  for (const auto& [w, c] : f.terms()) {
    NCPoly t = NCPoly::constant(alphabet_ptr(), c);
    for (std::size_t k = w.size(); k-- > 0;) t = nf(t * data_.antipode[static_cast<std::size_t>(w[k])]);
    out += t;
  }
  return nf(out);
}

CheckResult check_hopf_ideal(QuotientHopf& H) {
  ReductionSystem& R = H.system();
  if (R.confluence() == Confluence::unknown) R.check_confluence();
  if (R.confluence() != Confluence::yes)
    throw std::logic_error("Hopf ideal check refused: reduction system is not confluent");
  CheckResult res;
  const Presentation& p = H.presentation();
  const Alphabet& a = H.alphabet();
  const int n = static_cast<int>(a.size());
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const NCPoly g = p.relation(i, j);
      const std::string name = "(" + a[i].name + "," + a[j].name + ")";
      const TensorPoly d = H.coproduct(g);
      if (!d.is_zero()) res.fail("coproduct of relation " + name, format_tensor(d));
      const Scalar e = H.counit(g);
      if (!is_zero(e)) res.fail("counit of relation " + name, to_string(e));
      const NCPoly s = H.antipode(g);
      if (!s.is_zero()) res.fail("antipode of relation " + name, format_polynomial(s));
    }
  }
  return res;
}

std::vector<Word> sample_normal_words(const Alphabet& alphabet, int max_weight, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Word> out;
  const int n = static_cast<int>(alphabet.size());
  if (n == 0 || max_weight < 1) return out;
  std::uniform_int_distribution<int> pick_weight(1, max_weight);
  std::uniform_int_distribution<int> pick_letter(0, n - 1);
  while (static_cast<int>(out.size()) < count) {
    int budget = pick_weight(rng);
    std::vector<int> letters;
    for (int tries = 0; budget > 0 && tries < 64; ++tries) {
      const int id = pick_letter(rng);
      if (alphabet.weight(id) > budget) continue;
      letters.push_back(id);
      budget -= alphabet.weight(id);
    }
    if (letters.empty()) continue;
    std::sort(letters.begin(), letters.end());
    out.emplace_back(letters);
  }
  return out;
}

namespace {

// Apply Delta to component k of every term.
TensorPoly expand_component(const QuotientHopf& H, const TensorPoly& t, std::size_t k) {
  TensorPoly out(H.alphabet_ptr(), t.arity() + 1);
  for (const auto& [tuple, c] : t.terms()) {
    const TensorPoly d_k = H.coproduct(tuple[k]);
    for (const auto& [pair, d] : d_k.terms()) {
      WordTuple nt;
      nt.reserve(tuple.size() + 1);
      nt.insert(nt.end(), tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(k));
      nt.push_back(pair[0]);
      nt.push_back(pair[1]);
      nt.insert(nt.end(), tuple.begin() + static_cast<std::ptrdiff_t>(k) + 1, tuple.end());
      out.add_term(nt, c * d);
    }
  }
  return out;
}

}  // namespace

CheckResult check_coalgebra_axioms(const QuotientHopf& H, std::uint64_t seed, int samples) {
  CheckResult res;
  const Alphabet& a = H.alphabet();
  std::vector<Word> elems;
  for (int id = 0; id < static_cast<int>(a.size()); ++id) elems.push_back(Word::letter(id));
  const auto sampled = sample_normal_words(a, 4, samples, seed);
  elems.insert(elems.end(), sampled.begin(), sampled.end());
  res.notes.push_back(std::to_string(a.size()) + " generators and " + std::to_string(sampled.size()) +
                      " sampled monomials (seed " + std::to_string(seed) + ")");
  const NCPoly one = NCPoly::constant(H.alphabet_ptr(), 1);
  for (const Word& w : elems) {
    const std::string name = format_word(a, w);
    const NCPoly u = H.nf(NCPoly(H.alphabet_ptr(), w));
    const TensorPoly d = H.coproduct(u);
    const TensorPoly left = expand_component(H, d, 0);
    const TensorPoly right = expand_component(H, d, 1);
    if (!(left == right)) res.fail("coassociativity on " + name, format_tensor(left - right));

    NCPoly el(H.alphabet_ptr()), er(H.alphabet_ptr());
    NCPoly sl(H.alphabet_ptr()), sr(H.alphabet_ptr());
    for (const auto& [t, c] : d.terms()) {
      el.add_scaled(NCPoly(H.alphabet_ptr(), t[1]), c * H.counit(NCPoly(H.alphabet_ptr(), t[0])));
      er.add_scaled(NCPoly(H.alphabet_ptr(), t[0]), c * H.counit(NCPoly(H.alphabet_ptr(), t[1])));
      sl.add_scaled(H.nf(H.antipode(NCPoly(H.alphabet_ptr(), t[0])) * NCPoly(H.alphabet_ptr(), t[1])), c);
      sr.add_scaled(H.nf(NCPoly(H.alphabet_ptr(), t[0]) * H.antipode(NCPoly(H.alphabet_ptr(), t[1]))), c);
    }
    if (!(el == u)) res.fail("left counit on " + name, format_polynomial(el - u));
    if (!(er == u)) res.fail("right counit on " + name, format_polynomial(er - u));
    const NCPoly eps = one * H.counit(u);
    if (!(sl == eps)) res.fail("left antipode on " + name, format_polynomial(sl - eps));
    if (!(sr == eps)) res.fail("right antipode on " + name, format_polynomial(sr - eps));
  }
  return res;
}

TensorPoly delta_first(const QuotientHopf& H, const TensorPoly& t) {
  TensorPoly out(H.alphabet_ptr(), t.arity() + 1);
  for (const auto& [tuple, c] : t.terms()) {
    if (tuple[0].empty()) throw std::logic_error("reduced coproduct applied to a scalar component");
    for (const auto& [pair, d] : H.reduced_coproduct(tuple[0]).terms()) {
      WordTuple nt{pair[0], pair[1]};
      nt.insert(nt.end(), tuple.begin() + 1, tuple.end());
      out.add_term(nt, c * d);
    }
  }
  return out;
}

int order(const QuotientHopf& H, const NCPoly& f, int cutoff) {
  NCPoly g = H.nf(f);
  if (g.is_zero()) throw std::invalid_argument("order of zero is undefined");
  const Scalar e = H.counit(g);
  g.add_term(Word{}, -e);
  if (g.is_zero()) return 0;
  TensorPoly t = H.delta_reduced(g);
  for (int m = 1; m <= cutoff; ++m) {
    if (t.is_zero()) return m;
    t = delta_first(H, t);
  }
  throw std::runtime_error("order > cutoff");
}

std::vector<NCPoly> primitive_space(const QuotientHopf& H, int weight_cutoff) {
  const auto words = enumerate_normal_words(H.system(), weight_cutoff, true).words;
  std::vector<Word> cols;
  for (const auto& w : words)
    if (!w.empty()) cols.push_back(w);
  std::map<WordTuple, SparseVector, TupleLess> rows(TupleLess{&H.alphabet()});
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const TensorPoly d = H.delta_reduced(NCPoly(H.alphabet_ptr(), cols[c]));
    for (const auto& [t, a] : d.terms()) rows[t][c] = a;
  }
  SparseEliminator elim(cols.size());
  for (auto& [t, row] : rows) elim.add_row(std::move(row));
  std::vector<NCPoly> basis;
  for (const auto& v : elim.nullspace()) {
    NCPoly p(H.alphabet_ptr());
    for (const auto& [c, a] : v) p.add_term(cols[c], a);
    basis.push_back(std::move(p));
  }
  return basis;
}

CommutatorFiltrationReport check_commutator_filtration(const QuotientHopf& H, int k, int bound) {
  constexpr std::size_t kMaxListed = 50;
  CommutatorFiltrationReport rep;
  const Alphabet& a = H.alphabet();
  // Orders never exceed weights here (generators have order <= weight), so
  // words of weight <= bound cover every monomial of order <= bound - 1.
  const auto words = enumerate_normal_words(H.system(), bound, true).words;
  std::vector<std::pair<Word, int>> mons;
  for (const auto& w : words) {
    if (w.empty()) continue;
    const int o = order(H, NCPoly(H.alphabet_ptr(), w), bound + 1);
    if (o <= bound - 1) mons.emplace_back(w, o);
  }
  // wlex order, so the first witness found is a shortest one
  std::sort(mons.begin(), mons.end(), [&](const auto& l, const auto& r) {
    return wlex_compare(a, l.first, r.first) == std::strong_ordering::less;
  });
  bool first = true;
  for (std::size_t p = 0; p < mons.size(); ++p) {
    for (std::size_t q = p + 1; q < mons.size(); ++q) {
      const auto& [u, ou] = mons[p];
      const auto& [v, ov] = mons[q];
      if (ou + ov > bound) continue;
      ++rep.pairs;
      const NCPoly c = H.nf(commutator(NCPoly(H.alphabet_ptr(), u), NCPoly(H.alphabet_ptr(), v)));
      if (c.is_zero()) continue;
      const int oc = order(H, c, ou + ov + 1);
      const int slack = ou + ov - k - oc;
      if (first || slack < rep.worst_slack) {
        rep.worst_slack = slack;
        rep.witness = "[" + format_word(a, u) + ", " + format_word(a, v) + "] = " + format_polynomial(c) +
                      " has order " + std::to_string(oc);
        first = false;
      }
      if (slack < 0 && ++rep.violations <= kMaxListed)
        rep.result.fail("[" + format_word(a, u) + ", " + format_word(a, v) + "] order " + std::to_string(oc) +
                            " > " + std::to_string(ou) + " + " + std::to_string(ov) + " - " + std::to_string(k),
                        format_polynomial(c));
    }
  }
  if (rep.violations > 0) rep.result.pass = false;
  if (rep.violations > kMaxListed)
    rep.result.notes.push_back(std::to_string(rep.violations - kMaxListed) + " further violations not listed");
  return rep;
}

}  // namespace umb
