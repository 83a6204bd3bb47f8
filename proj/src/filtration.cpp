#include "umbrella/filtration.hpp"

#include <map>
#include <stdexcept>

namespace umb {

namespace {

using Basis = std::vector<SparseVector>;

// Tensor coefficients grouped by the first word: w -> (second word -> coefficient)
std::map<Word, std::map<Word, Scalar, WlexLess>, WlexLess> slices(const Alphabet& a, const TensorPoly& t) {
  std::map<Word, std::map<Word, Scalar, WlexLess>, WlexLess> out(WlexLess{&a});
  for (const auto& [tuple, c] : t.terms()) {
    auto [it, inserted] = out.try_emplace(tuple[0], std::map<Word, Scalar, WlexLess>(WlexLess{&a}));
    it->second[tuple[1]] += c;
  }
  return out;
}

}  // namespace

FiltrationValidation cross_validate_filtration(const QuotientHopf& H, int max_order, int weight_cap) {
  if (max_order < 0 || weight_cap < 0) throw std::invalid_argument("cutoffs must be >= 0");
  FiltrationValidation out;
  out.weight_cap = weight_cap;
  const Alphabet& a = H.alphabet();
  const auto words = enumerate_normal_words(H.system(), weight_cap, true).words;
  std::map<Word, std::size_t, WlexLess> index(WlexLess{&a});
  for (std::size_t c = 0; c < words.size(); ++c) index.emplace(words[c], c);
  const std::size_t n = words.size();
  out.space_dim = n;
  auto coord = [&](const Word& w) {
    auto it = index.find(w);
    if (it == index.end()) throw std::logic_error("coproduct left the truncated space");
    return it->second;
  };

  std::vector<TensorPoly> coproducts;
  coproducts.reserve(n);
  for (const auto& w : words) coproducts.push_back(H.coproduct(w));

  std::vector<int> word_order(n, 0);
  for (std::size_t c = 0; c < n; ++c)
    if (!words[c].empty()) word_order[c] = order(H, NCPoly(H.alphabet_ptr(), words[c]), weight_cap + 1);

  std::vector<int> weights;
  for (const auto& g : a.generators()) weights.push_back(g.weight);

  // F~_0 = k
  SparseEliminator preimage(n);
  preimage.add_row(SparseVector{{coord(Word{}), Scalar(1)}});

  // iterated reduced coproducts, one per nonempty word
  std::vector<std::optional<TensorPoly>> iterate(n);

  out.pass = true;
  for (int m = 0; m <= max_order; ++m) {
    FiltrationLevel lvl;
    lvl.m = m;
    if (m > 0) {
      // f in F~_m iff every slice of Delta f at a nonempty first word lies in F~_{m-1}.
      std::map<std::pair<std::size_t, std::size_t>, SparseVector> constraints;
      for (std::size_t c = 0; c < n; ++c) {
        for (const auto& [first, slice] : slices(a, coproducts[c])) {
          if (first.empty()) continue;
          SparseVector v;
          for (const auto& [w, x] : slice)
            if (!is_zero(x)) v[coord(w)] = x;
          for (const auto& [t, x] : preimage.reduce(std::move(v))) constraints[{coord(first), t}][c] += x;
        }
      }
      SparseEliminator eq(n);
      for (auto& [key, row] : constraints) {
        for (auto it = row.begin(); it != row.end();) it = is_zero(it->second) ? row.erase(it) : std::next(it);
        eq.add_row(std::move(row));
      }
      SparseEliminator next(n);
      for (auto& v : eq.nullspace()) next.add_row(std::move(v));
      preimage = std::move(next);
    }
    lvl.preimage_dim = preimage.rank();

    // k + {f in V+ : delta applied m times vanishes}
    SparseEliminator kernel(n);
    kernel.add_row(SparseVector{{coord(Word{}), Scalar(1)}});
    if (m > 0) {
      std::map<WordTuple, SparseVector, TupleLess> rows(TupleLess{&a});
      for (std::size_t c = 0; c < n; ++c) {
        if (words[c].empty()) continue;
        if (!iterate[c]) iterate[c] = H.delta_reduced(NCPoly(H.alphabet_ptr(), words[c]));
        else iterate[c] = delta_first(H, *iterate[c]);
        for (const auto& [t, x] : iterate[c]->terms()) rows[t][c] = x;
      }
      SparseEliminator eq(n);
      for (auto& [t, row] : rows) eq.add_row(std::move(row));
      for (auto& v : eq.nullspace()) {
        v.erase(coord(Word{}));
        kernel.add_row(std::move(v));
      }
    }
    lvl.kernel_dim = kernel.rank();

    SparseEliminator sum(n);
    for (auto v : preimage.basis()) sum.add_row(std::move(v));
    for (auto v : kernel.basis()) sum.add_row(std::move(v));
    lvl.sum_dim = sum.rank();

    for (std::size_t c = 0; c < n; ++c)
      if (word_order[c] <= m) ++lvl.monomials;
    lvl.pbw_count = pbw_monomial_count(weights, m);
    lvl.agree = lvl.preimage_dim == lvl.kernel_dim && lvl.sum_dim == lvl.kernel_dim;
    lvl.hilbert_agree = lvl.monomials == lvl.pbw_count && lvl.kernel_dim == lvl.pbw_count;
    out.pass = out.pass && lvl.agree && lvl.hilbert_agree;
    out.levels.push_back(lvl);
  }
  return out;
}

}  // namespace umb
