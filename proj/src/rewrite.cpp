#include "umbrella/rewrite.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

namespace umb {

Presentation::Presentation(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  const std::size_t n = alphabet_->size();
  f_.assign(n * (n - (n > 0 ? 1 : 0)) / 2, NCPoly(alphabet_));
}

std::size_t Presentation::index(int i, int j) const {
  if (i < 0 || j <= i || static_cast<std::size_t>(j) >= size())
    throw std::out_of_range("relation pair must satisfy 0 <= i < j < n");
  const auto jj = static_cast<std::size_t>(j);
  return jj * (jj - 1) / 2 + static_cast<std::size_t>(i);
}

void Presentation::set_f(int i, int j, NCPoly f) {
  if (f.alphabet_ptr() != alphabet_ && !(f.alphabet() == *alphabet_))
    throw std::invalid_argument("relation over a different alphabet");
  f_[index(i, j)] = std::move(f);
}

const NCPoly& Presentation::f(int i, int j) const { return f_[index(i, j)]; }

NCPoly Presentation::f_signed(int i, int j) const {
  if (i == j) return NCPoly(alphabet_);
  return i < j ? f(i, j) : -f(j, i);
}

NCPoly Presentation::relation(int i, int j) const {
  NCPoly g(alphabet_, Word{j, i});
  g.add_term(Word{i, j}, -1);
  g += f(i, j);
  return g;
}

ReductionSystem::ReductionSystem(Presentation presentation) : presentation_(std::move(presentation)) {
  const Alphabet& a = presentation_.alphabet();
  const int n = static_cast<int>(a.size());
  for (int i = 0; i + 1 < n; ++i) {
    if (a.weight(i) > a.weight(i + 1))
      throw std::invalid_argument("condition (1) failed at (" + std::to_string(i) + "," + std::to_string(i + 1) + ")");
  }
  rules_.reserve(presentation_.relation_count());
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const NCPoly& f = presentation_.f(i, j);
      if (!f.is_zero() && weight(a, f.leading_word()) >= a.weight(i) + a.weight(j))
        throw std::invalid_argument("condition (2) failed at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      NCPoly rhs(presentation_.alphabet_ptr(), Word{i, j});
      rhs -= f;
      rules_.push_back(Rule{Word{j, i}, std::move(rhs)});
    }
  }
}

const Rule& ReductionSystem::rule(int i, int j) const {
  if (i < 0 || j <= i || static_cast<std::size_t>(j) >= alphabet().size())
    throw std::out_of_range("rule pair must satisfy i < j");
  const auto jj = static_cast<std::size_t>(j);
  return rules_[jj * (jj - 1) / 2 + static_cast<std::size_t>(i)];
}

namespace {

std::optional<std::size_t> find_descent(const Word& w, Strategy strategy) {
  if (w.size() < 2) return std::nullopt;
  if (strategy == Strategy::leftmost) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
      if (w[p] > w[p + 1]) return p;
  } else {
    for (std::size_t p = w.size() - 1; p-- > 0;)
      if (w[p] > w[p + 1]) return p;
  }
  return std::nullopt;
}

}  // namespace

const NCPoly& ReductionSystem::word_nf(const Word& w, Strategy strategy) const {
  auto& memo = strategy == Strategy::leftmost ? memo_left_ : memo_right_;
  {
    std::lock_guard lock(memo_mutex_);
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
  }
  NCPoly result(alphabet_ptr());
  if (auto p = find_descent(w, strategy)) {
    const Word prefix = w.subword(0, *p);
    const Word suffix = w.subword(*p + 2);
    const int j = w[*p];
    const int i = w[*p + 1];
    result = word_nf(prefix + Word{i, j} + suffix, strategy);
    for (const auto& [u, c] : presentation_.f(i, j).terms())
      result.add_scaled(word_nf(prefix + u + suffix, strategy), -c);
  } else {
    result.add_term(w, 1);
  }
  std::lock_guard lock(memo_mutex_);
  return memo.try_emplace(w, std::move(result)).first->second;
}

NCPoly ReductionSystem::normal_form(const Word& w, Strategy strategy) const { return word_nf(w, strategy); }

NCPoly ReductionSystem::normal_form(const NCPoly& f, Strategy strategy) const {
  NCPoly out(alphabet_ptr());
  for (const auto& [w, c] : f.terms()) out.add_scaled(word_nf(w, strategy), c);
  return out;
}

ReductionSystem::Trace ReductionSystem::reduce_traced(const NCPoly& f) const {
  Trace t{f, 0};
  for (;;) {
    // Terms iterate in increasing wlex order, so scan from the top.
    const Word* target = nullptr;
    std::size_t pos = 0;
    for (auto it = t.result.terms().rbegin(); it != t.result.terms().rend(); ++it) {
      if (auto p = find_descent(it->first, Strategy::leftmost)) {
        target = &it->first;
        pos = *p;
        break;
      }
    }
    if (!target) return t;
    const Word w = *target;
    const Scalar c = t.result.coefficient(w);
    const Word prefix = w.subword(0, pos);
    const Word suffix = w.subword(pos + 2);
    const Rule& rule = this->rule(w[pos + 1], w[pos]);
    t.result.add_term(w, -c);
    for (const auto& [u, a] : rule.rhs.terms()) t.result.add_term(prefix + u + suffix, a * c);
    ++t.steps;
  }
}

NCPoly jacobi_sum(const Presentation& p, int i, int j, int k) {
  return commutator(p.f_signed(i, j), p.gen(k)) + commutator(p.f_signed(j, k), p.gen(i)) +
         commutator(p.f_signed(k, i), p.gen(j));
}

std::vector<Triple> overlap_ambiguities(const ReductionSystem& R) {
  const int n = static_cast<int>(R.alphabet().size());
  std::vector<Triple> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) out.push_back({i, j, k});
  return out;
}

ConfluenceReport ReductionSystem::check_confluence() {
  const auto start = std::chrono::steady_clock::now();
  ConfluenceReport report;
  const auto triples = overlap_ambiguities(*this);
  report.triples_total = triples.size();
  const AlphabetPtr& A = alphabet_ptr();
  for (const auto& [i, j, k] : triples) {
    // z_k z_j z_i: first rewrite z_k z_j, or first rewrite z_j z_i.
    NCPoly left = mul(NCPoly(A, Word{j, k}) - presentation_.f(j, k), presentation_.gen(i));
    NCPoly right = mul(presentation_.gen(k), NCPoly(A, Word{i, j}) - presentation_.f(i, j));
    const NCPoly two_path = normal_form(left) - normal_form(right);
    const NCPoly residue = normal_form(jacobi_sum(presentation_, i, j, k));
    if (two_path.is_zero() != residue.is_zero()) report.methods_agree = false;
    if (!two_path.is_zero() || !residue.is_zero()) report.triples_failed.push_back({i, j, k, residue});
  }
  report.confluent = report.triples_failed.empty() && report.methods_agree;
  confluence_ = report.confluent ? Confluence::yes : Confluence::no;
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

void enumerate(const Alphabet& a, int start, int budget, Word& current, NormalWords& out, bool collect) {
  ++out.count;
  if (collect) out.words.push_back(current);
  for (int id = start; id < static_cast<int>(a.size()); ++id) {
    if (a.weight(id) > budget) continue;
    current += Word::letter(id);
    enumerate(a, id, budget - a.weight(id), current, out, collect);
    current = current.subword(0, current.size() - 1);
  }
}

}  // namespace

NormalWords enumerate_normal_words(const ReductionSystem& R, int weight_cutoff, bool collect) {
  if (weight_cutoff < 0) throw std::invalid_argument("weight cutoff must be >= 0");
  if (R.confluence() == Confluence::no)
    throw std::invalid_argument("normal words do not form a basis of a non-confluent system");
  NormalWords out;
  Word current;
  enumerate(R.alphabet(), 0, weight_cutoff, current, out, collect);
  return out;
}

std::uint64_t pbw_monomial_count(const std::vector<int>& weights, int cutoff) {
  if (cutoff < 0) return 0;
  // ways[t]: exponent vectors of total weight exactly t.
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(cutoff) + 1, 0);
  ways[0] = 1;
  for (int w : weights) {
    if (w <= 0) throw std::invalid_argument("weights must be positive");
    for (int t = w; t <= cutoff; ++t) ways[t] += ways[t - w];
  }
  std::uint64_t total = 0;
  for (auto v : ways) total += v;
  return total;
}

std::uint64_t word_count_up_to(const Alphabet& alphabet, int W) {
  if (W < 0) return 0;
  std::vector<std::uint64_t> exact(static_cast<std::size_t>(W) + 1, 0);
  exact[0] = 1;
  for (int t = 1; t <= W; ++t)
    for (const auto& g : alphabet.generators())
      if (g.weight <= t) exact[t] += exact[t - g.weight];
  std::uint64_t total = 0;
  for (auto v : exact) total += v;
  return total;
}

bool is_pbw(ReductionSystem& R) {
  if (R.confluence() == Confluence::unknown) R.check_confluence();
  return R.confluence() == Confluence::yes;
}

}  // namespace umb
