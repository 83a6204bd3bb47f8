#pragma once

#include <cstdint>
#include <vector>

#include "umbrella/hopf.hpp"

namespace umb {

struct FiltrationLevel {
  int m = 0;
  std::size_t preimage_dim = 0;  // F~_m from the Delta-preimage recursion
  std::size_t kernel_dim = 0;    // k + ker of the m-fold reduced coproduct
  std::size_t sum_dim = 0;       // dimension of their sum
  std::size_t monomials = 0;     // normal words of order <= m
  std::uint64_t pbw_count = 0;   // exponent vectors of weight <= m
  bool agree = false;          // the two characterizations give the same subspace
  bool hilbert_agree = false;  // monomials == pbw_count == kernel_dim
};

struct FiltrationValidation {
  int weight_cap = 0;
  std::size_t space_dim = 0;
  std::vector<FiltrationLevel> levels;
  bool pass = false;
};

/// Computes both characterizations of the coradical filtration inside the span
/// of normal words of weight <= weight_cap, for m = 0..max_order, by separate
/// exact linear solves, and compares them.
FiltrationValidation cross_validate_filtration(const QuotientHopf& H, int max_order, int weight_cap);

}  // namespace umb
