#pragma once

#include <cstdint>
#include <vector>

#include "selector/rng.hpp"
#include "selector/sperner.hpp"

namespace selector {

// Monotone Boolean functions on n <= 6 variables as truth-table words (bit m
// is the value at point mask m). Built by the pair recursion: f on k+1
// variables is (f0, f1) on k variables with f0 <= f1 pointwise. Sizes follow
// the Dedekind numbers 2, 3, 6, 20, 168, 7581, 7828354.
inline std::vector<std::uint64_t> monotone_words(int n) {
  std::vector<std::uint64_t> w = {0ull, 1ull};
  for (int k = 0; k < n; ++k) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t f0 : w)
      for (std::uint64_t f1 : w)
        if ((f0 & ~f1) == 0) next.push_back(f0 | (f1 << (1u << k)));
    w = std::move(next);
  }
  return w;
}

// Family of minimal true sets of a nonconstant monotone word.
inline SpernerFamily family_from_word(std::uint64_t word, int n) {
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    if (!((word >> m) & 1ull)) continue;
    bool is_min = true;
    for (int j = 0; j < n && is_min; ++j)
      if ((m & (1u << j)) && ((word >> (m & ~(1u << j))) & 1ull)) is_min = false;
    if (is_min) minimal.push_back(m);
  }
  detail::sort_canonical(minimal);
  return SpernerFamily{n, std::move(minimal)};
}

// Every Sperner family on ground {1..n} (nonconstant antichains), n <= 5.
inline std::vector<SpernerFamily> all_families(int n) {
  std::vector<SpernerFamily> out;
  std::uint64_t ones = (n == 6) ? ~0ull : ((1ull << (1u << n)) - 1ull);
  for (std::uint64_t w : monotone_words(n)) {
    if (w == 0 || w == ones) continue;
    out.push_back(family_from_word(w, n));
  }
  return out;
}

// Seeded random family: up to max_k random nonempty sets, minimalized.
inline SpernerFamily random_family(StreamRng& rng, int n, int max_k) {
  int k = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(max_k));
  std::vector<std::uint32_t> sets;
  for (int i = 0; i < k; ++i)
    sets.push_back(1u + static_cast<std::uint32_t>(rng.next_u64() % ((1u << n) - 1u)));
  return canonicalize(sets, n);
}

}  // namespace selector
