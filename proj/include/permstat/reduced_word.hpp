#ifndef PERMSTAT_REDUCED_WORD_HPP
#define PERMSTAT_REDUCED_WORD_HPP

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// Default ceiling on n for the all-words oracle.
inline constexpr int kDefaultOracleBound = 6;

/**
 * A word s_{i_1} s_{i_2} ... s_{i_l} in the simple reflections of S_n.
 *
 * Reducedness is not enforced at construction; is_reduced() checks it.
 * */
class ReducedWord {
public:
  ReducedWord(std::vector<int> letters, int ambient_n)
      : letters_(std::move(letters)), ambient_n_(ambient_n) {}

  /// "2,1,3" style, "-" for the empty word.
  static ReducedWord parse(std::string_view text, int ambient_n);

  const std::vector<int> &letters() const { return letters_; }
  int ambient_n() const { return ambient_n_; }
  int size() const { return static_cast<int>(letters_.size()); }

  /// Distinct letters, sorted.
  std::vector<int> letter_set() const;

  std::string to_string() const;

  auto operator<=>(const ReducedWord &) const = default;

private:
  std::vector<int> letters_;
  int ambient_n_;
};

/// Right-multiplies from the identity: each s_i swaps positions i and i+1.
Permutation evaluate(const ReducedWord &word);

bool is_reduced(const ReducedWord &word);

/// canonical_word(w) = canonical_word(w̄) followed by s_{n-1} ... s_{w^{-1}(n)}.
ReducedWord canonical_word(const Permutation &w);

/// Every reduced word for w, by peeling right descents. Throws
/// Error(OracleBoundExceeded) when w.size() > bound.
std::set<ReducedWord> all_reduced_words(const Permutation &w,
                                        int bound = kDefaultOracleBound);

struct SupportCheck {
  bool ok = false;
  std::size_t word_count = 0;
  /// Letter set shared by all words (empty when they disagree).
  std::vector<int> common_letters;
};

/// All reduced words share one letter set, equal to support(w).
SupportCheck check_support_well_defined(const Permutation &w,
                                        int bound = kDefaultOracleBound);

} // namespace permstat

#endif
