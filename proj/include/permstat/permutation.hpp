#ifndef PERMSTAT_PERMUTATION_HPP
#define PERMSTAT_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

/**
 * A permutation of {1, ..., n} in one-line notation.
 *
 * Positions and values are 1-indexed: w(i) for 1 <= i <= n. Instances are
 * immutable once constructed.
 * */
class Permutation {
public:
  /// Throws Error(MalformedPermutation) unless values is a bijection on 1..n.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  /// Whitespace/comma separated integers, or a compact digit string (n <= 9).
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }

  /// w(i), 1-indexed.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

  /// w^{-1}(v), 1-indexed.
  int position_of(int value) const {
    return inverse_[static_cast<std::size_t>(value - 1)];
  }

  std::span<const int> values() const { return values_; }

  Permutation inverse() const;

  bool is_identity() const;

  /// Canonical form: space separated.
  std::string to_string() const;

  /// Digits without separators; falls back to to_string() for n > 9.
  std::string to_compact() const;

  bool operator==(const Permutation &rhs) const { return values_ == rhs.values_; }
  std::strong_ordering operator<=>(const Permutation &rhs) const {
    return values_ <=> rhs.values_;
  }

private:
  std::vector<int> values_;
  std::vector<int> inverse_;
};

std::ostream &operator<<(std::ostream &os, const Permutation &w);

/// A simple reflection s_i, 1 <= i <= n-1 for the ambient n.
struct SimpleReflection {
  int index;
  auto operator<=>(const SimpleReflection &) const = default;
};

/// M_k(w) = max{w(1..k)} and m_k(w) = min{w(k+1..n)} for k = 1..n-1.
class PrefixProfile {
public:
  PrefixProfile(std::vector<int> prefix_max, std::vector<int> suffix_min)
      : prefix_max_(std::move(prefix_max)), suffix_min_(std::move(suffix_min)) {}

  int M(int k) const { return prefix_max_[static_cast<std::size_t>(k - 1)]; }
  int m(int k) const { return suffix_min_[static_cast<std::size_t>(k - 1)]; }

  /// Number of k values, n - 1.
  int size() const { return static_cast<int>(prefix_max_.size()); }

  std::span<const int> prefix_max() const { return prefix_max_; }
  std::span<const int> suffix_min() const { return suffix_min_; }

  bool operator==(const PrefixProfile &) const = default;

private:
  std::vector<int> prefix_max_;
  std::vector<int> suffix_min_;
};

/// Inversion count.
int length(const Permutation &w);

/// Throws Error(ProfileUndefined) when n = 1.
PrefixProfile prefix_profile(const Permutation &w);

/// Sorted indices k with s_k in supp(w), via the prefix-max criterion M_k > k.
std::vector<int> support(const Permutation &w);

/// length(w) - |support(w)|.
int rep(const Permutation &w);

/// Delete the letter n. Throws Error(CannotReduce) when n = 1.
Permutation reduce(const Permutation &w);

/// (w, reduce(w), reduce(reduce(w)), ...) ending at the one-letter permutation.
std::vector<Permutation> iterated_reduce(const Permutation &w);

} // namespace permstat

#endif
