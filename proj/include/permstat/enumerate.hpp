#ifndef PERMSTAT_ENUMERATE_HPP
#define PERMSTAT_ENUMERATE_HPP

#include <chrono>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

inline constexpr int kDefaultCampaignCeiling = 10;

/// n! as a 64-bit value; n <= 20.
std::uint64_t factorial(int n);

/// Lexicographic rank in S_n via the factorial number system.
std::uint64_t rank(const Permutation &w);

/// Inverse of rank. Throws Error(Range) when r >= n!.
Permutation unrank(int n, std::uint64_t r);

/**
 * The permutations of S_n with lexicographic rank in [from, to), in order.
 * Construction throws Error(Range) unless 0 <= from <= to <= n!.
 * */
class SnRange {
public:
  SnRange(int n, std::uint64_t from, std::uint64_t to);

  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation *;
    using reference = const Permutation &;

    iterator() = default;
    iterator(std::vector<int> values, std::uint64_t rank)
        : values_(std::move(values)), rank_(rank) {}

    Permutation operator*() const { return Permutation(values_); }
    iterator &operator++();
    void operator++(int) { ++*this; }
    bool operator==(const iterator &rhs) const { return rank_ == rhs.rank_; }

  private:
    std::vector<int> values_;
    std::uint64_t rank_ = 0;
  };

  iterator begin() const;
  iterator end() const { return iterator({}, to_); }

  std::uint64_t size() const { return to_ - from_; }

private:
  int n_;
  std::uint64_t from_;
  std::uint64_t to_;
};

/// All of S_n in lexicographic order.
inline SnRange iter_sn(int n) { return SnRange(n, 0, factorial(n)); }
inline SnRange iter_sn(int n, std::uint64_t from, std::uint64_t to) {
  return SnRange(n, from, to);
}

/// A permutation whose checks failed, with its diagnostics as JSON text.
struct Failure {
  std::string w;
  std::string diagnostic;
  bool operator==(const Failure &) const = default;
};

struct CampaignReport {
  int n = 0;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::uint64_t checked = 0;
  std::vector<Failure> failures;
  std::uint64_t avoider_count = 0;
  std::uint64_t equal_count = 0;
  std::uint64_t strict_count = 0;
  std::chrono::duration<double> wall_time{0};

  /// Associative merge of an adjacent, later range.
  void merge(const CampaignReport &later);
};

/// Campaign ceiling: PERMSTAT_MAX_N when set, else kDefaultCampaignCeiling.
int campaign_ceiling();

/// Runs verify_main, verify_level and verify_bound on every permutation in one
/// rank range. Failures are recorded, never thrown.
CampaignReport check_range(int n, std::uint64_t from, std::uint64_t to);

/**
 * Verifies every permutation of ranks [from, to) in S_n, splitting the range
 * into contiguous chunks over jobs threads. The report (wall_time aside) does
 * not depend on jobs. Throws Error(Range) for n outside 1..ceiling or a bad
 * range.
 * */
CampaignReport run_campaign(int n, int jobs, std::uint64_t from, std::uint64_t to,
                            int ceiling = campaign_ceiling());
CampaignReport run_campaign(int n, int jobs = 1);

/// |{w in S_n : avoids_phi(w)}|.
std::uint64_t count_avoiders(int n, int jobs = 1);

/// First permutation in lexicographic order failing any check, if any.
std::optional<Permutation> find_counterexample(int n);

/// "n,n!,avoiders,equal,strict" header and row.
std::string census_csv_header();
std::string census_csv_row(const CampaignReport &report);

} // namespace permstat

#endif
