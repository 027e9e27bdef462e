#ifndef PERMSTAT_PATTERN_HPP
#define PERMSTAT_PATTERN_HPP

#include <array>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// A classical pattern, e.g. 3412.
class Pattern {
public:
  explicit Pattern(Permutation shape) : shape_(std::move(shape)) {}

  static Pattern parse(std::string_view text) {
    return Pattern(Permutation::parse(text));
  }

  const Permutation &shape() const { return shape_; }
  int size() const { return shape_.size(); }
  std::string name() const { return shape_.to_compact(); }

  bool operator==(const Pattern &) const = default;

private:
  Permutation shape_;
};

/**
 * An occurrence of a pattern in a host permutation.
 *
 * positions are 1-indexed and strictly increasing; values[j] = w(positions[j]);
 * top is the largest of the values, so this is a top-occurrence.
 * */
struct Occurrence {
  Pattern pattern;
  std::vector<int> positions;
  std::vector<int> values;
  int top = 0;

  /// Values sorted ascending; identifies the occurrence since values are distinct.
  std::vector<int> value_set() const;

  /// Values in host order as a compact string, e.g. "3512".
  std::string label() const;

  bool operator==(const Occurrence &) const = default;
};

/// Builds an occurrence from host positions (sorted internally).
Occurrence make_occurrence(const Permutation &w, const Pattern &p,
                           std::vector<int> positions);

/// True iff the values at positions of w are in the same relative order as p.
bool is_occurrence(const Permutation &w, const Pattern &p,
                   std::span<const int> positions);

namespace detail {

template <typename Visit>
bool scan(std::span<const int> host, std::span<const int> pat,
          std::vector<int> &chosen, std::size_t start, Visit &visit) {
  const std::size_t depth = chosen.size();
  if (depth == pat.size()) {
    return visit(std::span<const int>(chosen));
  }
  const std::size_t remaining = pat.size() - depth;
  for (std::size_t i = start; i + remaining <= host.size(); ++i) {
    const int v = host[i];
    bool consistent = true;
    for (std::size_t j = 0; j < depth; ++j) {
      const int u = host[static_cast<std::size_t>(chosen[j] - 1)];
      if ((u < v) != (pat[j] < pat[depth])) {
        consistent = false;
        break;
      }
    }
    if (!consistent) {
      continue;
    }
    chosen.push_back(static_cast<int>(i) + 1);
    const bool stop = scan(host, pat, chosen, i + 1, visit);
    chosen.pop_back();
    if (stop) {
      return true;
    }
  }
  return false;
}

} // namespace detail

/**
 * Calls visit(positions) for each occurrence of p in w, in lexicographic
 * order of the 1-indexed position tuple. visit returns true to stop early.
 * Returns true iff stopped early.
 * */
template <typename Visit>
bool for_each_occurrence(const Permutation &w, const Pattern &p, Visit &&visit) {
  if (p.size() > w.size()) {
    return false;
  }
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(p.size()));
  return detail::scan(w.values(), p.shape().values(), chosen, 0, visit);
}

std::vector<Occurrence> occurrences(const Permutation &w, const Pattern &p);

/// Occurrences whose largest value is top.
std::vector<Occurrence> top_occurrences(const Permutation &w, const Pattern &p,
                                        int top);

/// [p]_N(w) keyed by N; absent keys are zero.
std::map<int, int> count_by_top(const Permutation &w, const Pattern &p);

struct PattStats {
  int total = 0;
  std::map<int, int> per_top;
  int at(int top) const {
    const auto it = per_top.find(top);
    return it == per_top.end() ? 0 : it->second;
  }
};

/// [321;3412](w) and its per-top split.
PattStats patt_321_3412(const Permutation &w);

bool contains(const Permutation &w, const Pattern &p);

/// Does w contain an occurrence of p with largest value top?
bool contains_top(const Permutation &w, const Pattern &p, int top);

const Pattern &pattern_321();
const Pattern &pattern_3412();

/// The ten patterns, 4321 first then the length-5 ones.
std::span<const Pattern> phi_patterns();

bool avoids_phi(const Permutation &w);

/// {r : some phi has an r-occurrence in w}.
std::set<int> phi_top_values(const Permutation &w);

} // namespace permstat

#endif
