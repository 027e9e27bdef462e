#include "permstat/pattern.hpp"

#include <algorithm>

namespace permstat {

std::vector<int> Occurrence::value_set() const {
  auto s = values;
  std::sort(s.begin(), s.end());
  return s;
}

std::string Occurrence::label() const {
  const bool compact =
      std::all_of(values.begin(), values.end(), [](int v) { return v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!compact && i > 0) {
      out += ' ';
    }
    out += std::to_string(values[i]);
  }
  return out;
}

bool is_occurrence(const Permutation &w, const Pattern &p,
                   std::span<const int> positions) {
  const auto k = positions.size();
  if (k != static_cast<std::size_t>(p.size())) {
    return false;
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (positions[a] < 1 || positions[a] > w.size()) {
      return false;
    }
    if (a > 0 && positions[a - 1] >= positions[a]) {
      return false;
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const bool host_less = w(positions[a]) < w(positions[b]);
      const bool pat_less = p.shape().values()[a] < p.shape().values()[b];
      if (host_less != pat_less) {
        return false;
      }
    }
  }
  return true;
}

Occurrence make_occurrence(const Permutation &w, const Pattern &p,
                           std::vector<int> positions) {
  std::sort(positions.begin(), positions.end());
  Occurrence occ{p, std::move(positions), {}, 0};
  occ.values.reserve(occ.positions.size());
  for (int pos : occ.positions) {
    occ.values.push_back(w(pos));
    occ.top = std::max(occ.top, w(pos));
  }
  return occ;
}

std::vector<Occurrence> occurrences(const Permutation &w, const Pattern &p) {
  std::vector<Occurrence> out;
  for_each_occurrence(w, p, [&](std::span<const int> pos) {
    out.push_back(make_occurrence(w, p, {pos.begin(), pos.end()}));
    return false;
  });
  return out;
}

std::vector<Occurrence> top_occurrences(const Permutation &w, const Pattern &p,
                                        int top) {
  std::vector<Occurrence> out;
  for_each_occurrence(w, p, [&](std::span<const int> pos) {
    auto occ = make_occurrence(w, p, {pos.begin(), pos.end()});
    if (occ.top == top) {
      out.push_back(std::move(occ));
    }
    return false;
  });
  return out;
}

std::map<int, int> count_by_top(const Permutation &w, const Pattern &p) {
  std::map<int, int> counts;
  for_each_occurrence(w, p, [&](std::span<const int> pos) {
    int top = 0;
    for (int i : pos) {
      top = std::max(top, w(i));
    }
    ++counts[top];
    return false;
  });
  return counts;
}

PattStats patt_321_3412(const Permutation &w) {
  PattStats stats;
  for (const Pattern *p : {&pattern_321(), &pattern_3412()}) {
    for (const auto &[top, count] : count_by_top(w, *p)) {
      stats.per_top[top] += count;
      stats.total += count;
    }
  }
  return stats;
}

bool contains(const Permutation &w, const Pattern &p) {
  return for_each_occurrence(w, p, [](std::span<const int>) { return true; });
}

bool contains_top(const Permutation &w, const Pattern &p, int top) {
  return for_each_occurrence(w, p, [&](std::span<const int> pos) {
    return std::any_of(pos.begin(), pos.end(), [&](int i) { return w(i) == top; }) &&
           std::all_of(pos.begin(), pos.end(), [&](int i) { return w(i) <= top; });
  });
}

const Pattern &pattern_321() {
  static const Pattern p = Pattern::parse("321");
  return p;
}

const Pattern &pattern_3412() {
  static const Pattern p = Pattern::parse("3412");
  return p;
}

std::span<const Pattern> phi_patterns() {
  static const std::vector<Pattern> phi = [] {
    std::vector<Pattern> v;
    for (const char *text : {"4321", "34512", "45123", "35412", "43512", "45132",
                             "45213", "53412", "45312", "45231"}) {
      v.push_back(Pattern::parse(text));
    }
    return v;
  }();
  return phi;
}

bool avoids_phi(const Permutation &w) {
  for (const auto &phi : phi_patterns()) {
    if (contains(w, phi)) {
      return false;
    }
  }
  return true;
}

std::set<int> phi_top_values(const Permutation &w) {
  std::set<int> tops;
  for (const auto &phi : phi_patterns()) {
    for_each_occurrence(w, phi, [&](std::span<const int> pos) {
      int top = 0;
      for (int i : pos) {
        top = std::max(top, w(i));
      }
      tops.insert(top);
      return false;
    });
  }
  return tops;
}

} // namespace permstat
