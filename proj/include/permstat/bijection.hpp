#ifndef PERMSTAT_BIJECTION_HPP
#define PERMSTAT_BIJECTION_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/pattern.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

/**
 * Level-N machinery for a host w in S_N.
 *
 * Throughout, M_k and m_k are taken from prefix_profile(reduce(w)), never
 * from w itself, and w̄(k) denotes reduce(w)(k). For k in the repeat set the
 * letter w̄(k) sits at position k+1 of w.
 * */

/// {k : s_k in supp(w̄) and w^{-1}(N) <= k}.
struct RepeatSet {
  Permutation host;
  std::vector<int> indices;

  bool contains(int k) const;
  int size() const { return static_cast<int>(indices.size()); }
};

/// Which branch of the three-way assignment produced an occurrence.
enum class PatternCase { I, II, III };

std::string_view to_string(PatternCase c);

struct AssignedPattern {
  int k = 0;
  PatternCase case_tag = PatternCase::I;
  Occurrence occurrence;
};

/// The two replacement 321-occurrences {N, M_k, w̄(k)} and {N, w̄(k), m_k}.
struct PlusMinus {
  Occurrence plus;
  Occurrence minus;
};

struct XiEntry {
  int k = 0;
  AssignedPattern assigned;
  bool uses_plus = false;
  /// assigned.occurrence, or the plus occurrence when uses_plus.
  Occurrence image;
};

struct Assignment {
  RepeatSet repeat;
  /// Repeat indices grouped by equal (M_k, m_k), each part sorted, parts
  /// ordered by their minimal element.
  std::vector<std::vector<int>> parts;
  /// One entry per repeat index, ascending k.
  std::vector<XiEntry> xi;
  /// Keyed by k, present exactly for entries with uses_plus.
  std::map<int, PlusMinus> plus_minus;

  bool injective() const;
  /// Sorted value sets of the images, in xi order.
  std::vector<std::vector<int>> image_value_sets() const;
};

/// Throws Error(CannotReduce) for n = 1.
RepeatSet repeat_set(const Permutation &w);

/// Throws Error(UndefinedAssignment) when k is not a repeat index.
AssignedPattern assign_pattern(const Permutation &w, int k);

/**
 * p_k^+ and p_k^- for a repeat index k that is not minimal in its part and
 * whose part members all fall in case I (so p_k coincides with the p_j of
 * the minimal j). Throws Error(NotApplicable) otherwise.
 * */
PlusMinus plus_minus(const Permutation &w, int k);

/**
 * The injection xi_N. Minimal members of a part map to p_k; the others map
 * to p_k^+ when their p_k collides with the minimal one's (case I parts), and
 * to p_k otherwise.
 * */
Assignment xi(const Permutation &w);

/// Sub-occurrence of a phi-occurrence chosen by the fixed table (4321 -> 421,
/// 34512 -> 3512, ...), with no collision handling.
Occurrence table_witness(const Permutation &w, const Occurrence &phi_occurrence);

/**
 * An N-occurrence of 321 or 3412 inside a top-N occurrence of some phi that
 * lies outside the xi image. Uses the table row; for 4321 falls back to the
 * 432 letters when 421 is already an xi image.
 * Throws Error(InvalidWitnessRequest) unless phi_occurrence is a genuine
 * occurrence of a phi pattern in w with top = n.
 * */
Occurrence phi_witness(const Permutation &w, const Occurrence &phi_occurrence);

enum class Verdict { Equal, Strict, Violation };

std::string_view to_string(Verdict v);

struct LevelReport {
  Permutation w;
  Assignment assignment;
  int rep = 0;
  /// [321;3412](w), all tops.
  int patt = 0;
  bool avoids_phi = false;
  int repeat_count = 0;
  /// [321;3412]_N(w) for N = n.
  int patt_top = 0;
  bool has_phi_top = false;
  /// Lemma check: rep(w) = rep(w̄) + |Repeat(w)|.
  bool new_repeats_ok = false;
  /// Every xi image is a genuine N-occurrence of 321 or 3412.
  bool images_valid = false;
  bool injective = false;
  /// xi is onto the N-occurrences of 321 and 3412.
  bool bijective = false;
  /// Coinciding p_k force an N-occurrence of 4321.
  bool collisions_ok = false;
  /// Every phi witness is an N-occurrence outside the xi image.
  bool witnesses_ok = false;
  Verdict verdict = Verdict::Equal;
  bool ok = false;
};

/// Requires n >= 2 (Error(CannotReduce) otherwise).
LevelReport verify_level(const Permutation &w);

struct TheoremReport {
  Permutation w;
  int rep = 0;
  int patt = 0;
  bool avoids_phi = false;
  Verdict verdict = Verdict::Equal;
  /// rep = 0 <=> patt = 0 and rep = 1 <=> patt = 1.
  bool zero_one_ok = false;
  bool ok = false;
};

TheoremReport verify_main(const Permutation &w);

struct StageImage {
  /// i in w̄_(i).
  int stage = 0;
  /// Size of w̄_(i), the top value of the image.
  int level = 0;
  int k = 0;
  /// The image re-embedded into w.
  Occurrence occurrence;
};

struct BijectionReport {
  Permutation w;
  std::vector<StageImage> images{};
  int occurrence_count = 0;
  bool distinct = false;
  bool covers = false;
  bool ok = false;
};

/// Throws Error(NotApplicable) unless avoids_phi(w).
BijectionReport verify_global_bijection(const Permutation &w);

struct BoundReport {
  Permutation w;
  int rep = 0;
  int patt = 0;
  std::set<int> phi_tops{};
  bool ok = false;
};

BoundReport verify_bound(const Permutation &w);

} // namespace permstat

#endif
