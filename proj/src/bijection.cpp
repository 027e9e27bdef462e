#include "permstat/bijection.hpp"

#include <algorithm>
#include <stdexcept>

#include "permstat/error.hpp"

namespace permstat {

namespace {

/// Shared per-host data: w̄, its profile, and where N sits.
struct Level {
  const Permutation &w;
  int n;
  int top_position;
  Permutation reduced;
  std::optional<PrefixProfile> profile;

  explicit Level(const Permutation &host)
      : w(host), n(host.size()), top_position(host.position_of(host.size())),
        reduced(reduce(host)) {
    if (reduced.size() >= 2) {
      profile = prefix_profile(reduced);
    }
  }

  int M(int k) const { return profile->M(k); }
  int m(int k) const { return profile->m(k); }
  int wbar(int k) const { return reduced(k); }

  Occurrence by_values(const Pattern &p, std::initializer_list<int> values) const {
    std::vector<int> positions;
    for (int v : values) {
      positions.push_back(w.position_of(v));
    }
    auto occ = make_occurrence(w, p, std::move(positions));
    if (!is_occurrence(w, p, occ.positions) || occ.top != n) {
      throw std::logic_error("constructed letters " + occ.label() + " are not a " +
                             std::to_string(n) + "-occurrence of " + p.name() +
                             " in " + w.to_string());
    }
    return occ;
  }
};

std::vector<int> repeat_indices(const Level &level) {
  std::vector<int> out;
  for (int k : support(level.reduced)) {
    if (k >= level.top_position) {
      out.push_back(k);
    }
  }
  return out;
}

AssignedPattern assign(const Level &level, int k) {
  const int N = level.n;
  const int M = level.M(k);
  const int m = level.m(k);
  const int b = level.wbar(k);
  if (level.top_position < level.w.position_of(M)) {
    return {k, PatternCase::I, level.by_values(pattern_321(), {N, M, m})};
  }
  if (b > m) {
    return {k, PatternCase::II, level.by_values(pattern_321(), {N, b, m})};
  }
  if (!(b < m)) {
    throw std::logic_error("case III requires w̄(k) < m_k");
  }
  return {k, PatternCase::III, level.by_values(pattern_3412(), {M, N, b, m})};
}

std::vector<std::vector<int>> partition(const Level &level,
                                        const std::vector<int> &indices) {
  std::vector<std::vector<int>> parts;
  std::vector<std::pair<int, int>> keys;
  for (int k : indices) {
    const std::pair<int, int> key{level.M(k), level.m(k)};
    const auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      parts.push_back({k});
    } else {
      parts[static_cast<std::size_t>(it - keys.begin())].push_back(k);
    }
  }
  return parts;
}

PlusMinus make_plus_minus(const Level &level, int k) {
  const int N = level.n;
  const int b = level.wbar(k);
  return {level.by_values(pattern_321(), {N, level.M(k), b}),
          level.by_values(pattern_321(), {N, b, level.m(k)})};
}

const std::vector<int> *find_part(const std::vector<std::vector<int>> &parts, int k) {
  for (const auto &part : parts) {
    if (std::find(part.begin(), part.end(), k) != part.end()) {
      return &part;
    }
  }
  return nullptr;
}

bool collides_in_part(const Level &level, const std::vector<int> &part, int k) {
  // Every part member shares M_k, so all are case I or none are.
  return part.front() != k && level.top_position < level.w.position_of(level.M(k));
}

Assignment build_xi(const Level &level) {
  Assignment out{RepeatSet{level.w, repeat_indices(level)}, {}, {}, {}};
  out.parts = partition(level, out.repeat.indices);
  for (int k : out.repeat.indices) {
    XiEntry entry{k, assign(level, k), false, {pattern_321(), {}, {}, 0}};
    if (collides_in_part(level, *find_part(out.parts, k), k)) {
      auto pm = make_plus_minus(level, k);
      entry.uses_plus = true;
      entry.image = pm.plus;
      out.plus_minus.emplace(k, std::move(pm));
    } else {
      entry.image = entry.assigned.occurrence;
    }
    out.xi.push_back(std::move(entry));
  }
  return out;
}

std::vector<std::vector<int>> top_value_sets(const Permutation &w) {
  const int N = w.size();
  std::vector<std::vector<int>> sets;
  for (const Pattern *p : {&pattern_321(), &pattern_3412()}) {
    for (const auto &occ : top_occurrences(w, *p, N)) {
      sets.push_back(occ.value_set());
    }
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

/// Pattern letters kept by the witness table, as a substring of phi.
std::string_view table_row(const std::string &phi) {
  static const std::map<std::string, std::string_view> rows = {
      {"4321", "421"},   {"34512", "3512"}, {"45123", "4513"}, {"35412", "3512"},
      {"43512", "3512"}, {"45132", "4513"}, {"45213", "4523"}, {"53412", "532"},
      {"45312", "532"},  {"45231", "4523"},
  };
  const auto it = rows.find(phi);
  return it == rows.end() ? std::string_view{} : it->second;
}

Occurrence select_letters(const Permutation &w, const Occurrence &occ,
                          std::string_view letters) {
  const auto phi = occ.pattern.name();
  std::vector<int> positions;
  for (char c : letters) {
    positions.push_back(occ.positions[phi.find(c)]);
  }
  const Pattern &shape = letters.size() == 3 ? pattern_321() : pattern_3412();
  return make_occurrence(w, shape, std::move(positions));
}

void check_phi_occurrence(const Permutation &w, const Occurrence &occ) {
  const auto name = occ.pattern.name();
  if (table_row(name).empty()) {
    throw Error(ErrorCode::InvalidWitnessRequest, name + " is not a pattern of the ten");
  }
  if (!is_occurrence(w, occ.pattern, occ.positions)) {
    throw Error(ErrorCode::InvalidWitnessRequest,
                "positions do not form an occurrence of " + name);
  }
  const auto recomputed = make_occurrence(w, occ.pattern, occ.positions);
  if (recomputed.top != w.size()) {
    throw Error(ErrorCode::InvalidWitnessRequest,
                "witness needs a " + std::to_string(w.size()) + "-occurrence, got top " +
                    std::to_string(recomputed.top));
  }
}

Occurrence witness_with(const Permutation &w, const Occurrence &occ,
                        const std::vector<std::vector<int>> &image) {
  auto chosen = select_letters(w, occ, table_row(occ.pattern.name()));
  if (occ.pattern.name() == "4321" &&
      std::find(image.begin(), image.end(), chosen.value_set()) != image.end()) {
    chosen = select_letters(w, occ, "432");
  }
  return chosen;
}

} // namespace

bool RepeatSet::contains(int k) const {
  return std::binary_search(indices.begin(), indices.end(), k);
}

std::string_view to_string(PatternCase c) {
  switch (c) {
  case PatternCase::I:
    return "I";
  case PatternCase::II:
    return "II";
  case PatternCase::III:
    return "III";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::Equal:
    return "equal";
  case Verdict::Strict:
    return "strict";
  case Verdict::Violation:
    return "violation";
  }
  return "?";
}

bool Assignment::injective() const {
  auto sets = image_value_sets();
  std::sort(sets.begin(), sets.end());
  return std::adjacent_find(sets.begin(), sets.end()) == sets.end();
}

std::vector<std::vector<int>> Assignment::image_value_sets() const {
  std::vector<std::vector<int>> sets;
  sets.reserve(xi.size());
  for (const auto &entry : xi) {
    sets.push_back(entry.image.value_set());
  }
  return sets;
}

RepeatSet repeat_set(const Permutation &w) {
  const Level level(w);
  return {w, repeat_indices(level)};
}

AssignedPattern assign_pattern(const Permutation &w, int k) {
  const Level level(w);
  const auto indices = repeat_indices(level);
  if (!std::binary_search(indices.begin(), indices.end(), k)) {
    throw Error(ErrorCode::UndefinedAssignment,
                "p_" + std::to_string(k) + " undefined: k is not a repeat index of " +
                    w.to_string());
  }
  return assign(level, k);
}

PlusMinus plus_minus(const Permutation &w, int k) {
  const Level level(w);
  const auto indices = repeat_indices(level);
  if (!std::binary_search(indices.begin(), indices.end(), k)) {
    throw Error(ErrorCode::NotApplicable,
                std::to_string(k) + " is not a repeat index of " + w.to_string());
  }
  const auto parts = partition(level, indices);
  if (!collides_in_part(level, *find_part(parts, k), k)) {
    throw Error(ErrorCode::NotApplicable,
                "p_" + std::to_string(k) + " does not collide with an earlier p_j in " +
                    w.to_string());
  }
  return make_plus_minus(level, k);
}

Assignment xi(const Permutation &w) { return build_xi(Level(w)); }

Occurrence table_witness(const Permutation &w, const Occurrence &phi_occurrence) {
  check_phi_occurrence(w, phi_occurrence);
  return select_letters(w, phi_occurrence, table_row(phi_occurrence.pattern.name()));
}

Occurrence phi_witness(const Permutation &w, const Occurrence &phi_occurrence) {
  check_phi_occurrence(w, phi_occurrence);
  return witness_with(w, phi_occurrence, xi(w).image_value_sets());
}

LevelReport verify_level(const Permutation &w) {
  const Level level(w);
  const int N = level.n;
  LevelReport report{.w = w, .assignment = build_xi(level)};
  const auto &assignment = report.assignment;
  report.repeat_count = assignment.repeat.size();
  report.rep = rep(w);
  report.patt = patt_321_3412(w).total;
  report.avoids_phi = avoids_phi(w);

  const auto targets = top_value_sets(w);
  report.patt_top = static_cast<int>(targets.size());
  report.new_repeats_ok = report.rep == rep(level.reduced) + report.repeat_count;

  auto images = assignment.image_value_sets();
  report.images_valid = std::all_of(images.begin(), images.end(), [&](const auto &s) {
    return std::binary_search(targets.begin(), targets.end(), s);
  });
  report.injective = assignment.injective();
  std::sort(images.begin(), images.end());
  report.bijective = report.injective && images == targets;

  // p_k = p_k' for k != k' must come with an N-occurrence of 4321.
  std::vector<std::vector<int>> raw;
  for (const auto &entry : assignment.xi) {
    raw.push_back(entry.assigned.occurrence.value_set());
  }
  std::sort(raw.begin(), raw.end());
  const bool raw_collision = std::adjacent_find(raw.begin(), raw.end()) != raw.end();
  report.collisions_ok = !raw_collision || contains_top(w, phi_patterns().front(), N);

  report.witnesses_ok = true;
  for (const auto &phi : phi_patterns()) {
    for (const auto &occ : top_occurrences(w, phi, N)) {
      report.has_phi_top = true;
      const auto witness = witness_with(w, occ, images).value_set();
      if (std::binary_search(images.begin(), images.end(), witness) ||
          !std::binary_search(targets.begin(), targets.end(), witness)) {
        report.witnesses_ok = false;
      }
    }
  }

  if (report.repeat_count == report.patt_top) {
    report.verdict = Verdict::Equal;
  } else if (report.repeat_count < report.patt_top) {
    report.verdict = Verdict::Strict;
  } else {
    report.verdict = Verdict::Violation;
  }

  const bool shape_ok = report.has_phi_top
                            ? report.verdict == Verdict::Strict && !report.bijective
                            : report.verdict == Verdict::Equal && report.bijective;
  report.ok = shape_ok && report.new_repeats_ok && report.images_valid &&
              report.injective && report.collisions_ok && report.witnesses_ok;
  return report;
}

TheoremReport verify_main(const Permutation &w) {
  TheoremReport report{.w = w};
  report.rep = rep(w);
  report.patt = patt_321_3412(w).total;
  report.avoids_phi = avoids_phi(w);
  if (report.rep == report.patt) {
    report.verdict = Verdict::Equal;
  } else if (report.rep < report.patt) {
    report.verdict = Verdict::Strict;
  } else {
    report.verdict = Verdict::Violation;
  }
  report.zero_one_ok = (report.rep == 0) == (report.patt == 0) &&
                       (report.rep == 1) == (report.patt == 1);
  const bool theorem = report.avoids_phi ? report.verdict == Verdict::Equal
                                         : report.verdict == Verdict::Strict;
  report.ok = theorem && report.zero_one_ok;
  return report;
}

BijectionReport verify_global_bijection(const Permutation &w) {
  if (!avoids_phi(w)) {
    throw Error(ErrorCode::NotApplicable,
                w.to_string() + " contains a pattern of the ten; no global bijection");
  }
  BijectionReport report{.w = w};
  const auto chain = iterated_reduce(w);
  for (std::size_t stage = 0; stage < chain.size(); ++stage) {
    const auto &u = chain[stage];
    if (u.size() < 2) {
      continue;
    }
    for (const auto &entry : xi(u).xi) {
      // values survive deletion unchanged, so re-embed by value lookup
      std::vector<int> positions;
      for (int v : entry.image.values) {
        positions.push_back(w.position_of(v));
      }
      report.images.push_back({static_cast<int>(stage), u.size(), entry.k,
                               make_occurrence(w, entry.image.pattern, positions)});
    }
  }

  std::vector<std::vector<int>> targets;
  for (const Pattern *p : {&pattern_321(), &pattern_3412()}) {
    for (const auto &occ : occurrences(w, *p)) {
      targets.push_back(occ.value_set());
    }
  }
  std::sort(targets.begin(), targets.end());
  report.occurrence_count = static_cast<int>(targets.size());

  std::vector<std::vector<int>> images;
  bool all_genuine = true;
  for (const auto &img : report.images) {
    images.push_back(img.occurrence.value_set());
    all_genuine = all_genuine && is_occurrence(w, img.occurrence.pattern,
                                               img.occurrence.positions);
  }
  std::sort(images.begin(), images.end());
  report.distinct = std::adjacent_find(images.begin(), images.end()) == images.end();
  report.covers = images == targets;
  report.ok = all_genuine && report.distinct && report.covers;
  return report;
}

BoundReport verify_bound(const Permutation &w) {
  BoundReport report{.w = w};
  report.rep = rep(w);
  report.patt = patt_321_3412(w).total;
  report.phi_tops = phi_top_values(w);
  report.ok = report.patt - report.rep >= static_cast<int>(report.phi_tops.size());
  return report;
}

} // namespace permstat
