#include <doctest.h>

#include "oracles.hpp"
#include "permstat/bijection.hpp"
#include "permstat/error.hpp"

using namespace permstat;

namespace {

Permutation P(const char *text) { return Permutation::parse(text); }

using Values = std::vector<int>;

Values sorted(Values v) {
  std::sort(v.begin(), v.end());
  return v;
}

ErrorCode code_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected permstat::Error");
  return ErrorCode::Range;
}

Occurrence only_top_occurrence(const Permutation &w, const char *phi) {
  const auto occs = top_occurrences(w, Pattern::parse(phi), w.size());
  REQUIRE(occs.size() == 1);
  return occs.front();
}

/// Sorted value sets of the top-N occurrences of p, via the bitmask oracle.
std::vector<Values> oracle_top_sets(const Values &w, const std::string &p) {
  const int N = static_cast<int>(w.size());
  std::vector<Values> out;
  for (const auto &occ : oracle::occurrences(w, p)) {
    if (*std::max_element(occ.begin(), occ.end()) == N) {
      out.push_back(sorted(occ));
    }
  }
  return out;
}

bool has_top(const Values &w, std::initializer_list<const char *> patterns) {
  for (const char *p : patterns) {
    if (!oracle_top_sets(w, p).empty()) {
      return true;
    }
  }
  return false;
}

} // namespace

TEST_CASE("repeat_set") {
  CHECK(repeat_set(P("35412")).indices == std::vector<int>{2, 3});
  CHECK(repeat_set(P("12345")).indices.empty());
  CHECK(repeat_set(P("4321")).indices == std::vector<int>{1, 2});
  CHECK(repeat_set(P("4321")).contains(2));
  CHECK_FALSE(repeat_set(P("4321")).contains(3));
  CHECK(code_of([] { repeat_set(P("1")); }) == ErrorCode::CannotReduce);
}

TEST_CASE("assign_pattern cases") {
  const auto a = assign_pattern(P("35412"), 2);
  CHECK(a.case_tag == PatternCase::I);
  CHECK(a.occurrence.values == Values{5, 4, 1});
  CHECK(a.occurrence.pattern.name() == "321");

  const auto b = assign_pattern(P("35412"), 3);
  CHECK(b.case_tag == PatternCase::I);
  CHECK(b.occurrence.values == Values{5, 4, 2});

  const auto c = assign_pattern(P("45123"), 2);
  CHECK(c.case_tag == PatternCase::III);
  CHECK(c.occurrence.values == Values{4, 5, 1, 2});
  CHECK(c.occurrence.pattern.name() == "3412");

  // N right of M_k with w̄(k) > m_k
  const auto d = assign_pattern(P("45231"), 2);
  CHECK(d.case_tag == PatternCase::II);
  CHECK(d.occurrence.values == Values{5, 2, 1});

  CHECK(code_of([] { assign_pattern(P("35412"), 1); }) == ErrorCode::UndefinedAssignment);
  CHECK(code_of([] { assign_pattern(P("12345"), 2); }) == ErrorCode::UndefinedAssignment);
}

TEST_CASE("plus_minus") {
  const auto a = plus_minus(P("4321"), 2);
  CHECK(a.plus.values == Values{4, 3, 2});
  CHECK(a.minus.values == Values{4, 2, 1});

  const auto b = plus_minus(P("54321"), 2);
  CHECK(b.plus.values == Values{5, 4, 3});
  CHECK(b.minus.values == Values{5, 3, 1});

  CHECK(code_of([] { plus_minus(P("35412"), 3); }) == ErrorCode::NotApplicable);
  CHECK(code_of([] { plus_minus(P("4321"), 1); }) == ErrorCode::NotApplicable);
  // part {2,3} of 45231 lies right of M = 4: p_2 and p_3 never coincide
  CHECK(code_of([] { plus_minus(P("45231"), 3); }) == ErrorCode::NotApplicable);
}

TEST_CASE("xi") {
  const auto a = xi(P("35412"));
  REQUIRE(a.xi.size() == 2);
  CHECK(a.xi[0].k == 2);
  CHECK(a.xi[0].image.values == Values{5, 4, 1});
  CHECK(a.xi[1].k == 3);
  CHECK(a.xi[1].image.values == Values{5, 4, 2});
  CHECK(a.parts == std::vector<std::vector<int>>{{2}, {3}});
  CHECK(a.injective());
  CHECK(patt_321_3412(P("35412")).at(5) == 3);

  CHECK(xi(P("12345")).xi.empty());

  const auto c = xi(P("4321"));
  REQUIRE(c.xi.size() == 2);
  CHECK(c.parts == std::vector<std::vector<int>>{{1, 2}});
  CHECK(c.xi[0].image.values == Values{4, 3, 1});
  CHECK_FALSE(c.xi[0].uses_plus);
  CHECK(c.xi[1].image.values == Values{4, 3, 2});
  CHECK(c.xi[1].uses_plus);
  CHECK(c.plus_minus.at(2).minus.values == Values{4, 2, 1});

  // same (M, m) part but no collision: p_k kept for both members
  const auto d = xi(P("45231"));
  CHECK(d.parts == std::vector<std::vector<int>>{{2, 3}});
  CHECK(d.xi[1].image.values == Values{5, 3, 1});
  CHECK_FALSE(d.xi[1].uses_plus);
  CHECK(d.plus_minus.empty());
}

TEST_CASE("phi_witness") {
  CHECK(phi_witness(P("4321"), only_top_occurrence(P("4321"), "4321")).values ==
        Values{4, 2, 1});
  const auto b = phi_witness(P("35412"), only_top_occurrence(P("35412"), "35412"));
  CHECK(b.values == Values{3, 5, 1, 2});
  CHECK(b.pattern.name() == "3412");
  CHECK(phi_witness(P("45231"), only_top_occurrence(P("45231"), "45231")).values ==
        Values{4, 5, 2, 3});

  // 421 collides with p_3(45321) = {5,2,1}; the 432 letters are used instead.
  const auto w = P("45321");
  const auto occ = only_top_occurrence(w, "4321");
  CHECK(table_witness(w, occ).values == Values{5, 2, 1});
  CHECK(assign_pattern(w, 3).occurrence.values == Values{5, 2, 1});
  CHECK(phi_witness(w, occ).values == Values{5, 3, 2});

  const auto host = P("54321");
  const auto low = top_occurrences(host, Pattern::parse("4321"), 4);
  REQUIRE(low.size() == 1);
  CHECK(code_of([&] { phi_witness(host, low.front()); }) ==
        ErrorCode::InvalidWitnessRequest);
  const auto not_phi = occurrences(host, pattern_321()).front();
  CHECK(code_of([&] { phi_witness(host, not_phi); }) == ErrorCode::InvalidWitnessRequest);
}

TEST_CASE("verify_level") {
  const auto a = verify_level(P("35412"));
  CHECK(a.repeat_count == 2);
  CHECK(a.patt_top == 3);
  CHECK(a.has_phi_top);
  CHECK(a.verdict == Verdict::Strict);
  CHECK(a.ok);

  const auto b = verify_level(P("3412"));
  CHECK(b.repeat_count == 1);
  CHECK(b.patt_top == 1);
  CHECK_FALSE(b.has_phi_top);
  CHECK(b.verdict == Verdict::Equal);
  CHECK(b.bijective);
  CHECK(b.assignment.xi[0].assigned.case_tag == PatternCase::III);
  CHECK(b.ok);

  const auto c = verify_level(P("1234"));
  CHECK(c.repeat_count == 0);
  CHECK(c.patt_top == 0);
  CHECK(c.verdict == Verdict::Equal);
  CHECK(c.ok);
}

TEST_CASE("verify_main") {
  const auto a = verify_main(P("35412"));
  CHECK(a.rep == 3);
  CHECK(a.patt == 4);
  CHECK_FALSE(a.avoids_phi);
  CHECK(a.verdict == Verdict::Strict);
  CHECK(a.ok);

  const auto b = verify_main(P("45312"));
  CHECK(b.rep == 4);
  CHECK(b.patt == 5);
  CHECK(b.verdict == Verdict::Strict);

  const auto c = verify_main(P("12345"));
  CHECK(c.rep == 0);
  CHECK(c.patt == 0);
  CHECK(c.avoids_phi);
  CHECK(c.verdict == Verdict::Equal);
  CHECK(c.ok);
}

TEST_CASE("verify_global_bijection") {
  const auto a = verify_global_bijection(P("321"));
  REQUIRE(a.images.size() == 1);
  CHECK(a.images[0].level == 3);
  CHECK(a.images[0].occurrence.values == Values{3, 2, 1});
  CHECK(a.ok);

  const auto b = verify_global_bijection(P("3412"));
  REQUIRE(b.images.size() == 1);
  CHECK(b.images[0].level == 4);
  CHECK(b.images[0].occurrence.values == Values{3, 4, 1, 2});
  CHECK(b.ok);

  const auto c = verify_global_bijection(P("12345"));
  CHECK(c.images.empty());
  CHECK(c.ok);

  // images from deeper stages are re-embedded into w
  const auto d = verify_global_bijection(P("42513"));
  CHECK(d.ok);
  CHECK(d.occurrence_count == static_cast<int>(d.images.size()));

  CHECK(code_of([] { verify_global_bijection(P("35412")); }) == ErrorCode::NotApplicable);
}

TEST_CASE("verify_bound") {
  const auto a = verify_bound(P("4321"));
  CHECK(a.patt - a.rep == 1);
  CHECK(a.phi_tops == std::set<int>{4});
  CHECK(a.ok);

  const auto b = verify_bound(P("54321"));
  CHECK(b.patt == 10);
  CHECK(b.rep == 6);
  CHECK(b.phi_tops == std::set<int>{4, 5});
  CHECK(b.ok);

  const auto c = verify_bound(P("12345"));
  CHECK(c.patt - c.rep == 0);
  CHECK(c.ok);
}

TEST_CASE("level properties hold exhaustively, n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto &v : oracle::all_perms(n)) {
      const Permutation w(v);
      CAPTURE(w.to_string());
      const auto assignment = xi(w);
      const auto &indices = assignment.repeat.indices;

      const auto reduced = reduce(w);
      REQUIRE(oracle::rep(v) ==
              oracle::rep({reduced.values().begin(), reduced.values().end()}) +
                  static_cast<int>(indices.size()));

      std::vector<Values> raw;
      std::vector<Values> case3;
      for (const auto &entry : assignment.xi) {
        const auto &occ = entry.assigned.occurrence;
        REQUIRE(occ.top == n);
        REQUIRE(oracle::standardize(occ.values) == occ.pattern.name());
        REQUIRE((occ.pattern.name() == "3412") ==
                (entry.assigned.case_tag == PatternCase::III));
        raw.push_back(sorted(occ.values));
        if (entry.assigned.case_tag == PatternCase::III) {
          case3.push_back(raw.back());
        }
        REQUIRE(oracle::standardize(entry.image.values) == entry.image.pattern.name());
      }
      std::sort(case3.begin(), case3.end());
      REQUIRE(std::adjacent_find(case3.begin(), case3.end()) == case3.end());

      auto raw_sorted = raw;
      std::sort(raw_sorted.begin(), raw_sorted.end());
      if (std::adjacent_find(raw_sorted.begin(), raw_sorted.end()) != raw_sorted.end()) {
        REQUIRE(has_top(v, {"4321"}));
      }

      for (const auto &[k, pm] : assignment.plus_minus) {
        for (const auto &entry : assignment.xi) {
          REQUIRE(pm.plus.value_set() != entry.assigned.occurrence.value_set());
          REQUIRE(pm.minus.value_set() != entry.assigned.occurrence.value_set());
        }
      }

      REQUIRE(assignment.injective());

      auto targets = oracle_top_sets(v, "321");
      const auto t3412 = oracle_top_sets(v, "3412");
      targets.insert(targets.end(), t3412.begin(), t3412.end());
      std::sort(targets.begin(), targets.end());
      auto images = assignment.image_value_sets();
      std::sort(images.begin(), images.end());
      const bool phi_top = has_top(v, {"4321", "34512", "45123", "35412", "43512", "45132",
                                       "45213", "53412", "45312", "45231"});
      REQUIRE((images == targets) == !phi_top);
      if (phi_top) {
        REQUIRE(images.size() < targets.size());
      }

      if (!has_top(v, {"4321", "45312", "53412"})) {
        for (const auto &t : oracle_top_sets(v, "321")) {
          REQUIRE(std::find(raw.begin(), raw.end(), t) != raw.end());
        }
      }
      if (!has_top(v, {"45231", "45132", "43512", "34512", "35412", "45123", "45213"})) {
        for (const auto &t : t3412) {
          REQUIRE(std::find(raw.begin(), raw.end(), t) != raw.end());
        }
      }

      if (n <= 7) {
        for (const auto &phi : phi_patterns()) {
          for (const auto &occ : top_occurrences(w, phi, n)) {
            const auto witness = phi_witness(w, occ);
            REQUIRE(!std::binary_search(images.begin(), images.end(), witness.value_set()));
            REQUIRE(std::binary_search(targets.begin(), targets.end(), witness.value_set()));
          }
        }
      }

      REQUIRE(verify_level(w).ok);
    }
  }
}

TEST_CASE("theorem and bound agree with the oracle, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto &v : oracle::all_perms(n)) {
      const Permutation w(v);
      CAPTURE(w.to_string());
      const auto report = verify_main(w);
      REQUIRE(report.rep == oracle::rep(v));
      REQUIRE(report.patt == oracle::patt(v));
      REQUIRE(report.avoids_phi == oracle::avoids_phi(v));
      REQUIRE(report.ok);
      REQUIRE(verify_bound(w).ok);
      if (report.avoids_phi) {
        REQUIRE(verify_global_bijection(w).ok);
      }
    }
  }
}
