#include "permstat/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "permstat/bijection.hpp"
#include "permstat/error.hpp"
#include "permstat/pattern.hpp"
#include "permstat/report_json.hpp"

namespace permstat {

namespace {

struct Outcome {
  bool ok = true;
  bool avoids = false;
  Verdict verdict = Verdict::Equal;
  std::string diagnostic;
};

Outcome check_one(const Permutation &w, bool want_diagnostic) {
  const auto theorem = verify_main(w);
  const auto bound = verify_bound(w);
  std::optional<LevelReport> level;
  if (w.size() >= 2) {
    level = verify_level(w);
  }
  Outcome out;
  out.avoids = theorem.avoids_phi;
  out.verdict = theorem.verdict;
  out.ok = theorem.ok && bound.ok && (!level || level->ok);
  if (!out.ok && want_diagnostic) {
    nlohmann::json d{{"theorem", theorem}, {"bound", bound}};
    if (level) {
      d["level"] = *level;
    }
    out.diagnostic = d.dump();
  }
  return out;
}

void check_range_args(int n, std::uint64_t from, std::uint64_t to) {
  if (n < 1 || n > 20) {
    throw Error(ErrorCode::Range, "n must be in 1..20, got " + std::to_string(n));
  }
  if (from > to || to > factorial(n)) {
    throw Error(ErrorCode::Range, "rank range [" + std::to_string(from) + ", " +
                                      std::to_string(to) + ") outside [0, " +
                                      std::to_string(factorial(n)) + "]");
  }
}

} // namespace

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= static_cast<std::uint64_t>(i);
  }
  return f;
}

std::uint64_t rank(const Permutation &w) {
  const int n = w.size();
  std::uint64_t r = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j <= n; ++j) {
      smaller_after += w(j) < w(i) ? 1 : 0;
    }
    r += static_cast<std::uint64_t>(smaller_after) * factorial(n - i);
  }
  return r;
}

Permutation unrank(int n, std::uint64_t r) {
  if (n < 1 || n > 20 || r >= factorial(n)) {
    throw Error(ErrorCode::Range, "rank " + std::to_string(r) + " out of range for n = " +
                                      std::to_string(n));
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pool[static_cast<std::size_t>(i)] = i + 1;
  }
  std::vector<int> out;
  out.reserve(pool.size());
  for (int i = n - 1; i >= 0; --i) {
    const auto f = factorial(i);
    const auto digit = static_cast<std::ptrdiff_t>(r / f);
    r %= f;
    out.push_back(pool[static_cast<std::size_t>(digit)]);
    pool.erase(pool.begin() + digit);
  }
  return Permutation(std::move(out));
}

SnRange::SnRange(int n, std::uint64_t from, std::uint64_t to)
    : n_(n), from_(from), to_(to) {
  check_range_args(n, from, to);
}

SnRange::iterator SnRange::begin() const {
  if (from_ == to_) {
    return end();
  }
  const auto first = unrank(n_, from_);
  return iterator({first.values().begin(), first.values().end()}, from_);
}

SnRange::iterator &SnRange::iterator::operator++() {
  std::next_permutation(values_.begin(), values_.end());
  ++rank_;
  return *this;
}

void CampaignReport::merge(const CampaignReport &later) {
  to = later.to;
  checked += later.checked;
  failures.insert(failures.end(), later.failures.begin(), later.failures.end());
  avoider_count += later.avoider_count;
  equal_count += later.equal_count;
  strict_count += later.strict_count;
  wall_time = std::max(wall_time, later.wall_time);
}

int campaign_ceiling() {
  if (const char *env = std::getenv("PERMSTAT_MAX_N")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) {
        return v;
      }
    } catch (const std::exception &) {
    }
  }
  return kDefaultCampaignCeiling;
}

CampaignReport check_range(int n, std::uint64_t from, std::uint64_t to) {
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.n = n;
  report.from = from;
  report.to = to;
  for (const auto &w : SnRange(n, from, to)) {
    const auto outcome = check_one(w, true);
    ++report.checked;
    report.avoider_count += outcome.avoids ? 1 : 0;
    report.equal_count += outcome.verdict == Verdict::Equal ? 1 : 0;
    report.strict_count += outcome.verdict == Verdict::Strict ? 1 : 0;
    if (!outcome.ok) {
      report.failures.push_back({w.to_string(), outcome.diagnostic});
    }
  }
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

CampaignReport run_campaign(int n, int jobs, std::uint64_t from, std::uint64_t to,
                            int ceiling) {
  if (n > ceiling) {
    throw Error(ErrorCode::Range, "n = " + std::to_string(n) +
                                      " exceeds the campaign ceiling " +
                                      std::to_string(ceiling));
  }
  check_range_args(n, from, to);
  jobs = std::max(jobs, 1);
  const auto start = std::chrono::steady_clock::now();

  const std::uint64_t total = to - from;
  const auto chunks = static_cast<std::uint64_t>(jobs);
  std::vector<CampaignReport> parts(static_cast<std::size_t>(jobs));
  {
    std::vector<std::jthread> workers;
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const auto lo = from + total * c / chunks;
      const auto hi = from + total * (c + 1) / chunks;
      workers.emplace_back([&parts, c, n, lo, hi] {
        parts[static_cast<std::size_t>(c)] = check_range(n, lo, hi);
      });
    }
  }

  CampaignReport report = parts.front();
  for (std::size_t c = 1; c < parts.size(); ++c) {
    report.merge(parts[c]);
  }
  report.from = from;
  report.to = to;
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

CampaignReport run_campaign(int n, int jobs) {
  return run_campaign(n, jobs, 0, n >= 1 && n <= 20 ? factorial(n) : 0);
}

std::uint64_t count_avoiders(int n, int jobs) {
  check_range_args(n, 0, factorial(n));
  jobs = std::max(jobs, 1);
  const std::uint64_t total = factorial(n);
  const auto chunks = static_cast<std::uint64_t>(jobs);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(jobs), 0);
  {
    std::vector<std::jthread> workers;
    for (std::uint64_t c = 0; c < chunks; ++c) {
      workers.emplace_back([&counts, c, n, total, chunks] {
        for (const auto &w : SnRange(n, total * c / chunks, total * (c + 1) / chunks)) {
          counts[static_cast<std::size_t>(c)] += avoids_phi(w) ? 1 : 0;
        }
      });
    }
  }
  std::uint64_t sum = 0;
  for (auto c : counts) {
    sum += c;
  }
  return sum;
}

std::optional<Permutation> find_counterexample(int n) {
  for (const auto &w : iter_sn(n)) {
    if (!check_one(w, false).ok) {
      return w;
    }
  }
  return std::nullopt;
}

std::string census_csv_header() { return "n,n!,avoiders,equal,strict"; }

std::string census_csv_row(const CampaignReport &report) {
  return std::to_string(report.n) + "," + std::to_string(factorial(report.n)) + "," +
         std::to_string(report.avoider_count) + "," + std::to_string(report.equal_count) +
         "," + std::to_string(report.strict_count);
}

} // namespace permstat
