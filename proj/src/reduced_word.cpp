#include "permstat/reduced_word.hpp"

#include <algorithm>
#include <charconv>

#include "permstat/error.hpp"

namespace permstat {

namespace {

void peel(std::vector<int> &current, std::vector<int> &suffix, int remaining,
          int n, std::set<ReducedWord> &out) {
  if (remaining == 0) {
    out.emplace(std::vector<int>(suffix.rbegin(), suffix.rend()), n);
    return;
  }
  for (int i = 1; i < n; ++i) {
    auto &a = current[static_cast<std::size_t>(i - 1)];
    auto &b = current[static_cast<std::size_t>(i)];
    if (a > b) {
      std::swap(a, b);
      suffix.push_back(i);
      peel(current, suffix, remaining - 1, n, out);
      suffix.pop_back();
      std::swap(a, b);
    }
  }
}

} // namespace

ReducedWord ReducedWord::parse(std::string_view text, int ambient_n) {
  std::vector<int> letters;
  if (text == "-" || text.empty()) {
    return ReducedWord({}, ambient_n);
  }
  std::size_t i = 0;
  while (i <= text.size()) {
    const auto j = std::min(text.find(',', i), text.size());
    const auto token = text.substr(i, j - i);
    int v = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw Error(ErrorCode::MalformedWord, "bad letter '" + std::string(token) + "'");
    }
    letters.push_back(v);
    i = j + 1;
  }
  return ReducedWord(std::move(letters), ambient_n);
}

std::vector<int> ReducedWord::letter_set() const {
  std::vector<int> s = letters_;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string ReducedWord::to_string() const {
  if (letters_.empty()) {
    return "-";
  }
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(letters_[i]);
  }
  return out;
}

Permutation evaluate(const ReducedWord &word) {
  const int n = word.ambient_n();
  if (n < 1) {
    throw Error(ErrorCode::MalformedWord, "ambient n must be positive");
  }
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = i + 1;
  }
  for (int letter : word.letters()) {
    if (letter < 1 || letter > n - 1) {
      throw Error(ErrorCode::MalformedWord,
                  "letter " + std::to_string(letter) + " outside 1.." +
                      std::to_string(n - 1));
    }
    std::swap(v[static_cast<std::size_t>(letter - 1)],
              v[static_cast<std::size_t>(letter)]);
  }
  return Permutation(std::move(v));
}

bool is_reduced(const ReducedWord &word) {
  return length(evaluate(word)) == word.size();
}

ReducedWord canonical_word(const Permutation &w) {
  const auto chain = iterated_reduce(w);
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(length(w)));
  // chain runs from w down to S_1; build the word from the bottom up
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const int n = it->size();
    for (int i = n - 1; i >= it->position_of(n); --i) {
      letters.push_back(i);
    }
  }
  return ReducedWord(std::move(letters), w.size());
}

std::set<ReducedWord> all_reduced_words(const Permutation &w, int bound) {
  if (w.size() > bound) {
    throw Error(ErrorCode::OracleBoundExceeded,
                "all-words oracle limited to n <= " + std::to_string(bound));
  }
  std::set<ReducedWord> out;
  std::vector<int> current(w.values().begin(), w.values().end());
  std::vector<int> suffix;
  peel(current, suffix, length(w), w.size(), out);
  return out;
}

SupportCheck check_support_well_defined(const Permutation &w, int bound) {
  const auto words = all_reduced_words(w, bound);
  SupportCheck check;
  check.word_count = words.size();
  if (words.empty()) {
    return check;
  }
  const auto first = words.begin()->letter_set();
  for (const auto &word : words) {
    if (word.letter_set() != first) {
      return check;
    }
  }
  check.common_letters = first;
  check.ok = first == support(w);
  return check;
}

} // namespace permstat
