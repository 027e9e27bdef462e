#include "permstat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "permstat/error.hpp"

namespace permstat {

namespace {

[[noreturn]] void malformed(const std::string &why) {
  throw Error(ErrorCode::MalformedPermutation, "malformed permutation: " + why);
}

bool is_separator(char c) {
  return c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0;
}

} // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const auto n = values_.size();
  if (n == 0) {
    malformed("empty");
  }
  inverse_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = values_[i];
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      malformed("value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    auto &slot = inverse_[static_cast<std::size_t>(v - 1)];
    if (slot != 0) {
      malformed("duplicate value " + std::to_string(v));
    }
    slot = static_cast<int>(i) + 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = i + 1;
  }
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  while (!text.empty() && is_separator(text.front())) {
    text.remove_prefix(1);
  }
  while (!text.empty() && is_separator(text.back())) {
    text.remove_suffix(1);
  }
  if (text.empty()) {
    malformed("empty input");
  }

  std::vector<int> values;
  const bool separated = std::any_of(text.begin(), text.end(), is_separator);
  if (!separated && text.size() > 1) {
    // compact contiguous-digit form
    if (text.size() > 9) {
      malformed("compact form only allowed for n <= 9");
    }
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        malformed(std::string("unexpected character '") + c + "'");
      }
      values.push_back(c - '0');
    }
    return Permutation(std::move(values));
  }

  std::size_t i = 0;
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) {
      ++j;
    }
    const auto token = text.substr(i, j - i);
    int v = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || end != token.data() + token.size()) {
      malformed("bad token '" + std::string(token) + "'");
    }
    values.push_back(v);
    i = j;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::inverse() const { return Permutation(inverse_); }

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != static_cast<int>(i) + 1) {
      return false;
    }
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += std::to_string(values_[i]);
  }
  return out;
}

std::string Permutation::to_compact() const {
  if (size() > 9) {
    return to_string();
  }
  std::string out;
  for (int v : values_) {
    out += static_cast<char>('0' + v);
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const Permutation &w) {
  return os << w.to_string();
}

int length(const Permutation &w) {
  // n is small (<= ~12) everywhere this runs, quadratic is fine.
  const auto v = w.values();
  int inversions = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      inversions += v[i] > v[j] ? 1 : 0;
    }
  }
  return inversions;
}

PrefixProfile prefix_profile(const Permutation &w) {
  const int n = w.size();
  if (n < 2) {
    throw Error(ErrorCode::ProfileUndefined, "prefix profile needs n >= 2");
  }
  std::vector<int> big(static_cast<std::size_t>(n - 1));
  std::vector<int> little(static_cast<std::size_t>(n - 1));
  int running = 0;
  for (int k = 1; k <= n - 1; ++k) {
    running = std::max(running, w(k));
    big[static_cast<std::size_t>(k - 1)] = running;
  }
  running = n + 1;
  for (int k = n - 1; k >= 1; --k) {
    running = std::min(running, w(k + 1));
    little[static_cast<std::size_t>(k - 1)] = running;
  }
  return PrefixProfile(std::move(big), std::move(little));
}

std::vector<int> support(const Permutation &w) {
  std::vector<int> out;
  int running = 0;
  for (int k = 1; k < w.size(); ++k) {
    running = std::max(running, w(k));
    if (running > k) {
      out.push_back(k);
    }
  }
  return out;
}

int rep(const Permutation &w) {
  return length(w) - static_cast<int>(support(w).size());
}

Permutation reduce(const Permutation &w) {
  const int n = w.size();
  if (n < 2) {
    throw Error(ErrorCode::CannotReduce, "cannot reduce a one-letter permutation");
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  for (int v : w.values()) {
    if (v != n) {
      out.push_back(v);
    }
  }
  return Permutation(std::move(out));
}

std::vector<Permutation> iterated_reduce(const Permutation &w) {
  std::vector<Permutation> chain{w};
  while (chain.back().size() > 1) {
    chain.push_back(reduce(chain.back()));
  }
  return chain;
}

} // namespace permstat
