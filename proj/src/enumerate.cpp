#include "supertree/enumerate.hpp"

#include <algorithm>
#include <cassert>

namespace supertree {

namespace {

void check_args(int d, int k) {
  if (d < 2) throw std::invalid_argument("arity/bound must be at least 2");
  if (k < 1) throw std::invalid_argument("size must be at least 1");
}

// Generates codes of size k bottom-up; cache[s] holds the sorted list for
// size s, so emit() only ever reads fully built entries.
struct DaryGen {
  int d;
  std::vector<std::vector<std::string>> cache;  // cache[s], s >= 1

  const std::vector<std::string>& of_size(int k) {
    cache.assign(k + 1, {});
    cache[1].push_back("(" + std::string(d, '_') + ")");
    for (int s = 2; s <= k; ++s) {
      std::string prefix = "(";
      emit(s - 1, d, prefix, cache[s]);
      std::sort(cache[s].begin(), cache[s].end());
    }
    return cache[k];
  }

  // Distribute `budget` vertices over `slots_left` remaining slots.
  void emit(int budget, int slots_left, std::string& prefix, std::vector<std::string>& out) {
    if (slots_left == 0) {
      if (budget == 0) out.push_back(prefix + ")");
      return;
    }
    prefix.push_back('_');
    emit(budget, slots_left - 1, prefix, out);
    prefix.pop_back();
    std::size_t base = prefix.size();
    for (int s = 1; s <= budget; ++s) {
      for (const auto& sc : cache[s]) {
        prefix.append(sc);
        emit(budget - s, slots_left - 1, prefix, out);
        prefix.resize(base);
      }
    }
  }
};

struct BracketGen {
  int d;
  std::vector<std::vector<std::string>> cache;

  const std::vector<std::string>& of_size(int k) {
    cache.assign(k + 1, {});
    cache[1].push_back("()");
    for (int s = 2; s <= k; ++s) {
      std::string prefix = "(";
      emit(s - 1, d, prefix, cache[s]);
      std::sort(cache[s].begin(), cache[s].end());
    }
    return cache[k];
  }

  // Append up to `kids_left` more children totalling `budget` vertices.
  void emit(int budget, int kids_left, std::string& prefix, std::vector<std::string>& out) {
    if (budget == 0) {
      out.push_back(prefix + ")");
      return;
    }
    if (kids_left == 0) return;
    std::size_t base = prefix.size();
    for (int s = 1; s <= budget; ++s) {
      for (const auto& sc : cache[s]) {
        prefix.append(sc);
        emit(budget - s, kids_left - 1, prefix, out);
        prefix.resize(base);
      }
    }
  }
};

}  // namespace

std::vector<std::string> dary_codes(int d, int k) {
  check_args(d, k);
  DaryGen gen{d, {}};
  gen.of_size(k);
  return std::move(gen.cache[k]);
}

std::vector<std::string> bracket_codes(int d, int k) {
  check_args(d, k);
  BracketGen gen{d, {}};
  gen.of_size(k);
  return std::move(gen.cache[k]);
}

std::vector<DaryTree> enumerate_dary(int d, int k) {
  std::vector<DaryTree> out;
  std::string tag = "d" + std::to_string(d) + ":";
  for (const auto& c : dary_codes(d, k)) out.push_back(decode_dary(tag + c));
  return out;
}

std::vector<BracketTree> enumerate_bracket(int d, int k) {
  std::vector<BracketTree> out;
  std::string tag = "b" + std::to_string(d) + ":";
  for (const auto& c : bracket_codes(d, k)) out.push_back(decode_bracket(tag + c));
  return out;
}

bigint binomial(const bigint& n, int k) {
  if (k < 0 || n < k) return 0;
  bigint r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - (i - 1);
    r /= i;  // exact at every step
  }
  return r;
}

bigint count_dary(int d, int k) {
  if (d < 2) throw std::invalid_argument("arity must be at least 2");
  if (k < 0) throw std::invalid_argument("size must be nonnegative");
  if (k == 0) return 1;
  bigint c = binomial(bigint(d) * k, k);
  bigint denom = bigint(d - 1) * k + 1;
  assert(c % denom == 0);
  return c / denom;
}

bigint count_bracket(int d, int k) {
  check_args(d, k);
  // t[n] = trees on n vertices; f[j][m] = ordered forests of j trees, m vertices
  std::vector<bigint> t(k + 1, 0);
  t[1] = 1;
  for (int n = 2; n <= k; ++n) {
    std::vector<std::vector<bigint>> f(d + 1, std::vector<bigint>(n, 0));
    f[0][0] = 1;
    for (int j = 1; j <= d; ++j)
      for (int m = 1; m <= n - 1; ++m)
        for (int s = 1; s <= m; ++s) f[j][m] += t[s] * f[j - 1][m - s];
    bigint total = 0;
    for (int j = 1; j <= d; ++j) total += f[j][n - 1];
    t[n] = total;
  }
  return t[k];
}

}  // namespace supertree
