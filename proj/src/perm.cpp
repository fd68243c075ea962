#include "supertree/perm.hpp"

#include <algorithm>
#include <cassert>

namespace supertree {

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

namespace {

void require_binary(const DaryTree& t) {
  if (t.d != 2) throw std::invalid_argument("psi is defined for binary trees only");
}

void post_rec(const DaryTree& t, int v, int& next, std::vector<int>& label) {
  if (v < 0) return;
  post_rec(t, t.child(v, 1), next, label);
  post_rec(t, t.child(v, 2), next, label);
  label[v] = next++;
}

void in_rec(const DaryTree& t, int v, std::vector<int>& order) {
  if (v < 0) return;
  in_rec(t, t.child(v, 1), order);
  order.push_back(v);
  in_rec(t, t.child(v, 2), order);
}

}  // namespace

std::vector<int> postorder_labels(const DaryTree& t) {
  require_binary(t);
  std::vector<int> label(t.size(), 0);
  int next = 1;
  post_rec(t, 0, next, label);
  return label;
}

Permutation psi(const DaryTree& t) {
  std::vector<int> label = postorder_labels(t);
  std::vector<int> order;
  in_rec(t, 0, order);
  Permutation out;
  out.reserve(order.size());
  for (int v : order) out.push_back(label[v]);
  return out;
}

namespace {

// A 231-avoiding word splits at its maximum into a prefix on {lo..lo+m-1}
// and a suffix on the remaining values.
int psi_inv_rec(const int* w, int n, int lo, DaryTree& t) {
  assert(n >= 1);
  int maxpos = 0;
  for (int i = 1; i < n; ++i)
    if (w[i] > w[maxpos]) maxpos = i;
  // prefix values must all be smaller than suffix values
  for (int i = 0; i < maxpos; ++i)
    if (w[i] >= lo + maxpos) throw std::invalid_argument("permutation contains the pattern 231");
  int id = t.size();
  t.slots.insert(t.slots.end(), 2, -1);
  if (maxpos > 0) {
    int c = psi_inv_rec(w, maxpos, lo, t);
    t.slots[static_cast<std::size_t>(id) * 2] = c;
  }
  if (maxpos < n - 1) {
    int c = psi_inv_rec(w + maxpos + 1, n - maxpos - 1, lo + maxpos, t);
    t.slots[static_cast<std::size_t>(id) * 2 + 1] = c;
  }
  return id;
}

}  // namespace

DaryTree psi_inv(const Permutation& p) {
  if (!is_permutation(p) || p.empty()) throw std::invalid_argument("psi_inv needs a nonempty permutation");
  DaryTree t;
  t.d = 2;
  psi_inv_rec(p.data(), static_cast<int>(p.size()), 1, t);
  // nodes were appended with the root first
  return t;
}

namespace {

bool contains_rec(const Permutation& sigma, const Permutation& mu, std::size_t si, std::size_t mi,
                  std::vector<int>& picked) {
  if (mi == mu.size()) return true;
  if (sigma.size() - si < mu.size() - mi) return false;
  for (std::size_t i = si; i < sigma.size(); ++i) {
    // order-isomorphism against the already-picked prefix
    bool ok = true;
    for (std::size_t j = 0; j < mi && ok; ++j)
      if ((mu[j] < mu[mi]) != (picked[j] < static_cast<int>(sigma[i]))) ok = false;
    if (!ok) continue;
    picked.push_back(sigma[i]);
    if (contains_rec(sigma, mu, i + 1, mi + 1, picked)) return true;
    picked.pop_back();
  }
  return false;
}

}  // namespace

bool perm_contains(const Permutation& sigma, const Permutation& mu) {
  if (!is_permutation(sigma) || !is_permutation(mu)) throw std::invalid_argument("invalid permutation");
  if (mu.size() > sigma.size()) return false;
  if (mu.empty()) return true;
  std::vector<int> picked;
  return contains_rec(sigma, mu, 0, 0, picked);
}

bool avoids(const Permutation& p, const std::vector<Permutation>& patterns) {
  for (const auto& mu : patterns)
    if (perm_contains(p, mu)) return false;
  return true;
}

Permutation delete_normalize(const Permutation& p, int value) {
  auto it = std::find(p.begin(), p.end(), value);
  if (it == p.end()) throw std::invalid_argument("value not present in permutation");
  Permutation out;
  out.reserve(p.size() - 1);
  for (int v : p)
    if (v != value) out.push_back(v > value ? v - 1 : v);
  return out;
}

bool is_layered(const Permutation& p) {
  if (!is_permutation(p)) throw std::invalid_argument("invalid permutation");
  return avoids(p, {{2, 3, 1}, {3, 1, 2}});
}

std::vector<Permutation> enumerate_layered(int k) {
  if (k < 1) throw std::invalid_argument("length must be positive");
  // one layered permutation per composition of k: decreasing blocks
  std::vector<Permutation> out;
  std::vector<int> parts;
  struct Gen {
    int k;
    std::vector<int>& parts;
    std::vector<Permutation>& out;
    void rec(int left) {
      if (left == 0) {
        Permutation p;
        int base = 0;
        for (int b : parts) {
          for (int v = base + b; v > base; --v) p.push_back(v);
          base += b;
        }
        out.push_back(std::move(p));
        return;
      }
      for (int b = 1; b <= left; ++b) {
        parts.push_back(b);
        rec(left - b);
        parts.pop_back();
      }
    }
  } gen{k, parts, out};
  gen.rec(k);
  return out;
}

std::string perm_to_string(const Permutation& p) {
  std::string s;
  if (p.size() <= 9) {
    for (int v : p) s.push_back(static_cast<char>('0' + v));
  } else {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) s.push_back(',');
      s += std::to_string(p[i]);
    }
  }
  return s;
}

Permutation parse_perm(const std::string& s) {
  Permutation p;
  if (s.find(',') == std::string::npos) {
    for (char c : s) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad permutation digit '" + std::string(1, c) + "'");
      p.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      p.push_back(std::stoi(s.substr(pos, next - pos)));
      pos = next + 1;
    }
  }
  if (!is_permutation(p)) throw std::invalid_argument("word is not a permutation of 1..n");
  return p;
}

}  // namespace supertree
