#include "supertree/containment.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <thread>

#include "supertree/enumerate.hpp"

namespace supertree {

std::string to_string(Mode m) { return m == Mode::contiguous ? "contiguous" : "noncontiguous"; }
std::string to_string(Kind k) { return k == Kind::dary ? "dary" : "bracket"; }

Mode parse_mode(const std::string& s) {
  if (s == "contiguous") return Mode::contiguous;
  if (s == "noncontiguous") return Mode::noncontiguous;
  throw std::invalid_argument("mode must be contiguous|noncontiguous, got '" + s + "'");
}

Kind parse_kind(const std::string& s) {
  if (s == "dary") return Kind::dary;
  if (s == "bracket") return Kind::bracket;
  throw std::invalid_argument("kind must be dary|bracket, got '" + s + "'");
}

namespace {

// Anchored match: does the subtree of host at hx contain pattern's subtree
// at pv with the roots identified?
bool match_dary(const DaryTree& host, int hx, const DaryTree& pattern, int pv) {
  for (int i = 1; i <= pattern.d; ++i) {
    int pc = pattern.child(pv, i);
    if (pc < 0) continue;  // empty pattern slot: no constraint
    int hc = host.child(hx, i);
    if (hc < 0 || !match_dary(host, hc, pattern, pc)) return false;
  }
  return true;
}

// Order-preserving embedding of pattern's child list into host's child list,
// decided by dynamic programming over index pairs.
bool match_bracket(const BracketTree& host, int hx, const BracketTree& pattern, int pv);

bool embed_kids(const BracketTree& host, int hx, const BracketTree& pattern, int pv, std::size_t hi,
                std::size_t pi) {
  const auto& hk = host.kids[hx];
  const auto& pk = pattern.kids[pv];
  if (pi == pk.size()) return true;
  if (hk.size() - hi < pk.size() - pi) return false;
  if (match_bracket(host, hk[hi], pattern, pk[pi]) && embed_kids(host, hx, pattern, pv, hi + 1, pi + 1))
    return true;
  return embed_kids(host, hx, pattern, pv, hi + 1, pi);
}

bool match_bracket(const BracketTree& host, int hx, const BracketTree& pattern, int pv) {
  return embed_kids(host, hx, pattern, pv, 0, 0);
}

}  // namespace

bool contig_dary(const DaryTree& host, const DaryTree& pattern) {
  if (host.d != pattern.d) throw std::invalid_argument("contig_dary: arity mismatch");
  for (int v = 0; v < host.size(); ++v)
    if (match_dary(host, v, pattern, 0)) return true;
  return false;
}

bool contig_bracket(const BracketTree& host, const BracketTree& pattern) {
  if (host.d != pattern.d) throw std::invalid_argument("contig_bracket: bound mismatch");
  for (int v = 0; v < host.size(); ++v)
    if (match_bracket(host, v, pattern, 0)) return true;
  return false;
}

std::vector<int> legal_children(const DaryTree& t) {
  auto par = parents(t);
  std::vector<int> out;
  for (int v = 1; v < t.size(); ++v) {
    int u = par[v];
    auto cv = chi(t, v);
    if (cv.empty()) {
      out.push_back(v);  // leaf edge, vacuously legal
      continue;
    }
    int lo = cv.front(), hi = cv.back();
    int type = 0;
    for (int i = 1; i <= t.d; ++i)
      if (t.child(u, i) == v) type = i;
    bool ok = true;
    for (int j : chi(t, u))
      if (j != type && !(j < lo || j > hi)) ok = false;
    if (ok) out.push_back(v);
  }
  return out;
}

std::vector<int> legal_children(const BracketTree& t) {
  auto par = parents(t);
  std::vector<int> out;
  for (int v = 1; v < t.size(); ++v) {
    int u = par[v];
    if (t.degree(u) - 1 + t.degree(v) <= t.d) out.push_back(v);
  }
  return out;
}

namespace {

// Preorder rebuild of t with v contracted into its parent.
struct DaryContract {
  const DaryTree& t;
  int u, v;
  DaryTree out;

  int eff_child(int x, int i) const {
    if (x == u) {
      int vc = t.child(v, i);
      if (vc >= 0) return vc;
      int c = t.child(u, i);
      return c == v ? -1 : c;
    }
    return t.child(x, i);
  }

  int copy(int x) {
    int id = out.size();
    out.slots.insert(out.slots.end(), out.d, -1);
    for (int i = 1; i <= t.d; ++i) {
      int c = eff_child(x, i);
      if (c >= 0) {
        int nc = copy(c);
        out.slots[static_cast<std::size_t>(id) * out.d + i - 1] = nc;
      }
    }
    return id;
  }
};

}  // namespace

DaryTree contract_child(const DaryTree& t, int v) {
  auto par = parents(t);
  assert(v > 0 && par[v] >= 0);
  DaryContract c{t, par[v], v, {}};
  c.out.d = t.d;
  c.copy(0);
  return std::move(c.out);
}

BracketTree contract_child(const BracketTree& t, int v) {
  auto par = parents(t);
  assert(v > 0 && par[v] >= 0);
  int u = par[v];
  struct Walk {
    const BracketTree& t;
    int u, v;
    BracketTree out;
    int copy(int x) {
      int id = out.size();
      out.kids.emplace_back();
      std::vector<int32_t> source;
      if (x == u) {
        for (int32_t c : t.kids[u]) {
          if (c == v)
            source.insert(source.end(), t.kids[v].begin(), t.kids[v].end());
          else
            source.push_back(c);
        }
      } else {
        source = t.kids[x];
      }
      for (int32_t c : source) {
        int nc = copy(c);
        out.kids[id].push_back(nc);
      }
      return id;
    }
  } walk{t, u, v, {}};
  walk.out.d = t.d;
  walk.copy(0);
  return std::move(walk.out);
}

std::vector<DaryEdge> legal_edges_dary(const DaryTree& t) {
  auto par = parents(t);
  // path to every node
  std::vector<VertexRef> path(t.size());
  for (int x = 0; x < t.size(); ++x)
    for (int i = 1; i <= t.d; ++i) {
      int c = t.child(x, i);
      if (c >= 0) {
        path[c] = path[x];
        path[c].push_back(i);
      }
    }
  std::vector<DaryEdge> out;
  for (int v : legal_children(t)) out.push_back({path[v], path[v].back()});
  return out;
}

std::vector<BracketEdge> legal_edges_bracket(const BracketTree& t) {
  std::vector<VertexRef> path(t.size());
  for (int x = 0; x < t.size(); ++x)
    for (std::size_t p = 0; p < t.kids[x].size(); ++p) {
      int c = t.kids[x][p];
      path[c] = path[x];
      path[c].push_back(static_cast<int>(p) + 1);
    }
  std::vector<BracketEdge> out;
  for (int v : legal_children(t)) out.push_back({path[v]});
  return out;
}

namespace {

template <class Tree>
bool edge_is_legal(const Tree& t, int v) {
  auto legals = legal_children(t);
  return std::find(legals.begin(), legals.end(), v) != legals.end();
}

}  // namespace

DaryTree contract_dary(const DaryTree& t, const DaryEdge& e) {
  int v = resolve(t, e.child);
  if (v == 0) throw std::invalid_argument("cannot contract at the root");
  if (!edge_is_legal(t, v)) throw std::invalid_argument("edge is not legally contractible");
  return contract_child(t, v);
}

BracketTree contract_bracket(const BracketTree& t, const BracketEdge& e) {
  int v = resolve(t, e.child);
  if (v == 0) throw std::invalid_argument("cannot contract at the root");
  if (!edge_is_legal(t, v)) throw std::invalid_argument("edge is not legally contractible");
  return contract_child(t, v);
}

namespace {

template <class Tree>
bool noncontig_impl(const Tree& host, const Tree& pattern) {
  if (host.d != pattern.d) throw std::invalid_argument("noncontig: kind or arity/bound mismatch");
  const int k = pattern.size();
  if (host.size() < k) return false;
  const std::string target = node_code(pattern);
  if (host.size() == k) return node_code(host) == target;
  const int ph = height(pattern);
  if (height(host) < ph) return false;

  std::unordered_set<std::string> seen;
  std::vector<Tree> stack{host};
  seen.insert(node_code(host));
  while (!stack.empty()) {
    Tree cur = std::move(stack.back());
    stack.pop_back();
    for (int v : legal_children(cur)) {
      Tree nxt = contract_child(cur, v);
      if (height(nxt) < ph) continue;  // contraction never raises height
      std::string code = node_code(nxt);
      if (nxt.size() == k) {
        if (code == target) return true;
        continue;
      }
      if (seen.insert(std::move(code)).second) stack.push_back(std::move(nxt));
    }
  }
  return false;
}

template <class Tree>
std::unordered_set<std::string> closure_impl(const Tree& host, int k, std::uint64_t* states) {
  if (k > host.size()) throw std::invalid_argument("closure_at_size: k exceeds host size");
  const std::string tag = (std::is_same_v<Tree, DaryTree> ? "d" : "b") + std::to_string(host.d) + ":";
  std::unordered_set<std::string> out;
  if (k < 1) return out;
  if (host.size() == k) {
    out.insert(tag + node_code(host));
    if (states) *states = 1;
    return out;
  }
  std::unordered_set<std::string> seen;
  std::vector<Tree> stack{host};
  seen.insert(node_code(host));
  while (!stack.empty()) {
    Tree cur = std::move(stack.back());
    stack.pop_back();
    for (int v : legal_children(cur)) {
      Tree nxt = contract_child(cur, v);
      std::string code = node_code(nxt);
      if (nxt.size() == k) {
        out.insert(tag + code);
        continue;
      }
      if (seen.insert(std::move(code)).second) stack.push_back(std::move(nxt));
    }
  }
  if (states) *states = seen.size() + out.size();
  return out;
}

}  // namespace

bool noncontig(const DaryTree& host, const DaryTree& pattern) { return noncontig_impl(host, pattern); }
bool noncontig(const BracketTree& host, const BracketTree& pattern) { return noncontig_impl(host, pattern); }

std::unordered_set<std::string> closure_at_size(const DaryTree& host, int k, std::uint64_t* states) {
  return closure_impl(host, k, states);
}
std::unordered_set<std::string> closure_at_size(const BracketTree& host, int k, std::uint64_t* states) {
  return closure_impl(host, k, states);
}

namespace {

template <class Tree>
Tree decode_as(const std::string& full);
template <>
DaryTree decode_as<DaryTree>(const std::string& full) {
  return decode_dary(full);
}
template <>
BracketTree decode_as<BracketTree>(const std::string& full) {
  return decode_bracket(full);
}

// First enumeration index where the contiguous check fails, or -1.
template <class Tree>
long first_contig_failure(const Tree& host, const std::vector<std::string>& codes, const std::string& tag,
                          int jobs) {
  const long n = static_cast<long>(codes.size());
  if (jobs < 2 || n < 64) {
    for (long i = 0; i < n; ++i) {
      Tree p = decode_as<Tree>(tag + codes[i]);
      bool ok;
      if constexpr (std::is_same_v<Tree, DaryTree>)
        ok = contig_dary(host, p);
      else
        ok = contig_bracket(host, p);
      if (!ok) return i;
    }
    return -1;
  }
  std::atomic<long> best{n};
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w]() {
      for (long i = w; i < n; i += jobs) {
        if (i >= best.load(std::memory_order_relaxed)) break;
        Tree p = decode_as<Tree>(tag + codes[i]);
        bool ok;
        if constexpr (std::is_same_v<Tree, DaryTree>)
          ok = contig_dary(host, p);
        else
          ok = contig_bracket(host, p);
        if (!ok) {
          long cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  return best.load() == n ? -1 : best.load();
}

template <class Tree>
UniversalityReport universal_impl(const Tree& host, int k, Mode mode, int jobs) {
  constexpr bool is_dary = std::is_same_v<Tree, DaryTree>;
  auto start = std::chrono::steady_clock::now();
  UniversalityReport rep;
  rep.host = encode(host);
  rep.d = host.d;
  rep.k = k;
  rep.kind = is_dary ? Kind::dary : Kind::bracket;
  rep.mode = mode;

  std::vector<std::string> codes = is_dary ? dary_codes(host.d, k) : bracket_codes(host.d, k);
  const std::string tag = (is_dary ? "d" : "b") + std::to_string(host.d) + ":";

  if (mode == Mode::contiguous) {
    long fail = first_contig_failure(host, codes, tag, jobs);
    rep.verdict = fail < 0;
    if (fail >= 0) {
      rep.counterexample = tag + codes[fail];
      rep.patterns_checked = static_cast<std::uint64_t>(fail) + 1;
    } else {
      rep.patterns_checked = codes.size();
    }
  } else {
    if (host.size() < k) {
      rep.verdict = codes.empty();
      if (!codes.empty()) {
        rep.counterexample = tag + codes.front();
        rep.patterns_checked = 1;
      }
    } else {
      auto closure = closure_at_size(host, k, &rep.states_visited);
      // the closure is a subset of the k-vertex trees of this kind
      rep.verdict = closure.size() == codes.size();
      if (rep.verdict) {
        rep.patterns_checked = codes.size();
      } else {
        for (std::size_t i = 0; i < codes.size(); ++i) {
          if (!closure.count(tag + codes[i])) {
            rep.counterexample = tag + codes[i];
            rep.patterns_checked = i + 1;
            break;
          }
        }
      }
    }
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

UniversalityReport universal(const DaryTree& host, int k, Mode mode, int jobs) {
  return universal_impl(host, k, mode, jobs);
}
UniversalityReport universal(const BracketTree& host, int k, Mode mode, int jobs) {
  return universal_impl(host, k, mode, jobs);
}

}  // namespace supertree
