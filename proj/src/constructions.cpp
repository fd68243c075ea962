#include "supertree/constructions.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace supertree {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_size(long long built, const bigint& expected, const char* family) {
  if (bigint(built) != expected)
    throw std::logic_error(std::string(family) + ": constructed size " + std::to_string(built) +
                           " does not match the recurrence value " + expected.str());
}

std::vector<int> increasing(int from, int to) {  // [from, to]
  std::vector<int> v;
  for (int i = from; i <= to; ++i) v.push_back(i);
  return v;
}

DaryTree dary_star(int d) {
  DaryTree t = dary_single(d);
  for (int i = 1; i <= d; ++i) {
    t.slots.insert(t.slots.end(), d, -1);
    t.slots[i - 1] = t.size() - 1;
  }
  return t;
}

VertexRef concat(VertexRef a, const VertexRef& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

FamilyId parse_family(const std::string& s) {
  static const std::map<std::string, FamilyId> names = {
      {"delta", FamilyId::delta},
      {"xi", FamilyId::xi},
      {"lambda", FamilyId::lambda},
      {"big_xi", FamilyId::big_xi},
      {"crescent", FamilyId::crescent},
      {"vertebra", FamilyId::vertebra},
      {"spine", FamilyId::spine},
      {"modified_vertebra", FamilyId::modified_vertebra},
      {"modified_spine", FamilyId::modified_spine},
      {"perfect", FamilyId::perfect},
      {"j_gadget", FamilyId::j_gadget},
  };
  auto it = names.find(s);
  if (it == names.end()) throw std::invalid_argument("unknown family '" + s + "'");
  return it->second;
}

std::string to_string(FamilyId f) {
  switch (f) {
    case FamilyId::delta: return "delta";
    case FamilyId::xi: return "xi";
    case FamilyId::lambda: return "lambda";
    case FamilyId::big_xi: return "big_xi";
    case FamilyId::crescent: return "crescent";
    case FamilyId::vertebra: return "vertebra";
    case FamilyId::spine: return "spine";
    case FamilyId::modified_vertebra: return "modified_vertebra";
    case FamilyId::modified_spine: return "modified_spine";
    case FamilyId::perfect: return "perfect";
    case FamilyId::j_gadget: return "j_gadget";
  }
  return "?";
}

bigint delta_size(int d, int k) {
  require(d >= 2 && k >= 1, "delta: need d >= 2, k >= 1");
  return boost::multiprecision::pow(bigint(d), k - 1) + k - 1;
}

DaryTree delta(int d, int k) {
  require(d >= 2 && k >= 1, "delta: need d >= 2, k >= 1");
  if (k == 1) return dary_single(d);
  // type-1 path on k-1 vertices, leaf v
  DaryTree t = path_dary(d, std::vector<int>(k - 2, 1));
  VertexRef v(k - 2, 1);
  DaryTree pk = perfect(d, k - 2);
  for (int i = 2; i <= d; ++i) {
    VertexRef at = concat(v, {i});
    t = attach_merge(t, v, path_dary(d, {i}));
    t = glue(t, at, pk);
  }
  // one extra vertex under the leftmost leaf of the slot-2 copy
  VertexRef leftmost = concat(v, {2});
  leftmost.insert(leftmost.end(), k - 2, 1);
  t = glue(t, leftmost, path_dary(d, {1}));
  check_size(t.size(), delta_size(d, k), "delta");
  return t;
}

DaryTree crescent(int d) {
  require(d >= 2, "crescent: need d >= 2");
  return path_dary(d, increasing(1, d));
}

std::pair<DaryTree, GadgetLeaves> vertebra(int d) {
  require(d >= 2, "vertebra: need d >= 2");
  DaryTree t = crescent(d);
  // crescent #1 minus its lowest vertex, merged at the depth-1 vertex
  t = attach_merge(t, {1}, path_dary(d, increasing(1, d - 1)));
  // crescent #3 minus its root, merged at the root
  t = attach_merge(t, {}, path_dary(d, increasing(2, d)));
  GadgetLeaves leaves;
  leaves.left = concat({1}, increasing(1, d - 1));
  leaves.center = increasing(1, d);
  leaves.right = increasing(2, d);
  assert(t.size() == 3 * d - 1);
  return {std::move(t), std::move(leaves)};
}

DarySpine spine(int d, int m) {
  require(m >= 1, "spine: need m >= 1");
  auto [vert, rel] = vertebra(d);
  DarySpine sp{crescent(d), {}};
  VertexRef prefix = increasing(1, d);  // leaf of the top crescent
  for (int j = 0; j < m; ++j) {
    sp.tree = glue(sp.tree, prefix, vert);
    sp.verts.push_back({concat(prefix, rel.left), concat(prefix, rel.center), concat(prefix, rel.right)});
    prefix = sp.verts.back().center;
  }
  return sp;
}

bigint xi_size(int d, int k) {
  require(d >= 2 && k >= 1, "xi: need d >= 2, k >= 1");
  const int delta2 = d == 2 ? 1 : 0;
  std::vector<bigint> m(std::max(4, k + 1));
  m[1] = 1;
  m[2] = d + 1;
  m[3] = 2 * d + 1;
  for (int n = 4; n <= k; ++n) {
    bigint val = (d + 1) + bigint(n / 2 - delta2) * (3 * d - 2);
    for (int i = 1; i <= n / 2 - 2; ++i) val += 2 * (m[i] - 1);
    val += m[n / 2 - 1] - 1;
    val += m[(n + 1) / 2 - 1] - 1;
    val += m[(n + 1) / 2] - 1;
    if (!delta2) val += 2 * (m[(n + 1) / 4] - 1);
    m[n] = val;
  }
  return m[k];
}

DaryTree xi(int d, int k) {
  require(d >= 2 && k >= 1, "xi: need d >= 2, k >= 1");
  DaryTree t = dary_single(d);
  if (k == 1) {
    // single vertex
  } else if (k == 2) {
    t = crescent(d);
  } else if (k == 3) {
    t = glue(crescent(d), increasing(1, d), dary_star(d));
  } else {
    const int half = k / 2, ohalf = (k + 1) / 2;
    const int m = d == 2 ? half - 1 : half;
    DarySpine sp = spine(d, m);
    t = std::move(sp.tree);
    for (int i = 1; i <= half - 2; ++i) {
      DaryTree part = xi(d, i);
      t = glue(t, sp.verts[i - 1].left, part);
      t = glue(t, sp.verts[i - 1].right, part);
    }
    t = glue(t, sp.verts[half - 2].right, xi(d, half - 1));
    t = glue(t, sp.verts[half - 2].left, xi(d, ohalf - 1));
    t = glue(t, sp.verts[m - 1].center, xi(d, ohalf));
    if (d > 2) {
      DaryTree part = xi(d, (k + 1) / 4);
      t = glue(t, sp.verts[m - 1].left, part);
      t = glue(t, sp.verts[m - 1].right, part);
    }
  }
  check_size(t.size(), xi_size(d, k), "xi");
  return t;
}

VertexRef xi_tail_ref(int d, int k) {
  require(k >= 4, "xi tail exists for k >= 4 only");
  const int m = d == 2 ? k / 2 - 1 : k / 2;
  VertexRef ref;
  for (int j = 0; j <= m; ++j) ref = concat(std::move(ref), increasing(1, d));
  return ref;  // center leaf of the lowest vertebra
}

DaryTree j_gadget(int d, const std::vector<int>& tvec) {
  require(d >= 2, "j_gadget: need d >= 2");
  require(!tvec.empty(), "j_gadget: tvec must be nonempty");
  for (std::size_t i = 0; i < tvec.size(); ++i) {
    require(tvec[i] >= 1 && tvec[i] <= d, "j_gadget: entries must lie in [1,d]");
    require(i == 0 || tvec[i - 1] < tvec[i], "j_gadget: tvec must be strictly increasing");
  }
  const int m = static_cast<int>(tvec.size());
  if (m == 1) return path_dary(d, {tvec[0]});  // degenerate: one vertex plus its child
  // type-1 path on m-1 vertices; bottom vertex has depth m-2
  DaryTree t = path_dary(d, std::vector<int>(m - 2, 1));
  for (int i = 2; i <= m; ++i) {
    VertexRef at(m - i, 1);  // (i-1)-th vertex from the bottom
    t = attach_merge(t, at, path_dary(d, {tvec[i - 1]}));
  }
  t = attach_merge(t, VertexRef(m - 2, 1), path_dary(d, {tvec[0]}));
  assert(t.size() == 2 * m - 1);
  assert(leaf_count(t) == m);
  return t;
}

bigint lambda_size(int d, int k) {
  require(d >= 2 && k >= 1, "lambda: need d >= 2, k >= 1");
  std::vector<bigint> L(k + 1);
  L[1] = 1;
  for (int n = 2; n <= k; ++n) {
    bigint val = 1 + L[n - 1];
    if (n <= d) {
      for (int i = 1; i <= n / 2 - 1; ++i) val += L[i];
      for (int i = 1; i <= (n + 1) / 2 - 1; ++i) val += L[i];
    } else {
      for (int i = n - d; i <= n - d / 2 - 2; ++i) val += L[i];
      for (int i = n - d; i <= n - (d + 1) / 2 - 1; ++i) val += L[i];
    }
    L[n] = val;
  }
  return L[k];
}

BracketTree lambda(int d, int k) {
  require(d >= 2 && k >= 1, "lambda: need d >= 2, k >= 1");
  std::vector<BracketTree> tab;
  tab.reserve(k + 1);
  tab.push_back(bracket_single(d));  // unused slot 0
  tab.push_back(bracket_single(d));
  for (int n = 2; n <= k; ++n) {
    std::vector<int> order;  // subtree sizes, left to right
    if (n <= d) {
      for (int i = 1; i <= n / 2 - 1; ++i) order.push_back(i);
      order.push_back(n - 1);
      for (int i = (n + 1) / 2 - 1; i >= 1; --i) order.push_back(i);
    } else {
      for (int i = n - d; i <= n - d / 2 - 2; ++i) order.push_back(i);
      order.push_back(n - 1);
      for (int i = n - (d + 1) / 2 - 1; i >= n - d; --i) order.push_back(i);
    }
    BracketTree t = bracket_single(d);
    for (int s : order) t = append_child(t, {}, tab[s]);
    check_size(t.size(), lambda_size(d, n), "lambda");
    tab.push_back(std::move(t));
  }
  return tab[k];
}

std::pair<BracketTree, GadgetLeaves> modified_vertebra(int d) {
  require(d >= 2, "modified_vertebra: need d >= 2");
  BracketTree leaf = bracket_single(d);
  BracketTree t = bracket_single(d);
  GadgetLeaves leaves;
  if (d > 2) {
    for (int i = 0; i < 3; ++i) t = append_child(t, {}, leaf);
    leaves = {{1}, {2}, {3}};
  } else {
    t = append_child(t, {}, leaf);
    t = append_child(t, {}, leaf);
    t = append_child(t, {1}, leaf);
    t = append_child(t, {1}, leaf);
    leaves = {{1, 1}, {1, 2}, {2}};
  }
  return {std::move(t), std::move(leaves)};
}

BracketSpine modified_spine(int d, int m) {
  require(m >= 1, "modified_spine: need m >= 1");
  auto [vert, rel] = modified_vertebra(d);
  BracketSpine sp{path_bracket(d, 2), {}};
  VertexRef prefix = {1};
  for (int j = 0; j < m; ++j) {
    sp.tree = glue(sp.tree, prefix, vert);
    sp.verts.push_back({concat(prefix, rel.left), concat(prefix, rel.center), concat(prefix, rel.right)});
    prefix = sp.verts.back().center;
  }
  return sp;
}

bigint big_xi_size(int d, int k) {
  require(d >= 2 && k >= 1, "big_xi: need d >= 2, k >= 1");
  const int delta2 = d == 2 ? 1 : 0;
  std::vector<bigint> m(std::max(4, k + 1));
  m[1] = 1;
  m[2] = 2;
  m[3] = 4;
  for (int n = 4; n <= k; ++n) {
    bigint val = 2 + bigint(3 + delta2) * (n / 2 - delta2);
    for (int i = 1; i <= n / 2 - 2; ++i) val += 2 * (m[i] - 1);
    val += m[n / 2 - 1] - 1;
    val += m[(n + 1) / 2 - 1] - 1;
    val += m[(n + 1) / 2] - 1;
    if (!delta2) val += 2 * (m[(n + 1) / 4] - 1);
    m[n] = val;
  }
  return m[k];
}

BracketTree big_xi(int d, int k) {
  require(d >= 2 && k >= 1, "big_xi: need d >= 2, k >= 1");
  BracketTree t = bracket_single(d);
  if (k == 1) {
    // single vertex
  } else if (k == 2) {
    t = path_bracket(d, 2);
  } else if (k == 3) {
    BracketTree leaf = bracket_single(d);
    t = path_bracket(d, 2);
    t = append_child(t, {1}, leaf);
    t = append_child(t, {1}, leaf);
  } else {
    const int half = k / 2, ohalf = (k + 1) / 2;
    const int m = d == 2 ? half - 1 : half;
    BracketSpine sp = modified_spine(d, m);
    t = std::move(sp.tree);
    for (int i = 1; i <= half - 2; ++i) {
      BracketTree part = big_xi(d, i);
      t = glue(t, sp.verts[i - 1].left, part);
      t = glue(t, sp.verts[i - 1].right, part);
    }
    t = glue(t, sp.verts[half - 2].right, big_xi(d, half - 1));
    t = glue(t, sp.verts[half - 2].left, big_xi(d, ohalf - 1));
    t = glue(t, sp.verts[m - 1].center, big_xi(d, ohalf));
    if (d > 2) {
      BracketTree part = big_xi(d, (k + 1) / 4);
      t = glue(t, sp.verts[m - 1].left, part);
      t = glue(t, sp.verts[m - 1].right, part);
    }
  }
  check_size(t.size(), big_xi_size(d, k), "big_xi");
  return t;
}

VertexRef big_xi_tail_ref(int d, int k) {
  require(k >= 4, "big_xi tail exists for k >= 4 only");
  const int m = d == 2 ? k / 2 - 1 : k / 2;
  auto rel = modified_vertebra(d).second;
  VertexRef ref = {1};
  for (int j = 1; j < m; ++j) ref = concat(std::move(ref), rel.center);
  return concat(std::move(ref), rel.center);
}

int leaf_count(const DaryTree& t) {
  int n = 0;
  for (int v = 0; v < t.size(); ++v)
    if (is_leaf(t, v)) ++n;
  return n;
}

int leaf_count(const BracketTree& t) {
  int n = 0;
  for (int v = 0; v < t.size(); ++v)
    if (is_leaf(t, v)) ++n;
  return n;
}

std::string build_family(FamilyId f, int d, int k, const std::vector<int>& tvec) {
  switch (f) {
    case FamilyId::delta: return encode(delta(d, k));
    case FamilyId::xi: return encode(xi(d, k));
    case FamilyId::lambda: return encode(lambda(d, k));
    case FamilyId::big_xi: return encode(big_xi(d, k));
    case FamilyId::crescent: return encode(crescent(d));
    case FamilyId::vertebra: return encode(vertebra(d).first);
    case FamilyId::spine: return encode(spine(d, k).tree);
    case FamilyId::modified_vertebra: return encode(modified_vertebra(d).first);
    case FamilyId::modified_spine: return encode(modified_spine(d, k).tree);
    case FamilyId::perfect: return encode(perfect(d, k));
    case FamilyId::j_gadget: return encode(j_gadget(d, tvec));
  }
  throw std::logic_error("unreachable");
}

}  // namespace supertree
