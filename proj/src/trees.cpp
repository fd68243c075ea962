#include "supertree/trees.hpp"

#include <algorithm>
#include <cassert>

namespace supertree {

namespace {

void check_arity(int d) {
  if (d < 2) throw std::invalid_argument("arity/bound must be at least 2, got " + std::to_string(d));
}

// Appends a copy of src's subtree rooted at sv to dst; returns the new id.
int append_dary(DaryTree& dst, const DaryTree& src, int sv) {
  int id = dst.size();
  dst.slots.insert(dst.slots.end(), dst.d, -1);
  for (int i = 1; i <= src.d; ++i) {
    int c = src.child(sv, i);
    if (c >= 0) {
      int nc = append_dary(dst, src, c);
      dst.slots[static_cast<std::size_t>(id) * dst.d + i - 1] = nc;
    }
  }
  return id;
}

int append_bracket(BracketTree& dst, const BracketTree& src, int sv) {
  int id = dst.size();
  dst.kids.emplace_back();
  for (int32_t c : src.kids[sv]) {
    int nc = append_bracket(dst, src, c);
    dst.kids[id].push_back(nc);
  }
  return id;
}

}  // namespace

DaryTree dary_single(int d) {
  check_arity(d);
  DaryTree t;
  t.d = d;
  t.slots.assign(d, -1);
  return t;
}

BracketTree bracket_single(int d) {
  check_arity(d);
  BracketTree t;
  t.d = d;
  t.kids.emplace_back();
  return t;
}

int height(const DaryTree& t) {
  // iterative depth scan; trees can be large (delta at k=12)
  std::vector<std::pair<int, int>> stack{{0, 0}};
  int h = 0;
  while (!stack.empty()) {
    auto [v, depth] = stack.back();
    stack.pop_back();
    h = std::max(h, depth);
    for (int i = 1; i <= t.d; ++i) {
      int c = t.child(v, i);
      if (c >= 0) stack.push_back({c, depth + 1});
    }
  }
  return h;
}

int height(const BracketTree& t) {
  std::vector<std::pair<int, int>> stack{{0, 0}};
  int h = 0;
  while (!stack.empty()) {
    auto [v, depth] = stack.back();
    stack.pop_back();
    h = std::max(h, depth);
    for (int32_t c : t.kids[v]) stack.push_back({c, depth + 1});
  }
  return h;
}

std::vector<int> chi(const DaryTree& t, int v) {
  std::vector<int> out;
  for (int i = 1; i <= t.d; ++i)
    if (t.child(v, i) >= 0) out.push_back(i);
  return out;
}

std::vector<int> chi_at(const DaryTree& t, const VertexRef& at) { return chi(t, resolve(t, at)); }

bool is_leaf(const DaryTree& t, int v) { return chi(t, v).empty(); }
bool is_leaf(const BracketTree& t, int v) { return t.kids[v].empty(); }

int resolve(const DaryTree& t, const VertexRef& at) {
  int v = 0;
  for (int step : at) {
    if (step < 1 || step > t.d) throw std::out_of_range("slot index out of range in vertex ref");
    int c = t.child(v, step);
    if (c < 0) throw std::out_of_range("vertex ref walks into an empty slot");
    v = c;
  }
  return v;
}

int resolve(const BracketTree& t, const VertexRef& at) {
  int v = 0;
  for (int step : at) {
    if (step < 1 || step > t.degree(v)) throw std::out_of_range("child position out of range in vertex ref");
    v = t.kids[v][step - 1];
  }
  return v;
}

std::vector<int> parents(const DaryTree& t) {
  std::vector<int> p(t.size(), -1);
  for (int v = 0; v < t.size(); ++v)
    for (int i = 1; i <= t.d; ++i) {
      int c = t.child(v, i);
      if (c >= 0) p[c] = v;
    }
  return p;
}

std::vector<int> parents(const BracketTree& t) {
  std::vector<int> p(t.size(), -1);
  for (int v = 0; v < t.size(); ++v)
    for (int32_t c : t.kids[v]) p[c] = v;
  return p;
}

DaryTree perfect(int d, int h) {
  check_arity(d);
  if (h < 0) throw std::invalid_argument("perfect tree height must be nonnegative");
  DaryTree t = dary_single(d);
  // level-order fill
  std::vector<int> level{0};
  for (int r = 0; r < h; ++r) {
    std::vector<int> next;
    for (int v : level)
      for (int i = 1; i <= d; ++i) {
        int id = t.size();
        t.slots.insert(t.slots.end(), d, -1);
        t.slots[static_cast<std::size_t>(v) * d + i - 1] = id;
        next.push_back(id);
      }
    level = std::move(next);
  }
  return t;
}

DaryTree path_dary(int d, const std::vector<int>& types) {
  check_arity(d);
  DaryTree t = dary_single(d);
  int v = 0;
  for (int ty : types) {
    if (ty < 1 || ty > d) throw std::invalid_argument("edge type out of range [1,d]");
    int id = t.size();
    t.slots.insert(t.slots.end(), d, -1);
    t.slots[static_cast<std::size_t>(v) * d + ty - 1] = id;
    v = id;
  }
  return t;
}

BracketTree path_bracket(int d, int vertices) {
  check_arity(d);
  if (vertices < 1) throw std::invalid_argument("path needs at least one vertex");
  BracketTree t = bracket_single(d);
  int v = 0;
  for (int i = 1; i < vertices; ++i) {
    t.kids.emplace_back();
    t.kids[v].push_back(i);
    v = i;
  }
  return t;
}

DaryTree attach_merge(const DaryTree& host, const VertexRef& at, const DaryTree& sub) {
  if (host.d != sub.d) throw std::invalid_argument("attach_merge: arity mismatch");
  int target = resolve(host, at);
  DaryTree out = host;
  for (int i = 1; i <= sub.d; ++i) {
    int c = sub.child(0, i);
    if (c < 0) continue;
    if (out.child(target, i) >= 0)
      throw std::invalid_argument("attach_merge: slot " + std::to_string(i) + " occupied in both trees");
    int nc = append_dary(out, sub, c);
    out.slots[static_cast<std::size_t>(target) * out.d + i - 1] = nc;
  }
  return out;
}

DaryTree glue(const DaryTree& host, const VertexRef& at, const DaryTree& sub) {
  int target = resolve(host, at);
  if (!is_leaf(host, target)) throw std::invalid_argument("glue target must be a leaf");
  return attach_merge(host, at, sub);
}

BracketTree glue(const BracketTree& host, const VertexRef& at, const BracketTree& sub) {
  if (host.d != sub.d) throw std::invalid_argument("glue: bound mismatch");
  int target = resolve(host, at);
  if (!is_leaf(host, target)) throw std::invalid_argument("glue target must be a leaf");
  BracketTree out = host;
  for (int32_t c : sub.kids[0]) {
    int nc = append_bracket(out, sub, c);
    out.kids[target].push_back(nc);
  }
  return out;
}

BracketTree append_child(const BracketTree& host, const VertexRef& at, const BracketTree& sub) {
  if (host.d != sub.d) throw std::invalid_argument("append_child: bound mismatch");
  int target = resolve(host, at);
  if (host.degree(target) >= host.d)
    throw std::invalid_argument("append_child: vertex already has d children");
  BracketTree out = host;
  int nc = append_bracket(out, sub, 0);
  out.kids[target].push_back(nc);
  return out;
}

BracketTree forget(const DaryTree& t) {
  BracketTree out;
  out.d = t.d;
  out.kids.emplace_back();
  // recursive copy in slot order
  struct Walk {
    const DaryTree& src;
    BracketTree& dst;
    void run(int sv, int dv) {
      for (int i = 1; i <= src.d; ++i) {
        int c = src.child(sv, i);
        if (c < 0) continue;
        int id = dst.size();
        dst.kids.emplace_back();
        dst.kids[dv].push_back(id);
        run(c, id);
      }
    }
  } walk{t, out};
  walk.run(0, 0);
  return out;
}

DaryTree subtree_at(const DaryTree& t, const VertexRef& at) {
  int v = resolve(t, at);
  DaryTree out;
  out.d = t.d;
  append_dary(out, t, v);
  return out;
}

BracketTree subtree_at(const BracketTree& t, const VertexRef& at) {
  int v = resolve(t, at);
  BracketTree out;
  out.d = t.d;
  append_bracket(out, t, v);
  return out;
}

namespace {

void code_rec(const DaryTree& t, int v, std::string& out) {
  out.push_back('(');
  for (int i = 1; i <= t.d; ++i) {
    int c = t.child(v, i);
    if (c < 0)
      out.push_back('_');
    else
      code_rec(t, c, out);
  }
  out.push_back(')');
}

void code_rec(const BracketTree& t, int v, std::string& out) {
  out.push_back('(');
  for (int32_t c : t.kids[v]) code_rec(t, c, out);
  out.push_back(')');
}

}  // namespace

std::string node_code(const DaryTree& t) {
  std::string out;
  out.reserve(static_cast<std::size_t>(t.d + 1) * t.size() + 1);
  code_rec(t, 0, out);
  return out;
}

std::string node_code(const BracketTree& t) {
  std::string out;
  out.reserve(2 * static_cast<std::size_t>(t.size()));
  code_rec(t, 0, out);
  return out;
}

std::string encode(const DaryTree& t) { return "d" + std::to_string(t.d) + ":" + node_code(t); }
std::string encode(const BracketTree& t) { return "b" + std::to_string(t.d) + ":" + node_code(t); }

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  char peek() const {
    if (pos >= s.size()) throw ParseError("unexpected end of code", pos);
    return s[pos];
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  int parse_int() {
    std::size_t start = pos;
    long v = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      v = v * 10 + (s[pos] - '0');
      if (v > 1'000'000) throw ParseError("arity too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected digits", pos);
    return static_cast<int>(v);
  }

  int parse_dary_node(DaryTree& t) {
    expect('(');
    int id = t.size();
    t.slots.insert(t.slots.end(), t.d, -1);
    for (int i = 1; i <= t.d; ++i) {
      if (peek() == '_') {
        ++pos;
      } else {
        int c = parse_dary_node(t);
        t.slots[static_cast<std::size_t>(id) * t.d + i - 1] = c;
      }
    }
    expect(')');
    return id;
  }

  int parse_bracket_node(BracketTree& t) {
    expect('(');
    int id = t.size();
    t.kids.emplace_back();
    while (peek() != ')') {
      if (t.degree(id) == t.d) throw ParseError("vertex has more than " + std::to_string(t.d) + " children", pos);
      int c = parse_bracket_node(t);
      t.kids[id].push_back(c);
    }
    expect(')');
    return id;
  }

  void done() {
    if (pos != s.size()) throw ParseError("trailing characters after code", pos);
  }
};

}  // namespace

DaryTree decode_dary(const std::string& code) {
  Parser p{code};
  p.expect('d');
  int d = p.parse_int();
  check_arity(d);
  p.expect(':');
  DaryTree t;
  t.d = d;
  // parse_dary_node appends nodes in preorder, so the root lands at id 0
  p.parse_dary_node(t);
  p.done();
  return t;
}

BracketTree decode_bracket(const std::string& code) {
  Parser p{code};
  p.expect('b');
  int d = p.parse_int();
  check_arity(d);
  p.expect(':');
  BracketTree t;
  t.d = d;
  p.parse_bracket_node(t);
  p.done();
  return t;
}

std::variant<DaryTree, BracketTree> decode(const std::string& code) {
  if (code.empty()) throw ParseError("empty code", 0);
  if (code[0] == 'd') return decode_dary(code);
  if (code[0] == 'b') return decode_bracket(code);
  throw ParseError("kind tag must be 'd' or 'b'", 0);
}

}  // namespace supertree
