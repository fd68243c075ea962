#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace supertree {

// Path from the root: slot indices (d-ary) or child positions (bracket),
// 1-based. The empty path denotes the root.
using VertexRef = std::vector<int>;

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t at)
      : std::runtime_error(msg + " at position " + std::to_string(at)), pos(at) {}
};

// Rooted plane tree of fixed arity d: every vertex has d positional child
// slots, each empty or holding a subtree. Node 0 is the root. Values are
// immutable after construction; all operations return fresh trees.
struct DaryTree {
  int d = 2;
  std::vector<int32_t> slots;  // n*d entries; slots[v*d + i - 1] = child id or -1

  int size() const { return static_cast<int>(slots.size()) / d; }
  int child(int v, int i) const { return slots[static_cast<std::size_t>(v) * d + i - 1]; }
};

// Rooted plane tree whose vertices carry an ordered child list of length <= d.
struct BracketTree {
  int d = 2;
  std::vector<std::vector<int32_t>> kids;  // kids[v] = ordered children

  int size() const { return static_cast<int>(kids.size()); }
  int degree(int v) const { return static_cast<int>(kids[v].size()); }
};

DaryTree dary_single(int d);
BracketTree bracket_single(int d);

int height(const DaryTree& t);
int height(const BracketTree& t);

// Set of slot indices with a nonempty subtree, ascending.
std::vector<int> chi(const DaryTree& t, int v);
std::vector<int> chi_at(const DaryTree& t, const VertexRef& at);

bool is_leaf(const DaryTree& t, int v);
bool is_leaf(const BracketTree& t, int v);

// Resolve a path to a node id; throws std::out_of_range if it does not exist.
int resolve(const DaryTree& t, const VertexRef& at);
int resolve(const BracketTree& t, const VertexRef& at);

std::vector<int> parents(const DaryTree& t);
std::vector<int> parents(const BracketTree& t);

// Perfect tree of height h: all d^r vertices present at every depth r <= h.
DaryTree perfect(int d, int h);

// Path with the given top-down edge types; size() == types.size() + 1.
DaryTree path_dary(int d, const std::vector<int>& types);
BracketTree path_bracket(int d, int vertices);

// Identify the root of `sub` with the leaf `at` of `host`.
DaryTree glue(const DaryTree& host, const VertexRef& at, const DaryTree& sub);
BracketTree glue(const BracketTree& host, const VertexRef& at, const BracketTree& sub);

// Identify the root of `sub` with an arbitrary vertex of `host`; the slot
// sets must be disjoint. Coincides with glue when the target is a leaf.
DaryTree attach_merge(const DaryTree& host, const VertexRef& at, const DaryTree& sub);

// Append `sub` as a new rightmost child of the vertex at `at`.
BracketTree append_child(const BracketTree& host, const VertexRef& at, const BracketTree& sub);

// Drop empty slots and edge types, keeping the child order.
BracketTree forget(const DaryTree& t);

DaryTree subtree_at(const DaryTree& t, const VertexRef& at);
BracketTree subtree_at(const BracketTree& t, const VertexRef& at);

// Canonical codes. Grammar: code := kindtag ":" node with kindtag "d<digits>"
// or "b<digits>". d-ary node := "(" slot^d ")" with slot := "_" | node;
// bracket node := "(" node* ")". Codes are equal iff the trees are
// isomorphic as plane trees of their kind.
std::string node_code(const DaryTree& t);
std::string node_code(const BracketTree& t);
std::string encode(const DaryTree& t);
std::string encode(const BracketTree& t);

DaryTree decode_dary(const std::string& code);
BracketTree decode_bracket(const std::string& code);
std::variant<DaryTree, BracketTree> decode(const std::string& code);

inline bool operator==(const DaryTree& a, const DaryTree& b) {
  return a.d == b.d && node_code(a) == node_code(b);
}
inline bool operator==(const BracketTree& a, const BracketTree& b) {
  return a.d == b.d && node_code(a) == node_code(b);
}

}  // namespace supertree
