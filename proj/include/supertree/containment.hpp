#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "supertree/trees.hpp"

namespace supertree {

enum class Mode { contiguous, noncontiguous };
enum class Kind { dary, bracket };

std::string to_string(Mode m);
std::string to_string(Kind k);
Mode parse_mode(const std::string& s);
Kind parse_kind(const std::string& s);

// Contiguous containment: the pattern appears as a connected induced
// subgraph. For d-ary trees slot types must match exactly; for bracket
// trees the pattern's children embed as an order-preserving subsequence.
bool contig_dary(const DaryTree& host, const DaryTree& pattern);
bool contig_bracket(const BracketTree& host, const BracketTree& pattern);

// An edge is named by the path to its lower endpoint; for d-ary trees the
// slot type is the last step of that path.
struct DaryEdge {
  VertexRef child;
  int type;
};
struct BracketEdge {
  VertexRef child;
};

// Exactly the legally contractible edges, in preorder of the lower endpoint.
// An edge to a leaf is always legal.
std::vector<DaryEdge> legal_edges_dary(const DaryTree& t);
std::vector<BracketEdge> legal_edges_bracket(const BracketTree& t);

DaryTree contract_dary(const DaryTree& t, const DaryEdge& e);
BracketTree contract_bracket(const BracketTree& t, const BracketEdge& e);

// Internal fast path, exposed for search code: lower endpoints of legal
// edges by node id, and contraction by node id (legality is not rechecked).
std::vector<int> legal_children(const DaryTree& t);
std::vector<int> legal_children(const BracketTree& t);
DaryTree contract_child(const DaryTree& t, int v);
BracketTree contract_child(const BracketTree& t, int v);

// Noncontiguous containment: pattern reachable from host by legal
// contractions. Memoized search over canonical codes, pruned by size and
// height (contractions shrink size by one and never increase height).
bool noncontig(const DaryTree& host, const DaryTree& pattern);
bool noncontig(const BracketTree& host, const BracketTree& pattern);

// Codes (with kind tag) of exactly the size-k trees reachable from host.
std::unordered_set<std::string> closure_at_size(const DaryTree& host, int k,
                                                std::uint64_t* states_visited = nullptr);
std::unordered_set<std::string> closure_at_size(const BracketTree& host, int k,
                                                std::uint64_t* states_visited = nullptr);

struct UniversalityReport {
  std::string host;
  int d = 0;
  int k = 0;
  Kind kind = Kind::dary;
  Mode mode = Mode::contiguous;
  bool verdict = false;
  std::optional<std::string> counterexample;  // first in enumeration order
  std::uint64_t patterns_checked = 0;
  std::uint64_t states_visited = 0;
  double elapsed_ms = 0.0;
};

// Checks containment of every k-vertex pattern of the host's kind.
// Contiguous mode iterates patterns (parallelized over `jobs` workers);
// noncontiguous mode computes one closure and compares it with the full
// enumeration. The counterexample is enumeration-order-first regardless of
// the worker count.
UniversalityReport universal(const DaryTree& host, int k, Mode mode, int jobs = 1);
UniversalityReport universal(const BracketTree& host, int k, Mode mode, int jobs = 1);

}  // namespace supertree
