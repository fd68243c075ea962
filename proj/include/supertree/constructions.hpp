#pragma once

#include <utility>
#include <vector>

#include "supertree/enumerate.hpp"
#include "supertree/trees.hpp"

namespace supertree {

enum class FamilyId {
  delta,
  xi,
  lambda,
  big_xi,
  crescent,
  vertebra,
  spine,
  modified_vertebra,
  modified_spine,
  perfect,
  j_gadget,
};

FamilyId parse_family(const std::string& s);
std::string to_string(FamilyId f);

// Contiguous k-universal d-ary tree on d^{k-1} + k - 1 vertices: a type-1
// path with perfect trees hanging in slots 2..d of its leaf, plus one extra
// vertex under the leftmost leaf of the slot-2 copy.
DaryTree delta(int d, int k);
bigint delta_size(int d, int k);

// Path on d+1 vertices whose depth-i vertex hangs off an edge of type i.
DaryTree crescent(int d);

struct GadgetLeaves {
  VertexRef left, center, right;
};

// Three crescents merged into the 3-leaf gadget on 3d-1 vertices.
std::pair<DaryTree, GadgetLeaves> vertebra(int d);

struct DarySpine {
  DaryTree tree;
  std::vector<GadgetLeaves> verts;  // top-down, 0-based
};

// A crescent with m vertebrae chained below it at center leaves.
DarySpine spine(int d, int m);

// Noncontiguous k-universal d-ary tree; size obeys xi_size.
DaryTree xi(int d, int k);
// Path to the root of the tail subtree (the xi(d, ceil(k/2)) copy), k >= 4.
VertexRef xi_tail_ref(int d, int k);
bigint xi_size(int d, int k);

// Type-1 path with one child per entry of tvec; 1 <= t_1 < ... < t_m <= d.
DaryTree j_gadget(int d, const std::vector<int>& tvec);

// Contiguous k-universal [d]-tree; size obeys lambda_size.
BracketTree lambda(int d, int k);
bigint lambda_size(int d, int k);

// 4 vertices for d > 2 (root with 3 children); 5 vertices for d = 2.
std::pair<BracketTree, GadgetLeaves> modified_vertebra(int d);

struct BracketSpine {
  BracketTree tree;
  std::vector<GadgetLeaves> verts;
};

// A 2-vertex path with m modified vertebrae chained at center leaves.
BracketSpine modified_spine(int d, int m);

// Noncontiguous k-universal [d]-tree; size obeys big_xi_size. Identical
// structure for every d >= 3.
BracketTree big_xi(int d, int k);
VertexRef big_xi_tail_ref(int d, int k);
bigint big_xi_size(int d, int k);

int leaf_count(const DaryTree& t);
int leaf_count(const BracketTree& t);

// CLI helper: builds any family member and returns its canonical code.
// `k` doubles as height (perfect), vertebra count (spines) where needed.
std::string build_family(FamilyId f, int d, int k, const std::vector<int>& tvec = {});

}  // namespace supertree
