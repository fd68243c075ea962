#pragma once

#include <vector>

#include "supertree/trees.hpp"

namespace supertree {

// profile[r] = number of vertices with exactly r children, r in 0..d.
std::vector<long long> child_profile(const DaryTree& t);
std::vector<long long> child_profile(const BracketTree& t);

// Leaf paths of a J-gadget, left to right in planar order; the i-th leaf
// hangs off the edge of type tvec[i-1].
std::vector<VertexRef> j_gadget_leaf_refs(int d, const std::vector<int>& tvec);

// Replace every vertex with three or more children by a J-gadget of its
// child-type vector (processed in preorder), reattaching the subtrees to
// the gadget leaves left to right. Every vertex of the result has at most
// two children; the arity is unchanged.
DaryTree gadget_substitute(const DaryTree& t);

// gadget_substitute followed by the arity-2 remap: an only child of type 1
// stays type 1, an only child of any other type becomes type 2, and two
// children take types 1 and 2 in slot order. Requires arity >= 3; the
// result has 2*f0 + f1 - 1 vertices, counted on the input tree.
DaryTree binarize(const DaryTree& t);

// Replace the i-th edge (from the left, among siblings) by a d-edge path
// whose top edge has type i and whose remaining edges take types 1..d
// skipping i, ascending. The result has d*(|t|-1)+1 vertices.
DaryTree expand(const BracketTree& t);

}  // namespace supertree
