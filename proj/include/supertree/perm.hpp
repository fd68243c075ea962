#pragma once

#include <string>
#include <vector>

#include "supertree/trees.hpp"

namespace supertree {

// One-line notation: a word containing each of 1..n exactly once.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);

// Postorder-label the binary tree 1..n, then read the labels in-order.
// The image is exactly the set of 231-avoiding permutations.
Permutation psi(const DaryTree& t);

// Inverse of psi; throws std::invalid_argument if p contains 231.
DaryTree psi_inv(const Permutation& p);

// Postorder index (1-based) of every node, by node id.
std::vector<int> postorder_labels(const DaryTree& t);

bool perm_contains(const Permutation& sigma, const Permutation& mu);
bool avoids(const Permutation& p, const std::vector<Permutation>& patterns);

// Remove the entry with the given value and rank-normalize the rest.
Permutation delete_normalize(const Permutation& p, int value);

// Layered = direct sum of decreasing blocks = avoids both 231 and 312.
bool is_layered(const Permutation& p);
std::vector<Permutation> enumerate_layered(int k);

// Space-free digits for n <= 9, comma-separated otherwise.
std::string perm_to_string(const Permutation& p);
Permutation parse_perm(const std::string& s);

}  // namespace supertree
