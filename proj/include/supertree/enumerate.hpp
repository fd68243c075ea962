#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "supertree/trees.hpp"

namespace supertree {

using bigint = boost::multiprecision::cpp_int;

// All node codes of the given kind and vertex count, in ascending byte
// order. Every code of one size has the same length, so this is also the
// canonical enumeration order used throughout.
std::vector<std::string> dary_codes(int d, int k);
std::vector<std::string> bracket_codes(int d, int k);

std::vector<DaryTree> enumerate_dary(int d, int k);
std::vector<BracketTree> enumerate_bracket(int d, int k);

// Fuss-Catalan count of d-ary plane trees on k vertices (k = 0 counts the
// empty tree, by convention 1).
bigint count_dary(int d, int k);

// Number of [d]-trees on k vertices, by dynamic programming over forests.
bigint count_bracket(int d, int k);

bigint binomial(const bigint& n, int k);

}  // namespace supertree
