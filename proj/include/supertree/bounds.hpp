#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "supertree/containment.hpp"
#include "supertree/enumerate.hpp"

namespace supertree {

using bigrat = boost::multiprecision::cpp_rational;

// d^{k-1} + k - 1, the exact minimum size of a contiguous k-universal
// d-ary plane tree.
bigint exact_con_dary(int d, int k);

// (k+1)*ceil(log2(k+1)) - 2^ceil(log2(k+1)) + 1, with integer ceilings.
bigint aepv(int k);

// eta_2 = 1, eta_d = 1/2 for d >= 3.
bigrat eta(int d);

// eta_d * aepv(k): lower bound for noncontiguous d-ary supertrees.
bigrat lower_non_dary(int d, int k);

// (k-1-d*floor((k-2)/d)) * d^floor((k-2)/d) + floor((k-2)/d) + 1, k >= 2.
bigint lower_con_bracket(int d, int k);
double lower_con_bracket_weak(int d, int k);  // d^((k-2)/d)

// Least N with C(N,k) >= count_dary(d,k).
bigint counting_lower(int d, int k);

// p_d(x) = 1 - x - sum_{i=floor(d/2)+2}^{d} x^i - sum_{i=ceil(d/2)+1}^{d} x^i,
// evaluated via closed-form geometric sums.
double p_eval(int d, double x);

// 1/x_d with x_d the unique root of p_d in (0,1), bisected to 1e-13.
double rho(int d);

// 1 + (4 log d - 4 log log d)/d, natural logs; requires d >= 3.
double rho_asym(int d);

struct GrowthReport {
  double target = 0.0;
  std::vector<std::pair<int, double>> kth_roots;  // (k, size^{1/k})
  double final_distance = 0.0;                    // |last root - target|
};

// Advisory check of size^{1/k} against an expected growth rate.
GrowthReport growth_check(const std::vector<std::pair<int, bigint>>& sizes, double target);

struct BoundReport {
  int d = 0;
  int k = 0;
  Kind kind = Kind::dary;
  Mode mode = Mode::contiguous;
  std::vector<std::pair<std::string, bigrat>> lower;  // named lower bounds
  std::string construction;                           // family providing the upper bound
  bigint upper = 0;
  std::optional<bigint> exact;  // from the search oracle, when known
  std::optional<std::string> witness;

  bigint best_lower_ceil() const;
  // ceil(max lower) <= exact <= upper whenever exact is present
  bool consistent() const;
};

BoundReport bound_report(int d, int k, Kind kind, Mode mode, std::optional<bigint> exact = std::nullopt,
                         std::optional<std::string> witness = std::nullopt);

}  // namespace supertree
