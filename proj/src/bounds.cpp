#include "supertree/bounds.hpp"

#include <cmath>

#include "supertree/constructions.hpp"

namespace supertree {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

int ceil_log2(long long v) {  // smallest e with 2^e >= v
  int e = 0;
  while ((1LL << e) < v) ++e;
  return e;
}

}  // namespace

bigint exact_con_dary(int d, int k) {
  require(d >= 2 && k >= 1, "exact_con_dary: need d >= 2, k >= 1");
  return boost::multiprecision::pow(bigint(d), k - 1) + k - 1;
}

bigint aepv(int k) {
  require(k >= 1, "aepv: need k >= 1");
  int e = ceil_log2(k + 1LL);
  return bigint(k + 1) * e - boost::multiprecision::pow(bigint(2), e) + 1;
}

bigrat eta(int d) {
  require(d >= 2, "eta: need d >= 2");
  return d == 2 ? bigrat(1) : bigrat(1, 2);
}

bigrat lower_non_dary(int d, int k) { return eta(d) * bigrat(aepv(k)); }

bigint lower_con_bracket(int d, int k) {
  require(d >= 2, "lower_con_bracket: need d >= 2");
  require(k >= 2, "lower_con_bracket: need k >= 2");
  int q = (k - 2) / d;
  return bigint(k - 1 - d * q) * boost::multiprecision::pow(bigint(d), q) + q + 1;
}

double lower_con_bracket_weak(int d, int k) { return std::pow(d, double(k - 2) / d); }

bigint counting_lower(int d, int k) {
  require(d >= 2 && k >= 1, "counting_lower: need d >= 2, k >= 1");
  bigint target = count_dary(d, k);
  bigint n = k, c = 1;  // C(k,k)
  while (c < target) {
    n += 1;
    c = c * n / (n - k);  // C(n,k) from C(n-1,k), exact
  }
  return n;
}

double p_eval(int d, double x) {
  require(d >= 2, "p_eval: need d >= 2");
  const int a = d / 2 + 2, b = (d + 1) / 2 + 1;
  auto tail_sum = [&](int from) -> double {  // sum_{i=from}^{d} x^i
    if (from > d) return 0.0;
    if (x == 1.0) return double(d - from + 1);
    return (std::pow(x, from) - std::pow(x, d + 1)) / (1.0 - x);
  };
  return 1.0 - x - tail_sum(a) - tail_sum(b);
}

double rho(int d) {
  require(d >= 2, "rho: need d >= 2");
  // p_d is strictly decreasing on (0,oo) with p(0)=1 and p(1)<=-1,
  // so the positive root is unique and lies in (0,1)
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-13) {
    double mid = 0.5 * (lo + hi);
    if (p_eval(d, mid) > 0)
      lo = mid;
    else
      hi = mid;
  }
  return 1.0 / (0.5 * (lo + hi));
}

double rho_asym(int d) {
  require(d >= 3, "rho_asym: need d >= 3");
  double ld = std::log(double(d));
  return 1.0 + (4.0 * ld - 4.0 * std::log(ld)) / d;
}

GrowthReport growth_check(const std::vector<std::pair<int, bigint>>& sizes, double target) {
  GrowthReport rep;
  rep.target = target;
  for (const auto& [k, v] : sizes) {
    double dv = v.convert_to<double>();
    rep.kth_roots.push_back({k, std::pow(dv, 1.0 / k)});
  }
  if (!rep.kth_roots.empty()) rep.final_distance = std::fabs(rep.kth_roots.back().second - target);
  return rep;
}

bigint BoundReport::best_lower_ceil() const {
  bigrat best = 0;
  for (const auto& [name, v] : lower)
    if (v > best) best = v;
  bigint num = boost::multiprecision::numerator(best);
  bigint den = boost::multiprecision::denominator(best);
  return (num + den - 1) / den;
}

bool BoundReport::consistent() const {
  if (!exact) return best_lower_ceil() <= upper;
  return best_lower_ceil() <= *exact && *exact <= upper;
}

BoundReport bound_report(int d, int k, Kind kind, Mode mode, std::optional<bigint> exact,
                         std::optional<std::string> witness) {
  BoundReport rep;
  rep.d = d;
  rep.k = k;
  rep.kind = kind;
  rep.mode = mode;
  rep.exact = std::move(exact);
  rep.witness = std::move(witness);
  rep.lower.push_back({"pattern_size", bigrat(k)});
  if (kind == Kind::dary) {
    // the counting bound holds for noncontiguous universality, hence for both modes
    rep.lower.push_back({"counting_lower", bigrat(counting_lower(d, k))});
    rep.lower.push_back({"lower_non_dary", lower_non_dary(d, k)});
    if (mode == Mode::contiguous) {
      rep.lower.push_back({"exact_con_dary", bigrat(exact_con_dary(d, k))});
      rep.construction = "delta";
      rep.upper = delta_size(d, k);
    } else {
      rep.construction = "xi";
      rep.upper = xi_size(d, k);
    }
  } else {
    if (mode == Mode::contiguous) {
      if (k >= 2) rep.lower.push_back({"lower_con_bracket", bigrat(lower_con_bracket(d, k))});
      rep.construction = "lambda";
      rep.upper = lambda_size(d, k);
    } else {
      rep.construction = "big_xi";
      rep.upper = big_xi_size(d, k);
    }
  }
  return rep;
}

}  // namespace supertree
