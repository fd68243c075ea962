#include "supertree/search.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "supertree/bounds.hpp"
#include "supertree/enumerate.hpp"

namespace supertree {

std::uint64_t MinimalityResult::total_hosts() const {
  std::uint64_t n = 0;
  for (const auto& [size, hosts] : hosts_checked) n += hosts;
  return n;
}

int default_start(int d, int k, Kind kind, Mode mode) {
  bigint best = k;
  if (kind == Kind::dary) {
    best = std::max(best, counting_lower(d, k));
    bigrat nb = lower_non_dary(d, k);
    bigint num = boost::multiprecision::numerator(nb);
    bigint den = boost::multiprecision::denominator(nb);
    best = std::max(best, bigint((num + den - 1) / den));
  } else if (mode == Mode::contiguous && k >= 2) {
    best = std::max(best, lower_con_bracket(d, k));
  }
  return best.convert_to<int>();
}

namespace {

template <class Tree>
Tree decode_tree(const std::string& full);
template <>
DaryTree decode_tree<DaryTree>(const std::string& full) {
  return decode_dary(full);
}
template <>
BracketTree decode_tree<BracketTree>(const std::string& full) {
  return decode_bracket(full);
}

template <class Tree>
bool contig_check(const Tree& host, const Tree& pattern);
template <>
bool contig_check(const DaryTree& host, const DaryTree& pattern) {
  return contig_dary(host, pattern);
}
template <>
bool contig_check(const BracketTree& host, const BracketTree& pattern) {
  return contig_bracket(host, pattern);
}

template <class Tree>
struct Sweep {
  int d, k;
  Mode mode;
  std::string tag;
  std::vector<std::string> pattern_codes;
  std::vector<Tree> patterns;  // decoded once, contiguous mode only

  Sweep(int d_, int k_, Mode mode_) : d(d_), k(k_), mode(mode_) {
    constexpr bool is_dary = std::is_same_v<Tree, DaryTree>;
    tag = (is_dary ? "d" : "b") + std::to_string(d) + ":";
    pattern_codes = is_dary ? dary_codes(d, k) : bracket_codes(d, k);
    if (mode == Mode::contiguous)
      for (const auto& c : pattern_codes) patterns.push_back(decode_tree<Tree>(tag + c));
  }

  bool host_universal(const Tree& host) const {
    if (host.size() < k) return false;
    // the k-vertex path pattern forces host height >= k-1 in both modes
    if (k >= 2 && height(host) < k - 1) return false;
    if (mode == Mode::contiguous) {
      for (const auto& p : patterns)
        if (!contig_check(host, p)) return false;
      return true;
    }
    // reachable size-k trees are a subset of all k-vertex trees
    auto closure = closure_at_size(host, k);
    return closure.size() == pattern_codes.size();
  }

  // Least enumeration index of a universal host of size n, or -1.
  long scan_size(int n, int jobs, std::uint64_t& host_count, std::string* witness) const {
    constexpr bool is_dary = std::is_same_v<Tree, DaryTree>;
    std::vector<std::string> hosts = is_dary ? dary_codes(d, n) : bracket_codes(d, n);
    host_count = hosts.size();
    const long total = static_cast<long>(hosts.size());
    long found = total;
    if (jobs < 2 || total < 32) {
      for (long i = 0; i < total; ++i) {
        if (host_universal(decode_tree<Tree>(tag + hosts[i]))) {
          found = i;
          break;
        }
      }
    } else {
      std::atomic<long> best{total};
      std::vector<std::thread> workers;
      for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
          for (long i = w; i < total; i += jobs) {
            if (i >= best.load(std::memory_order_relaxed)) break;
            if (host_universal(decode_tree<Tree>(tag + hosts[i]))) {
              long cur = best.load();
              while (i < cur && !best.compare_exchange_weak(cur, i)) {
              }
            }
          }
        });
      }
      for (auto& t : workers) t.join();
      found = best.load();
    }
    if (found == total) return -1;
    if (witness) *witness = tag + hosts[found];
    return found;
  }
};

template <class Tree>
MinimalityResult run_minimal(int d, int k, Kind kind, Mode mode, std::optional<int> n_start, int n_cap,
                             int jobs) {
  auto start_time = std::chrono::steady_clock::now();
  const int start = std::max(n_start.value_or(default_start(d, k, kind, mode)), 1);
  if (n_cap < start) throw std::invalid_argument("n_cap below the sweep start");

  Sweep<Tree> sweep(d, k, mode);
  MinimalityResult res;
  res.d = d;
  res.k = k;
  res.kind = kind;
  res.mode = mode;
  for (int n = start; n <= n_cap; ++n) {
    std::uint64_t hosts = 0;
    std::string witness;
    long idx = sweep.scan_size(n, jobs, hosts, &witness);
    if (idx >= 0) {
      res.n_min = n;
      res.witness = witness;
      res.hosts_checked.push_back({n, static_cast<std::uint64_t>(idx) + 1});
      res.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_time).count();
      return res;
    }
    res.hosts_checked.push_back({n, hosts});
  }
  throw CapExceeded(start, n_cap);
}

}  // namespace

MinimalityResult minimal_size(int d, int k, Kind kind, Mode mode, std::optional<int> n_start, int n_cap,
                              int jobs) {
  if (d < 2 || k < 1) throw std::invalid_argument("minimal_size: need d >= 2, k >= 1");
  if (n_cap < k) throw std::invalid_argument("minimal_size: n_cap must be at least k");
  return kind == Kind::dary ? run_minimal<DaryTree>(d, k, kind, mode, n_start, n_cap, jobs)
                            : run_minimal<BracketTree>(d, k, kind, mode, n_start, n_cap, jobs);
}

RefuteResult refute_size(int d, int k, Kind kind, Mode mode, int n, int jobs) {
  if (d < 2 || k < 1) throw std::invalid_argument("refute_size: need d >= 2, k >= 1");
  auto start_time = std::chrono::steady_clock::now();
  RefuteResult res;
  if (n < k) {  // a host smaller than the patterns cannot contain them
    res.refuted = true;
    res.hosts = 0;
    return res;
  }
  if (kind == Kind::dary) {
    Sweep<DaryTree> sweep(d, k, mode);
    res.refuted = sweep.scan_size(n, jobs, res.hosts, nullptr) < 0;
  } else {
    Sweep<BracketTree> sweep(d, k, mode);
    res.refuted = sweep.scan_size(n, jobs, res.hosts, nullptr) < 0;
  }
  res.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_time).count();
  return res;
}

std::string results_default_path() {
  if (const char* env = std::getenv("SUPERTREE_RESULTS")) return env;
  return "supertree_results.jsonl";
}

namespace {

nlohmann::ordered_json result_to_json(const MinimalityResult& r) {
  nlohmann::ordered_json j;
  j["query"] = {{"cmd", "minimal"},
                {"d", r.d},
                {"k", r.k},
                {"kind", to_string(r.kind)},
                {"mode", to_string(r.mode)}};
  j["value"] = r.n_min;
  j["witness"] = r.witness;
  nlohmann::ordered_json per_size = nlohmann::ordered_json::array();
  for (const auto& [size, hosts] : r.hosts_checked) per_size.push_back({{"n", size}, {"hosts", hosts}});
  j["stats"] = {{"hosts_checked", r.total_hosts()},
                {"per_size", per_size},
                {"elapsed_ms", static_cast<std::int64_t>(r.elapsed_ms)}};
  return j;
}

}  // namespace

std::optional<MinimalityResult> results_lookup(const std::string& path, int d, int k, Kind kind, Mode mode) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("query")) continue;
    const auto& q = j["query"];
    if (q.value("d", -1) != d || q.value("k", -1) != k) continue;
    if (q.value("kind", "") != to_string(kind) || q.value("mode", "") != to_string(mode)) continue;
    MinimalityResult r;
    r.d = d;
    r.k = k;
    r.kind = kind;
    r.mode = mode;
    r.n_min = j.value("value", 0);
    r.witness = j.value("witness", "");
    if (j.contains("stats") && j["stats"].contains("per_size"))
      for (const auto& e : j["stats"]["per_size"])
        r.hosts_checked.push_back({e.value("n", 0), e.value("hosts", std::uint64_t(0))});
    return r;
  }
  return std::nullopt;
}

void results_append(const std::string& path, const MinimalityResult& r) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open results file " + path);
  out << result_to_json(r).dump() << "\n";
}

}  // namespace supertree
