#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supertree/containment.hpp"

namespace supertree {

struct MinimalityResult {
  int d = 0;
  int k = 0;
  Kind kind = Kind::dary;
  Mode mode = Mode::contiguous;
  int n_min = 0;
  std::string witness;
  // per size: hosts examined in enumeration order (full count at refuted
  // sizes, witness index + 1 at the final size) -- deterministic across
  // worker counts
  std::vector<std::pair<int, std::uint64_t>> hosts_checked;
  double elapsed_ms = 0.0;

  std::uint64_t total_hosts() const;
};

struct RefuteResult {
  bool refuted = false;
  std::uint64_t hosts = 0;
  double elapsed_ms = 0.0;
};

struct CapExceeded : std::runtime_error {
  int n_start, n_cap;
  CapExceeded(int start, int cap)
      : std::runtime_error("no universal host up to the size cap " + std::to_string(cap) +
                           " (sizes " + std::to_string(start) + ".." + std::to_string(cap) +
                           " exhaustively refuted)"),
        n_start(start),
        n_cap(cap) {}
};

// Default sweep start: the pattern size and every applicable analytic
// lower bound (counting and noncontiguous bounds for d-ary trees, the
// contiguous bracket bound for [d]-trees).
int default_start(int d, int k, Kind kind, Mode mode);

// Sweeps host sizes from n_start upward, testing every host of each size
// in enumeration order; returns the first size with a universal host and
// the first such host. Throws CapExceeded past n_cap.
MinimalityResult minimal_size(int d, int k, Kind kind, Mode mode,
                              std::optional<int> n_start, int n_cap, int jobs = 1);

// True iff no n-vertex host is universal (exhaustive over all hosts).
RefuteResult refute_size(int d, int k, Kind kind, Mode mode, int n, int jobs = 1);

// JSON-lines results file; the path defaults to $SUPERTREE_RESULTS or
// ./supertree_results.jsonl.
std::string results_default_path();
std::optional<MinimalityResult> results_lookup(const std::string& path, int d, int k, Kind kind, Mode mode);
void results_append(const std::string& path, const MinimalityResult& r);

}  // namespace supertree
