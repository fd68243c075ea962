// Command-line surface for the supertree library: enumeration, containment
// checks, universal-tree constructions, exhaustive minimal-size search,
// bounds, the tree/permutation bijection, transforms, and DOT export.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "supertree/bounds.hpp"
#include "supertree/constructions.hpp"
#include "supertree/containment.hpp"
#include "supertree/enumerate.hpp"
#include "supertree/perm.hpp"
#include "supertree/search.hpp"
#include "supertree/transforms.hpp"

using json = nlohmann::ordered_json;
using namespace supertree;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

// Tree-list input: one code per line, '#' lines ignored.
std::vector<std::string> read_code_lines(std::istream& in) {
  std::vector<std::string> codes;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    codes.push_back(line);
  }
  return codes;
}

std::string one_code(const std::string& flag_value, const char* what) {
  if (!flag_value.empty()) return flag_value;
  auto codes = read_code_lines(std::cin);
  if (codes.empty()) throw std::invalid_argument(std::string("no ") + what + " given (flag or stdin)");
  return codes.front();
}

// Exact integer as JSON: a number while it fits 53 bits, a string beyond.
json exact_json(const bigint& v) {
  if (v >= bigint(-(1LL << 53)) && v <= bigint(1LL << 53)) return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

json rat_json(const bigrat& v) {
  if (boost::multiprecision::denominator(v) == 1) return exact_json(boost::multiprecision::numerator(v));
  return json(v.str());
}

json report_stats(std::uint64_t checked, std::uint64_t states, double elapsed_ms) {
  return json{{"hosts_checked", checked}, {"states", states}, {"elapsed_ms", static_cast<std::int64_t>(elapsed_ms)}};
}

void emit_dot(const std::string& code, std::ostream& out) {
  auto tree = decode(code);
  out << "digraph tree {\n  node [shape=point];\n";
  if (std::holds_alternative<DaryTree>(tree)) {
    const auto& t = std::get<DaryTree>(tree);
    for (int v = 0; v < t.size(); ++v) out << "  n" << v << ";\n";
    for (int v = 0; v < t.size(); ++v)
      for (int i = 1; i <= t.d; ++i)
        if (t.child(v, i) >= 0)
          out << "  n" << v << " -> n" << t.child(v, i) << " [label=\"" << i << "\"];\n";
  } else {
    const auto& t = std::get<BracketTree>(tree);
    for (int v = 0; v < t.size(); ++v) out << "  n" << v << ";\n";
    for (int v = 0; v < t.size(); ++v)
      for (int32_t c : t.kids[v]) out << "  n" << v << " -> n" << c << ";\n";
  }
  out << "}\n";
}

struct Flags {
  int d = 2;
  int k = 1;
  std::string kind = "dary";
  std::string mode = "contiguous";
  std::string family;
  std::string format = "text";
  int jobs = 1;
  int n_cap = 0;
  int n_start = -1;
  bool recompute = false;
  std::string host, pattern, tree, perm, op, tvec, results;
  bool inverse = false;
  bool asym = false;
};

int cmd_enumerate(const Flags& f) {
  Kind kind = parse_kind(f.kind);
  std::string tag = (kind == Kind::dary ? "d" : "b") + std::to_string(f.d) + ":";
  auto codes = kind == Kind::dary ? dary_codes(f.d, f.k) : bracket_codes(f.d, f.k);
  if (f.format == "json") {
    json j;
    j["query"] = {{"cmd", "enumerate"}, {"kind", f.kind}, {"d", f.d}, {"k", f.k}};
    j["value"] = codes.size();
    json list = json::array();
    for (const auto& c : codes) list.push_back(tag + c);
    j["trees"] = list;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& c : codes) std::cout << tag << c << "\n";
  }
  return kExitTrue;
}

int cmd_contains(const Flags& f) {
  Mode mode = parse_mode(f.mode);
  std::string host_code = one_code(f.host, "host");
  if (f.pattern.empty()) throw std::invalid_argument("contains needs --pattern");
  auto host = decode(host_code);
  auto pattern = decode(f.pattern);
  if (host.index() != pattern.index())
    throw std::invalid_argument("host and pattern must be trees of the same kind");
  bool verdict;
  if (std::holds_alternative<DaryTree>(host)) {
    const auto& h = std::get<DaryTree>(host);
    const auto& p = std::get<DaryTree>(pattern);
    verdict = mode == Mode::contiguous ? contig_dary(h, p) : noncontig(h, p);
  } else {
    const auto& h = std::get<BracketTree>(host);
    const auto& p = std::get<BracketTree>(pattern);
    verdict = mode == Mode::contiguous ? contig_bracket(h, p) : noncontig(h, p);
  }
  if (f.format == "json") {
    json j;
    j["query"] = {{"cmd", "contains"}, {"mode", f.mode}, {"host", host_code}, {"pattern", f.pattern}};
    j["verdict"] = verdict;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (verdict ? "true" : "false") << "\n";
  }
  return verdict ? kExitTrue : kExitFalse;
}

std::vector<int> parse_tvec(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(std::stoi(part));
  return v;
}

int cmd_build(const Flags& f) {
  FamilyId fam = parse_family(f.family);
  std::string code = build_family(fam, f.d, f.k, f.tvec.empty() ? std::vector<int>{} : parse_tvec(f.tvec));
  if (f.format == "json") {
    json j;
    j["query"] = {{"cmd", "build"}, {"family", f.family}, {"d", f.d}, {"k", f.k}};
    j["witness"] = code;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << code << "\n";
  }
  return kExitTrue;
}

int cmd_universal(const Flags& f) {
  Mode mode = parse_mode(f.mode);
  Kind kind = parse_kind(f.kind);
  std::string host_code = one_code(f.host, "host");
  UniversalityReport rep;
  if (kind == Kind::dary)
    rep = universal(decode_dary(host_code), f.k, mode, f.jobs);
  else
    rep = universal(decode_bracket(host_code), f.k, mode, f.jobs);
  if (rep.d != f.d) throw std::invalid_argument("--d does not match the host code");
  if (f.format == "json") {
    json j;
    j["query"] = {{"cmd", "universal"}, {"kind", f.kind}, {"mode", f.mode},
                  {"d", f.d},           {"k", f.k},       {"host", host_code}};
    j["verdict"] = rep.verdict;
    if (rep.counterexample) j["counterexample"] = *rep.counterexample;
    j["stats"] = report_stats(rep.patterns_checked, rep.states_visited, rep.elapsed_ms);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (rep.verdict ? "true" : "false");
    if (rep.counterexample) std::cout << " counterexample " << *rep.counterexample;
    std::cout << "\n";
  }
  return rep.verdict ? kExitTrue : kExitFalse;
}

int cmd_minimal(const Flags& f) {
  Mode mode = parse_mode(f.mode);
  Kind kind = parse_kind(f.kind);
  if (f.n_cap <= 0) throw std::invalid_argument("minimal needs --n-cap");
  std::string path = f.results.empty() ? results_default_path() : f.results;

  std::optional<MinimalityResult> res;
  if (!f.recompute) res = results_lookup(path, f.d, f.k, kind, mode);
  bool fresh = false;
  if (!res) {
    std::optional<int> start;
    if (f.n_start > 0) start = f.n_start;
    res = minimal_size(f.d, f.k, kind, mode, start, f.n_cap, f.jobs);
    fresh = true;
  }
  if (fresh) results_append(path, *res);

  if (f.format == "json") {
    json j;
    j["query"] = {{"cmd", "minimal"}, {"kind", f.kind}, {"mode", f.mode}, {"d", f.d}, {"k", f.k}};
    j["value"] = res->n_min;
    j["witness"] = res->witness;
    j["stats"] = report_stats(res->total_hosts(), 0, res->elapsed_ms);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "N[" << f.kind << "/" << f.mode << "](d=" << f.d << ", k=" << f.k << ") = " << res->n_min
              << "  witness " << res->witness << (fresh ? "" : "  (from results file)") << "\n";
  }
  return kExitTrue;
}

int cmd_sizes(const Flags& f) {
  FamilyId fam = parse_family(f.family);
  json rows = json::array();
  for (int k = 1; k <= f.k; ++k) {
    bigint size;
    switch (fam) {
      case FamilyId::delta: size = delta_size(f.d, k); break;
      case FamilyId::xi: size = xi_size(f.d, k); break;
      case FamilyId::lambda: size = lambda_size(f.d, k); break;
      case FamilyId::big_xi: size = big_xi_size(f.d, k); break;
      default: throw std::invalid_argument("sizes supports the families delta, xi, lambda, big_xi");
    }
    if (f.format == "json") {
      rows.push_back({{"family", f.family}, {"d", f.d}, {"k", k}, {"size", exact_json(size)}});
    } else {
      std::printf("%-8s d=%d k=%-3d %s\n", f.family.c_str(), f.d, k, size.str().c_str());
    }
  }
  if (f.format == "json") std::cout << rows.dump() << "\n";
  return kExitTrue;
}

int cmd_bounds(const Flags& f) {
  Kind kind = parse_kind(f.kind);
  Mode mode = parse_mode(f.mode);
  std::string path = f.results.empty() ? results_default_path() : f.results;
  std::optional<bigint> exact;
  std::optional<std::string> witness;
  if (auto res = results_lookup(path, f.d, f.k, kind, mode)) {
    exact = res->n_min;
    witness = res->witness;
  }
  BoundReport rep = bound_report(f.d, f.k, kind, mode, exact, witness);
  if (f.format == "json") {
    json j;
    j["d"] = rep.d;
    j["k"] = rep.k;
    j["kind"] = f.kind;
    j["mode"] = f.mode;
    json lows;
    for (const auto& [name, v] : rep.lower) lows[name] = rat_json(v);
    j["bounds"] = lows;
    j["construction"] = {{"family", rep.construction}, {"size", exact_json(rep.upper)}};
    if (rep.exact) j["exact"] = exact_json(*rep.exact);
    if (rep.witness) j["witness"] = *rep.witness;
    j["consistent"] = rep.consistent();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "bounds " << f.kind << "/" << f.mode << " d=" << f.d << " k=" << f.k << "\n";
    for (const auto& [name, v] : rep.lower) std::cout << "  lower " << name << " = " << v << "\n";
    std::cout << "  upper " << rep.construction << " = " << rep.upper.str() << "\n";
    if (rep.exact) std::cout << "  exact = " << rep.exact->str() << "\n";
    std::cout << "  consistent = " << (rep.consistent() ? "true" : "false") << "\n";
  }
  return rep.consistent() ? kExitTrue : kExitFalse;
}

int cmd_rho(const Flags& f) {
  double value = f.asym ? rho_asym(f.d) : rho(f.d);
  if (f.format == "json") {
    json j;
    j["query"] = {{"cmd", "rho"}, {"d", f.d}, {"asym", f.asym}};
    j["value"] = value;
    std::cout << j.dump() << "\n";
  } else {
    std::printf("%.12g\n", value);
  }
  return kExitTrue;
}

int cmd_psi(const Flags& f) {
  if (f.inverse) {
    if (f.perm.empty()) throw std::invalid_argument("psi --inverse needs --perm");
    DaryTree t = psi_inv(parse_perm(f.perm));
    std::cout << encode(t) << "\n";
    return kExitTrue;
  }
  std::vector<std::string> codes;
  if (!f.tree.empty())
    codes.push_back(f.tree);
  else
    codes = read_code_lines(std::cin);
  if (codes.empty()) throw std::invalid_argument("no tree given (flag or stdin)");
  for (const auto& c : codes) std::cout << perm_to_string(psi(decode_dary(c))) << "\n";
  return kExitTrue;
}

int cmd_transform(const Flags& f) {
  std::vector<std::string> codes;
  if (!f.tree.empty())
    codes.push_back(f.tree);
  else
    codes = read_code_lines(std::cin);
  if (codes.empty()) throw std::invalid_argument("no tree given (flag or stdin)");
  for (const auto& c : codes) {
    if (f.op == "binarize")
      std::cout << encode(binarize(decode_dary(c))) << "\n";
    else if (f.op == "gadget_substitute")
      std::cout << encode(gadget_substitute(decode_dary(c))) << "\n";
    else if (f.op == "expand")
      std::cout << encode(expand(decode_bracket(c))) << "\n";
    else if (f.op == "forget")
      std::cout << encode(forget(decode_dary(c))) << "\n";
    else
      throw std::invalid_argument("transform --op must be binarize|gadget_substitute|expand|forget");
  }
  return kExitTrue;
}

int cmd_export_dot(const Flags& f) {
  std::vector<std::string> codes;
  if (!f.tree.empty())
    codes.push_back(f.tree);
  else
    codes = read_code_lines(std::cin);
  if (codes.empty()) throw std::invalid_argument("no tree given (flag or stdin)");
  for (const auto& c : codes) emit_dot(c, std::cout);
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universal-tree toolkit: containment, constructions, bounds, and exact search"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* sub, bool with_k = true) {
    sub->add_option("--d", f.d, "arity (d-ary) or child-list bound (bracket)");
    if (with_k) sub->add_option("--k", f.k, "pattern size / family parameter");
    sub->add_option("--format", f.format, "text|json")->default_str("text");
  };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list all trees of one size in canonical order");
  add_common(enumerate_cmd);
  enumerate_cmd->add_option("--kind", f.kind, "dary|bracket");

  auto* contains_cmd = app.add_subcommand("contains", "test pattern containment between two trees");
  add_common(contains_cmd, false);
  contains_cmd->add_option("--mode", f.mode, "contiguous|noncontiguous");
  contains_cmd->add_option("--host", f.host, "host code (stdin if omitted)");
  contains_cmd->add_option("--pattern", f.pattern, "pattern code");

  auto* build_cmd = app.add_subcommand("build", "construct a named family member");
  add_common(build_cmd);
  build_cmd->add_option("--family", f.family,
                        "delta|xi|lambda|big_xi|crescent|vertebra|spine|modified_vertebra|"
                        "modified_spine|perfect|j_gadget");
  build_cmd->add_option("--tvec", f.tvec, "comma-separated type vector (j_gadget)");

  auto* universal_cmd = app.add_subcommand("universal", "check k-universality of a host tree");
  add_common(universal_cmd);
  universal_cmd->add_option("--kind", f.kind, "dary|bracket");
  universal_cmd->add_option("--mode", f.mode, "contiguous|noncontiguous");
  universal_cmd->add_option("--host", f.host, "host code (stdin if omitted)");
  universal_cmd->add_option("--jobs", f.jobs, "parallel workers");

  auto* minimal_cmd = app.add_subcommand("minimal", "exhaustive minimal k-supertree size");
  add_common(minimal_cmd);
  minimal_cmd->add_option("--kind", f.kind, "dary|bracket");
  minimal_cmd->add_option("--mode", f.mode, "contiguous|noncontiguous");
  minimal_cmd->add_option("--n-cap", f.n_cap, "hard size cap (mandatory)");
  minimal_cmd->add_option("--n-start", f.n_start, "sweep start (defaults to best lower bound)");
  minimal_cmd->add_option("--jobs", f.jobs, "parallel workers");
  minimal_cmd->add_option("--results", f.results, "results file (default $SUPERTREE_RESULTS)");
  minimal_cmd->add_flag("--recompute", f.recompute, "ignore the results file");

  auto* sizes_cmd = app.add_subcommand("sizes", "family size table for k = 1..K");
  add_common(sizes_cmd);
  sizes_cmd->add_option("--family", f.family, "delta|xi|lambda|big_xi");

  auto* bounds_cmd = app.add_subcommand("bounds", "lower/upper bound report for one (d,k,kind,mode)");
  add_common(bounds_cmd);
  bounds_cmd->add_option("--kind", f.kind, "dary|bracket");
  bounds_cmd->add_option("--mode", f.mode, "contiguous|noncontiguous");
  bounds_cmd->add_option("--results", f.results, "results file with exact values");

  auto* rho_cmd = app.add_subcommand("rho", "growth constant of the lambda family");
  add_common(rho_cmd, false);
  rho_cmd->add_flag("--asym", f.asym, "print the large-d asymptotic instead");

  auto* psi_cmd = app.add_subcommand("psi", "binary tree <-> 231-avoiding permutation");
  psi_cmd->add_option("--tree", f.tree, "binary tree code (stdin if omitted)");
  psi_cmd->add_option("--perm", f.perm, "permutation (with --inverse)");
  psi_cmd->add_flag("--inverse", f.inverse, "map a permutation back to its tree");

  auto* transform_cmd = app.add_subcommand("transform", "binarize / gadget_substitute / expand / forget");
  transform_cmd->add_option("--op", f.op, "binarize|gadget_substitute|expand|forget");
  transform_cmd->add_option("--tree", f.tree, "input code (stdin list if omitted)");

  auto* dot_cmd = app.add_subcommand("export-dot", "emit Graphviz DOT for trees");
  dot_cmd->add_option("--tree", f.tree, "input code (stdin list if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(enumerate_cmd)) return cmd_enumerate(f);
    if (app.got_subcommand(contains_cmd)) return cmd_contains(f);
    if (app.got_subcommand(build_cmd)) return cmd_build(f);
    if (app.got_subcommand(universal_cmd)) return cmd_universal(f);
    if (app.got_subcommand(minimal_cmd)) return cmd_minimal(f);
    if (app.got_subcommand(sizes_cmd)) return cmd_sizes(f);
    if (app.got_subcommand(bounds_cmd)) return cmd_bounds(f);
    if (app.got_subcommand(rho_cmd)) return cmd_rho(f);
    if (app.got_subcommand(psi_cmd)) return cmd_psi(f);
    if (app.got_subcommand(transform_cmd)) return cmd_transform(f);
    if (app.got_subcommand(dot_cmd)) return cmd_export_dot(f);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
