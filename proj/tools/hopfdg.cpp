// hopfdg: command-line front end for the digraph Hopf monoid library.
//
// Exit codes: 0 pass, 1 property failure, 2 input error, 3 resource limit.

#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hopfdg/error.hpp"
#include "hopfdg/graph_io.hpp"
#include "hopfdg/hopf.hpp"
#include "hopfdg/invariants.hpp"
#include "hopfdg/polytope.hpp"
#include "hopfdg/verify.hpp"

namespace {

using namespace hopfdg;
using nlohmann::ordered_json;

enum Exit { kPass = 0, kFailure = 1, kInput = 2, kResource = 3 };

struct Options {
  std::string file;
  std::string which = "strict";
  std::string format = "text";
  std::string suite = "all";
  std::string vector;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::size_t max_vertices = 9;
  bool parallel = false;
};

Limits make_limits(const Options& opt) {
  Limits limits = Limits::from_environment();
  limits.max_vertices = opt.max_vertices;
  if (opt.parallel) {
    limits.threads = std::max(1u, std::thread::hardware_concurrency());
  }
  return limits;
}

Digraph load(const Options& opt, const Limits& limits) {
  Digraph g = read_graph_file(opt.file);
  require_composition_bound(g.vertex_count(), limits, "input graph");
  return g;
}

ordered_json graph_json(const Digraph& g) {
  ordered_json vertices = ordered_json::array();
  for (const auto& v : g.vertices()) vertices.push_back(v);
  ordered_json edges = ordered_json::array();
  for (const auto& [tail, head] : g.labeled_edges()) {
    edges.push_back({tail, head});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

template <class Ring>
int print_polynomial(const Digraph& g, const std::string& which,
                     const BinPoly<Ring>& p, const std::string& format) {
  const std::string monomial = to_string(to_monomial(p));
  if (format == "json") {
    ordered_json coeffs = ordered_json::array();
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      if (ring_is_zero(p.coeffs()[k])) continue;
      coeffs.push_back({{"k", k}, {"value", to_string(p.coeffs()[k])}});
    }
    ordered_json out = {{"graph", graph_json(g)},
                        {"invariant", which},
                        {"basis", "binomial"},
                        {"coeffs", coeffs},
                        {"monomial", monomial}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "binomial: " << to_string(p) << "\n";
    std::cout << "monomial: " << monomial << "\n";
  }
  return kPass;
}

int cmd_invariant(const Options& opt) {
  const Limits limits = make_limits(opt);
  const Digraph g = load(opt, limits);
  if (opt.which == "strict") {
    return print_polynomial(g, opt.which, strict_chromatic(g, limits), opt.format);
  }
  if (opt.which == "weak") {
    return print_polynomial(g, opt.which, weak_chromatic(g, limits), opt.format);
  }
  if (opt.which == "bpoly") {
    return print_polynomial(g, opt.which, b_polynomial(g, limits), opt.format);
  }
  return print_polynomial(g, opt.which, edge_invariant(g, limits), opt.format);
}

int cmd_antipode(const Options& opt) {
  const Limits limits = make_limits(opt);
  const Digraph g = load(opt, limits);
  const FormalSum s = antipode(g, limits);
  if (opt.format == "json") {
    ordered_json terms = ordered_json::array();
    for (const auto& [h, c] : s.terms()) {
      ordered_json edges = ordered_json::array();
      for (const auto& [tail, head] : h.labeled_edges()) {
        edges.push_back({tail, head});
      }
      terms.push_back({{"coefficient", c.str()}, {"edges", edges}});
    }
    ordered_json out = {{"graph", graph_json(g)}, {"antipode", terms}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_string(s) << "\n";
  }
  return kPass;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "SKIP";
  }
  return "?";
}

int cmd_verify(const Options& opt) {
  VerifyOptions vopt;
  vopt.seed = opt.seed;
  vopt.samples = opt.samples;
  vopt.limits = make_limits(opt);
  const Digraph g = load(opt, vopt.limits);
  const auto reports = run_suites(g, opt.suite, vopt);
  bool ok = true;
  if (opt.format == "json") {
    ordered_json suites = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json checks = ordered_json::array();
      for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"status", status_name(c.status)},
                          {"detail", c.detail}});
      }
      suites.push_back({{"suite", r.suite}, {"passed", r.passed()},
                        {"checks", checks}});
      ok = ok && r.passed();
    }
    ordered_json out = {{"graph", graph_json(g)}, {"seed", opt.seed},
                        {"samples", opt.samples}, {"passed", ok},
                        {"suites", suites}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        std::cout << status_name(c.status) << " " << r.suite << "/" << c.name;
        if (!c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
      }
      ok = ok && r.passed();
    }
    std::cout << (ok ? "verdict: pass" : "verdict: FAIL") << "\n";
  }
  return ok ? kPass : kFailure;
}

std::vector<Rational> parse_vector(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  if (!text.empty() && text.back() == ',') {
    throw DomainError("empty coordinate at the end of the vector");
  }
  return out;
}

int cmd_cone_member(const Options& opt) {
  const Limits limits = make_limits(opt);
  const Digraph g = load(opt, limits);
  auto coords = parse_vector(opt.vector);
  if (coords.size() != g.vertex_count()) {
    throw DomainError("vector has " + std::to_string(coords.size()) +
                      " coordinates, graph has " +
                      std::to_string(g.vertex_count()) + " vertices");
  }
  const RationalVec x(g.vertices(), std::move(coords));
  const ConeDecision d = decide_cone_membership(g, x);
  const auto labeled = g.labeled_edges();
  if (opt.format == "json") {
    ordered_json out = {{"graph", graph_json(g)},
                        {"x", to_string(x)},
                        {"member", d.member}};
    if (d.flow) {
      out["flow"] = to_string(d.flow->value);
      out["required"] = to_string(d.required);
      out["certified"] = d.audit && d.audit->passed();
    } else {
      out["reason"] = "coordinates do not sum to 0";
    }
    if (d.witness) {
      ordered_json w = ordered_json::array();
      for (std::size_t i = 0; i < labeled.size(); ++i) {
        w.push_back({{"edge", {labeled[i].first, labeled[i].second}},
                     {"lambda", to_string((*d.witness)[i])}});
      }
      out["witness"] = w;
    }
    std::cout << out.dump(2) << "\n";
    return kPass;
  }
  std::cout << "x = " << to_string(x) << "\n";
  std::cout << (d.member ? "member" : "non-member") << "\n";
  if (!d.flow) {
    std::cout << "reason: coordinates sum to " << to_string(x.total())
              << ", not 0\n";
    return kPass;
  }
  std::cout << "max flow: " << to_string(d.flow->value) << " (required "
            << to_string(d.required) << ")\n";
  std::cout << "min cut certified: "
            << (d.audit && d.audit->passed() ? "yes" : "no") << "\n";
  if (d.witness) {
    for (std::size_t i = 0; i < labeled.size(); ++i) {
      if ((*d.witness)[i] == 0) continue;
      std::cout << "lambda(" << labeled[i].first << "->" << labeled[i].second
                << ") = " << to_string((*d.witness)[i]) << "\n";
    }
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and verification for the Hopf monoid of digraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--max-vertices", opt.max_vertices,
                 "Largest graph accepted by composition enumeration")
      ->capture_default_str();
  app.add_flag("--parallel", opt.parallel,
               "Use all hardware threads for brute-force scans");

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", opt.file, "Graph file")->required();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto* invariant = app.add_subcommand("invariant", "Print a graph invariant");
  add_file(invariant);
  invariant->add_option("--which", opt.which, "Invariant to compute")
      ->check(CLI::IsMember({"strict", "weak", "bpoly", "psi"}))
      ->capture_default_str();
  add_format(invariant);

  auto* anti = app.add_subcommand("antipode", "Print the antipode as a signed sum");
  add_file(anti);
  add_format(anti);

  auto* verify = app.add_subcommand("verify", "Run property suites");
  add_file(verify);
  verify->add_option("--suite", opt.suite, "Suite to run")
      ->check(CLI::IsMember(
          {"hopf-axioms", "morphism", "theorem1", "reciprocity", "all"}))
      ->capture_default_str();
  verify->add_option("--seed", opt.seed, "Sampling seed")->capture_default_str();
  verify->add_option("--samples", opt.samples, "Samples per randomized check")
      ->capture_default_str();
  add_format(verify);

  auto* cone = app.add_subcommand("cone-member",
                                  "Decide membership in the graph cone");
  add_file(cone);
  cone->add_option("vector", opt.vector, "Comma-separated rationals")
      ->required();
  add_format(cone);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*invariant) return cmd_invariant(opt);
    if (*anti) return cmd_antipode(opt);
    if (*verify) return cmd_verify(opt);
    return cmd_cone_member(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << opt.file << ":" << e.what() << "\n";
    return kInput;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
