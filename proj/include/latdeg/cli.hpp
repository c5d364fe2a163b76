#pragma once

#include "latdeg/cas_script.hpp"
#include "latdeg/io.hpp"
#include "latdeg/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace latdeg::cli {

enum class Subcommand { snf, hnf, degree, torsion, hilbert, verify, toric, sandpile, emit };

inline const std::map<std::string, Subcommand>& subcommand_names() {
  static const std::map<std::string, Subcommand> names{
      {"snf", Subcommand::snf},         {"hnf", Subcommand::hnf},         {"degree", Subcommand::degree},
      {"torsion", Subcommand::torsion}, {"hilbert", Subcommand::hilbert}, {"verify", Subcommand::verify},
      {"toric", Subcommand::toric},     {"sandpile", Subcommand::sandpile}, {"emit", Subcommand::emit}};
  return names;
}

struct RunConfig {
  Subcommand subcommand = Subcommand::degree;
  std::string input_path;
  bool json = false;
  std::optional<std::size_t> max_degree;
  std::optional<std::uint64_t> budget;  // per-subcommand default when unset
  CasFormat format = CasFormat::macaulay2;
  unsigned threads = 1;
};

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

namespace detail {

inline std::string join(const std::vector<BigInt>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + to_string(xs[i]);
  return s;
}

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return in;
}

inline HomogeneousLattice read_lattice(const std::string& path) {
  auto in = open_input(path);
  return HomogeneousLattice(parse_matrix(in));
}

inline HilbertOptions hilbert_options(const RunConfig& c) {
  HilbertOptions o;
  if (c.budget) o.budget = *c.budget;
  o.threads = c.threads;
  return o;
}

inline void run_snf(const RunConfig& c, std::ostream& out) {
  auto in = open_input(c.input_path);
  const ZMatrix a = parse_matrix(in);
  const SmithDecomposition sd = smith_normal_form(a);
  if (c.json) {
    out << to_json(sd).dump(2) << '\n';
    return;
  }
  out << "rank " << sd.rank << '\n';
  out << "invariant_factors " << join(sd.invariant_factors) << '\n';
  out << "U\n";
  write_matrix(out, sd.u);
  out << "D\n";
  write_matrix(out, sd.d);
  out << "V\n";
  write_matrix(out, sd.v);
}

inline void run_hnf(const RunConfig& c, std::ostream& out) {
  auto in = open_input(c.input_path);
  const HermiteForm hf = hermite_normal_form(parse_matrix(in));
  if (c.json) {
    out << to_json(hf).dump(2) << '\n';
    return;
  }
  out << "rank " << hf.rank << '\n';
  out << "H\n";
  write_matrix(out, hf.h);
  out << "transform\n";
  write_matrix(out, hf.transform);
}

inline void run_degree(const RunConfig& c, std::ostream& out) {
  const HomogeneousLattice l = read_lattice(c.input_path);
  const BigInt deg = degree(l);
  if (c.json)
    out << lattice_summary_json(l).dump(2) << '\n';
  else
    out << "degree " << deg << '\n';
}

inline void run_torsion(const RunConfig& c, std::ostream& out) {
  const HomogeneousLattice l = read_lattice(c.input_path);
  if (c.json) {
    Json j = lattice_summary_json(l);
    j["torsion"] = to_json(torsion_structure(l));
    out << j.dump(2) << '\n';
    return;
  }
  const TorsionStructure t = torsion_structure(l);
  const Json summary = lattice_summary_json(l);
  out << "ambient_dim " << l.ambient_dim() << '\n';
  out << "rank " << l.rank() << '\n';
  out << "invariant_factors " << join(l.invariant_factors()) << '\n';
  out << "torsion_order " << t.order << '\n';
  out << "cyclic_factors " << join(t.cyclic_factors) << '\n';
  out << "free_rank " << t.free_rank << '\n';
  out << "torsion_free " << yes_no(is_torsion_free(l)) << '\n';
  if (summary["degree"].is_null()) {
    out << "degree n/a (rank " << l.rank() << ", formula needs rank " << (l.ambient_dim() ? l.ambient_dim() - 1 : 0)
        << ")\n";
  } else {
    out << "degree " << summary["degree"].get<std::string>() << '\n';
    out << "regularity_upper_bound " << regularity_upper_bound(l) << '\n';
  }
}

inline void run_hilbert(const RunConfig& c, std::ostream& out) {
  const HomogeneousLattice l = read_lattice(c.input_path);
  std::size_t d_max = 20;
  if (c.max_degree) {
    d_max = *c.max_degree;
  } else if (l.ambient_dim() >= 1 && l.rank() + 1 == l.ambient_dim()) {
    const BigInt auto_max = regularity_upper_bound(l) + l.ambient_dim();
    const auto budget = hilbert_options(c).budget;
    if (auto_max > budget) throw BudgetExceeded(to_string(auto_max + 1), std::to_string(budget));
    d_max = static_cast<std::size_t>(auto_max);
  }
  const HilbertProfile p = hilbert_profile(l, d_max, hilbert_options(c));
  if (c.json) {
    out << to_json(p).dump(2) << '\n';
    return;
  }
  for (std::size_t d = 0; d < p.values.size(); ++d) out << d << ' ' << p.values[d] << '\n';
  auto opt = [](const auto& v) {
    std::ostringstream os;
    if (v)
      os << *v;
    else
      os << "none";
    return os.str();
  };
  out << "stabilization_degree " << opt(p.stabilization_degree) << " degree_estimate " << opt(p.degree_estimate)
      << " krull_dim_estimate " << opt(p.krull_dim_estimate) << '\n';
}

inline int run_verify(const RunConfig& c, std::ostream& out) {
  const HomogeneousLattice l = read_lattice(c.input_path);
  const DegreeVerification r = verify_degree(l, hilbert_options(c));
  if (c.json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << "snf_degree " << r.snf_degree << '\n';
    out << "oracle_degree " << r.oracle_degree << '\n';
    out << "regularity_bound " << r.regularity_bound << '\n';
    out << "observed_stabilization "
        << (r.observed_stabilization ? std::to_string(*r.observed_stabilization) : "none") << '\n';
    out << "agree " << yes_no(r.agree) << '\n';
  }
  return r.agree && r.stabilization_within_bound ? kOk : kDomainError;
}

inline int run_toric(const RunConfig& c, std::ostream& out) {
  auto in = open_input(c.input_path);
  const ToricSetSpec spec = parse_toric_spec(in);
  const VanishingDegreeReport v = check_vanishing_degree(spec, c.budget.value_or(1'000'000));
  const CompleteIntersectionReport ci = ci_hypothesis_check(spec);
  if (c.json) {
    out << Json{{"vanishing_degree", to_json(v)}, {"ci_hypothesis", to_json(ci)}}.dump(2) << '\n';
  } else {
    out << "lattice_degree " << v.lattice_degree << '\n';
    out << "point_count " << v.point_count << '\n';
    out << "agree " << yes_no(v.agree) << '\n';
    out << "q_minus_1_prime " << yes_no(ci.q_minus_1_prime) << '\n';
    out << "exponents_distinct_mod " << yes_no(ci.exponents_distinct_mod) << '\n';
    out << "torsion_is_power " << yes_no(ci.torsion_is_power) << '\n';
    out << "corollary_applies " << yes_no(ci.corollary_applies) << '\n';
    if (ci.predicted_generators) out << "predicted_generators " << *ci.predicted_generators << '\n';
  }
  return v.agree ? kOk : kDomainError;
}

inline int run_sandpile(const RunConfig& c, std::ostream& out) {
  auto in = open_input(c.input_path);
  const SandpileReport r = check_sandpile(parse_graph(in));
  if (c.json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << "lattice_degree " << r.lattice_degree << '\n';
    out << "spanning_tree_count " << r.spanning_trees << '\n';
    out << "reduced_laplacian_det " << r.reduced_laplacian_det << '\n';
    out << "invariant_factors " << join(r.invariant_factors) << '\n';
    out << "agree " << yes_no(r.agree) << '\n';
  }
  return r.agree ? kOk : kDomainError;
}

inline void run_emit(const RunConfig& c, std::ostream& out) {
  const HomogeneousLattice l = read_lattice(c.input_path);
  const std::string script = emit_cas_script(l, c.format);
  if (c.json)
    out << Json{{"format", c.format == CasFormat::macaulay2 ? "macaulay2" : "maple"}, {"script", script}}.dump(2)
        << '\n';
  else
    out << script;
}

}  // namespace detail

// Exit 0 on success, 1 on a domain error (or a failed cross-check), 2 on
// unreadable or malformed input.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::snf: detail::run_snf(config, out); return kOk;
      case Subcommand::hnf: detail::run_hnf(config, out); return kOk;
      case Subcommand::degree: detail::run_degree(config, out); return kOk;
      case Subcommand::torsion: detail::run_torsion(config, out); return kOk;
      case Subcommand::hilbert: detail::run_hilbert(config, out); return kOk;
      case Subcommand::verify: return detail::run_verify(config, out);
      case Subcommand::toric: return detail::run_toric(config, out);
      case Subcommand::sandpile: return detail::run_sandpile(config, out);
      case Subcommand::emit: detail::run_emit(config, out); return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

// Parses argv into a RunConfig and runs it.
inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree of graded lattice ideals via Smith normal form, with brute-force cross-checks"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::size_t max_degree = 0;
  std::uint64_t budget = 0;
  std::string format = "macaulay2";

  app.add_flag("--json", config.json, "Machine-readable JSON output");
  auto* max_degree_opt =
      app.add_option("--max-degree", max_degree, "Largest degree for the hilbert subcommand")->check(CLI::NonNegativeNumber);
  auto* budget_opt =
      app.add_option("--budget", budget, "Enumeration budget (monomials or parameter points)")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Script format for emit")->check(CLI::IsMember({"macaulay2", "maple"}));
  app.add_option("--threads", config.threads, "Worker threads for the Hilbert oracle")->check(CLI::Range(1u, 256u));

  static const std::map<std::string, std::string> help{
      {"snf", "Smith normal form with transforms"},
      {"hnf", "Hermite normal form with transform"},
      {"degree", "Degree of S/I(L) as the torsion order (rank s-1 only)"},
      {"torsion", "Torsion subgroup of Z^s/L"},
      {"hilbert", "Hilbert function by coset counting"},
      {"verify", "Cross-check the degree against the Hilbert oracle"},
      {"toric", "Vanishing ideal of a projective toric set over F_q"},
      {"sandpile", "Sandpile group order vs. spanning-tree count"},
      {"emit", "Macaulay2 or Maple script for external cross-validation"}};
  for (const auto& [name, sub] : subcommand_names()) {
    auto* cmd = app.add_subcommand(name, help.at(name));
    cmd->add_option("input", config.input_path, "Input file")->required();
    cmd->callback([&config, sub = sub] { config.subcommand = sub; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }
  if (max_degree_opt->count() > 0) config.max_degree = max_degree;
  if (budget_opt->count() > 0) config.budget = budget;
  config.format = format == "maple" ? CasFormat::maple : CasFormat::macaulay2;
  return run(config, out, err);
}

}  // namespace latdeg::cli
