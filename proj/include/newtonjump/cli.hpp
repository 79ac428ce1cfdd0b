#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "newtonjump/constructions.hpp"
#include "newtonjump/dsl.hpp"
#include "newtonjump/json_io.hpp"
#include "newtonjump/oracle.hpp"
#include "newtonjump/predictor.hpp"

namespace newtonjump {

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2, kExitBudget = 3 };

inline constexpr const char* kSweepHeader = "p,q,mu,status,n_gaps_predicted,n_gaps_observed,runtime_ms";

namespace detail {

inline unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

inline std::string join_values(const std::vector<integer>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " " : "") << values[i];
  return os.str();
}

inline std::string join_intervals(const std::vector<Interval>& intervals) {
  std::ostringstream os;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    os << (i ? " " : "");
    if (intervals[i].lo == intervals[i].hi)
      os << intervals[i].lo;
    else
      os << '[' << intervals[i].lo << ',' << intervals[i].hi << ']';
  }
  return os.str();
}

/// Values in [1, mu] missing from an ascending spectrum, descending.
inline std::vector<integer> unattained(integer mu, const SpectrumResult& s) {
  std::vector<integer> out;
  for (integer v = mu; v >= 1; --v)
    if (!s.attains(v)) out.push_back(v);
  return out;
}

inline void print_report_text(std::ostream& out, const GapReport& r) {
  const auto& pr = r.params;
  out << "tr(" << pr.p << ',' << pr.q << ")  k=" << pr.k << " r=" << pr.r << " m=" << pr.m << '\n';
  out << "mu=" << r.mu << " mu_pkp=" << r.mu_pkp << '\n';
  out << "applicability: " << to_string(r.applicability) << '\n';
  out << "guaranteed: " << join_intervals(r.guaranteed) << '\n';
  out << "possible gaps:";
  if (r.possible_gaps.empty()) out << " none";
  out << '\n';
  for (const auto& g : r.possible_gaps)
    out << "  " << g.value << "  " << to_string(g.case_tag) << (g.definitive ? "  definitive" : "  at most") << '\n';
}

inline void print_spectrum_text(std::ostream& out, integer mu, const SpectrumResult& s) {
  out << "attainable: " << join_intervals(to_intervals(s.attainable)) << '\n';
  const auto gaps = unattained(mu, s);
  out << "gaps: " << (gaps.empty() ? "none" : join_values(gaps)) << '\n';
  out << "chains: " << s.chain_count << '\n';
  for (auto it = s.witnesses.rbegin(); it != s.witnesses.rend(); ++it)
    out << "  " << it->first << "  " << render_terms(it->second) << '\n';
}

inline void print_deformation(std::ostream& out, const NamedDeformation& d) {
  out << d.label << "  nu=" << d.computed_nu();
  if (d.claimed_nu) out << " listed=" << *d.claimed_nu;
  out << (d.is_valid_deformation() ? "  ok" : "  NOT-A-DEFORMATION");
  if (!d.claim_holds()) out << "  MISMATCH";
  out << "  " << render_terms(d.diagram) << '\n';
}

struct Pair {
  integer p = 0;
  integer q = 0;
};

inline int run_family(std::ostream& out, const std::string& label, integer p, integer q, std::optional<integer> kappa) {
  const SQHParams params = SQHParams::make(p, q);
  ConstructionNotes notes;
  std::vector<NamedDeformation> list;

  auto kappas = [&](integer lo, integer hi) {
    std::vector<integer> ks;
    if (kappa) {
      ks.push_back(*kappa);
    } else {
      for (integer k = lo; k <= hi; ++k) ks.push_back(k);
    }
    return ks;
  };
  auto need_multiple = [&] {
    if (params.r != 0) throw std::invalid_argument("family " + label + " needs p dividing q");
  };

  if (label == "first-jump") {
    list.push_back(first_jump_diagram(params));
  } else if (label == "staircase") {
    list = staircase_brackets(params);
  } else if (label == "extended") {
    const ExtendedFamily fam = extended_family(params);
    for (const auto& step : fam.steps) {
      out << "# tr(" << p << ',' << step.q << ") nu=" << step.nu << " m=" << step.m << '\n';
      for (const auto& d : step.staircase) print_deformation(out, d);
    }
    for (const auto& c : fam.stitching())
      out << "# stitch " << c.step << ": descends=" << (c.descends ? "yes" : "no")
          << " overlaps=" << (c.overlaps ? "yes" : "no")
          << " uncovered=" << (c.uncovered.empty() ? "none" : join_values(c.uncovered)) << '\n';
    return kExitOk;
  } else if (label == "pkp") {
    need_multiple();
    for (integer K : kappas(1, params.k)) {
      auto part = pkp_family(p, params.k, K, &notes);
      list.insert(list.end(), part.begin(), part.end());
    }
  } else if (label == "small-p") {
    need_multiple();
    for (integer K : (p == 2 ? std::vector<integer>{params.k} : kappas(2, params.k))) {
      auto part = small_p_family(p, params.k, K, &notes);
      list.insert(list.end(), part.begin(), part.end());
    }
  } else if (label == "sigma") {
    const Diagram d = sigma_diagram(p, q, LatticePoint{0, q});
    list.push_back(NamedDeformation{"sigma", triangle(p, q), d, std::nullopt});
  } else {
    throw std::invalid_argument("unknown family '" + label +
                                "' (expected first-jump, staircase, extended, pkp, small-p or sigma)");
  }
  for (const auto& d : list) print_deformation(out, d);
  for (const auto& n : notes) out << "# " << n << '\n';
  return kExitOk;
}

inline int run_sweep(std::ostream& out, integer pmax, integer qmax, const std::string& path, unsigned threads) {
  std::vector<Pair> pairs;
  for (integer p = 2; p <= pmax; ++p)
    for (integer q = p; q <= qmax; ++q) pairs.push_back({p, q});
  for (const auto& [p, q] : pairs) check_budget(triangle(p, q), EnumerationBudget{});

  std::vector<std::string> rows(pairs.size());
  std::vector<char> failed(pairs.size(), 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      const VerificationReport v = verify(pairs[i].p, pairs[i].q);
      const auto ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      std::ostringstream row;
      row << v.params.p << ',' << v.params.q << ',' << v.predicted.mu << ',' << to_string(v.status) << ','
          << v.predicted.possible_gaps.size() << ',' << unattained(v.predicted.mu, v.observed).size() << ',' << ms;
      rows[i] = row.str();
      failed[i] = v.status == VerificationStatus::Fail;
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::max(1u, threads); ++t) pool.emplace_back(work);
  }

  std::ofstream file(path);
  if (!file) throw std::invalid_argument("cannot open " + path + " for writing");
  file << kSweepHeader << '\n';
  for (const auto& r : rows) file << r << '\n';
  const auto n_failed = std::count(failed.begin(), failed.end(), 1);
  out << "wrote " << rows.size() << " rows to " << path << "; " << n_failed << " failed\n";
  return n_failed == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newton numbers of deformations of semi-quasi-homogeneous plane curve germs", "newtonjump"};
  app.require_subcommand(1);

  std::string spec;
  auto* newton = app.add_subcommand("newton", "Newton number of a diagram spec");
  newton->add_option("spec", spec, "\"(x,y) (x,y) ...\" or \"[-] [n*]tr(a,b) + ... @ (x,y)\"")->required();

  integer p = 0, q = 0;
  bool json = false;
  bool text = false;
  unsigned threads = detail::default_threads();
  auto add_pq = [&](CLI::App* sub) {
    sub->add_option("p", p, "smaller weight denominator")->required();
    sub->add_option("q", q, "larger weight denominator")->required();
  };

  auto* report = app.add_subcommand("report", "predicted guaranteed values and possible gaps");
  add_pq(report);
  auto* json_flag = report->add_flag("--json", json, "JSON output");
  report->add_flag("--text", text, "plain text output (default)")->excludes(json_flag);

  integer min_degree = 2;
  auto* oracle = app.add_subcommand("oracle", "exact spectrum by enumeration");
  add_pq(oracle);
  oracle->add_option("--min-degree", min_degree, "smallest total degree of a vertex")->capture_default_str();
  oracle->add_flag("--json", json, "JSON output");
  oracle->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "compare prediction with the exact spectrum");
  add_pq(verify_cmd);
  verify_cmd->add_flag("--json", json, "JSON output");
  verify_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  std::string label;
  std::optional<integer> kappa;
  auto* family = app.add_subcommand("family", "list the deformations of a named construction");
  family->add_option("label", label, "first-jump, staircase, extended, pkp, small-p or sigma")->required();
  add_pq(family);
  family->add_option("--kappa", kappa, "level for the pkp and small-p families");

  integer pmax = 0, qmax = 0;
  std::string path;
  auto* sweep = app.add_subcommand("sweep", "verify every 2 <= p <= q in range and write a CSV");
  sweep->add_option("--pmax", pmax, "largest p")->required();
  sweep->add_option("--qmax", qmax, "largest q")->required();
  sweep->add_option("--out", path, "CSV path")->required();
  sweep->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*newton) {
      const Diagram d = parse_diagram(spec);
      if (!d.is_convenient()) throw std::invalid_argument("diagram is not convenient: " + render_vertices(d));
      out << "nu=" << newton_number(d) << '\n';
      out << "twice_area=" << twice_area_under(d) << '\n';
      out << "x_intercept=" << d.x_intercept() << '\n';
      out << "y_intercept=" << d.y_intercept() << '\n';
      out << "vertices=" << render_vertices(d) << '\n';
      return kExitOk;
    }
    if (*report) {
      const GapReport r = predicted_report(p, q);
      if (json)
        out << dump(report_json(r));
      else
        detail::print_report_text(out, r);
      return kExitOk;
    }
    if (*oracle) {
      const GapReport r = predicted_report(p, q);
      EnumerationConstraints c;
      c.min_total_degree = min_degree;
      const SpectrumResult s = attainable_spectrum(p, q, c, OracleOptions{{}, threads});
      if (json)
        out << dump(spectrum_json(r, s));
      else
        detail::print_spectrum_text(out, r.mu, s);
      return kExitOk;
    }
    if (*verify_cmd) {
      const VerificationReport v = verify(p, q, OracleOptions{{}, threads});
      if (json) {
        out << dump(verification_json(v));
      } else {
        detail::print_report_text(out, v.predicted);
        const auto gaps = detail::unattained(v.predicted.mu, v.observed);
        out << "observed gaps: " << (gaps.empty() ? "none" : detail::join_values(gaps)) << '\n';
        out << "missing guaranteed: "
            << (v.missing_guaranteed.empty() ? "none" : detail::join_values(v.missing_guaranteed)) << '\n';
        out << "closed gaps: " << (v.closed_gaps.empty() ? "none" : detail::join_values(v.closed_gaps)) << '\n';
        out << "status: " << to_string(v.status) << '\n';
      }
      return v.status == VerificationStatus::Pass ? kExitOk : kExitVerificationFailed;
    }
    if (*family) return detail::run_family(out, label, p, q, kappa);
    if (*sweep) return detail::run_sweep(out, pmax, qmax, path, threads);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace newtonjump
