// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria. An optional argument names the CLI executable
// for the process-level determinism check.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eea_search.hpp"
#include "newtonjump.hpp"

using namespace newtonjump;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> problems;
  std::string summary;

  void fail(std::string what) {
    pass = false;
    if (problems.size() < 20) problems.push_back(std::move(what));
  }
};

std::string pq(integer p, integer q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

std::string values(const std::vector<integer>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

std::vector<integer> missing(const SpectrumResult& s, integer mu) {
  std::vector<integer> out;
  for (integer v = mu; v >= 1; --v)
    if (!s.attains(v)) out.push_back(v);
  return out;
}

Outcome closed_form() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  int count = 0;
  for (integer p = 1; p <= 100; ++p) {
    for (integer q = p; q <= 100; ++q) {
      ++count;
      if (newton_number(triangle(p, q)) != (p - 1) * (q - 1)) o.fail("nu(tr" + pq(p, q) + ") is wrong");
    }
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (ms >= 1000) o.fail("took " + std::to_string(ms) + " ms");
  o.summary = std::to_string(count) + " triangles in " + std::to_string(static_cast<int>(ms)) + " ms";
  return o;
}

Outcome first_jump_run() {
  Outcome o;
  int count = 0;
  for (integer p = 2; p <= 12; ++p) {
    for (integer q = p; q <= 12; ++q) {
      const SQHParams s = SQHParams::make(p, q);
      if (s.m >= p) continue;
      ++count;
      const integer mu = (p - 1) * (q - 1);
      const SpectrumResult spectrum = attainable_spectrum(p, q);
      integer below = 0;
      for (integer v : spectrum.attainable)
        if (v < mu) below = v;
      if (below != mu - s.m) o.fail(pq(p, q) + ": largest value below nu is " + std::to_string(below));
      for (integer v = mu - s.m; v >= mu - s.r * (p - s.r); --v)
        if (!spectrum.attains(v)) o.fail(pq(p, q) + ": " + std::to_string(v) + " not attained");
    }
  }
  o.summary = std::to_string(count) + " bases";
  return o;
}

Outcome definitive_gaps() {
  Outcome o;
  auto expect = [&](integer p, integer q, std::vector<integer> want) {
    const auto got = missing(attainable_spectrum(p, q), (p - 1) * (q - 1));
    if (got != want) o.fail(pq(p, q) + " misses " + values(got) + ", expected " + values(want));
  };
  expect(3, 6, {9});
  expect(3, 9, {15});
  expect(4, 8, {20, 19});
  expect(4, 12, {32, 31, 26});
  for (integer k = 1; k <= 6; ++k) expect(2, 2 * k, {});
  o.summary = "(3,6) (3,9) (4,8) (4,12) (2,2k) k<=6";
  return o;
}

Outcome soundness() {
  Outcome o;
  int count = 0;
  const auto start = std::chrono::steady_clock::now();
  for (integer p = 2; p <= 12; ++p) {
    for (integer q = p; q <= 12; ++q) {
      ++count;
      const VerificationReport v = verify(p, q);
      if (!v.missing_guaranteed.empty()) o.fail(pq(p, q) + " misses guaranteed " + values(v.missing_guaranteed));
    }
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  o.summary = std::to_string(count) + " bases in " + std::to_string(static_cast<int>(ms)) + " ms";
  return o;
}

Outcome construction_validity() {
  Outcome o;
  int count = 0;
  auto check = [&](const NamedDeformation& d, const std::string& where) {
    ++count;
    if (!d.is_valid_deformation()) o.fail(where + " " + d.label + ": not a deformation");
    if (!d.claim_holds())
      o.fail(where + " " + d.label + ": listed " + std::to_string(*d.claimed_nu) + ", computed " +
             std::to_string(d.computed_nu()));
  };

  for (integer p = 2; p <= 8; ++p) {
    for (integer q = p; q <= 16; ++q) {
      const SQHParams s = SQHParams::make(p, q);
      const std::string where = pq(p, q);
      if (s.r != 0) {
        check(first_jump_diagram(s), where);
        for (const auto& d : staircase_brackets(s)) check(d, where);
        if (p > 4) {
          for (const auto& step : extended_family(s).steps)
            for (const auto& d : step.staircase) check(d, where + " tr" + pq(p, step.q));
        }
      }
      if (std::gcd(p, q) == 1) {
        const NamedDeformation sigma{"sigma", triangle(p, q), sigma_diagram(p, q, LatticePoint{0, q}), std::nullopt};
        check(sigma, where);
      }
      if (s.r == 0 && p >= 5)
        for (integer kappa = 1; kappa <= s.k; ++kappa)
          for (const auto& d : pkp_family(p, s.k, kappa)) check(d, where);
      if (s.r == 0 && p <= 4 && s.k >= 2) {
        if (p == 2) {
          for (const auto& d : small_p_family(2, s.k, s.k)) check(d, where);
        } else {
          for (integer kappa = 2; kappa <= s.k; ++kappa)
            for (const auto& d : small_p_family(p, s.k, kappa)) check(d, where);
        }
      }
    }
  }
  o.summary = std::to_string(count) + " deformations";
  return o;
}

Outcome staircase_completeness() {
  Outcome o;
  int bases = 0, targets = 0;
  for (integer p = 2; p <= 9; ++p) {
    for (integer q = p + 1; q <= 12; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++bases;
      const Diagram base = triangle(p, q);
      const auto stairs = staircase_brackets(SQHParams::make(p, q));
      for (std::size_t i = 0; i + 1 < stairs.size(); ++i) {
        const integer a = stairs[i].computed_nu();
        const integer b = stairs[i + 1].computed_nu();
        for (integer v = std::min(a, b); v <= std::max(a, b); ++v) {
          ++targets;
          const auto w = find_witness(base, v);
          if (!w || newton_number(*w) != v || !is_deformation_of(*w, base))
            o.fail(pq(p, q) + ": no witness for " + std::to_string(v));
        }
      }
    }
  }
  o.summary = std::to_string(bases) + " bases, " + std::to_string(targets) + " witness searches";
  return o;
}

Outcome eea_identities() {
  Outcome o;
  int count = 0;
  for (integer b0 = 2; b0 <= 50; ++b0) {
    for (integer a0 = 1; a0 < b0; ++a0) {
      if (std::gcd(a0, b0) != 1) continue;
      ++count;
      const EEASequence s = eea_sequence(a0, b0);
      const std::size_t l = s.length();
      const std::string where = pq(a0, b0);
      if (s[l] != EEAPair{0, 1}) o.fail(where + ": terminal pair");
      for (std::size_t j = 1; j <= l; ++j) {
        const integer d = s.determinant(j);
        if (d != 1 && d != -1) o.fail(where + ": determinant");
        if (j >= 2 && d != -s.determinant(j - 1)) o.fail(where + ": alternation");
      }
      if (s.b0() < 2 * s[1].b) o.fail(where + ": b0/b1 < 2");
      if (l >= 2) {
        const auto [N, n] = decompose_Nn(s);
        if (N < 1 || n < 1 || N * s[1].a + n * s[2].a != a0 || N * s[1].b + n * s[2].b != b0)
          o.fail(where + ": (N,n) reconstruction");
      }
    }
  }
  int unique = 0;
  for (integer b0 = 1; b0 <= 30; ++b0) {
    for (integer a0 = 1; a0 <= b0; ++a0) {
      if (std::gcd(a0, b0) != 1) continue;
      ++unique;
      const auto found = newtonjump::testing::all_sequences(a0, b0);
      if (found.size() != 1)
        o.fail(pq(a0, b0) + ": " + std::to_string(found.size()) + " sequences");
      else if (found.front() != eea_sequence(a0, b0).terms)
        o.fail(pq(a0, b0) + ": exhaustive search disagrees");
    }
  }
  o.summary = std::to_string(count) + " identity pairs, " + std::to_string(unique) + " uniqueness pairs";
  return o;
}

Outcome gcd_parity_check() {
  Outcome o;
  int count = 0;
  for (integer p = 2; p <= 200; ++p) {
    for (integer q = p - 1; q <= 60 * p; q += p) {
      if (q < 1) continue;
      ++count;
      try {
        const GcdParity g = gcd_parity(p, q);
        if (g.gcd_q_minus_1 > 2 || (g.gcd_q_minus_1 > 1) != (p % 2 == 0) || g.p_even != (p % 2 == 0))
          o.fail(pq(p, q));
      } catch (const std::exception& e) {
        o.fail(pq(p, q) + ": " + e.what());
      }
    }
  }
  o.summary = std::to_string(count) + " pairs";
  return o;
}

Outcome dual_oracle() {
  Outcome o;
  int count = 0;
  const EnumerationBudget wide{48, 48};
  for (integer p = 1; p <= 48; ++p) {
    for (integer q = 1; p * q <= 48; ++q) {
      ++count;
      const Diagram base = triangle(p, q);
      const auto chains = enumerate_subdiagrams(base, {}, wide);
      const std::set<Diagram> a(chains.begin(), chains.end());
      if (a.size() != chains.size()) o.fail("tr" + pq(p, q) + ": duplicate chains");
      if (a != enumerate_by_point_closure(base, {}, wide)) o.fail("tr" + pq(p, q) + ": enumerations differ");
    }
  }
  o.summary = std::to_string(count) + " bases";
  return o;
}

std::string capture(const std::string& command) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  auto in_process = [](const std::string& threads) {
    std::ostringstream out, err;
    run_command({"oracle", "4", "8", "--json", "--threads", threads}, out, err);
    return out.str();
  };
  const std::string a = in_process("1");
  if (a.empty()) o.fail("empty output");
  if (a != in_process("1")) o.fail("two in-process runs differ");
  if (a != in_process("8")) o.fail("1 thread and 8 threads differ");
  o.summary = "in-process";
  if (!cli.empty()) {
    const std::string one = capture("\"" + cli + "\" oracle 4 8 --json --threads 1");
    const std::string two = capture("\"" + cli + "\" oracle 4 8 --json --threads 1");
    const std::string many = capture("\"" + cli + "\" oracle 4 8 --json --threads 8");
    const std::string dflt = capture("\"" + cli + "\" oracle 4 8 --json");
    if (one.empty()) o.fail("executable produced no output");
    if (one != two) o.fail("two processes differ");
    if (one != many || one != dflt) o.fail("thread counts differ across processes");
    if (one != a) o.fail("executable differs from in-process output");
    o.summary = "in-process and executable, " + std::to_string(one.size()) + " bytes";
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"closed-form Newton number of tr(p,q)", closed_form},
      {"first jump is m and the next run is attained", first_jump_run},
      {"exact gaps when p divides q", definitive_gaps},
      {"guaranteed values are attained for q <= 12", soundness},
      {"constructions are deformations with matching values", construction_validity},
      {"staircase brackets are filled by witnesses", staircase_completeness},
      {"EEA identities and uniqueness", eea_identities},
      {"parity of gcd(p, q-1)", gcd_parity_check},
      {"chain enumeration equals point closure", dual_oracle},
      {"oracle output is byte-stable", [&] { return determinism(cli); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
    if (!o.summary.empty()) std::cout << " [" << o.summary << "]";
    std::cout << '\n';
    for (const auto& p : o.problems) std::cout << "      " << p << '\n';
    failed += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
  return failed;
}
