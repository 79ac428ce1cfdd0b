#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "newtonjump/diagram.hpp"
#include "newtonjump/predictor.hpp"

namespace newtonjump {

/// Which deformations count. The default keeps every vertex at total degree
/// >= 2, so the deformed germ is still singular.
struct EnumerationConstraints {
  integer min_total_degree = 2;
  bool require_convenient = true;  // deformations of a convenient base always are
  integer min_nu = 1;

  friend bool operator==(const EnumerationConstraints&, const EnumerationConstraints&) = default;
};

/// Largest bases the oracle accepts, by intercepts (short side, long side).
struct EnumerationBudget {
  integer max_short_side = 12;
  integer max_long_side = 14;
};

struct OracleOptions {
  EnumerationBudget budget;
  unsigned threads = 1;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpectrumResult {
  Diagram base;
  std::vector<integer> attainable;      // ascending
  std::map<integer, Diagram> witnesses;  // lexicographically smallest per value
  EnumerationConstraints constraints;
  std::size_t chain_count = 0;

  bool attains(integer v) const { return std::binary_search(attainable.begin(), attainable.end(), v); }
};

/// Called once per enumerated chain with its vertices, twice the area under
/// it and its Newton number. Return false to stop the enumeration.
using ChainVisitor = std::function<bool(std::span<const LatticePoint>, integer, integer)>;

namespace detail {

inline bool on_region_boundary(const Diagram& d, const LatticePoint& p) {
  if (p.x == d.front().x && p.y >= d.front().y) return true;
  if (p.y == d.back().y && p.x >= d.back().x) return true;
  const auto v = d.vertices();
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (p.x >= v[i].x && p.x <= v[i + 1].x && cross(v[i], v[i + 1], p) == 0) return true;
  return false;
}

inline void check_budget(const Diagram& base, const EnumerationBudget& budget) {
  if (!base.is_convenient()) throw std::invalid_argument("oracle needs a convenient base diagram");
  const integer a = base.x_intercept();
  const integer b = base.y_intercept();
  if (std::min(a, b) > budget.max_short_side || std::max(a, b) > budget.max_long_side)
    throw BudgetExceeded("base with intercepts (" + std::to_string(a) + "," + std::to_string(b) +
                         ") exceeds the enumeration budget (" + std::to_string(budget.max_short_side) + "," +
                         std::to_string(budget.max_long_side) + ")");
}

/// Depth-first enumeration of convex chains below a base diagram. Vertices
/// are tried in ascending (x, y) order, so chains come out in lexicographic
/// order and every chain appears exactly once.
class ChainWalker {
 public:
  ChainWalker(const Diagram& base, const EnumerationConstraints& c)
      : base_vertices_(base.vertices().begin(), base.vertices().end()) {
    for (integer x = 0; x <= base.x_intercept(); ++x) {
      for (integer y = 0; y <= base.y_intercept(); ++y) {
        const LatticePoint p{x, y};
        if (x + y < c.min_total_degree) continue;
        if (base.region_contains(p) && !on_region_boundary(base, p)) continue;
        candidates_.push_back(p);
      }
    }
    // first_with_x_[x] is the first candidate index with that abscissa or more.
    first_with_x_.assign(static_cast<std::size_t>(base.x_intercept()) + 2, candidates_.size());
    for (std::size_t i = candidates_.size(); i-- > 0;)
      first_with_x_[static_cast<std::size_t>(candidates_[i].x)] = i;
    for (std::size_t x = first_with_x_.size() - 1; x-- > 0;)
      first_with_x_[x] = std::min(first_with_x_[x], first_with_x_[x + 1]);
  }

  struct Task {
    std::size_t start = 0;
    std::optional<std::size_t> second;
  };

  /// Independent subtrees, in enumeration order.
  std::vector<Task> tasks() const {
    std::vector<Task> out;
    for (std::size_t s = 0; s < candidates_.size() && candidates_[s].x == 0; ++s) {
      if (candidates_[s].y == 0) {
        out.push_back({s, std::nullopt});
        continue;
      }
      for (std::size_t w = first_with_x_[1]; w < candidates_.size(); ++w)
        if (step_allowed(candidates_[s], std::nullopt, candidates_[w])) out.push_back({s, w});
    }
    return out;
  }

  /// Walks one task; returns false if the visitor asked to stop.
  bool run(const Task& task, const ChainVisitor& visit) const {
    std::vector<LatticePoint> chain{candidates_[task.start]};
    if (!task.second) return emit(chain, 0, visit);
    const LatticePoint& w = candidates_[*task.second];
    const integer area = (w.x - chain[0].x) * (chain[0].y + w.y);
    chain.push_back(w);
    return extend(chain, area, visit);
  }

 private:
  bool step_allowed(const LatticePoint& v, const std::optional<LatticePoint>& prev, const LatticePoint& w) const {
    if (w.x <= v.x || w.y >= v.y) return false;
    if (prev) {
      const integer turn = (v.x - prev->x) * (w.y - v.y) - (v.y - prev->y) * (w.x - v.x);
      if (turn <= 0) return false;
    }
    for (const auto& b : base_vertices_) {
      if (b.x < v.x || b.x > w.x) continue;
      if ((w.x - v.x) * (b.y - v.y) - (w.y - v.y) * (b.x - v.x) < 0) return false;
    }
    return true;
  }

  bool emit(const std::vector<LatticePoint>& chain, integer area, const ChainVisitor& visit) const {
    const integer a = chain.back().x;
    const integer b = chain.front().y;
    if (a < 1 || b < 1) return true;  // (0,0) alone: no Newton number
    return visit(chain, area, area - a - b + 1);
  }

  bool extend(std::vector<LatticePoint>& chain, integer area, const ChainVisitor& visit) const {
    const LatticePoint v = chain.back();
    if (v.y == 0) return emit(chain, area, visit);
    const LatticePoint prev = chain[chain.size() - 2];
    for (std::size_t i = first_with_x_[static_cast<std::size_t>(v.x) + 1]; i < candidates_.size(); ++i) {
      const LatticePoint& w = candidates_[i];
      if (!step_allowed(v, prev, w)) continue;
      chain.push_back(w);
      const bool go_on = extend(chain, area + (w.x - v.x) * (v.y + w.y), visit);
      chain.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  std::vector<LatticePoint> base_vertices_;
  std::vector<LatticePoint> candidates_;
  std::vector<std::size_t> first_with_x_;
};

}  // namespace detail

/// Visits every convenient convex chain E whose region contains the base
/// region and whose vertices all have total degree >= min_total_degree, in
/// lexicographic order of vertex lists.
inline void for_each_subdiagram(const Diagram& base, const EnumerationConstraints& c, const ChainVisitor& visit,
                                const EnumerationBudget& budget = {}) {
  detail::check_budget(base, budget);
  const detail::ChainWalker walker(base, c);
  for (const auto& task : walker.tasks())
    if (!walker.run(task, visit)) return;
}

inline std::vector<Diagram> enumerate_subdiagrams(const Diagram& base, const EnumerationConstraints& c = {},
                                                  const EnumerationBudget& budget = {}) {
  std::vector<Diagram> out;
  for_each_subdiagram(
      base, c,
      [&](std::span<const LatticePoint> chain, integer, integer) {
        out.push_back(diagram_from_canonical_chain({chain.begin(), chain.end()}));
        return true;
      },
      budget);
  return out;
}

/// Cross-check enumeration: closes {base} under single-point deformations
/// by every admissible lattice point. Shares no code with the chain walker.
inline std::set<Diagram> enumerate_by_point_closure(const Diagram& base, const EnumerationConstraints& c = {},
                                                    const EnumerationBudget& budget = {}) {
  detail::check_budget(base, budget);
  std::vector<LatticePoint> points;
  for (integer x = 0; x <= base.x_intercept(); ++x)
    for (integer y = 0; y <= base.y_intercept(); ++y)
      if (x + y >= c.min_total_degree) points.push_back({x, y});

  std::set<Diagram> seen{base};
  std::vector<Diagram> frontier{base};
  while (!frontier.empty()) {
    const Diagram d = frontier.back();
    frontier.pop_back();
    for (const auto& p : points) {
      if (d.region_contains(p)) continue;
      Diagram e = deform(d, {p});
      if (seen.insert(e).second) frontier.push_back(std::move(e));
    }
  }

  std::set<Diagram> out;
  for (const auto& d : seen) {
    const bool degree_ok = std::all_of(d.vertices().begin(), d.vertices().end(),
                                       [&](const LatticePoint& v) { return v.x + v.y >= c.min_total_degree; });
    if (degree_ok && d.x_intercept() >= 1 && d.y_intercept() >= 1) out.insert(d);
  }
  return out;
}

/// Exact set of Newton numbers >= min_nu over all deformations of `base`,
/// with the lexicographically smallest witness for each.
inline SpectrumResult attainable_spectrum(const Diagram& base, const EnumerationConstraints& c = {},
                                          const OracleOptions& options = {}) {
  detail::check_budget(base, options.budget);
  const detail::ChainWalker walker(base, c);
  const auto tasks = walker.tasks();
  const integer top = newton_number(base);

  struct Partial {
    std::vector<std::optional<std::vector<LatticePoint>>> first;  // indexed by nu
    std::size_t chains = 0;
  };
  std::vector<Partial> partials(tasks.size());

  auto run_task = [&](std::size_t t) {
    Partial& part = partials[t];
    part.first.assign(static_cast<std::size_t>(top) + 1, std::nullopt);
    walker.run(tasks[t], [&](std::span<const LatticePoint> chain, integer, integer nu) {
      ++part.chains;
      if (nu < c.min_nu || nu > top) return true;
      auto& slot = part.first[static_cast<std::size_t>(nu)];
      if (!slot) slot.emplace(chain.begin(), chain.end());
      return true;
    });
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(tasks.size())));
  if (threads <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i)
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++) run_task(t);
      });
  }

  // Tasks are in enumeration order, so the earliest task holding a value
  // has the lexicographically smallest witness for it.
  SpectrumResult result{base, {}, {}, c, 0};
  for (const auto& part : partials) {
    result.chain_count += part.chains;
    for (std::size_t nu = 0; nu < part.first.size(); ++nu) {
      if (!part.first[nu] || result.witnesses.contains(static_cast<integer>(nu))) continue;
      result.witnesses.emplace(static_cast<integer>(nu), diagram_from_canonical_chain(*part.first[nu]));
    }
  }
  for (const auto& [nu, d] : result.witnesses) result.attainable.push_back(nu);
  return result;
}

inline SpectrumResult attainable_spectrum(integer p, integer q, const EnumerationConstraints& c = {},
                                          const OracleOptions& options = {}) {
  const SQHParams params = SQHParams::make(p, q);
  return attainable_spectrum(triangle(params.p, params.q), c, options);
}

/// First deformation (in enumeration order) with Newton number `target`.
inline std::optional<Diagram> find_witness(const Diagram& base, integer target, const EnumerationConstraints& c = {},
                                           const EnumerationBudget& budget = {}) {
  std::optional<Diagram> found;
  for_each_subdiagram(
      base, c,
      [&](std::span<const LatticePoint> chain, integer, integer nu) {
        if (nu != target) return true;
        found = diagram_from_canonical_chain({chain.begin(), chain.end()});
        return false;
      },
      budget);
  return found;
}

enum class VerificationStatus { Pass, Fail };

inline std::string_view to_string(VerificationStatus s) { return s == VerificationStatus::Pass ? "pass" : "fail"; }

struct VerificationReport {
  SQHParams params;
  GapReport predicted;
  SpectrumResult observed;
  std::vector<integer> missing_guaranteed;  // guaranteed but not attained
  std::vector<integer> closed_gaps;         // possible gaps that are attained
  VerificationStatus status = VerificationStatus::Pass;
};

/// Checks the predicted report against the exact spectrum of tr(p, q).
inline VerificationReport verify(integer p, integer q, const OracleOptions& options = {}) {
  GapReport predicted = predicted_report(p, q);
  SpectrumResult observed = attainable_spectrum(p, q, {}, options);

  std::vector<integer> missing;
  for (integer v : predicted.guaranteed_values())
    if (!observed.attains(v)) missing.push_back(v);

  std::vector<integer> closed;
  bool definitive_closed = false;
  for (const auto& g : predicted.possible_gaps) {
    if (!observed.attains(g.value)) continue;
    closed.push_back(g.value);
    definitive_closed = definitive_closed || g.definitive;
  }
  std::sort(closed.begin(), closed.end());

  const auto status = missing.empty() && !definitive_closed ? VerificationStatus::Pass : VerificationStatus::Fail;
  const SQHParams params = predicted.params;
  return VerificationReport{params, std::move(predicted), std::move(observed), std::move(missing), std::move(closed),
                            status};
}

}  // namespace newtonjump
