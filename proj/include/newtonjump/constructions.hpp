#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "newtonjump/diagram.hpp"
#include "newtonjump/eea.hpp"

namespace newtonjump {

/// Weights (1/p, 1/q) of a semi-quasi-homogeneous germ, with q = k p + r
/// and m = gcd(p, q).
struct SQHParams {
  integer p = 0;
  integer q = 0;
  integer k = 0;
  integer r = 0;
  integer m = 0;

  static SQHParams make(integer p, integer q) {
    if (p < 2) throw std::invalid_argument("weights need p >= 2");
    if (q < p) throw std::invalid_argument("weights need q >= p");
    if (q > kCoordinateBound) throw std::invalid_argument("q out of supported range");
    return SQHParams{p, q, q / p, q % p, std::gcd(p, q)};
  }

  friend bool operator==(const SQHParams&, const SQHParams&) = default;
};

/// nu(tr(p, q)) = (p - 1)(q - 1).
inline integer triangle_newton_number(integer p, integer q) {
  return checked_mul(p - 1, q - 1);
}

/// A diagram produced by one of the explicit constructions, registered
/// against the diagram it deforms.
struct NamedDeformation {
  std::string label;
  Diagram base;
  Diagram diagram;
  std::optional<integer> claimed_nu;

  integer computed_nu() const { return newton_number(diagram); }
  bool is_valid_deformation() const { return is_deformation_of(diagram, base); }
  bool claim_holds() const { return !claimed_nu || *claimed_nu == computed_nu(); }
};

/// Free-form remarks about catalog entries that were dropped or corrected.
using ConstructionNotes = std::vector<std::string>;

namespace detail {

inline void note(ConstructionNotes* notes, std::string text) {
  if (notes) notes->push_back(std::move(text));
}

inline std::vector<SegmentTerm> nonempty_terms(std::initializer_list<std::pair<integer, integer>> raw) {
  std::vector<SegmentTerm> out;
  for (auto [dx, dy] : raw) {
    if (dx == 0 && dy == 0) continue;
    out.emplace_back(dx, dy);
  }
  return out;
}

/// Chain from `anchor` through `terms` in whichever of the listed or the
/// reversed order is convex.
inline Diagram convex_chain(const LatticePoint& anchor, std::span<const SegmentTerm> terms) {
  try {
    return diagram_from_terms(anchor, false, terms);
  } catch (const DiagramError&) {
    return diagram_from_terms(anchor, true, terms);
  }
}

inline NamedDeformation checked_deformation(std::string label, const Diagram& base, Diagram diagram,
                                            std::optional<integer> claimed) {
  NamedDeformation out{std::move(label), base, std::move(diagram), claimed};
  if (!out.is_valid_deformation())
    throw std::logic_error("construction " + out.label + " is not a deformation of its base");
  return out;
}

inline std::string kappa_label(const std::string& stem, integer kappa) {
  return stem + "[kappa=" + std::to_string(kappa) + "]";
}

inline std::string i_kappa_label(const std::string& stem, integer i, integer kappa) {
  return stem + "[i=" + std::to_string(i) + ",kappa=" + std::to_string(kappa) + "]";
}

}  // namespace detail

/// Terms of the diagram spanned by the one-jump deformations of tr(a0, b0):
/// N tr(a1,b1) + n tr(a2,b2), or r tr(1,k+1) + (a0-r) tr(1,k) with
/// b0 = k a0 + r when a1 = 1 (also used for a0 = 1).
inline std::vector<SegmentTerm> sigma_terms(integer a0, integer b0) {
  const EEASequence seq = eea_sequence(a0, b0);
  if (a0 == 1 || seq[1].a == 1) {
    const integer k = b0 / a0;
    const integer r = b0 % a0;
    std::vector<SegmentTerm> terms;
    if (r > 0) terms.emplace_back(r, 1, k + 1);
    terms.emplace_back(a0 - r, 1, k);
    return terms;
  }
  return {SegmentTerm(seq.N, seq[1].a, seq[1].b), SegmentTerm(seq.n, seq[2].a, seq[2].b)};
}

/// The listing order of sigma_terms that yields a convex chain.
inline bool sigma_convex_orientation(integer a0, integer b0) {
  const auto terms = sigma_terms(a0, b0);
  try {
    diagram_from_terms(LatticePoint{0, b0}, false, terms);
    return false;
  } catch (const DiagramError&) {
    return true;
  }
}

/// Sigma_{a0,b0} anchored at `anchor`, walked in the requested orientation.
/// Throws DiagramError when that orientation is not convex.
inline Diagram sigma_diagram(integer a0, integer b0, const LatticePoint& anchor, bool reversed) {
  return diagram_from_terms(anchor, reversed, sigma_terms(a0, b0));
}

inline Diagram sigma_diagram(integer a0, integer b0, const LatticePoint& anchor) {
  return sigma_diagram(a0, b0, anchor, sigma_convex_orientation(a0, b0));
}

/// One-point deformation tr(p-a1, q-b1) + tr(a1, b1) of tr(p, q), where
/// (a1, b1) follows (p/m, q/m) in its EEA sequence. Its Newton number is
/// nu(tr(p,q)) - m and nothing in between is attainable.
inline NamedDeformation first_jump_diagram(const SQHParams& params) {
  const auto [p, q, k, r, m] = params;
  if (m >= p) throw std::invalid_argument("first jump needs gcd(p, q) < p; use the p | q family");
  const EEASequence seq = eea_sequence(p / m, q / m);
  const EEAPair& step = seq[1];
  const std::vector<SegmentTerm> terms{SegmentTerm(p - step.a, q - step.b), SegmentTerm(step.a, step.b)};
  return detail::checked_deformation("first-jump", triangle(p, q), detail::convex_chain({0, q}, terms),
                                     triangle_newton_number(p, q) - m);
}

/// Bracketing diagrams of the run of unit jumps below the first jump:
/// first-jump, E[0], D[1], E[1], ..., D[l-2], L. Entries alternate between
/// an upper diagram and the lowest diagram reachable by one-jump
/// deformations of it; consecutive brackets overlap (nu(D[i+1]) >= nu(E[i])).
/// L = r tr(1,k+1) + (p-r) tr(1,k) has Newton number nu(tr(p,q)) - r(p-r).
inline std::vector<NamedDeformation> staircase_brackets(const SQHParams& params) {
  const auto [p, q, k, r, m] = params;
  if (m >= p) throw std::invalid_argument("staircase needs gcd(p, q) < p");
  const EEASequence seq = eea_sequence(p / m, q / m);
  const std::size_t l = seq.length();
  const EEAPair target{seq.a0(), seq.b0()};
  const Diagram base = triangle(p, q);
  const LatticePoint top{0, q};

  std::vector<NamedDeformation> out;
  out.push_back(first_jump_diagram(params));
  for (std::size_t i = 0; i + 1 < l; ++i) {
    if (i >= 1) {
      const auto [Ni, ni] = coordinates_in_basis(target, seq[i], seq[i + 1]);
      std::vector<SegmentTerm> terms{SegmentTerm(m * Ni * seq[i].a + seq[i + 1].a, m * Ni * seq[i].b + seq[i + 1].b)};
      if (m * ni - 1 > 0) terms.emplace_back(m * ni - 1, seq[i + 1].a, seq[i + 1].b);
      out.push_back(detail::checked_deformation("staircase-D[" + std::to_string(i) + "]", base,
                                                detail::convex_chain(top, terms), std::nullopt));
    }
    if (i + 3 <= l) {
      const auto [Nj, nj] = coordinates_in_basis(target, seq[i + 1], seq[i + 2]);
      const std::vector<SegmentTerm> terms{SegmentTerm(m * Nj, seq[i + 1].a, seq[i + 1].b),
                                           SegmentTerm(m * nj, seq[i + 2].a, seq[i + 2].b)};
      out.push_back(detail::checked_deformation("staircase-E[" + std::to_string(i) + "]", base,
                                                detail::convex_chain(top, terms), std::nullopt));
    }
  }

  std::vector<SegmentTerm> last;
  if (r > 0) last.emplace_back(r, 1, k + 1);
  last.emplace_back(p - r, 1, k);
  out.push_back(detail::checked_deformation("staircase-L", base, detail::convex_chain(top, last),
                                            triangle_newton_number(p, q) - r * (p - r)));
  return out;
}

/// (upper, lower) Newton numbers of each bracket of a staircase.
inline std::vector<std::pair<integer, integer>> bracket_values(const std::vector<NamedDeformation>& staircase) {
  if (staircase.size() % 2 != 0) throw std::invalid_argument("staircase must alternate upper and lower diagrams");
  std::vector<std::pair<integer, integer>> out;
  for (std::size_t i = 0; i < staircase.size(); i += 2)
    out.emplace_back(staircase[i].computed_nu(), staircase[i + 1].computed_nu());
  return out;
}

struct GcdParity {
  integer gcd_q_minus_1 = 0;
  bool p_even = false;

  friend bool operator==(const GcdParity&, const GcdParity&) = default;
};

/// For q = -1 (mod p): gcd(p, q-1) <= 2, and it is 2 exactly when p is even.
inline GcdParity gcd_parity(integer p, integer q) {
  if (p < 2 || q < 1) throw std::invalid_argument("gcd_parity needs p >= 2 and q >= 1");
  if (q % p != p - 1) throw std::invalid_argument("gcd_parity needs q = p - 1 (mod p)");
  const GcdParity out{std::gcd(p, q - 1), p % 2 == 0};
  if (out.gcd_q_minus_1 > 2 || (out.gcd_q_minus_1 > 1) != out.p_even)
    throw std::logic_error("gcd parity check failed");
  return out;
}

/// One diagram tr(p, q-l) in the extended family and its staircase.
struct ExtendedStep {
  Diagram base;
  integer q = 0;
  integer nu = 0;
  integer m = 0;
  integer residue = 0;  // (q - l) mod p
  std::vector<NamedDeformation> staircase;

  integer lowest_staircase_nu(integer p) const { return nu - residue * (p - residue); }
};

struct StitchCheck {
  std::size_t step = 0;
  bool descends = false;   // nu_l - m_l >= nu_{l+1}
  bool overlaps = false;   // nu_{l+1} - m_{l+1} >= nu_l - res_l (p - res_l)
  std::vector<integer> uncovered;  // values skipped between steps l and l+1
};

/// tr(p,q), tr(p,q-1), ..., tr(p,q-(r-1)), each with its staircase; for
/// q = -1 (mod p) the chain continues from tr(p, q-1).
struct ExtendedFamily {
  SQHParams params;
  std::vector<ExtendedStep> steps;

  std::vector<StitchCheck> stitching() const {
    const integer p = params.p;
    std::vector<StitchCheck> out;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
      const ExtendedStep& cur = steps[i];
      const ExtendedStep& next = steps[i + 1];
      StitchCheck c;
      c.step = i;
      c.descends = cur.nu - cur.m >= next.nu;
      c.overlaps = next.nu - next.m >= cur.lowest_staircase_nu(p);
      // Values strictly between next.nu - next.m and next.nu are missed by
      // step i+1; step i covers [lowest, nu - m].
      for (integer v = next.nu - 1; v > next.nu - next.m; --v) {
        const bool covered = v <= cur.nu - cur.m && v >= cur.lowest_staircase_nu(p);
        if (!covered) c.uncovered.push_back(v);
      }
      out.push_back(std::move(c));
    }
    return out;
  }
};

inline ExtendedFamily extended_family(const SQHParams& params) {
  const auto [p, q, k, r, m] = params;
  if (p <= 4) throw std::invalid_argument("extended family needs p > 4");
  if (r == 0) throw std::invalid_argument("extended family needs p not dividing q");

  auto make_step = [p = p](integer qq) {
    const SQHParams sub = SQHParams::make(p, qq);
    return ExtendedStep{triangle(p, qq), qq, triangle_newton_number(p, qq), sub.m, sub.r, staircase_brackets(sub)};
  };

  ExtendedFamily family{params, {}};
  if (r == p - 1) {
    family.steps.push_back(make_step(q));
    const ExtendedFamily rest = extended_family(SQHParams::make(p, q - 1));
    family.steps.insert(family.steps.end(), rest.steps.begin(), rest.steps.end());
    return family;
  }
  for (integer l = 0; l < r; ++l) family.steps.push_back(make_step(q - l));
  return family;
}

/// Deformations of tr(p, kp) for p >= 5 at level kappa:
///  - tr(p, kappa p - 1), the first jump p - 1 of tr(p, kappa p);
///  - the band chains tr(2,p+2kappa) + tr(i-2,(i-2)kappa) + tr(p-i,kappa(p-i)-1),
///    i = 2..p-1, ending at (0,(kappa+1)p-1), for kappa < k (i = p-1 is
///    skipped at kappa = 1);
///  - tr(2,p+6) + tr(p-2,p-4) at kappa = 1 (only a deformation when k >= 3);
///  - tr(2,2kappa+3) + tr(p-2,(p-2)kappa-2), value nu(tr(p,kappa p)) - (2p-1), for kappa < k.
inline std::vector<NamedDeformation> pkp_family(integer p, integer k, integer kappa,
                                                ConstructionNotes* notes = nullptr) {
  if (p < 5) throw std::invalid_argument("pkp family needs p >= 5; use small_p_family");
  if (k < 1) throw std::invalid_argument("pkp family needs k >= 1");
  if (kappa < 1 || kappa > k) throw std::invalid_argument("pkp family needs 1 <= kappa <= k");
  checked_mul(p, k + 1);

  const Diagram base = triangle(p, k * p);
  const integer nu_level = triangle_newton_number(p, kappa * p);
  std::vector<NamedDeformation> out;

  out.push_back(detail::checked_deformation(detail::kappa_label("pkp-first-jump", kappa), base,
                                            triangle(p, kappa * p - 1), nu_level - (p - 1)));
  if (kappa == k) return out;

  const LatticePoint band_top{0, (kappa + 1) * p - 1};
  for (integer i = 2; i <= p - 1; ++i) {
    if (kappa * (p - i) - 1 == 0) {
      detail::note(notes, detail::i_kappa_label("pkp-band", i, kappa) + ": last term tr(1,0) is horizontal; dropped");
      continue;
    }
    const auto terms = detail::nonempty_terms({{2, p + 2 * kappa}, {i - 2, (i - 2) * kappa}, {p - i, kappa * (p - i) - 1}});
    out.push_back(detail::checked_deformation(detail::i_kappa_label("pkp-band", i, kappa), base,
                                              diagram_from_terms(band_top, false, terms), nu_level - (i - 1)));
  }

  if (kappa == 1) {
    const Diagram tail = diagram_from_terms({0, 2 * p + 2}, false, {tr(2, p + 6), tr(p - 2, p - 4)});
    if (is_deformation_of(tail, base)) {
      out.push_back(detail::checked_deformation("pkp-band-tail", base, tail, triangle_newton_number(p, p - 1) + 1));
    } else {
      detail::note(notes, "pkp-band-tail: tr(2,p+6)+tr(p-2,p-4) reaches (0," + std::to_string(2 * p + 2) +
                              ") above tr(" + std::to_string(p) + "," + std::to_string(k * p) + "); dropped");
    }
  }

  const Diagram odd = diagram_from_terms({0, kappa * p + 1}, false,
                                         {tr(2, 2 * kappa + 3), tr(p - 2, (p - 2) * kappa - 2)});
  out.push_back(detail::checked_deformation(detail::kappa_label("pkp-2p-1", kappa), base, odd,
                                            nu_level - (2 * p - 1)));
  return out;
}

/// Explicit deformation lists of tr(p, kp) for p = 2, 3, 4 and k >= 2.
/// For p = 2 `kappa` is unused; for p = 3, 4 it must satisfy 2 <= kappa <= k
/// and the list holds the first jump plus the numbered families at that kappa.
inline std::vector<NamedDeformation> small_p_family(integer p, integer k, integer kappa,
                                                    ConstructionNotes* notes = nullptr) {
  if (p < 2 || p > 4) throw std::invalid_argument("small-p family needs p in {2, 3, 4}");
  if (k < 2) throw std::invalid_argument("small-p family needs k >= 2");
  checked_mul(p, k);
  const Diagram base = triangle(p, k * p);
  std::vector<NamedDeformation> out;

  auto add = [&](std::string label, const Diagram& d, integer claimed) {
    NamedDeformation nd{std::move(label), base, d, claimed};
    if (!nd.is_valid_deformation()) {
      detail::note(notes, nd.label + ": not a deformation of the base; dropped");
      return;
    }
    // The listed value stays in claimed_nu so the mismatch remains visible.
    if (!nd.claim_holds())
      detail::note(notes, nd.label + ": listed value " + std::to_string(claimed) + " differs from computed " +
                              std::to_string(nd.computed_nu()));
    out.push_back(std::move(nd));
  };
  auto chain = [](integer top, std::vector<SegmentTerm> terms) {
    return diagram_from_terms(LatticePoint{0, top}, false, terms);
  };

  if (p == 2) {
    for (integer i = 1; i <= 2 * k - 2; ++i)
      add("p2-step[i=" + std::to_string(i) + "]", triangle(2, 2 * k - i), triangle_newton_number(2, 2 * k - i));
    return out;
  }

  if (kappa < 2 || kappa > k) throw std::invalid_argument("small-p family needs 2 <= kappa <= k");
  const integer K = kappa;

  if (p == 3) {
    add("p3-first-jump", triangle(3, 3 * k - 1), triangle_newton_number(3, 3 * k) - 2);
    const integer nu = triangle_newton_number(3, 3 * K - 1);
    for (integer i = 0; i <= 2; ++i) {
      std::vector<SegmentTerm> terms;
      if (i > 0) terms.emplace_back(i, 1, K);
      terms.emplace_back(3 - i, (3 - i) * K - 1);
      add(detail::i_kappa_label("p3-family-1", i, K), chain(3 * K - 1, terms), nu - i);
    }
    add(detail::kappa_label("p3-family-2", K), chain(3 * K - 2, {tr(2, 2 * K - 1), tr(1, K - 1)}), nu - 3);
    add(detail::kappa_label("p3-family-3", K), triangle(3, 3 * K - 3), nu - 4);
    if (K > 2) {
      add(detail::kappa_label("p3-family-4", K), chain(3 * K - 1, {tr(2, 2 * K + 1), tr(1, K - 2)}), nu - 5);
    } else {
      detail::note(notes, "p3-family-4[kappa=2]: tr(2,5)+tr(1,0) ends in a horizontal segment; dropped");
      add("p3-family-4-alt[kappa=2]", triangle(2, 4), nu - 5);
    }
    return out;
  }

  // p == 4
  add("p4-first-jump", triangle(4, 4 * k - 1), triangle_newton_number(4, 4 * k) - 3);
  const integer nu = triangle_newton_number(4, 4 * K - 1);
  const integer nu_prev = triangle_newton_number(4, 4 * (K - 1));
  for (integer i = 0; i <= 3; ++i) {
    std::vector<SegmentTerm> terms;
    if (i > 0) terms.emplace_back(i, 1, K);
    terms.emplace_back(4 - i, (4 - i) * K - 1);
    add(detail::i_kappa_label("p4-family-1", i, K), chain(4 * K - 1, terms), nu - i);
  }
  for (integer i = 0; i <= 2; ++i) {
    std::vector<SegmentTerm> terms;
    if (i > 0) terms.emplace_back(i, 1, K);
    terms.emplace_back(3 - i, (3 - i) * K - 1);
    terms.emplace_back(1, K - 1);
    add(detail::i_kappa_label("p4-family-2", i, K), chain(4 * K - 2, terms), nu - 5 - i);
  }
  for (integer i = 0; i <= 1; ++i) {
    std::vector<SegmentTerm> terms;
    if (i > 0) terms.emplace_back(i, 1, K);
    terms.emplace_back(2 - i, (2 - i) * K - 1);
    terms.emplace_back(2, 2 * K - 2);
    add(detail::i_kappa_label("p4-family-3", i, K), chain(4 * K - 3, terms), nu - 8 - i);
  }
  for (integer i = 1; i <= 2; ++i)
    add(detail::i_kappa_label("p4-family-4", i, K), chain(4 * K - i, {tr(2, 2 * K + 3 - i), tr(2, 2 * K - 3)}),
        nu_prev - i);
  if (K > 2) {
    add(detail::kappa_label("p4-family-5", K), chain(4 * K - 3, {tr(2, 2 * K + 1), tr(2, 2 * K - 4)}), nu_prev - 7);
  } else {
    detail::note(notes, "p4-family-5[kappa=2]: tr(2,5)+tr(2,0) ends in a horizontal segment; dropped");
    add("p4-family-5-alt[kappa=2]", triangle(2, 3), nu_prev - 7);
  }
  if (k == 2) add("p4-tr(3,8)", triangle(3, 8), triangle_newton_number(4, 8) - 7);
  return out;
}

}  // namespace newtonjump
