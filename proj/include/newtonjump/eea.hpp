#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "newtonjump/checked.hpp"

namespace newtonjump {

struct EEAPair {
  integer a = 0;
  integer b = 0;

  friend bool operator==(const EEAPair&, const EEAPair&) = default;
};

/// The pair sequence (a_0,b_0), (a_1,b_1), ..., (a_l,b_l) = (0,1) built from
/// the continued-fraction convergents of b_0/a_0, listed from (a_0,b_0) down.
///
/// Consecutive pairs form unimodular bases: the determinant
/// a_{j-1} b_j - b_{j-1} a_j is (-1)^(l-j), so it alternates and is +1 at
/// j = l. The b_j decrease strictly for j < l and b_0 >= 2 b_1.
struct EEASequence {
  std::vector<EEAPair> terms;  // terms[0] = (a0, b0), terms[l] = (0, 1)
  integer N = 0;               // a0 = N a1 + n a2, b0 = N b1 + n b2 (l >= 2 only)
  integer n = 0;

  std::size_t length() const { return terms.size() - 1; }
  integer a0() const { return terms.front().a; }
  integer b0() const { return terms.front().b; }
  const EEAPair& operator[](std::size_t j) const { return terms.at(j); }

  /// a_{j-1} b_j - b_{j-1} a_j for 1 <= j <= l.
  integer determinant(std::size_t j) const {
    if (j < 1 || j > length()) throw std::out_of_range("determinant index out of range");
    const auto& prev = terms[j - 1];
    const auto& cur = terms[j];
    return checked_sub(checked_mul(prev.a, cur.b), checked_mul(prev.b, cur.a));
  }
};

/// Coefficients (N, n) of `target` in the basis {u, v}; throws unless both
/// are positive integers.
inline std::pair<integer, integer> coordinates_in_basis(const EEAPair& target, const EEAPair& u,
                                                        const EEAPair& v) {
  const integer det = checked_sub(checked_mul(u.a, v.b), checked_mul(u.b, v.a));
  if (det != 1 && det != -1) throw std::logic_error("basis is not unimodular");
  const integer big = checked_sub(checked_mul(target.a, v.b), checked_mul(target.b, v.a)) * det;
  const integer small = checked_sub(checked_mul(u.a, target.b), checked_mul(u.b, target.a)) * det;
  if (big < 1 || small < 1) throw std::logic_error("target lies outside the cone of the basis");
  return {big, small};
}

namespace detail {

inline void validate_eea(const EEASequence& s) {
  const std::size_t l = s.length();
  auto fail = [](const std::string& why) { throw std::logic_error("EEA sequence invariant violated: " + why); };
  if (l < 1) fail("empty sequence");
  if (s.terms[l] != EEAPair{0, 1}) fail("last pair is not (0,1)");
  for (std::size_t j = 1; j <= l; ++j) {
    const auto& t = s.terms[j];
    if (t.a < 0 || t.b < 1) fail("negative entry");
    const integer det = s.determinant(j);
    if (det != 1 && det != -1) fail("determinant is not a unit");
    if (j >= 2 && det != -s.determinant(j - 1)) fail("determinants do not alternate");
    if (j < l && t.b >= s.terms[j - 1].b) fail("b_j does not decrease");
    if (j == l && t.b > s.terms[j - 1].b) fail("b_l exceeds b_{l-1}");
  }
  if (s.determinant(l) != 1) fail("final determinant is not +1");
  const bool degenerate = s.a0() == 1 && s.b0() == 1;
  if (!degenerate && s.b0() < 2 * s.terms[1].b) fail("b0/b1 < 2");
  if (l >= 2) {
    const auto& t1 = s.terms[1];
    const auto& t2 = s.terms[2];
    if (s.N < 1 || s.n < 1) fail("(N, n) not positive");
    if (s.N * t1.a + s.n * t2.a != s.a0() || s.N * t1.b + s.n * t2.b != s.b0()) fail("(N, n) does not reconstruct (a0, b0)");
  }
}

}  // namespace detail

/// Builds and validates the EEA sequence of a coprime pair with 1 <= a0 <= b0.
inline EEASequence eea_sequence(integer a0, integer b0) {
  if (a0 < 1 || b0 < 1) throw std::invalid_argument("EEA sequence needs positive inputs");
  if (a0 > b0) throw std::invalid_argument("EEA sequence needs a0 <= b0");
  if (a0 > kCoordinateBound || b0 > kCoordinateBound) throw std::invalid_argument("EEA input out of supported range");
  if (std::gcd(a0, b0) != 1) throw std::invalid_argument("EEA sequence needs coprime inputs");

  // Partial quotients of b0 / a0. Euclid's last quotient is >= 2 except for
  // b0/a0 = 1, which is what makes b0 >= 2 b1.
  std::vector<integer> quotients;
  for (integer num = b0, den = a0; den != 0;) {
    quotients.push_back(num / den);
    const integer rem = num % den;
    num = den;
    den = rem;
  }

  // Convergents h_i / k_i of b0/a0, starting from h_{-1}/k_{-1} = 1/0.
  std::vector<EEAPair> convergents{{0, 1}};
  integer h_prev = 1, k_prev = 0, h = quotients[0], k = 1;
  convergents.push_back({k, h});
  for (std::size_t i = 1; i < quotients.size(); ++i) {
    const integer h_next = checked_add(checked_mul(quotients[i], h), h_prev);
    const integer k_next = checked_add(checked_mul(quotients[i], k), k_prev);
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    convergents.push_back({k, h});
  }

  EEASequence seq;
  seq.terms.assign(convergents.rbegin(), convergents.rend());
  if (seq.length() >= 2) {
    const auto [N, n] = coordinates_in_basis(seq.terms[0], seq.terms[1], seq.terms[2]);
    seq.N = N;
    seq.n = n;
  }
  detail::validate_eea(seq);
  return seq;
}

/// The label (-1)^(l-1-j) attached to (a_j, b_j); defined for 0 <= j <= l-1.
inline int sign_of(const EEASequence& seq, std::size_t j) {
  const std::size_t l = seq.length();
  if (j + 1 > l) throw std::out_of_range("sign index out of range");
  return ((l - 1 - j) % 2 == 0) ? 1 : -1;
}

struct NnDecomposition {
  integer N = 0;
  integer n = 0;

  friend bool operator==(const NnDecomposition&, const NnDecomposition&) = default;
};

inline NnDecomposition decompose_Nn(const EEASequence& seq) {
  if (seq.length() < 2) throw std::invalid_argument("EEA sequence too short for an (N, n) decomposition");
  const auto [N, n] = coordinates_in_basis(seq.terms[0], seq.terms[1], seq.terms[2]);
  return {N, n};
}

}  // namespace newtonjump
