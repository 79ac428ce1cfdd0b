#pragma once

#include <vector>

#include "newtonjump/eea.hpp"

namespace newtonjump::testing {

using Seq = std::vector<EEAPair>;

inline integer det(const EEAPair& u, const EEAPair& v) { return u.a * v.b - u.b * v.a; }

// Every sequence (a0,b0), (a1,b1), ..., (0,1) with 0 <= a_j <= a0,
// 1 <= b_j <= b0 that satisfies the stated constraints: unit determinants
// alternating in sign and ending at +1, b strictly decreasing before the
// terminal pair, b0 >= 2 b1, and a positive (N, n) reconstruction. With
// `strict_last` the terminal b must also drop strictly.
inline void search(const EEAPair& start, bool strict_last, Seq& cur, std::vector<Seq>& found) {
  const EEAPair last = cur.back();
  auto admissible = [&](const Seq& s) {
    const std::size_t l = s.size() - 1;
    for (std::size_t j = 1; j <= l; ++j) {
      const integer d = det(s[j - 1], s[j]);
      if (d != 1 && d != -1) return false;
      if (j >= 2 && d != -det(s[j - 2], s[j - 1])) return false;
    }
    if (det(s[l - 1], s[l]) != 1) return false;
    const bool degenerate = start.a == 1 && start.b == 1;
    if (!degenerate && start.b < 2 * s[1].b) return false;
    if (l >= 2) {
      bool ok = false;
      for (integer N = 1; N <= start.b && !ok; ++N)
        for (integer n = 1; n <= start.b && !ok; ++n)
          ok = N * s[1].a + n * s[2].a == start.a && N * s[1].b + n * s[2].b == start.b;
      if (!ok) return false;
    }
    return true;
  };

  if (last.a == 0 && last.b == 1 && cur.size() >= 2) {
    if (admissible(cur)) found.push_back(cur);
    return;
  }
  for (integer b = 1; b <= last.b; ++b) {
    for (integer a = 0; a <= start.a; ++a) {
      const EEAPair next{a, b};
      const bool terminal = a == 0 && b == 1;
      if ((!terminal || strict_last) && b >= last.b) continue;
      const integer d = det(last, next);
      if (d != 1 && d != -1) continue;
      if (cur.size() >= 2 && d != -det(cur[cur.size() - 2], last)) continue;
      cur.push_back(next);
      search(start, strict_last, cur, found);
      cur.pop_back();
    }
  }
}

// Strict decrease down to the terminal pair where possible; pairs such as
// (2,3) only admit b_l = b_{l-1} = 1.
inline std::vector<Seq> all_sequences(integer a0, integer b0) {
  for (bool strict : {true, false}) {
    std::vector<Seq> found;
    Seq cur{{a0, b0}};
    search({a0, b0}, strict, cur, found);
    if (!found.empty()) return found;
  }
  return {};
}

}  // namespace newtonjump::testing
