#pragma once

#include <cctype>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "newtonjump/diagram.hpp"

namespace newtonjump {

/// Syntax or semantic error in a diagram spec. `position` is a byte offset
/// into the input; `term_index` is set for errors raised by a specific term.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos, std::optional<std::size_t> term = std::nullopt)
      : std::invalid_argument(what), position(pos), term_index(term) {}

  std::size_t position;
  std::optional<std::size_t> term_index;
};

namespace detail {

//   SPEC  := VERTS | TERMS
//   VERTS := POINT+
//   TERMS := ["-"] TERM ("+" TERM)* "@" POINT
//   TERM  := [INT "*"] "tr(" INT "," INT ")"
//   POINT := "(" INT "," INT ")"
class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  Diagram parse() {
    skip_space();
    if (at_end()) fail("empty diagram spec");
    return peek() == '(' ? parse_vertices() : parse_terms();
  }

 private:
  Diagram parse_vertices() {
    std::vector<LatticePoint> points;
    while (!at_end()) {
      points.push_back(parse_point());
      skip_space();
    }
    try {
      return diagram_from_vertices(points);
    } catch (const DiagramError& e) {
      throw ParseError(e.what(), 0);
    }
  }

  Diagram parse_terms() {
    bool reversed = false;
    if (peek() == '-') {
      reversed = true;
      ++pos_;
    }
    std::vector<SegmentTerm> terms;
    std::vector<std::size_t> starts;
    for (;;) {
      skip_space();
      starts.push_back(pos_);
      terms.push_back(parse_term(terms.size()));
      skip_space();
      if (at_end()) fail("expected '+' or '@'");
      if (peek() == '+') {
        ++pos_;
        continue;
      }
      expect('@');
      break;
    }
    skip_space();
    const LatticePoint anchor = parse_point();
    skip_space();
    if (!at_end()) fail("unexpected trailing input");
    try {
      return diagram_from_terms(anchor, reversed, terms);
    } catch (const DiagramError& e) {
      const std::size_t where = e.term_index ? starts[*e.term_index] : 0;
      std::string msg = e.what();
      if (e.term_index) msg += " (term " + std::to_string(*e.term_index + 1) + ")";
      throw ParseError(msg, where, e.term_index);
    }
  }

  SegmentTerm parse_term(std::size_t index) {
    const std::size_t start = pos_;
    integer mult = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mult = parse_int();
      skip_space();
      expect('*');
      skip_space();
    }
    expect_word("tr");
    skip_space();
    expect('(');
    skip_space();
    const integer dx = parse_int();
    skip_space();
    expect(',');
    skip_space();
    const integer dy = parse_int();
    skip_space();
    expect(')');
    try {
      return SegmentTerm(mult, dx, dy);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(e.what()) + " (term " + std::to_string(index + 1) + ")", start, index);
    }
  }

  LatticePoint parse_point() {
    expect('(');
    skip_space();
    const integer x = parse_int();
    skip_space();
    expect(',');
    skip_space();
    const integer y = parse_int();
    skip_space();
    expect(')');
    return {x, y};
  }

  integer parse_int() {
    const std::size_t start = pos_;
    integer v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > kCoordinateBound) throw ParseError("integer out of supported range", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected a non-negative integer");
    return v;
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_), pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses "(x1,y1) (x2,y2) ..." or "[-] [n*]tr(p,q) + ... @ (x,y)".
inline Diagram parse_diagram(std::string_view spec) { return detail::SpecParser(spec).parse(); }

/// "(0,8) (1,5) (4,0)"
inline std::string render_vertices(const Diagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : d.vertices()) {
    if (!first) os << ' ';
    os << v;
    first = false;
  }
  return os.str();
}

/// "tr(1,3) + 2*tr(1,1) @ (0,8)", one primitive term per edge with its
/// lattice length as multiplicity. A single vertex renders in vertex form.
inline std::string render_terms(const Diagram& d) {
  const auto v = d.vertices();
  if (v.size() < 2) return render_vertices(d);
  std::ostringstream os;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const integer dx = v[i + 1].x - v[i].x;
    const integer dy = v[i].y - v[i + 1].y;
    const integer g = std::gcd(dx, dy);
    if (i > 0) os << " + ";
    if (g > 1) os << g << '*';
    os << "tr(" << dx / g << ',' << dy / g << ')';
  }
  os << " @ " << v.front();
  return os.str();
}

}  // namespace newtonjump
