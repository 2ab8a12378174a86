#pragma once

// Text form of algebra elements: terms joined by " + " or " - ", each term an
// optional rational coefficient followed by space-separated letters.
// Letters are vertex names, edge ids, or ghost edges written "e*".
//   "e* e"        "2 v - 3/2 e f*"        "0"

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "quiver/error.hpp"

namespace quiver {

struct ExprTerm {
  std::string coeff = "1";  // decimal or p/q, sign folded in
  std::vector<std::string> letters;
};

inline bool looks_numeric(const std::string& tok) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  bool digit = false, slash = false;
  for (; i < tok.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(tok[i]))) {
      digit = true;
    } else if (tok[i] == '/' && !slash && digit) {
      slash = true;
      digit = false;
    } else {
      return false;
    }
  }
  return digit;
}

//! An empty list means the zero element.
inline std::vector<ExprTerm> parse_expression(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);
  if (toks.empty()) fail(ErrorCode::ParseError, "empty expression");
  if (toks.size() == 1 && toks[0] == "0") return {};

  std::vector<ExprTerm> terms;
  bool negative = false;
  std::size_t i = 0;
  if (toks[0] == "-" || toks[0] == "+") {
    negative = toks[0] == "-";
    ++i;
  }
  while (true) {
    if (i >= toks.size()) fail(ErrorCode::ParseError, "expression ends with an operator");
    ExprTerm term;
    if (looks_numeric(toks[i])) {
      term.coeff = toks[i];
      if (term.coeff[0] == '+') term.coeff.erase(0, 1);
      ++i;
    }
    while (i < toks.size() && toks[i] != "+" && toks[i] != "-") term.letters.push_back(toks[i++]);
    if (negative) term.coeff = term.coeff[0] == '-' ? term.coeff.substr(1) : "-" + term.coeff;
    if (term.letters.empty()) {
      if (term.coeff == "0" || term.coeff == "-0") {
        // explicit zero term
      } else {
        fail(ErrorCode::ParseError, "term without letters in '" + text + "'");
      }
    } else {
      terms.push_back(std::move(term));
    }
    if (i >= toks.size()) break;
    negative = toks[i] == "-";
    ++i;
  }
  return terms;
}

}  // namespace quiver
