// The s-expression term language for assembling networks:
//   term   := netlit | "(" "compose" opspec term+ ")"
//   opspec := "(" "op" "(" nat+ "->" nat ")" perm netlit ")"
//   perm   := "id" | "(" "perm" nat+ ")"
//   netlit := "(" "net" model nat "{" [edge ("," edge)*] "}" ")"
//   edge   := nat "-" nat [":" nat]
// plus evaluation of terms in a configured algebra.

#ifndef NETOP_TERM_HPP
#define NETOP_TERM_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "netop/algebra.hpp"
#include "netop/operad.hpp"

namespace netop {

struct SrcPos {
  int line = 1;
  int col = 1;
};

// Raised for syntax errors (with position) and type errors (with term path).
class TermError : public std::runtime_error {
 public:
  TermError(const std::string& message, SrcPos pos)
      : std::runtime_error(message + " at line " + std::to_string(pos.line) + ", column " +
                           std::to_string(pos.col)) {}
  explicit TermError(const std::string& message) : std::runtime_error(message) {}
};

struct Term {
  SrcPos pos;
  std::optional<Net> literal;  // leaf
  std::optional<Op> op;        // interior node
  std::vector<Term> children;

  bool is_leaf() const { return literal.has_value(); }
  int output_arity() const { return is_leaf() ? literal->n() : op->profile().output; }
  const Model& model() const { return is_leaf() ? literal->model() : op->model(); }
};

// Parse and typecheck. Child counts, arities, and model agreement are
// verified; violations name the term path (1-based child indices).
Term parse_term(const std::string& text);

// Canonical text form; parse_term(print_term(t)) reproduces t.
std::string print_term(const Term& t);

struct EvalConfig {
  enum class Algebra { canonical, attributes, range, two_range };

  Algebra algebra = Algebra::canonical;
  Rat range_limit = Rat(1);
  Rat range_l1 = Rat(2), range_l2 = Rat(1);
  // One attribute vector per leaf literal, in left-to-right order.
  std::vector<std::vector<Attr>> leaf_attrs;
};

using EvalResult = std::variant<Net, AttributedNet>;

// Bottom-up evaluation through the configured algebra's action.
EvalResult eval_term(const Term& t, const EvalConfig& cfg);

// Canonical JSON text (sorted keys and arrays), byte-stable across runs.
std::string serialize_result(const EvalResult& r);

}  // namespace netop

#endif
