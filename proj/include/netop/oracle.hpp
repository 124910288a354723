// Law checking: a second composition path through the category-of-elements
// formulas, exhaustive enumerators, and drivers for the model, operad,
// algebra, morphism, and graphic-action law suites.

#ifndef NETOP_ORACLE_HPP
#define NETOP_ORACLE_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "netop/algebra.hpp"
#include "netop/operad.hpp"

namespace netop {
namespace oracle {

struct LawReport {
  std::string law;
  long long cases = 0;
  bool passed = true;
  std::string counterexample;  // nonempty iff failed: inputs plus both sides
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;  // informational; omitted from serialized reports
};

// Canonical JSON line; excludes timing so reruns with one seed are
// byte-identical.
nlohmann::json report_json(const LawReport& r);
bool all_passed(const std::vector<LawReport>& reports);

// The two-path oracle: computes f o (g_1 (x) ... (x) g_k) by folding pairwise
// tensors of category-of-elements morphisms and then performing one binary
// composition. Separate code from the closed form in compose().
Op compose_via_category(const Op& f, const std::vector<Op>& gs);

// Exhaustive, duplicate-free, deterministic enumeration of F(n). Throws
// std::length_error when the count would exceed the budget.
std::vector<Net> enumerate_model(const std::shared_ptr<const Model>& model, int n,
                                 long long budget, std::uint64_t label_cap);
std::vector<Permutation> all_permutations(int n);

struct Thm3Options {
  int max_n = 3;
  bool exhaustive = true;
  long long samples = 1000;  // per equation, randomized mode
  std::uint64_t seed = 0;
  std::uint64_t cap = 3;  // label/multiplicity bound for sampled elements
};

// One report per equation, laws "thm3.eq1" ... "thm3.eq12".
std::vector<LawReport> check_thm3(const std::shared_ptr<const Model>& model,
                                  const Thm3Options& opt);

using ComposeFn = std::function<Op(const Op&, const std::vector<Op>&)>;

struct OperadOptions {
  int out_cap = 7;
  long long samples = 1000;
  std::uint64_t seed = 0;
  std::uint64_t cap = 3;
  ComposeFn compose_override;  // the composition under test; default compose()
};

// Laws: two_path, assoc, unit, right_action, equivariance.
std::vector<LawReport> check_operad(const std::shared_ptr<const Model>& model,
                                    const OperadOptions& opt);

enum class AlgebraKind { canonical, attributes, range_limited, two_range, degree_limited };

using BoundedActFn =
    std::function<AttributedNet(const EdgeBound&, const Op&, const std::vector<AttributedNet>&)>;

struct AlgebraOptions {
  AlgebraKind kind = AlgebraKind::canonical;
  std::shared_ptr<const Model> model;  // default: sg (mgplus for two_range)
  Rat range_limit = Rat(1);            // L for range_limited
  Rat range_l1 = Rat(2), range_l2 = Rat(1);
  long long samples = 500;
  std::uint64_t seed = 0;
  std::uint64_t cap = 3;
  BoundedActFn bounded_override;  // the bounded action under test
};

std::vector<LawReport> check_algebra(const AlgebraOptions& opt);

struct MorphismOptions {
  std::uint64_t k = 1;  // cutoff parameter
  long long samples = 500;
  std::uint64_t seed = 0;
  std::uint64_t cap = 3;
};

std::vector<LawReport> check_morphism(const MorphismOptions& opt);

struct GraphicOptions {
  int max_n = 4;
  int max_len = 4;  // per attempt word
  std::uint64_t max_port = 2;
};

// aba = ab and disjoint-attempt commutation, exhaustive.
std::vector<LawReport> check_graphic(const GraphicOptions& opt);

// Built-in law breakers. They exist so the suites can prove the checkers can
// fail; each is caught by its corresponding checker.
namespace mutations {

// Overlay becomes (g u h) u g: unit law survives, associativity does not.
std::shared_ptr<const Model> broken_overlay(const std::shared_ptr<const Model>& base);

// The closed form without the sigma action on the disjoint union.
Op compose_dropping_sigma(const Op& f, const std::vector<Op>& gs);

// The bounded action without the clamp.
AttributedNet act_bounded_unclamped(const EdgeBound& b, const Op& f,
                                    const std::vector<AttributedNet>& items);

}  // namespace mutations

}  // namespace oracle
}  // namespace netop

#endif
