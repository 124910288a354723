// Algebras of network operads: the canonical action, vertex attributes,
// predicate- and bound-constrained actions, and degree-limited attempt
// processing with its graphic (aba = ab) behavior.

#ifndef NETOP_ALGEBRA_HPP
#define NETOP_ALGEBRA_HPP

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "netop/operad.hpp"
#include "netop/rat.hpp"

namespace netop {

// g u sigma(h_1 ++ ... ++ h_k): the canonical algebra, where operations act
// on networks of the model itself.
Net act_canonical(const Op& f, const std::vector<Net>& hs);

using Attr = std::variant<std::string, Point>;

std::string attr_to_string(const Attr& a);
nlohmann::json attrs_to_json(const std::vector<Attr>& attrs);
std::vector<Attr> attrs_from_json(const nlohmann::json& j);

// A network whose vertices carry attributes from a set X.
struct AttributedNet {
  Net net;
  std::vector<Attr> attrs;

  AttributedNet(Net net, std::vector<Attr> attrs);
};

bool operator==(const AttributedNet& a, const AttributedNet& b);
inline bool operator!=(const AttributedNet& a, const AttributedNet& b) { return !(a == b); }
nlohmann::json attributed_to_json(const AttributedNet& a);

// Networks via the canonical action; attributes concatenate in block order
// and then follow the vertices: result attribute at sigma(i) is the
// concatenated attribute at i.
AttributedNet act_attributes(const Op& f, const std::vector<AttributedNet>& items);

// Forgets the vertex attributes; a homomorphism onto the canonical algebra.
Net hom_forget(const AttributedNet& a);

// A symmetric admissibility rule on attribute pairs.
class EdgePredicate {
 public:
  EdgePredicate(std::string id, std::function<bool(const Attr&, const Attr&)> fn);

  static EdgePredicate always_true();
  // Points within Euclidean distance L (decided exactly on squares).
  static EdgePredicate within_range(const Rat& limit);

  const std::string& id() const { return id_; }
  bool operator()(const Attr& a, const Attr& b) const { return fn_(a, b); }

 private:
  std::string id_;
  std::function<bool(const Attr&, const Attr&)> fn_;
};

bool satisfies(const EdgePredicate& p, const AttributedNet& a);
// Removes precisely the offending edges; attributes unchanged; idempotent.
AttributedNet enforce_predicate(const EdgePredicate& p, const AttributedNet& a);
// Inputs must already satisfy p; the result does too.
AttributedNet act_predicate(const EdgePredicate& p, const Op& f,
                            const std::vector<AttributedNet>& items);

// A symmetric multiplicity cap on attribute pairs (for mgplus networks).
class EdgeBound {
 public:
  EdgeBound(std::string id, std::function<std::uint64_t(const Attr&, const Attr&)> fn);

  static EdgeBound constant(std::uint64_t c);
  // 0 beyond L1, 1 within (L2, L1], 2 within L2.
  static EdgeBound two_range(const Rat& l1, const Rat& l2);

  const std::string& id() const { return id_; }
  std::uint64_t operator()(const Attr& a, const Attr& b) const { return fn_(a, b); }

 private:
  std::string id_;
  std::function<std::uint64_t(const Attr&, const Attr&)> fn_;
};

bool satisfies(const EdgeBound& b, const AttributedNet& a);
AttributedNet enforce_bound(const EdgeBound& b, const AttributedNet& a);
AttributedNet act_bounded(const EdgeBound& b, const Op& f,
                          const std::vector<AttributedNet>& items);

// A simple graph with per-vertex port capacities; deg(i) <= ports[i] always.
struct PortedNet {
  Net graph;
  std::vector<std::uint64_t> ports;

  PortedNet(Net graph, std::vector<std::uint64_t> ports);
};

bool operator==(const PortedNet& a, const PortedNet& b);
std::vector<std::uint64_t> degrees(const Net& sg);

// A sequence of edge-connection attempts on n vertices.
struct AttemptWord {
  int n = 0;
  std::vector<Edge> attempts;

  AttemptWord(int n, std::vector<Edge> attempts);
};

// Simple-graph JSON plus "ports"; attempt words add "attempts".
nlohmann::json ported_to_json(const PortedNet& p);
PortedNet ported_from_json(const nlohmann::json& j);
nlohmann::json attempts_to_json(const AttemptWord& w);
AttemptWord attempts_from_json(int n, const nlohmann::json& j);

// Sequential semantics: an attempt {i,j} adds the edge iff it is absent and
// both endpoints have spare capacity; otherwise it is skipped.
PortedNet process_attempts(PortedNet state, const std::vector<Edge>& attempts);

// sigma-permuted disjoint union of the inputs, then process the word.
PortedNet act_degree_limited(const Permutation& sigma, const AttemptWord& w,
                             const std::vector<PortedNet>& items);

}  // namespace netop

#endif
