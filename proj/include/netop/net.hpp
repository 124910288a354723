// Network values and the five-part model interface: per-arity carriers with
// unit, overlay, a symmetric-group action, and disjoint union.

#ifndef NETOP_NET_HPP
#define NETOP_NET_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "netop/monoid.hpp"
#include "netop/perm.hpp"
#include "netop/rng.hpp"

namespace netop {

// Vertex pair; canonical i < j for undirected models, ordered for directed.
using Edge = std::pair<int, int>;

class Model;
struct NetPair;

using Payload = std::variant<std::set<Edge>,                    // edge sets
                             std::map<Edge, MonElem>,           // edge labellings
                             std::set<std::vector<int>>,        // hyperedge sets
                             std::vector<std::vector<int>>,     // partition blocks
                             std::shared_ptr<const NetPair>>;   // tensor pairs

// One network: an element of F(n) for a concrete model. Immutable value;
// the model handle decides which overlay/action/disjoint-union apply.
class Net {
 public:
  Net(std::shared_ptr<const Model> model, int n, Payload payload);

  const Model& model() const { return *model_; }
  const std::shared_ptr<const Model>& model_ptr() const { return model_; }
  int n() const { return n_; }
  const Payload& payload() const { return payload_; }

  const std::set<Edge>& edges() const;
  const std::map<Edge, MonElem>& labels() const;
  const std::set<std::vector<int>>& hyperedges() const;
  const std::vector<std::vector<int>>& blocks() const;
  const NetPair& pair() const;

 private:
  std::shared_ptr<const Model> model_;
  int n_;
  Payload payload_;
};

struct NetPair {
  Net left;
  Net right;
};

bool operator==(const Net& a, const Net& b);
inline bool operator!=(const Net& a, const Net& b) { return !(a == b); }

// A one-colored network model. Stateless; instances are shared via the
// registry in models.hpp so equal ids mean the same object.
class Model : public std::enable_shared_from_this<Model> {
 public:
  virtual ~Model() = default;

  const std::string& id() const { return id_; }

  // The edgeless/empty network of arity n.
  virtual Net unit(int n) const = 0;

  // Monoid product on F(n). Throws on model or arity mismatch.
  Net overlay(const Net& g, const Net& h) const;

  // Relabel vertices along sigma. Throws on degree mismatch.
  Net act(const Permutation& sigma, const Net& g) const;

  // Place h after g on the concatenated vertex set.
  Net djunion(const Net& g, const Net& h) const;

  // Random element for the law suites; label values bounded by cap.
  virtual Net sample(int n, Rng& rng, std::uint64_t cap) const = 0;

  virtual nlohmann::json to_json(const Net& g) const = 0;
  virtual Net from_json(const nlohmann::json& j) const = 0;

  // Edge-valued capability: models whose elements are sparse maps from edges
  // to a label monoid (simple graphs, multigraphs, all gamma models).
  virtual std::shared_ptr<const Monoid> label_monoid() const { return nullptr; }
  virtual std::map<Edge, MonElem> edge_labels(const Net& g) const;
  virtual Net from_edge_labels(int n, const std::map<Edge, MonElem>& labels) const;
  // All edges an arity-n element may label (unordered i<j, or ordered pairs).
  virtual std::vector<Edge> edge_domain(int n) const;

 protected:
  explicit Model(std::string id) : id_(std::move(id)) {}

  virtual Net overlay_impl(const Net& g, const Net& h) const = 0;
  virtual Net act_impl(const Permutation& sigma, const Net& g) const = 0;
  virtual Net djunion_impl(const Net& g, const Net& h) const = 0;

  void check_element(const Net& g) const;

 private:
  std::string id_;
};

std::string net_to_string(const Net& g);

}  // namespace netop

#endif
