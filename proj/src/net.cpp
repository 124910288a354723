#include "netop/net.hpp"

#include <stdexcept>

namespace netop {

Net::Net(std::shared_ptr<const Model> model, int n, Payload payload)
    : model_(std::move(model)), n_(n), payload_(std::move(payload)) {
  if (!model_) throw std::invalid_argument("network without a model handle");
  if (n_ < 0) throw std::invalid_argument("negative arity");
}

const std::set<Edge>& Net::edges() const {
  if (auto* p = std::get_if<std::set<Edge>>(&payload_)) return *p;
  throw std::logic_error("network of model " + model_->id() + " has no edge-set payload");
}

const std::map<Edge, MonElem>& Net::labels() const {
  if (auto* p = std::get_if<std::map<Edge, MonElem>>(&payload_)) return *p;
  throw std::logic_error("network of model " + model_->id() + " has no labelling payload");
}

const std::set<std::vector<int>>& Net::hyperedges() const {
  if (auto* p = std::get_if<std::set<std::vector<int>>>(&payload_)) return *p;
  throw std::logic_error("network of model " + model_->id() + " has no hyperedge payload");
}

const std::vector<std::vector<int>>& Net::blocks() const {
  if (auto* p = std::get_if<std::vector<std::vector<int>>>(&payload_)) return *p;
  throw std::logic_error("network of model " + model_->id() + " has no partition payload");
}

const NetPair& Net::pair() const {
  if (auto* p = std::get_if<std::shared_ptr<const NetPair>>(&payload_)) return **p;
  throw std::logic_error("network of model " + model_->id() + " has no pair payload");
}

bool operator==(const Net& a, const Net& b) {
  if (a.model().id() != b.model().id() || a.n() != b.n()) return false;
  if (a.payload().index() != b.payload().index()) return false;
  if (auto* p = std::get_if<std::shared_ptr<const NetPair>>(&a.payload())) {
    const auto& q = std::get<std::shared_ptr<const NetPair>>(b.payload());
    return (*p)->left == q->left && (*p)->right == q->right;
  }
  return a.payload() == b.payload();
}

void Model::check_element(const Net& g) const {
  if (g.model().id() != id())
    throw std::invalid_argument("network of model " + g.model().id() +
                                " passed to model " + id());
}

Net Model::overlay(const Net& g, const Net& h) const {
  check_element(g);
  check_element(h);
  if (g.n() != h.n())
    throw std::invalid_argument("overlay: arity mismatch (" + std::to_string(g.n()) + " vs " +
                                std::to_string(h.n()) + ")");
  return overlay_impl(g, h);
}

Net Model::act(const Permutation& sigma, const Net& g) const {
  check_element(g);
  if (sigma.degree() != g.n())
    throw std::invalid_argument("act: permutation degree " + std::to_string(sigma.degree()) +
                                " does not match arity " + std::to_string(g.n()));
  return act_impl(sigma, g);
}

Net Model::djunion(const Net& g, const Net& h) const {
  check_element(g);
  check_element(h);
  return djunion_impl(g, h);
}

std::map<Edge, MonElem> Model::edge_labels(const Net&) const {
  throw std::logic_error("model " + id() + " is not edge-valued");
}

Net Model::from_edge_labels(int, const std::map<Edge, MonElem>&) const {
  throw std::logic_error("model " + id() + " is not edge-valued");
}

std::vector<Edge> Model::edge_domain(int) const {
  throw std::logic_error("model " + id() + " is not edge-valued");
}

std::string net_to_string(const Net& g) { return g.model().to_json(g).dump(); }

}  // namespace netop
