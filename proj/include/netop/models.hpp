// The model catalog: simple/directed graphs, multigraphs (max and sum
// overlays), hypergraphs, partition lattices, edge labellings over a monoid,
// and tensor products. Instances are shared through a registry keyed by id.

#ifndef NETOP_MODELS_HPP
#define NETOP_MODELS_HPP

#include <memory>
#include <string>

#include "netop/net.hpp"

namespace netop {

// Ids: "sg", "dg", "mg", "mgplus", "dmg", "dmgplus", "hg", "part-join",
// "part-meet", "gamma:<monoid-id>", "tensor(<id>,<id>)".
std::shared_ptr<const Model> model_by_id(const std::string& id);

// The edge-labelling model over M. Identifications: nat-plus gives mgplus,
// nat-max gives mg, bk:1 gives sg (B_1 is the Boolean monoid); bool stays a
// separate model so the labelling <-> edge-set bijection is non-trivial.
std::shared_ptr<const Model> gamma_model(const std::shared_ptr<const Monoid>& m);

// Pointwise product of two models; elements are pairs.
std::shared_ptr<const Model> tensor_models(const std::shared_ptr<const Model>& left,
                                           const std::shared_ptr<const Model>& right);

// Re-express an edge-valued network in another edge-valued model carrying the
// same labels (e.g. the Gamma_bool <-> sg bijection). Throws if a label falls
// outside the target's carrier.
Net convert_edge_valued(const Net& g, const std::shared_ptr<const Model>& target);

// Parse a network from its canonical JSON, resolving the model by id.
Net net_from_json(const nlohmann::json& j);
Net net_from_json_text(const std::string& text);

}  // namespace netop

#endif
