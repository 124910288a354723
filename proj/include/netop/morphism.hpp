// Morphisms of network models: per-arity maps commuting with overlay, the
// symmetric-group actions, and disjoint union. Gamma turns monoid
// homomorphisms into such morphisms by relabelling every edge.

#ifndef NETOP_MORPHISM_HPP
#define NETOP_MORPHISM_HPP

#include <functional>
#include <memory>
#include <string>

#include "netop/models.hpp"
#include "netop/net.hpp"

namespace netop {

class ModelMorphism {
 public:
  ModelMorphism(std::shared_ptr<const Model> source, std::shared_ptr<const Model> target,
                std::function<Net(const Net&)> component, std::string id);

  static ModelMorphism identity(std::shared_ptr<const Model> m);

  const std::string& id() const { return id_; }
  const std::shared_ptr<const Model>& source() const { return source_; }
  const std::shared_ptr<const Model>& target() const { return target_; }

  // phi_n at the element's arity. Throws if g is not a source element.
  Net apply(const Net& g) const;

 private:
  std::shared_ptr<const Model> source_, target_;
  std::function<Net(const Net&)> component_;
  std::string id_;
};

// g after f.
ModelMorphism compose(const ModelMorphism& g, const ModelMorphism& f);

// Gamma on homomorphisms: applies f to each edge label. For cutoff_1 this is
// the support map mgplus -> sg.
ModelMorphism gamma_hom(const MonoidHom& f);

}  // namespace netop

#endif
