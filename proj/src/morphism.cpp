#include "netop/morphism.hpp"

#include <stdexcept>

namespace netop {

ModelMorphism::ModelMorphism(std::shared_ptr<const Model> source,
                             std::shared_ptr<const Model> target,
                             std::function<Net(const Net&)> component, std::string id)
    : source_(std::move(source)),
      target_(std::move(target)),
      component_(std::move(component)),
      id_(std::move(id)) {}

ModelMorphism ModelMorphism::identity(std::shared_ptr<const Model> m) {
  auto id = "id:" + m->id();
  return ModelMorphism(m, m, [](const Net& g) { return g; }, std::move(id));
}

Net ModelMorphism::apply(const Net& g) const {
  if (g.model().id() != source_->id())
    throw std::invalid_argument("morphism " + id_ + ": element of model " + g.model().id() +
                                " is not in source model " + source_->id());
  Net out = component_(g);
  if (out.model().id() != target_->id() || out.n() != g.n())
    throw std::logic_error("morphism " + id_ + ": component left the target model");
  return out;
}

ModelMorphism compose(const ModelMorphism& g, const ModelMorphism& f) {
  if (f.target()->id() != g.source()->id())
    throw std::invalid_argument("morphism composition: target/source mismatch");
  return ModelMorphism(f.source(), g.target(),
                       [g, f](const Net& x) { return g.apply(f.apply(x)); },
                       g.id() + "." + f.id());
}

ModelMorphism gamma_hom(const MonoidHom& f) {
  auto source = gamma_model(f.source());
  auto target = gamma_model(f.target());
  const auto tgt_monoid = target->label_monoid();
  const MonElem tgt_unit = tgt_monoid->unit();
  auto component = [f, target, tgt_unit](const Net& g) {
    std::map<Edge, MonElem> mapped;
    for (const auto& [e, v] : g.model().edge_labels(g)) {
      MonElem w = f.apply(v);
      if (w != tgt_unit) mapped.emplace(e, std::move(w));
    }
    return target->from_edge_labels(g.n(), mapped);
  };
  return ModelMorphism(std::move(source), target, std::move(component), "gamma:" + f.id());
}

}  // namespace netop
