#include "netop/operad.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace netop {

std::string to_string(const Profile& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.inputs.size(); ++i) {
    if (i) os << ',';
    os << p.inputs[i];
  }
  os << " -> " << p.output << ')';
  return os.str();
}

Op::Op(std::shared_ptr<const Model> model, Profile profile, Permutation perm, Net net)
    : model_(std::move(model)),
      profile_(std::move(profile)),
      perm_(std::move(perm)),
      net_(std::move(net)) {
  int sum = 0;
  for (int m : profile_.inputs) {
    if (m < 0) throw std::invalid_argument("negative input arity");
    sum += m;
  }
  if (sum != profile_.output)
    throw std::invalid_argument("empty homset: profile " + to_string(profile_) +
                                " has inputs summing to " + std::to_string(sum));
  if (perm_.degree() != profile_.output)
    throw std::invalid_argument("operation permutation degree " +
                                std::to_string(perm_.degree()) + " does not match output " +
                                std::to_string(profile_.output));
  if (net_.model().id() != model_->id())
    throw std::invalid_argument("operation network belongs to model " + net_.model().id() +
                                ", not " + model_->id());
  if (net_.n() != profile_.output)
    throw std::invalid_argument("operation network arity " + std::to_string(net_.n()) +
                                " does not match output " + std::to_string(profile_.output));
}

bool operator==(const Op& a, const Op& b) {
  return a.model().id() == b.model().id() && a.profile() == b.profile() &&
         a.perm() == b.perm() && a.net() == b.net();
}

Op identity_op(const std::shared_ptr<const Model>& model, int n) {
  return Op(model, Profile{{n}, n}, Permutation::identity(n), model->unit(n));
}

Op compose(const Op& f, const std::vector<Op>& gs) {
  const std::size_t k = f.profile().inputs.size();
  if (gs.size() != k)
    throw std::invalid_argument("compose: expected " + std::to_string(k) + " arguments, got " +
                                std::to_string(gs.size()));
  Profile out;
  Permutation tau_sum = Permutation::identity(0);
  Net h_sum = f.model().unit(0);
  for (std::size_t i = 0; i < k; ++i) {
    if (gs[i].model().id() != f.model().id())
      throw std::invalid_argument("compose: slot " + std::to_string(i + 1) +
                                  " is an operation of model " + gs[i].model().id() +
                                  ", expected " + f.model().id());
    if (gs[i].profile().output != f.profile().inputs[i])
      throw std::invalid_argument(
          "compose: slot " + std::to_string(i + 1) + " produces arity " +
          std::to_string(gs[i].profile().output) + ", expected " +
          std::to_string(f.profile().inputs[i]));
    out.inputs.insert(out.inputs.end(), gs[i].profile().inputs.begin(),
                      gs[i].profile().inputs.end());
    tau_sum = block_sum(tau_sum, gs[i].perm());
    h_sum = f.model().djunion(h_sum, gs[i].net());
  }
  out.output = f.profile().output;
  return Op(f.model_ptr(), std::move(out), compose(f.perm(), tau_sum),
            f.model().overlay(f.net(), f.model().act(f.perm(), h_sum)));
}

Op right_action(const Op& f, const Permutation& tau) {
  const auto& sizes = f.profile().inputs;
  if (tau.degree() != static_cast<int>(sizes.size()))
    throw std::invalid_argument("right_action: tau degree " + std::to_string(tau.degree()) +
                                " does not match input count " + std::to_string(sizes.size()));
  Profile reordered;
  reordered.output = f.profile().output;
  for (int j = 1; j <= tau.degree(); ++j)
    reordered.inputs.push_back(sizes[static_cast<std::size_t>(tau(j)) - 1]);
  return Op(f.model_ptr(), std::move(reordered), compose(f.perm(), block_induced(tau, sizes)),
            f.net());
}

Op morphism_apply(const ModelMorphism& phi, const Op& f) {
  if (f.model().id() != phi.source()->id())
    throw std::invalid_argument("operad morphism: operation of model " + f.model().id() +
                                " is not over source model " + phi.source()->id());
  return Op(phi.target(), f.profile(), f.perm(), phi.apply(f.net()));
}

nlohmann::json op_to_json(const Op& f) {
  return {{"profile", {{"in", f.profile().inputs}, {"out", f.profile().output}}},
          {"perm", f.perm().images()},
          {"net", f.model().to_json(f.net())}};
}

Op op_from_json(const nlohmann::json& j) {
  Profile profile;
  profile.inputs = j.at("profile").at("in").get<std::vector<int>>();
  profile.output = j.at("profile").at("out").get<int>();
  Permutation perm(j.at("perm").get<std::vector<int>>());
  Net net = net_from_json(j.at("net"));
  auto model = net.model_ptr();
  return Op(std::move(model), std::move(profile), std::move(perm), std::move(net));
}

ColoredOp::ColoredOp(std::shared_ptr<const ColoredModel> model, ColoredProfile profile,
                     ColoredPermutation perm, CNet net)
    : model_(std::move(model)),
      profile_(std::move(profile)),
      perm_(std::move(perm)),
      net_(std::move(net)) {
  ColorWord all;
  for (const auto& w : profile_.inputs) all = concat(all, w);
  if (!(perm_.source() == all))
    throw std::invalid_argument(
        "colored operation: permutation source is not the concatenated inputs");
  if (!(perm_.target() == profile_.output))
    throw std::invalid_argument("colored operation: permutation target is not the output word");
  if (net_.model->id() != model_->id())
    throw std::invalid_argument("colored operation: network of another model");
  if (!(net_.word == profile_.output))
    throw std::invalid_argument("colored operation: network word is not the output word");
}

bool operator==(const ColoredOp& a, const ColoredOp& b) {
  return a.model_ptr()->id() == b.model_ptr()->id() && a.profile() == b.profile() &&
         a.perm() == b.perm() && a.net() == b.net();
}

ColoredOp colored_identity_op(const std::shared_ptr<const ColoredModel>& model,
                              const ColorWord& w) {
  return ColoredOp(model, ColoredProfile{{w}, w}, ColoredPermutation::identity(w),
                   model->unit(w));
}

ColoredOp colored_compose(const ColoredOp& f, const std::vector<ColoredOp>& gs) {
  const std::size_t k = f.profile().inputs.size();
  if (gs.size() != k)
    throw std::invalid_argument("colored compose: expected " + std::to_string(k) +
                                " arguments, got " + std::to_string(gs.size()));
  ColoredProfile out;
  out.output = f.profile().output;
  ColoredPermutation tau_sum = ColoredPermutation::identity(ColorWord{});
  CNet h_sum = f.model_ptr()->unit(ColorWord{});
  for (std::size_t i = 0; i < k; ++i) {
    if (!(gs[i].profile().output == f.profile().inputs[i]))
      throw std::invalid_argument("colored compose: slot " + std::to_string(i + 1) +
                                  " output word mismatch");
    out.inputs.insert(out.inputs.end(), gs[i].profile().inputs.begin(),
                      gs[i].profile().inputs.end());
    tau_sum = block_sum(tau_sum, gs[i].perm());
    h_sum = f.model_ptr()->djunion(h_sum, gs[i].net());
  }
  return ColoredOp(f.model_ptr(), std::move(out), compose(f.perm(), tau_sum),
                   f.model_ptr()->overlay(f.net(), f.model_ptr()->act(f.perm(), h_sum)));
}

ColoredOp colored_right_action(const ColoredOp& f, const Permutation& tau) {
  const auto& inputs = f.profile().inputs;
  if (tau.degree() != static_cast<int>(inputs.size()))
    throw std::invalid_argument("colored right_action: tau degree mismatch");
  ColoredProfile reordered;
  reordered.output = f.profile().output;
  std::vector<int> sizes;
  ColorWord natural;
  for (const auto& w : inputs) {
    sizes.push_back(w.size());
    natural = concat(natural, w);
  }
  ColorWord grouped;
  for (int j = 1; j <= tau.degree(); ++j) {
    const auto& w = inputs[static_cast<std::size_t>(tau(j)) - 1];
    reordered.inputs.push_back(w);
    grouped = concat(grouped, w);
  }
  const ColoredPermutation block(grouped, natural, block_induced(tau, sizes));
  return ColoredOp(f.model_ptr(), std::move(reordered), compose(f.perm(), block), f.net());
}

}  // namespace netop
