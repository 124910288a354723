// The network operad of a model: typed operations (sigma, g), closed-form
// composition, identities, the right symmetric-group action, and the operad
// morphisms induced by model morphisms. One-colored and colored flavors.

#ifndef NETOP_OPERAD_HPP
#define NETOP_OPERAD_HPP

#include <memory>
#include <string>
#include <vector>

#include "netop/colored.hpp"
#include "netop/models.hpp"
#include "netop/morphism.hpp"
#include "netop/net.hpp"
#include "netop/perm.hpp"

namespace netop {

struct Profile {
  std::vector<int> inputs;
  int output = 0;

  friend bool operator==(const Profile&, const Profile&) = default;
};

std::string to_string(const Profile& p);

// An operation of the network operad: a pair (sigma, g) in S_n x F(n) at
// profile (n_1,...,n_k; n). Exists only when the inputs sum to the output.
class Op {
 public:
  // Throws: empty homset when sum(inputs) != output; degree/arity mismatches.
  Op(std::shared_ptr<const Model> model, Profile profile, Permutation perm, Net net);

  const std::shared_ptr<const Model>& model_ptr() const { return model_; }
  const Model& model() const { return *model_; }
  const Profile& profile() const { return profile_; }
  const Permutation& perm() const { return perm_; }
  const Net& net() const { return net_; }

 private:
  std::shared_ptr<const Model> model_;
  Profile profile_;
  Permutation perm_;
  Net net_;
};

bool operator==(const Op& a, const Op& b);
inline bool operator!=(const Op& a, const Op& b) { return !(a == b); }

// (1, e_n) at profile (n; n).
Op identity_op(const std::shared_ptr<const Model>& model, int n);

// (sigma, g) o ((tau_1, h_1), ..., (tau_k, h_k))
//   = (sigma (tau_1 + ... + tau_k), g u sigma(h_1 ++ ... ++ h_k)).
// Throws, naming the slot, if gs[i] does not produce f's i-th input.
Op compose(const Op& f, const std::vector<Op>& gs);

// Reorders the input profile by tau and precomposes the permutation with the
// block permutation induced by tau over the original input sizes; the network
// is untouched.
Op right_action(const Op& f, const Permutation& tau);

// (sigma, g) |-> (sigma, phi(g)) with the same profile.
Op morphism_apply(const ModelMorphism& phi, const Op& f);

nlohmann::json op_to_json(const Op& f);
Op op_from_json(const nlohmann::json& j);

// Colored flavor: profiles of color words, colored permutations.

struct ColoredProfile {
  std::vector<ColorWord> inputs;
  ColorWord output;

  friend bool operator==(const ColoredProfile&, const ColoredProfile&) = default;
};

class ColoredOp {
 public:
  // The colored permutation must run from the concatenated input word to the
  // output word; its validity is the color-compatibility check.
  ColoredOp(std::shared_ptr<const ColoredModel> model, ColoredProfile profile,
            ColoredPermutation perm, CNet net);

  const std::shared_ptr<const ColoredModel>& model_ptr() const { return model_; }
  const ColoredProfile& profile() const { return profile_; }
  const ColoredPermutation& perm() const { return perm_; }
  const CNet& net() const { return net_; }

 private:
  std::shared_ptr<const ColoredModel> model_;
  ColoredProfile profile_;
  ColoredPermutation perm_;
  CNet net_;
};

bool operator==(const ColoredOp& a, const ColoredOp& b);

ColoredOp colored_identity_op(const std::shared_ptr<const ColoredModel>& model,
                              const ColorWord& w);
ColoredOp colored_compose(const ColoredOp& f, const std::vector<ColoredOp>& gs);
ColoredOp colored_right_action(const ColoredOp& f, const Permutation& tau);

}  // namespace netop

#endif
