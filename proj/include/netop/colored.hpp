// Colored network models: color words, color-respecting permutations,
// recolorings of one-colored models, per-color products, color-changing
// morphisms, and the Petri net model over {p, t}.

#ifndef NETOP_COLORED_HPP
#define NETOP_COLORED_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "netop/net.hpp"

namespace netop {

using Color = std::string;

struct ColorWord {
  std::vector<Color> letters;

  int size() const { return static_cast<int>(letters.size()); }
  friend bool operator==(const ColorWord&, const ColorWord&) = default;
};

ColorWord concat(const ColorWord& a, const ColorWord& b);
std::map<Color, int> color_counts(const ColorWord& w);
// Comma list, e.g. "r,b,r"; empty string is the unit word.
ColorWord parse_word(const std::string& text);
std::string to_string(const ColorWord& w);

// A morphism w -> w' of color words: a permutation with w'[sigma(i)] = w[i].
class ColoredPermutation {
 public:
  ColoredPermutation(ColorWord source, ColorWord target, Permutation perm);

  static ColoredPermutation identity(const ColorWord& w);

  const ColorWord& source() const { return source_; }
  const ColorWord& target() const { return target_; }
  const Permutation& perm() const { return perm_; }

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;

 private:
  ColorWord source_, target_;
  Permutation perm_;
};

ColoredPermutation compose(const ColoredPermutation& a, const ColoredPermutation& b);
ColoredPermutation block_sum(const ColoredPermutation& a, const ColoredPermutation& b);
// The braiding w1 (x) w2 -> w2 (x) w1.
ColoredPermutation word_block_swap(const ColorWord& w1, const ColorWord& w2);

// A Petri net with places {1..m} and transitions {1..n}: two m-by-n matrices
// of arc multiplicities.
struct PetriNet {
  int places = 0;
  int transitions = 0;
  std::vector<std::vector<std::uint64_t>> input, output;

  friend bool operator==(const PetriNet&, const PetriNet&) = default;
};

PetriNet petri_unit(int places, int transitions);
// Entrywise sum of both matrices; shapes must agree.
PetriNet petri_overlay(const PetriNet& p, const PetriNet& q);
// Block-diagonal placement; off-blocks are zero.
PetriNet petri_djunion(const PetriNet& p, const PetriNet& q);
// i'(sigma(s), tau(t)) = i(s, t), and likewise for o.
PetriNet petri_act(const Permutation& on_places, const Permutation& on_transitions,
                   const PetriNet& p);
nlohmann::json petri_to_json(const PetriNet& p);
PetriNet petri_from_json(const nlohmann::json& j);

class ColoredModel;
struct CNet;

using CPayload = std::variant<Net,                          // recolored one-colored element
                              std::map<Color, Net>,         // per-color components
                              PetriNet,                     //
                              std::shared_ptr<const CNet>>; // color-change pullback

// An element of F(w) for a colored model F.
struct CNet {
  std::shared_ptr<const ColoredModel> model;
  ColorWord word;
  CPayload payload;
};

bool operator==(const CNet& a, const CNet& b);
inline bool operator!=(const CNet& a, const CNet& b) { return !(a == b); }

// Same five-part interface as Model, with arity generalized to a color word.
class ColoredModel : public std::enable_shared_from_this<ColoredModel> {
 public:
  virtual ~ColoredModel() = default;

  const std::string& id() const { return id_; }
  const std::vector<Color>& colors() const { return colors_; }

  virtual CNet unit(const ColorWord& w) const = 0;
  CNet overlay(const CNet& g, const CNet& h) const;
  CNet act(const ColoredPermutation& p, const CNet& g) const;
  CNet djunion(const CNet& g, const CNet& h) const;
  virtual CNet sample(const ColorWord& w, Rng& rng, std::uint64_t cap) const = 0;

  void check_word(const ColorWord& w) const;

 protected:
  ColoredModel(std::string id, std::vector<Color> colors)
      : id_(std::move(id)), colors_(std::move(colors)) {}

  virtual CNet overlay_impl(const CNet& g, const CNet& h) const = 0;
  virtual CNet act_impl(const ColoredPermutation& p, const CNet& g) const = 0;
  virtual CNet djunion_impl(const CNet& g, const CNet& h) const = 0;

 private:
  std::string id_;
  std::vector<Color> colors_;
};

// Color the vertices of a one-colored model; structure maps forget the colors.
std::shared_ptr<const ColoredModel> recolor_model(std::shared_ptr<const Model> base,
                                                  std::vector<Color> colors);

// One component model per color; edges live within a color class, and vertices
// of color c are numbered by order of occurrence in the word.
std::shared_ptr<const ColoredModel> percolor_product(
    std::map<Color, std::shared_ptr<const Model>> components);

// Petri nets as a model over the two-letter color set {p, t}.
std::shared_ptr<const ColoredModel> petri_model();

// A morphism of colored models along a color function.
struct ColoredMorphism {
  std::shared_ptr<const ColoredModel> source, target;
  std::function<ColorWord(const ColorWord&)> word_map;
  std::function<CNet(const CNet&)> component;

  CNet apply(const CNet& g) const;
};

struct ColorChangeResult {
  std::shared_ptr<const ColoredModel> model;  // the pulled-back model over C
  ColoredMorphism morphism;                   // into the target model
};

// Pull a colored model back along f : C -> C'; the morphism relabels the word
// and keeps the network.
ColorChangeResult color_change(const std::map<Color, Color>& f,
                               std::shared_ptr<const ColoredModel> target);

}  // namespace netop

#endif
