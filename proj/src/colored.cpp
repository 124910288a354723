#include "netop/colored.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace netop {

ColorWord concat(const ColorWord& a, const ColorWord& b) {
  ColorWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

std::map<Color, int> color_counts(const ColorWord& w) {
  std::map<Color, int> counts;
  for (const auto& c : w.letters) ++counts[c];
  return counts;
}

ColorWord parse_word(const std::string& text) {
  ColorWord w;
  if (text.empty()) return w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty color in word: " + text);
    w.letters.push_back(item);
  }
  return w;
}

std::string to_string(const ColorWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ',';
    out += w.letters[i];
  }
  return out;
}

ColoredPermutation::ColoredPermutation(ColorWord source, ColorWord target, Permutation perm)
    : source_(std::move(source)), target_(std::move(target)), perm_(std::move(perm)) {
  if (source_.size() != perm_.degree() || target_.size() != perm_.degree())
    throw std::invalid_argument("colored permutation: word lengths do not match degree");
  for (int i = 1; i <= perm_.degree(); ++i)
    if (target_.letters[static_cast<std::size_t>(perm_(i)) - 1] !=
        source_.letters[static_cast<std::size_t>(i) - 1])
      throw std::invalid_argument("colored permutation does not preserve colors at position " +
                                  std::to_string(i));
}

ColoredPermutation ColoredPermutation::identity(const ColorWord& w) {
  return ColoredPermutation(w, w, Permutation::identity(w.size()));
}

ColoredPermutation compose(const ColoredPermutation& a, const ColoredPermutation& b) {
  if (!(a.source() == b.target()))
    throw std::invalid_argument("colored permutation composition: word mismatch");
  return ColoredPermutation(b.source(), a.target(), compose(a.perm(), b.perm()));
}

ColoredPermutation block_sum(const ColoredPermutation& a, const ColoredPermutation& b) {
  return ColoredPermutation(concat(a.source(), b.source()), concat(a.target(), b.target()),
                            block_sum(a.perm(), b.perm()));
}

ColoredPermutation word_block_swap(const ColorWord& w1, const ColorWord& w2) {
  return ColoredPermutation(concat(w1, w2), concat(w2, w1), block_swap(w1.size(), w2.size()));
}

PetriNet petri_unit(int places, int transitions) {
  if (places < 0 || transitions < 0) throw std::invalid_argument("negative Petri shape");
  PetriNet p;
  p.places = places;
  p.transitions = transitions;
  p.input.assign(static_cast<std::size_t>(places),
                 std::vector<std::uint64_t>(static_cast<std::size_t>(transitions), 0));
  p.output = p.input;
  return p;
}

namespace {

void check_petri(const PetriNet& p) {
  if (static_cast<int>(p.input.size()) != p.places ||
      static_cast<int>(p.output.size()) != p.places)
    throw std::invalid_argument("Petri matrices have wrong row count");
  for (const auto* m : {&p.input, &p.output})
    for (const auto& row : *m)
      if (static_cast<int>(row.size()) != p.transitions)
        throw std::invalid_argument("Petri matrices have wrong column count");
}

}  // namespace

PetriNet petri_overlay(const PetriNet& p, const PetriNet& q) {
  check_petri(p);
  check_petri(q);
  if (p.places != q.places || p.transitions != q.transitions)
    throw std::invalid_argument("Petri overlay: shape mismatch");
  PetriNet out = p;
  for (int s = 0; s < p.places; ++s)
    for (int t = 0; t < p.transitions; ++t) {
      out.input[s][t] += q.input[s][t];
      out.output[s][t] += q.output[s][t];
    }
  return out;
}

PetriNet petri_djunion(const PetriNet& p, const PetriNet& q) {
  check_petri(p);
  check_petri(q);
  PetriNet out = petri_unit(p.places + q.places, p.transitions + q.transitions);
  for (int s = 0; s < p.places; ++s)
    for (int t = 0; t < p.transitions; ++t) {
      out.input[s][t] = p.input[s][t];
      out.output[s][t] = p.output[s][t];
    }
  for (int s = 0; s < q.places; ++s)
    for (int t = 0; t < q.transitions; ++t) {
      out.input[p.places + s][p.transitions + t] = q.input[s][t];
      out.output[p.places + s][p.transitions + t] = q.output[s][t];
    }
  return out;
}

PetriNet petri_act(const Permutation& on_places, const Permutation& on_transitions,
                   const PetriNet& p) {
  check_petri(p);
  if (on_places.degree() != p.places || on_transitions.degree() != p.transitions)
    throw std::invalid_argument("Petri action: degree mismatch");
  PetriNet out = petri_unit(p.places, p.transitions);
  for (int s = 1; s <= p.places; ++s)
    for (int t = 1; t <= p.transitions; ++t) {
      out.input[on_places(s) - 1][on_transitions(t) - 1] = p.input[s - 1][t - 1];
      out.output[on_places(s) - 1][on_transitions(t) - 1] = p.output[s - 1][t - 1];
    }
  return out;
}

nlohmann::json petri_to_json(const PetriNet& p) {
  return {{"model", "petri"},
          {"places", p.places},
          {"transitions", p.transitions},
          {"input", p.input},
          {"output", p.output}};
}

PetriNet petri_from_json(const nlohmann::json& j) {
  PetriNet p;
  p.places = j.at("places").get<int>();
  p.transitions = j.at("transitions").get<int>();
  p.input = j.at("input").get<std::vector<std::vector<std::uint64_t>>>();
  p.output = j.at("output").get<std::vector<std::vector<std::uint64_t>>>();
  check_petri(p);
  return p;
}

bool operator==(const CNet& a, const CNet& b) {
  if (a.model->id() != b.model->id() || !(a.word == b.word)) return false;
  if (a.payload.index() != b.payload.index()) return false;
  if (auto* p = std::get_if<std::shared_ptr<const CNet>>(&a.payload)) {
    const auto& q = std::get<std::shared_ptr<const CNet>>(b.payload);
    return **p == *q;
  }
  return a.payload == b.payload;
}

void ColoredModel::check_word(const ColorWord& w) const {
  for (const auto& c : w.letters)
    if (std::find(colors_.begin(), colors_.end(), c) == colors_.end())
      throw std::invalid_argument("color " + c + " is not in the palette of model " + id_);
}

CNet ColoredModel::overlay(const CNet& g, const CNet& h) const {
  if (g.model->id() != id() || h.model->id() != id())
    throw std::invalid_argument("overlay: element of another colored model");
  if (!(g.word == h.word)) throw std::invalid_argument("overlay: color word mismatch");
  return overlay_impl(g, h);
}

CNet ColoredModel::act(const ColoredPermutation& p, const CNet& g) const {
  if (g.model->id() != id())
    throw std::invalid_argument("act: element of another colored model");
  if (!(g.word == p.source()))
    throw std::invalid_argument("act: colored permutation source does not match element word");
  return act_impl(p, g);
}

CNet ColoredModel::djunion(const CNet& g, const CNet& h) const {
  if (g.model->id() != id() || h.model->id() != id())
    throw std::invalid_argument("djunion: element of another colored model");
  return djunion_impl(g, h);
}

namespace {

// Positions (1-based) of color c in w, in word order.
std::vector<int> positions_of(const ColorWord& w, const Color& c) {
  std::vector<int> out;
  for (int i = 1; i <= w.size(); ++i)
    if (w.letters[static_cast<std::size_t>(i) - 1] == c) out.push_back(i);
  return out;
}

// The permutation a color class undergoes when the whole word is permuted:
// source occurrence a of color c moves to target occurrence b where
// sigma(source position a) is the b-th occurrence of c in the target word.
Permutation induced_on_color(const ColoredPermutation& p, const Color& c) {
  const auto src = positions_of(p.source(), c);
  const auto tgt = positions_of(p.target(), c);
  std::vector<int> im(src.size());
  for (std::size_t a = 0; a < src.size(); ++a) {
    const int moved = p.perm()(src[a]);
    const auto it = std::lower_bound(tgt.begin(), tgt.end(), moved);
    im[a] = static_cast<int>(it - tgt.begin()) + 1;
  }
  return Permutation(std::move(im));
}

class RecolorModel final : public ColoredModel {
 public:
  RecolorModel(std::string id, std::shared_ptr<const Model> base, std::vector<Color> colors)
      : ColoredModel(std::move(id), std::move(colors)), base_(std::move(base)) {}

  static std::string make_id(const std::shared_ptr<const Model>& base,
                             const std::vector<Color>& colors) {
    std::string id = "recolor(" + base->id() + ";";
    for (std::size_t i = 0; i < colors.size(); ++i) {
      if (i) id += ',';
      id += colors[i];
    }
    return id + ")";
  }

  CNet unit(const ColorWord& w) const override {
    check_word(w);
    return CNet{shared_from_this(), w, base_->unit(w.size())};
  }

  CNet sample(const ColorWord& w, Rng& rng, std::uint64_t cap) const override {
    check_word(w);
    return CNet{shared_from_this(), w, base_->sample(w.size(), rng, cap)};
  }

 protected:
  CNet overlay_impl(const CNet& g, const CNet& h) const override {
    return CNet{shared_from_this(), g.word,
                base_->overlay(std::get<Net>(g.payload), std::get<Net>(h.payload))};
  }

  CNet act_impl(const ColoredPermutation& p, const CNet& g) const override {
    return CNet{shared_from_this(), p.target(), base_->act(p.perm(), std::get<Net>(g.payload))};
  }

  CNet djunion_impl(const CNet& g, const CNet& h) const override {
    return CNet{shared_from_this(), concat(g.word, h.word),
                base_->djunion(std::get<Net>(g.payload), std::get<Net>(h.payload))};
  }

 private:
  std::shared_ptr<const Model> base_;
};

class PercolorModel final : public ColoredModel {
 public:
  explicit PercolorModel(std::map<Color, std::shared_ptr<const Model>> components)
      : ColoredModel(make_id(components), keys(components)), components_(std::move(components)) {}

  CNet unit(const ColorWord& w) const override {
    check_word(w);
    const auto counts = color_counts(w);
    std::map<Color, Net> parts;
    for (const auto& [c, model] : components_) {
      auto it = counts.find(c);
      parts.emplace(c, model->unit(it == counts.end() ? 0 : it->second));
    }
    return CNet{shared_from_this(), w, std::move(parts)};
  }

  CNet sample(const ColorWord& w, Rng& rng, std::uint64_t cap) const override {
    check_word(w);
    const auto counts = color_counts(w);
    std::map<Color, Net> parts;
    for (const auto& [c, model] : components_) {
      auto it = counts.find(c);
      parts.emplace(c, model->sample(it == counts.end() ? 0 : it->second, rng, cap));
    }
    return CNet{shared_from_this(), w, std::move(parts)};
  }

 protected:
  CNet overlay_impl(const CNet& g, const CNet& h) const override {
    std::map<Color, Net> parts;
    const auto& gp = std::get<std::map<Color, Net>>(g.payload);
    const auto& hp = std::get<std::map<Color, Net>>(h.payload);
    for (const auto& [c, model] : components_)
      parts.emplace(c, model->overlay(gp.at(c), hp.at(c)));
    return CNet{shared_from_this(), g.word, std::move(parts)};
  }

  CNet act_impl(const ColoredPermutation& p, const CNet& g) const override {
    std::map<Color, Net> parts;
    const auto& gp = std::get<std::map<Color, Net>>(g.payload);
    for (const auto& [c, model] : components_)
      parts.emplace(c, model->act(induced_on_color(p, c), gp.at(c)));
    return CNet{shared_from_this(), p.target(), std::move(parts)};
  }

  CNet djunion_impl(const CNet& g, const CNet& h) const override {
    std::map<Color, Net> parts;
    const auto& gp = std::get<std::map<Color, Net>>(g.payload);
    const auto& hp = std::get<std::map<Color, Net>>(h.payload);
    for (const auto& [c, model] : components_)
      parts.emplace(c, model->djunion(gp.at(c), hp.at(c)));
    return CNet{shared_from_this(), concat(g.word, h.word), std::move(parts)};
  }

 private:
  static std::string make_id(const std::map<Color, std::shared_ptr<const Model>>& components) {
    std::string id = "percolor(";
    bool first = true;
    for (const auto& [c, m] : components) {
      if (!first) id += ',';
      first = false;
      id += c + "=" + m->id();
    }
    return id + ")";
  }

  static std::vector<Color> keys(const std::map<Color, std::shared_ptr<const Model>>& m) {
    std::vector<Color> out;
    for (const auto& [c, v] : m) out.push_back(c);
    return out;
  }

  std::map<Color, std::shared_ptr<const Model>> components_;
};

// Words over {p, t} reduce to shapes (m, n) = (count of p, count of t); word
// positions map to place/transition indices by order of occurrence.
class PetriModel final : public ColoredModel {
 public:
  PetriModel() : ColoredModel("petri", {"p", "t"}) {}

  CNet unit(const ColorWord& w) const override {
    check_word(w);
    const auto counts = color_counts(w);
    return CNet{shared_from_this(), w,
                petri_unit(count_of(counts, "p"), count_of(counts, "t"))};
  }

  CNet sample(const ColorWord& w, Rng& rng, std::uint64_t cap) const override {
    check_word(w);
    const auto counts = color_counts(w);
    PetriNet p = petri_unit(count_of(counts, "p"), count_of(counts, "t"));
    for (int s = 0; s < p.places; ++s)
      for (int t = 0; t < p.transitions; ++t) {
        p.input[s][t] = rng.below(cap + 1);
        p.output[s][t] = rng.below(cap + 1);
      }
    return CNet{shared_from_this(), w, std::move(p)};
  }

 protected:
  CNet overlay_impl(const CNet& g, const CNet& h) const override {
    return CNet{shared_from_this(), g.word,
                petri_overlay(std::get<PetriNet>(g.payload), std::get<PetriNet>(h.payload))};
  }

  CNet act_impl(const ColoredPermutation& p, const CNet& g) const override {
    return CNet{shared_from_this(), p.target(),
                petri_act(induced_on_color(p, "p"), induced_on_color(p, "t"),
                          std::get<PetriNet>(g.payload))};
  }

  CNet djunion_impl(const CNet& g, const CNet& h) const override {
    return CNet{shared_from_this(), concat(g.word, h.word),
                petri_djunion(std::get<PetriNet>(g.payload), std::get<PetriNet>(h.payload))};
  }

 private:
  static int count_of(const std::map<Color, int>& counts, const Color& c) {
    auto it = counts.find(c);
    return it == counts.end() ? 0 : it->second;
  }
};

class PullbackModel final : public ColoredModel {
 public:
  PullbackModel(std::map<Color, Color> f, std::shared_ptr<const ColoredModel> target)
      : ColoredModel("pullback(" + target->id() + ")", keys(f)),
        f_(std::move(f)),
        target_(std::move(target)) {}

  ColorWord map_word(const ColorWord& w) const {
    ColorWord out;
    out.letters.reserve(w.letters.size());
    for (const auto& c : w.letters) out.letters.push_back(f_.at(c));
    return out;
  }

  CNet unit(const ColorWord& w) const override {
    check_word(w);
    return box(w, target_->unit(map_word(w)));
  }

  CNet sample(const ColorWord& w, Rng& rng, std::uint64_t cap) const override {
    check_word(w);
    return box(w, target_->sample(map_word(w), rng, cap));
  }

  CNet unbox(const CNet& g) const { return *std::get<std::shared_ptr<const CNet>>(g.payload); }

 protected:
  CNet overlay_impl(const CNet& g, const CNet& h) const override {
    return box(g.word, target_->overlay(unbox(g), unbox(h)));
  }

  CNet act_impl(const ColoredPermutation& p, const CNet& g) const override {
    const ColoredPermutation mapped(map_word(p.source()), map_word(p.target()), p.perm());
    return box(p.target(), target_->act(mapped, unbox(g)));
  }

  CNet djunion_impl(const CNet& g, const CNet& h) const override {
    return box(concat(g.word, h.word), target_->djunion(unbox(g), unbox(h)));
  }

 private:
  static std::vector<Color> keys(const std::map<Color, Color>& f) {
    std::vector<Color> out;
    for (const auto& [c, v] : f) out.push_back(c);
    return out;
  }

  CNet box(const ColorWord& w, CNet inner) const {
    return CNet{shared_from_this(), w,
                std::make_shared<const CNet>(std::move(inner))};
  }

  std::map<Color, Color> f_;
  std::shared_ptr<const ColoredModel> target_;
};

}  // namespace

std::shared_ptr<const ColoredModel> recolor_model(std::shared_ptr<const Model> base,
                                                  std::vector<Color> colors) {
  std::string id = RecolorModel::make_id(base, colors);
  return std::make_shared<RecolorModel>(std::move(id), std::move(base), std::move(colors));
}

std::shared_ptr<const ColoredModel> percolor_product(
    std::map<Color, std::shared_ptr<const Model>> components) {
  return std::make_shared<PercolorModel>(std::move(components));
}

std::shared_ptr<const ColoredModel> petri_model() {
  static const auto instance = std::make_shared<const PetriModel>();
  return instance;
}

CNet ColoredMorphism::apply(const CNet& g) const {
  if (g.model->id() != source->id())
    throw std::invalid_argument("colored morphism: element not in source model");
  return component(g);
}

ColorChangeResult color_change(const std::map<Color, Color>& f,
                               std::shared_ptr<const ColoredModel> target) {
  for (const auto& [c, c2] : f) {
    const auto& palette = target->colors();
    if (std::find(palette.begin(), palette.end(), c2) == palette.end())
      throw std::invalid_argument("color function lands outside the target palette at " + c);
  }
  auto pulled = std::make_shared<PullbackModel>(f, target);
  ColoredMorphism morphism;
  morphism.source = pulled;
  morphism.target = target;
  morphism.word_map = [pulled](const ColorWord& w) { return pulled->map_word(w); };
  morphism.component = [pulled](const CNet& g) { return pulled->unbox(g); };
  return ColorChangeResult{pulled, std::move(morphism)};
}

}  // namespace netop
