#include <doctest.h>

#include "netop/colored.hpp"
#include "netop/models.hpp"
#include "netop/oracle.hpp"

using namespace netop;

namespace {

ColorWord w(const std::string& text) { return parse_word(text); }

Net sg(int n, const std::vector<Edge>& edges) {
  std::map<Edge, MonElem> labels;
  for (const auto& e : edges) labels.emplace(e, MonElem(std::uint64_t{1}));
  return model_by_id("sg")->from_edge_labels(n, labels);
}

ColoredPermutation random_colored_perm(const ColorWord& source, Rng& rng) {
  // random permutation, target word forced by target[sigma(i)] = source[i]
  const int n = source.size();
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(im[static_cast<std::size_t>(i)], im[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  Permutation p(im);
  ColorWord target = source;
  for (int i = 1; i <= n; ++i)
    target.letters[static_cast<std::size_t>(p(i)) - 1] =
        source.letters[static_cast<std::size_t>(i) - 1];
  return ColoredPermutation(source, target, p);
}

ColorWord random_word(const std::vector<Color>& palette, int max_len, Rng& rng) {
  ColorWord out;
  const int len = rng.range(0, max_len);
  for (int i = 0; i < len; ++i) out.letters.push_back(palette[rng.below(palette.size())]);
  return out;
}

// The twelve equations, stated with color words; exercised on any colored
// model over its palette.
void check_colored_equations(const std::shared_ptr<const ColoredModel>& m, std::uint64_t seed) {
  Rng rng(seed);
  const auto& palette = m->colors();
  for (int s = 0; s < 300; ++s) {
    const ColorWord wa = random_word(palette, 4, rng);
    const ColorWord wb = random_word(palette, 4, rng);
    const CNet g1 = m->sample(wa, rng, 3);
    const CNet g2 = m->sample(wa, rng, 3);
    const CNet g3 = m->sample(wa, rng, 3);
    const CNet h1 = m->sample(wb, rng, 3);
    const CNet h2 = m->sample(wb, rng, 3);
    const CNet e = m->unit(wa);
    const ColoredPermutation p1 = random_colored_perm(wa, rng);
    const ColoredPermutation p2 = random_colored_perm(p1.target(), rng);
    const ColoredPermutation q = random_colored_perm(wb, rng);

    REQUIRE(m->overlay(e, g1) == g1);                                        // (1)
    REQUIRE(m->overlay(g1, e) == g1);
    REQUIRE(m->overlay(g1, m->overlay(g2, g3)) ==
            m->overlay(m->overlay(g1, g2), g3));                             // (2)
    REQUIRE(m->act(p1, m->overlay(g1, g2)) ==
            m->overlay(m->act(p1, g1), m->act(p1, g2)));                     // (3)
    REQUIRE(m->act(p1, e) == m->unit(p1.target()));                         // (4)
    REQUIRE(m->act(compose(p2, p1), g1) == m->act(p2, m->act(p1, g1)));      // (5)
    REQUIRE(m->act(ColoredPermutation::identity(wa), g1) == g1);             // (6)
    REQUIRE(m->djunion(m->overlay(g1, g2), m->overlay(h1, h2)) ==
            m->overlay(m->djunion(g1, h1), m->djunion(g2, h2)));             // (7)
    REQUIRE(m->djunion(m->unit(wa), m->unit(wb)) == m->unit(concat(wa, wb)));  // (8)
    REQUIRE(m->djunion(m->act(p1, g1), m->act(q, h1)) ==
            m->act(block_sum(p1, q), m->djunion(g1, h1)));                   // (9)
    REQUIRE(m->djunion(g1, m->djunion(h1, g2)) ==
            m->djunion(m->djunion(g1, h1), g2));                             // (10)
    REQUIRE(m->djunion(m->unit(ColorWord{}), g1) == g1);                     // (11)
    REQUIRE(m->djunion(g1, m->unit(ColorWord{})) == g1);
    REQUIRE(m->act(word_block_swap(wb, wa), m->djunion(h1, g1)) ==
            m->djunion(g1, h1));                                             // (12)
  }
}

}  // namespace

TEST_CASE("color words") {
  CHECK(w("r,b,r").size() == 3);
  CHECK(w("").size() == 0);
  CHECK(to_string(w("r,b,r")) == "r,b,r");
  CHECK(concat(w("r"), w("b,r")) == w("r,b,r"));
  const auto counts = color_counts(w("r,b,r"));
  CHECK(counts.at("r") == 2);
  CHECK(counts.at("b") == 1);
}

TEST_CASE("colored permutations preserve colors") {
  CHECK_NOTHROW(ColoredPermutation(w("r,b"), w("b,r"), Permutation({2, 1})));
  CHECK_THROWS_AS(ColoredPermutation(w("r,b"), w("r,b"), Permutation({2, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(ColoredPermutation(w("r,b"), w("b,r"), Permutation({1, 2})),
                  std::invalid_argument);

  Rng rng(31);
  const std::vector<Color> palette{"r", "g", "b"};
  for (int s = 0; s < 400; ++s) {
    const ColorWord source = random_word(palette, 5, rng);
    const auto p1 = random_colored_perm(source, rng);
    const auto p2 = random_colored_perm(p1.target(), rng);
    const auto both = compose(p2, p1);  // validity checked by the constructor
    CHECK(both.source() == source);
    CHECK(both.target() == p2.target());
  }
}

TEST_CASE("recoloring a one-colored model") {
  const auto m = recolor_model(model_by_id("sg"), {"r", "b"});
  const CNet u = m->unit(w("r,b"));
  CHECK(std::get<Net>(u.payload) == sg(2, {}));

  // acting by the color swap fixes the one-edge graph on two vertices
  const CNet g{m, w("r,b"), sg(2, {{1, 2}})};
  const ColoredPermutation swap(w("r,b"), w("b,r"), Permutation({2, 1}));
  const CNet moved = m->act(swap, g);
  CHECK(moved.word == w("b,r"));
  CHECK(std::get<Net>(moved.payload) == sg(2, {{1, 2}}));

  check_colored_equations(m, 41);
}

TEST_CASE("per-color products") {
  const auto m = percolor_product(
      {{"r", model_by_id("sg")}, {"b", model_by_id("sg")}});
  const CNet u = m->unit(w("r,b,r"));
  const auto& parts = std::get<std::map<Color, Net>>(u.payload);
  CHECK(parts.at("r") == sg(2, {}));  // two r vertices: word positions 1 and 3
  CHECK(parts.at("b") == sg(1, {}));

  // an edge between the two r vertices is the r-component edge {1,2}
  const CNet g{m, w("r,b,r"), std::map<Color, Net>{{"r", sg(2, {{1, 2}})}, {"b", sg(1, {})}}};
  const CNet h{m, w("r"), std::map<Color, Net>{{"r", sg(1, {})}, {"b", sg(0, {})}}};
  const CNet joined = m->djunion(h, g);
  CHECK(joined.word == w("r,r,b,r"));
  CHECK(std::get<std::map<Color, Net>>(joined.payload).at("r") == sg(3, {{2, 3}}));

  check_colored_equations(m, 43);
}

TEST_CASE("petri nets") {
  const PetriNet zero = petri_unit(1, 1);
  PetriNet p = petri_unit(1, 1);
  p.input[0][0] = 1;
  PetriNet q = petri_unit(1, 1);
  q.input[0][0] = 2;
  q.output[0][0] = 1;
  CHECK(petri_overlay(p, zero) == p);
  const PetriNet sum = petri_overlay(p, q);
  CHECK(sum.input[0][0] == 3);
  CHECK(sum.output[0][0] == 1);
  const PetriNet twice = petri_overlay(p, p);
  CHECK(twice.input[0][0] == 2);

  PetriNet a = petri_unit(1, 1);
  a.input[0][0] = 2;
  PetriNet b = petri_unit(1, 1);
  b.output[0][0] = 1;
  const PetriNet dj = petri_djunion(a, b);
  CHECK(dj.places == 2);
  CHECK(dj.transitions == 2);
  CHECK(dj.input == std::vector<std::vector<std::uint64_t>>{{2, 0}, {0, 0}});
  CHECK(dj.output == std::vector<std::vector<std::uint64_t>>{{0, 0}, {0, 1}});
  CHECK(petri_djunion(a, petri_unit(0, 0)) == a);
  CHECK(petri_djunion(petri_unit(2, 1), petri_unit(1, 2)) == petri_unit(3, 3));
  CHECK_THROWS_AS(petri_overlay(a, dj), std::invalid_argument);

  // row/column action: moved entry lands at (sigma(s), tau(t))
  PetriNet r = petri_unit(2, 2);
  r.input[0][1] = 5;
  const PetriNet moved = petri_act(Permutation({2, 1}), Permutation({1, 2}), r);
  CHECK(moved.input[1][1] == 5);
  CHECK(moved.input[0][1] == 0);

  const auto j = petri_to_json(r);
  CHECK(petri_from_json(j) == r);
}

TEST_CASE("the petri model satisfies the colored equations") {
  const auto m = petri_model();
  const CNet u = m->unit(w("p,t,p"));
  CHECK(std::get<PetriNet>(u.payload) == petri_unit(2, 1));
  check_colored_equations(m, 47);
}

TEST_CASE("color changing") {
  // collapsing all colors recovers the recolored model with its forgetful
  // morphism: the pulled-back element is the same underlying network
  const auto target = recolor_model(model_by_id("sg"), {"u"});
  const auto [pulled, morphism] = color_change({{"r", "u"}, {"b", "u"}}, target);
  const CNet g = pulled->unit(w("r,b"));
  const CNet image = morphism.apply(g);
  CHECK(image.word == w("u,u"));
  CHECK(std::get<Net>(image.payload) == sg(2, {}));

  Rng rng(53);
  for (int s = 0; s < 100; ++s) {
    const ColorWord word = random_word({"r", "b"}, 4, rng);
    const CNet a = pulled->sample(word, rng, 2);
    const CNet b = pulled->sample(word, rng, 2);
    // the morphism relabels the word and keeps the network
    CHECK(morphism.apply(pulled->overlay(a, b)) ==
          target->overlay(morphism.apply(a), morphism.apply(b)));
    CHECK(morphism.word_map(word).size() == word.size());
  }
  check_colored_equations(pulled, 59);

  // identity color function: applying the morphism just unboxes the element
  const auto [same, idm] = color_change({{"u", "u"}}, target);
  const CNet x = same->sample(w("u,u"), rng, 2);
  const CNet inner = *std::get<std::shared_ptr<const CNet>>(x.payload);
  CHECK(idm.apply(x) == inner);
  CHECK(idm.apply(x).word == x.word);

  // merging colors on a per-color product lands in the diagonal word
  const auto pc = percolor_product({{"u", model_by_id("sg")}});
  const auto [merged, to_pc] = color_change({{"r", "u"}, {"b", "u"}}, pc);
  CHECK(to_pc.word_map(w("r,b")) == w("u,u"));
}
