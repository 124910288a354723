#include <doctest.h>

#include "netop/models.hpp"
#include "netop/morphism.hpp"
#include "netop/oracle.hpp"

using namespace netop;

namespace {

Net sg(int n, const std::vector<Edge>& edges) {
  std::map<Edge, MonElem> labels;
  for (const auto& e : edges) labels.emplace(e, MonElem(std::uint64_t{1}));
  return model_by_id("sg")->from_edge_labels(n, labels);
}

Net counts(const std::string& id, int n,
           const std::vector<std::tuple<int, int, std::uint64_t>>& entries) {
  std::map<Edge, MonElem> labels;
  for (const auto& [i, j, v] : entries) labels.emplace(Edge{i, j}, MonElem(v));
  return model_by_id(id)->from_edge_labels(n, labels);
}

Net partition(const std::string& id, int n, const std::vector<std::vector<int>>& blocks) {
  return model_by_id(id)->from_json({{"model", id}, {"n", n}, {"blocks", blocks}});
}

// pi refines rho: every block of pi sits inside one block of rho
bool refines(const Net& pi, const Net& rho) {
  for (const auto& a : pi.blocks()) {
    bool inside_some = false;
    for (const auto& b : rho.blocks())
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        inside_some = true;
        break;
      }
    if (!inside_some) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("units") {
  CHECK(model_by_id("sg")->unit(3) == sg(3, {}));
  CHECK(model_by_id("gamma:bool")->unit(2).labels().empty());
  CHECK(model_by_id("part-join")->unit(3) ==
        partition("part-join", 3, {{1}, {2}, {3}}));
  CHECK(model_by_id("part-meet")->unit(3) == partition("part-meet", 3, {{1, 2, 3}}));
  CHECK(model_by_id("hg")->unit(2).hyperedges().empty());
}

TEST_CASE("overlay") {
  const auto m = model_by_id("sg");
  CHECK(m->overlay(sg(4, {{1, 2}, {3, 4}}), sg(4, {{1, 2}, {2, 4}})) ==
        sg(4, {{1, 2}, {2, 4}, {3, 4}}));
  const Net g = sg(4, {{1, 3}, {2, 4}});
  CHECK(m->overlay(g, g) == g);
  CHECK(model_by_id("mgplus")->overlay(counts("mgplus", 2, {{1, 2, 1}}),
                                       counts("mgplus", 2, {{1, 2, 2}})) ==
        counts("mgplus", 2, {{1, 2, 3}}));
  CHECK(model_by_id("mg")->overlay(counts("mg", 2, {{1, 2, 1}}),
                                   counts("mg", 2, {{1, 2, 2}})) ==
        counts("mg", 2, {{1, 2, 2}}));
  CHECK_THROWS_AS(m->overlay(sg(2, {}), sg(3, {})), std::invalid_argument);
  CHECK_THROWS_AS(m->overlay(sg(2, {}), counts("mg", 2, {})), std::invalid_argument);
}

TEST_CASE("act") {
  const auto m = model_by_id("sg");
  // the transposition (2 3)
  CHECK(m->act(Permutation({1, 3, 2}), sg(3, {{1, 2}, {2, 3}})) == sg(3, {{1, 3}, {2, 3}}));
  const Net g = sg(3, {{1, 2}});
  CHECK(m->act(Permutation::identity(3), g) == g);
  const auto dg = model_by_id("dg");
  const Net d = dg->from_edge_labels(2, {{Edge{1, 2}, MonElem(std::uint64_t{1})}});
  const Net d_rev = dg->from_edge_labels(2, {{Edge{2, 1}, MonElem(std::uint64_t{1})}});
  CHECK(dg->act(Permutation({2, 1}), d) == d_rev);
  CHECK_THROWS_AS(m->act(Permutation::identity(2), g), std::invalid_argument);
}

TEST_CASE("djunion") {
  const auto m = model_by_id("sg");
  CHECK(m->djunion(sg(3, {{1, 2}, {2, 3}}), sg(4, {{1, 2}, {2, 3}, {3, 4}})) ==
        sg(7, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}}));
  const Net g = sg(3, {{1, 3}});
  CHECK(m->djunion(g, m->unit(0)) == g);
  CHECK(m->djunion(m->unit(0), g) == g);

  const auto hg = model_by_id("hg");
  const Net h1 = hg->from_json({{"model", "hg"}, {"n", 3}, {"hyperedges", {{1, 2, 3}}}});
  const Net h2 = hg->from_json({{"model", "hg"}, {"n", 1}, {"hyperedges", {{1}}}});
  CHECK(hg->djunion(h1, h2) ==
        hg->from_json({{"model", "hg"}, {"n", 4}, {"hyperedges", {{1, 2, 3}, {4}}}}));
}

TEST_CASE("partition overlay is lattice join and meet") {
  const auto join = model_by_id("part-join");
  const auto meet = model_by_id("part-meet");
  CHECK(join->overlay(partition("part-join", 4, {{1, 2}, {3}, {4}}),
                      partition("part-join", 4, {{1}, {2, 3}, {4}})) ==
        partition("part-join", 4, {{1, 2, 3}, {4}}));
  CHECK(meet->overlay(partition("part-meet", 4, {{1, 2, 3}, {4}}),
                      partition("part-meet", 4, {{1, 2}, {3, 4}})) ==
        partition("part-meet", 4, {{1, 2}, {3}, {4}}));

  // join against the finest-common-coarsening brute force, all pairs, n <= 4
  for (int n = 0; n <= 4; ++n) {
    const auto all = oracle::enumerate_model(join, n, 1 << 20, 1);
    for (const auto& a : all)
      for (const auto& b : all) {
        const Net joined = join->overlay(a, b);
        REQUIRE(refines(a, joined));
        REQUIRE(refines(b, joined));
        for (const auto& c : all)
          if (refines(a, c) && refines(b, c)) REQUIRE(refines(joined, c));
      }
    // meet dually: coarsest common refinement
    const auto all_meet = oracle::enumerate_model(meet, n, 1 << 20, 1);
    for (const auto& a : all_meet)
      for (const auto& b : all_meet) {
        const Net met = meet->overlay(a, b);
        REQUIRE(refines(met, a));
        REQUIRE(refines(met, b));
        for (const auto& c : all_meet)
          if (refines(c, a) && refines(c, b)) REQUIRE(refines(c, met));
      }
  }

  // the meet model's disjoint union collapses nonempty halves
  CHECK(meet->djunion(meet->unit(2), meet->unit(3)) == meet->unit(5));
  CHECK(meet->djunion(meet->unit(0), meet->unit(3)) == meet->unit(3));
  CHECK(join->djunion(partition("part-join", 2, {{1, 2}}),
                      partition("part-join", 2, {{1}, {2}})) ==
        partition("part-join", 4, {{1, 2}, {3}, {4}}));

  // blocks are mapped elementwise by the action
  CHECK(join->act(Permutation({2, 3, 1}), partition("part-join", 3, {{1, 2}, {3}})) ==
        partition("part-join", 3, {{1}, {2, 3}}));
}

TEST_CASE("gamma_model catalog identifications") {
  CHECK(gamma_model(Monoid::nat_plus())->id() == "mgplus");
  CHECK(gamma_model(Monoid::nat_max())->id() == "mg");
  CHECK(gamma_model(Monoid::truncated(1))->id() == "sg");
  CHECK(gamma_model(Monoid::boolean())->id() == "gamma:bool");
  CHECK(gamma_model(Monoid::truncated(2))->id() == "gamma:bk:2");
  CHECK(model_by_id("gamma:nat-plus")->id() == "mgplus");
  CHECK(model_by_id("gamma:bk:1")->id() == "sg");
}

TEST_CASE("gamma over bool matches simple graphs through the bijection") {
  const auto gb = model_by_id("gamma:bool");
  const auto sgm = model_by_id("sg");
  for (int n = 0; n <= 3; ++n) {
    const auto graphs = oracle::enumerate_model(sgm, n, 1 << 20, 1);
    CHECK(graphs.size() == (1u << (n * (n - 1) / 2)));
    const auto perms = oracle::all_permutations(n);
    for (const auto& g : graphs) {
      const Net lab = convert_edge_valued(g, gb);
      CHECK(convert_edge_valued(lab, sgm) == g);
      for (const auto& p : perms)
        CHECK(convert_edge_valued(sgm->act(p, g), gb) == gb->act(p, lab));
    }
  }
  CHECK(convert_edge_valued(sgm->unit(4), gb) == gb->unit(4));
  const Net g = sg(3, {{1, 2}});
  const Net h = sg(3, {{2, 3}});
  CHECK(convert_edge_valued(sgm->overlay(g, h), gb) ==
        gb->overlay(convert_edge_valued(g, gb), convert_edge_valued(h, gb)));
  CHECK(convert_edge_valued(sgm->djunion(g, h), gb) ==
        gb->djunion(convert_edge_valued(g, gb), convert_edge_valued(h, gb)));
}

TEST_CASE("tensor model") {
  const auto t = model_by_id("tensor(dg,mg)");
  const Net u = t->unit(3);
  CHECK(u.pair().left == model_by_id("dg")->unit(3));
  CHECK(u.pair().right == model_by_id("mg")->unit(3));
  Rng rng(3);
  const Net a = t->sample(3, rng, 2);
  const Net b = t->sample(3, rng, 2);
  CHECK(t->overlay(a, b).pair().left ==
        model_by_id("dg")->overlay(a.pair().left, b.pair().left));
  // SG tensor SG: pairs of simple graphs, one per edge color
  const auto t2 = model_by_id("tensor(sg,sg)");
  CHECK(t2->unit(2).pair().left == sg(2, {}));
}

TEST_CASE("gamma_hom and morphism application") {
  const ModelMorphism support = gamma_hom(MonoidHom::cutoff(1));
  CHECK(support.source()->id() == "mgplus");
  CHECK(support.target()->id() == "sg");
  CHECK(support.apply(counts("mgplus", 2, {{1, 2, 3}})) == sg(2, {{1, 2}}));
  CHECK(support.apply(counts("mgplus", 3, {{1, 2, 3}, {2, 3, 1}})) ==
        sg(3, {{1, 2}, {2, 3}}));

  const ModelMorphism idm = ModelMorphism::identity(model_by_id("mgplus"));
  const Net g = counts("mgplus", 2, {{1, 2, 5}});
  CHECK(idm.apply(g) == g);
  CHECK(gamma_hom(MonoidHom::identity(Monoid::nat_plus())).apply(g) == g);

  const ModelMorphism cut2 = gamma_hom(MonoidHom::cutoff(2));
  CHECK(cut2.target()->id() == "gamma:bk:2");
  CHECK(cut2.apply(counts("mgplus", 2, {{1, 2, 1}})) ==
        model_by_id("gamma:bk:2")->from_edge_labels(2, {{{1, 2}, MonElem(std::uint64_t{1})}}));
  const ModelMorphism cut3 = gamma_hom(MonoidHom::cutoff(3));
  CHECK(cut3.apply(counts("mgplus", 2, {{1, 2, 5}})) ==
        model_by_id("gamma:bk:3")->from_edge_labels(2, {{{1, 2}, MonElem(std::uint64_t{3})}}));

  CHECK_THROWS_AS(support.apply(sg(2, {})), std::invalid_argument);
}

TEST_CASE("degenerate arities are singletons for edge-valued models") {
  for (const auto& id : {"sg", "mg", "mgplus", "gamma:bk:2", "gamma:bool"}) {
    const auto m = model_by_id(id);
    CHECK(oracle::enumerate_model(m, 0, 100, 3).size() == 1);
    CHECK(oracle::enumerate_model(m, 1, 100, 3).size() == 1);
  }
}

TEST_CASE("json round trips") {
  Rng rng(23);
  for (const auto& id : {"sg", "dg", "mg", "mgplus", "dmg", "dmgplus", "hg", "part-join",
                         "part-meet", "gamma:bool", "gamma:bk:2", "tensor(dg,mg)"}) {
    const auto m = model_by_id(id);
    for (int s = 0; s < 25; ++s) {
      const Net g = m->sample(rng.range(0, 5), rng, 3);
      CHECK(net_from_json(m->to_json(g)) == g);
    }
  }
  // canonical shapes from the wire format
  const Net g = net_from_json_text(R"({"model":"sg","n":9,"edges":[[1,2],[3,6]]})");
  CHECK(g == sg(9, {{1, 2}, {3, 6}}));
  CHECK(g.model().to_json(g).dump() == R"({"edges":[[1,2],[3,6]],"model":"sg","n":9})");
  CHECK_THROWS_AS(net_from_json_text(R"({"model":"sg","n":2,"edges":[[1,1]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(net_from_json_text(R"({"model":"sg","n":2,"edges":[[1,3]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(net_from_json_text(R"({"model":"part-join","n":2,"blocks":[[1]]})"),
                  std::invalid_argument);
}

TEST_CASE("gamma over a noncommutative table monoid satisfies the equations") {
  const auto lrb = Monoid::from_table(R"({
    "id": "lrb3",
    "elements": ["e", "a", "b"],
    "unit": "e",
    "table": [[0,1,2],[1,1,1],[2,2,2]]
  })");
  const auto model = gamma_model(lrb);
  CHECK(model->id() == "gamma:table:lrb3");

  oracle::Thm3Options opt;
  opt.exhaustive = true;
  opt.max_n = 3;
  CHECK(oracle::all_passed(oracle::check_thm3(model, opt)));

  // label order matters: overlay keeps the left operand's labels on clashes
  const MonElem a{std::string("a")}, b{std::string("b")};
  const Net ga = model->from_edge_labels(2, {{{1, 2}, a}});
  const Net gb = model->from_edge_labels(2, {{{1, 2}, b}});
  CHECK(model->overlay(ga, gb) == ga);
  CHECK(model->overlay(gb, ga) == gb);
}

TEST_CASE("a tensor fails the equation suite exactly when a component does") {
  const auto good = tensor_models(model_by_id("sg"), model_by_id("mgplus"));
  oracle::Thm3Options opt;
  opt.exhaustive = false;
  opt.max_n = 4;
  opt.samples = 150;
  opt.seed = 99;
  CHECK(oracle::all_passed(oracle::check_thm3(good, opt)));

  const auto broken =
      tensor_models(model_by_id("sg"), oracle::mutations::broken_overlay(model_by_id("mgplus")));
  const auto reports = oracle::check_thm3(broken, opt);
  bool eq2_failed = false;
  for (const auto& r : reports)
    if (r.law == "thm3.eq2") eq2_failed = !r.passed;
  CHECK(eq2_failed);
}
