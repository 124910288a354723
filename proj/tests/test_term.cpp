#include <doctest.h>

#include "netop/oracle.hpp"
#include "netop/term.hpp"

using namespace netop;

namespace {

const char* kIntroTerm =
    "(compose (op (3 4 2 -> 9) id (net sg 9 {1-2,3-6})) (net sg 3 {2-3}) "
    "(net sg 4 {1-2,2-3,3-4}) (net sg 2 {1-2}))";

Net sg(int n, const std::vector<Edge>& edges) {
  std::map<Edge, MonElem> labels;
  for (const auto& e : edges) labels.emplace(e, MonElem(std::uint64_t{1}));
  return model_by_id("sg")->from_edge_labels(n, labels);
}

}  // namespace

TEST_CASE("parsing literals and composites") {
  const Term leaf = parse_term("(net sg 3 {2-3})");
  CHECK(leaf.is_leaf());
  CHECK(*leaf.literal == sg(3, {{2, 3}}));

  const Term t = parse_term(kIntroTerm);
  CHECK_FALSE(t.is_leaf());
  CHECK(t.children.size() == 3);
  for (const auto& c : t.children) CHECK(c.is_leaf());
  CHECK(t.op->profile() == Profile{{3, 4, 2}, 9});

  CHECK(parse_term("(net mgplus 2 {1-2:3})").literal->labels().at({1, 2}) ==
        MonElem(std::uint64_t{3}));
  CHECK(parse_term("(net gamma:bk:2 2 {1-2:2})").literal->model().id() == "gamma:bk:2");
  CHECK(parse_term("(net sg 2 {})").literal->edges().empty());

  // nested composites and zero-arity slots
  const Term nested = parse_term(
      "(compose (op (2 1 -> 3) id (net sg 3 {1-3}))"
      " (compose (op (1 1 -> 2) (perm 2 1) (net sg 2 {})) (net sg 1 {}) (net sg 1 {}))"
      " (net sg 1 {}))");
  CHECK(nested.children.size() == 2);
  CHECK_FALSE(nested.children[0].is_leaf());
  CHECK(std::get<Net>(eval_term(nested, EvalConfig{})) == sg(3, {{1, 3}}));

  const Term zeros = parse_term(
      "(compose (op (0 2 -> 2) id (net sg 2 {1-2})) (net sg 0 {}) (net sg 2 {}))");
  CHECK(std::get<Net>(eval_term(zeros, EvalConfig{})) == sg(2, {{1, 2}}));
}

TEST_CASE("parse errors carry positions, type errors carry term paths") {
  CHECK_THROWS_WITH_AS(parse_term("(net sg 3 {2-3}"), doctest::Contains("line 1"),
                       TermError);
  CHECK_THROWS_WITH_AS(parse_term("(net sg x {})"), doctest::Contains("column 9"), TermError);
  CHECK_THROWS_WITH_AS(parse_term("(compose (op (1 1 -> 3) id (net sg 3 {})) "
                                  "(net sg 1 {}) (net sg 1 {}))"),
                       doctest::Contains("empty homset"), TermError);
  CHECK_THROWS_WITH_AS(parse_term("(compose (op (1 2 -> 3) id (net sg 3 {})) "
                                  "(net sg 1 {}) (net sg 3 {}))"),
                       doctest::Contains("term path 1.2"), TermError);
  CHECK_THROWS_WITH_AS(parse_term("(compose (op (2 -> 2) id (net sg 2 {})) "
                                  "(net mgplus 2 {}))"),
                       doctest::Contains("model mismatch"), TermError);
  CHECK_THROWS_WITH_AS(parse_term("(net part-join 2 {})"),
                       doctest::Contains("literal form"), TermError);
  CHECK_THROWS_WITH_AS(parse_term("(net sg 2 {1-2,2-1})"), doctest::Contains("duplicate"),
                       TermError);
}

TEST_CASE("evaluating the worked composite") {
  const Term t = parse_term(kIntroTerm);
  const EvalResult r = eval_term(t, EvalConfig{});
  CHECK(serialize_result(r) ==
        R"({"edges":[[1,2],[2,3],[3,6],[4,5],[5,6],[6,7],[8,9]],"model":"sg","n":9})");

  const Term leaf = parse_term("(net sg 2 {1-2})");
  CHECK(std::get<Net>(eval_term(leaf, EvalConfig{})) == sg(2, {{1, 2}}));

  // unit networks keep their empty edge array in the canonical form
  CHECK(serialize_result(eval_term(parse_term("(net sg 3 {})"), EvalConfig{})) ==
        R"({"edges":[],"model":"sg","n":3})");
}

TEST_CASE("evaluation under the range-limited algebra drops far edges") {
  // the operation wants an edge between two leaves placed far apart
  const Term t = parse_term(
      "(compose (op (1 1 -> 2) id (net sg 2 {1-2})) (net sg 1 {}) (net sg 1 {}))");
  EvalConfig cfg;
  cfg.algebra = EvalConfig::Algebra::range;
  cfg.range_limit = Rat(1);
  cfg.leaf_attrs = {{Attr{Point{Rat(0), Rat(0)}}}, {Attr{Point{Rat(0), Rat(2)}}}};
  const auto far = std::get<AttributedNet>(eval_term(t, cfg));
  CHECK(far.net == sg(2, {}));

  cfg.leaf_attrs = {{Attr{Point{Rat(0), Rat(0)}}}, {Attr{Point{Rat(0), Rat(1)}}}};
  const auto near = std::get<AttributedNet>(eval_term(t, cfg));
  CHECK(near.net == sg(2, {{1, 2}}));

  // a leaf that violates the rule is rejected with its path
  const Term bad = parse_term("(net sg 2 {1-2})");
  cfg.leaf_attrs = {{Attr{Point{Rat(0), Rat(0)}}, Attr{Point{Rat(0), Rat(2)}}}};
  CHECK_THROWS_WITH_AS(eval_term(bad, cfg), doctest::Contains("term path 1"), TermError);
}

TEST_CASE("print and parse round-trip") {
  for (const char* text : {
           "(net sg 3 {2-3})",
           kIntroTerm,
           "(compose (op (2 -> 2) (perm 2 1) (net mgplus 2 {1-2:3})) (net mgplus 2 {1-2}))",
       }) {
    const Term t = parse_term(text);
    const std::string printed = print_term(t);
    const Term again = parse_term(printed);
    CHECK(print_term(again) == printed);
    CHECK(serialize_result(eval_term(again, EvalConfig{})) ==
          serialize_result(eval_term(t, EvalConfig{})));
  }

  // randomized: assemble terms over random operations, print, reparse
  Rng rng(77);
  const auto mgp = model_by_id("mgplus");
  for (int s = 0; s < 100; ++s) {
    const int k = rng.range(1, 3);
    Profile profile;
    int total = 0;
    for (int i = 0; i < k; ++i) {
      const int ni = rng.range(1, 2);
      profile.inputs.push_back(ni);
      total += ni;
    }
    profile.output = total;
    std::vector<int> im(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i) im[static_cast<std::size_t>(i)] = i + 1;
    for (int i = total - 1; i > 0; --i)
      std::swap(im[static_cast<std::size_t>(i)],
                im[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    Term node;
    node.op = Op(mgp, profile, Permutation(im), mgp->sample(total, rng, 3));
    for (int i = 0; i < k; ++i) {
      Term leaf;
      leaf.literal = mgp->sample(profile.inputs[static_cast<std::size_t>(i)], rng, 3);
      node.children.push_back(std::move(leaf));
    }
    const std::string printed = print_term(node);
    const Term again = parse_term(printed);
    CHECK(print_term(again) == printed);
    CHECK(std::get<Net>(eval_term(again, EvalConfig{})) ==
          std::get<Net>(eval_term(node, EvalConfig{})));
  }
}

TEST_CASE("evaluation respects nesting") {
  // evaluating a nested term equals flattening one step through the operad
  // and acting once
  Rng rng(101);
  const auto m = model_by_id("sg");
  for (int s = 0; s < 200; ++s) {
    const int k = rng.range(1, 3);
    Profile profile;
    int total = 0;
    for (int i = 0; i < k; ++i) {
      const int ni = rng.range(0, 3);
      profile.inputs.push_back(ni);
      total += ni;
    }
    profile.output = total;
    const Op f(m, profile, Permutation::identity(total), m->sample(total, rng, 1));
    std::vector<Op> gs;
    std::vector<Net> leaves;
    for (int i = 0; i < k; ++i) {
      const int ni = profile.inputs[static_cast<std::size_t>(i)];
      gs.push_back(Op(m, Profile{{ni}, ni}, Permutation::identity(ni), m->sample(ni, rng, 1)));
      leaves.push_back(m->sample(ni, rng, 1));
    }
    std::vector<Net> staged;
    for (int i = 0; i < k; ++i)
      staged.push_back(act_canonical(gs[static_cast<std::size_t>(i)],
                                     {leaves[static_cast<std::size_t>(i)]}));
    CHECK(act_canonical(f, staged) == act_canonical(compose(f, gs), leaves));
  }
}

TEST_CASE("serialized results parse back") {
  Rng rng(7);
  for (const auto& id : {"sg", "mgplus", "gamma:bk:3"}) {
    const auto m = model_by_id(id);
    for (int s = 0; s < 30; ++s) {
      const Net g = m->sample(rng.range(0, 5), rng, 3);
      CHECK(net_from_json_text(serialize_result(EvalResult{g})) == g);
    }
  }
}
