#include <doctest.h>

#include "netop/monoid.hpp"

using namespace netop;

namespace {

MonElem nat(std::uint64_t v) { return MonElem(v); }

void check_monoid_laws(const std::shared_ptr<const Monoid>& m,
                       const std::vector<MonElem>& pool) {
  const MonElem e = m->unit();
  for (const auto& x : pool) {
    CHECK(m->combine(e, x) == x);
    CHECK(m->combine(x, e) == x);
    if (m->idempotent()) CHECK(m->combine(x, x) == x);
  }
  for (const auto& x : pool)
    for (const auto& y : pool) {
      if (m->commutative()) CHECK(m->combine(x, y) == m->combine(y, x));
      for (const auto& z : pool)
        REQUIRE(m->combine(m->combine(x, y), z) == m->combine(x, m->combine(y, z)));
    }
}

}  // namespace

TEST_CASE("combine on the built-in monoids") {
  CHECK(Monoid::boolean()->combine(nat(1), nat(0)) == nat(1));
  CHECK(Monoid::truncated(3)->combine(nat(2), nat(2)) == nat(3));
  CHECK(Monoid::nat_max()->combine(nat(5), nat(3)) == nat(5));
  CHECK(Monoid::nat_plus()->combine(nat(5), nat(3)) == nat(8));
  CHECK_THROWS_AS(Monoid::truncated(3)->combine(nat(4), nat(0)), std::invalid_argument);
  CHECK_THROWS_AS(Monoid::boolean()->combine(nat(2), nat(0)), std::invalid_argument);
  CHECK_THROWS_AS(Monoid::nat_plus()->combine(nat(~0ull), nat(1)), std::overflow_error);
}

TEST_CASE("unit and associativity laws over the catalog") {
  for (const auto& id : {"bool", "bk:0", "bk:1", "bk:2", "bk:3", "bk:7"}) {
    const auto m = Monoid::by_id(id);
    check_monoid_laws(m, *m->carrier());
  }
  Rng rng(17);
  for (const auto& id : {"nat-plus", "nat-max"}) {
    const auto m = Monoid::by_id(id);
    std::vector<MonElem> pool;
    for (int i = 0; i < 8; ++i) pool.push_back(nat(rng.below(1000)));
    check_monoid_laws(m, pool);
  }
}

TEST_CASE("cutoff homomorphism") {
  const MonoidHom c1 = MonoidHom::cutoff(1);
  CHECK(c1.apply(nat(3)) == nat(1));
  CHECK(MonoidHom::cutoff(4).apply(nat(0)) == nat(0));
  CHECK(MonoidHom::cutoff(3).apply(nat(2)) == nat(2));

  // min(x+y, k) = combine_{B_k}(min(x,k), min(y,k)), exhaustive x,y <= 2k+2
  for (std::uint64_t k = 0; k <= 4; ++k) {
    const MonoidHom c = MonoidHom::cutoff(k);
    const auto bk = Monoid::truncated(k);
    for (std::uint64_t x = 0; x <= 2 * k + 2; ++x) {
      for (std::uint64_t y = 0; y <= 2 * k + 2; ++y)
        REQUIRE(c.apply(nat(x + y)) == bk->combine(c.apply(nat(x)), c.apply(nat(y))));
    }
    CHECK(c.apply(nat(0)) == bk->unit());
  }
}

TEST_CASE("hom application validates carriers and composes") {
  const auto b2 = Monoid::truncated(2);
  const MonoidHom bad(Monoid::nat_plus(), b2, [](const MonElem& x) { return x; }, "leak");
  CHECK_THROWS_AS(bad.apply(nat(9)), std::invalid_argument);

  const MonoidHom idh = MonoidHom::identity(Monoid::nat_plus());
  const MonoidHom c2 = MonoidHom::cutoff(2);
  const MonoidHom both = compose(c2, idh);
  for (std::uint64_t v = 0; v <= 6; ++v) CHECK(both.apply(nat(v)) == c2.apply(nat(v)));
  CHECK_THROWS_AS(compose(idh, c2), std::invalid_argument);
}

TEST_CASE("finite-table monoid loader") {
  // left-regular band on {e,a,b}: xy = x unless x = e
  const std::string table = R"({
    "id": "lrb3",
    "elements": ["e", "a", "b"],
    "unit": "e",
    "table": [[0,1,2],[1,1,1],[2,2,2]]
  })";
  const auto m = Monoid::from_table(table);
  CHECK(m->id() == "table:lrb3");
  CHECK_FALSE(m->commutative());
  CHECK(m->idempotent());
  CHECK(m->combine(MonElem(std::string("a")), MonElem(std::string("b"))) ==
        MonElem(std::string("a")));
  check_monoid_laws(m, *m->carrier());
  // aba = ab for this graphic monoid
  const MonElem a{std::string("a")}, b{std::string("b")};
  CHECK(m->combine(m->combine(a, b), a) == m->combine(a, b));

  const std::string broken = R"({
    "id": "bad",
    "elements": ["e", "a"],
    "unit": "e",
    "table": [[0,1],[1,0]]
  })";
  CHECK_NOTHROW(Monoid::from_table(broken));  // Z/2 is a fine monoid
  const std::string no_unit = R"({
    "id": "bad2",
    "elements": ["e", "a"],
    "unit": "e",
    "table": [[0,1],[0,0]]
  })";
  CHECK_THROWS_AS(Monoid::from_table(no_unit), std::invalid_argument);
}

TEST_CASE("printing and parsing labels") {
  CHECK(Monoid::boolean()->print(nat(1)) == "T");
  CHECK(Monoid::boolean()->print(nat(0)) == "F");
  CHECK(Monoid::boolean()->parse("T") == nat(1));
  CHECK(Monoid::truncated(5)->parse("4") == nat(4));
  CHECK_THROWS_AS(Monoid::truncated(2)->parse("3"), std::invalid_argument);
}
