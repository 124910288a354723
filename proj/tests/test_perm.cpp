#include <doctest.h>

#include "netop/oracle.hpp"
#include "netop/perm.hpp"

using namespace netop;

namespace {

Permutation perm(std::vector<int> images) { return Permutation(std::move(images)); }

// By-definition evaluator for the block permutation: lay the blocks out in
// the order tau(1),...,tau(k) and send each one home position-for-position.
Permutation block_induced_by_definition(const Permutation& tau, const std::vector<int>& sizes) {
  const int k = tau.degree();
  std::vector<int> home(sizes.size(), 0);
  for (std::size_t i = 1; i < sizes.size(); ++i) home[i] = home[i - 1] + sizes[i - 1];
  int total = 0;
  for (int s : sizes) total += s;
  std::vector<int> images(static_cast<std::size_t>(total), 0);
  int src = 0;
  for (int j = 1; j <= k; ++j) {
    const int block = tau(j);
    for (int r = 1; r <= sizes[static_cast<std::size_t>(block) - 1]; ++r)
      images[static_cast<std::size_t>(src + r) - 1] =
          home[static_cast<std::size_t>(block) - 1] + r;
    src += sizes[static_cast<std::size_t>(block) - 1];
  }
  return Permutation(std::move(images));
}

}  // namespace

TEST_CASE("permutation construction validates bijections") {
  CHECK_THROWS_AS(perm({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(perm({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(perm({1, 3}), std::invalid_argument);
  CHECK(Permutation::identity(0).degree() == 0);
  CHECK(perm({2, 1}).inverse() == perm({2, 1}));
  CHECK(perm({2, 3, 1}).inverse() == perm({3, 1, 2}));
}

TEST_CASE("compose applies the right factor first") {
  CHECK(compose(Permutation::identity(3), perm({2, 3, 1})) == perm({2, 3, 1}));
  CHECK(compose(perm({2, 1}), perm({2, 1})) == Permutation::identity(2));
  // sigma(tau(i)) checked by hand: 1->3->1, 2->1->2, 3->2->3
  CHECK(compose(perm({2, 3, 1}), perm({3, 1, 2})) == Permutation::identity(3));
  CHECK_THROWS_AS(compose(perm({2, 1}), Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("block_sum") {
  CHECK(block_sum(perm({2, 1}), Permutation::identity(2)) == perm({2, 1, 3, 4}));
  CHECK(block_sum(Permutation::identity(0), perm({3, 1, 2})) == perm({3, 1, 2}));
  CHECK(block_sum(perm({2, 1}), perm({2, 1})) == perm({2, 1, 4, 3}));

  // pointwise against the two-case definition
  const Permutation s = perm({3, 1, 2});
  const Permutation t = perm({2, 1});
  const Permutation sum = block_sum(s, t);
  for (int j = 1; j <= 5; ++j) CHECK(sum(j) == (j <= 3 ? s(j) : t(j - 3) + 3));
}

TEST_CASE("block_swap") {
  CHECK(block_swap(4, 3) == perm({4, 5, 6, 7, 1, 2, 3}));
  CHECK(block_swap(0, 4) == Permutation::identity(4));
  CHECK(block_swap(4, 0) == Permutation::identity(4));
  CHECK(block_swap(1, 1) == perm({2, 1}));
}

TEST_CASE("block_induced") {
  CHECK(block_induced(Permutation::identity(3), {2, 0, 4}) == Permutation::identity(6));
  CHECK(block_induced(perm({2, 1}), {1, 1}) == perm({2, 1}));
  // blocks of sizes (2,3) listed in source order (block 2, block 1): source
  // positions 1..3 go home to 3..5 and 4..5 go home to 1..2
  CHECK(block_induced(perm({2, 1}), {2, 3}) == perm({3, 4, 5, 1, 2}));
  CHECK(block_induced(perm({2, 1}), {2, 3}) == block_swap(3, 2));
  CHECK(block_induced(perm({2, 1}), {3, 2}) == perm({4, 5, 1, 2, 3}));
  CHECK_THROWS_AS(block_induced(perm({2, 1}), {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("group laws, exhaustive through degree 5") {
  for (int n = 0; n <= 5; ++n) {
    const auto all = oracle::all_permutations(n);
    const Permutation id = Permutation::identity(n);
    for (const auto& a : all) {
      CHECK(compose(a, id) == a);
      CHECK(compose(id, a) == a);
      CHECK(compose(a, a.inverse()) == id);
      CHECK(compose(a.inverse(), a) == id);
    }
    if (n > 4) continue;  // associativity cubically below, sampled at 5
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all)
          REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
  const auto all5 = oracle::all_permutations(5);
  Rng rng(11);
  for (int s = 0; s < 2000; ++s) {
    const auto& a = all5[rng.below(all5.size())];
    const auto& b = all5[rng.below(all5.size())];
    const auto& c = all5[rng.below(all5.size())];
    REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("block operation properties") {
  // block_sum restricted to the first block is the first factor
  Rng rng(5);
  for (int s = 0; s < 200; ++s) {
    const auto all_a = oracle::all_permutations(rng.range(0, 3));
    const auto all_b = oracle::all_permutations(rng.range(0, 3));
    const auto& a = all_a[rng.below(all_a.size())];
    const auto& b = all_b[rng.below(all_b.size())];
    const auto sum = block_sum(a, b);
    for (int j = 1; j <= a.degree(); ++j) CHECK(sum(j) == a(j));
  }

  // B_{m,n} then B_{n,m} is the identity, exhaustive for m+n <= 6
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; m + n <= 6; ++n)
      CHECK(compose(block_swap(n, m), block_swap(m, n)) == Permutation::identity(m + n));

  // singleton sizes reduce to tau itself, exhaustive for k <= 4
  for (int k = 0; k <= 4; ++k)
    for (const auto& tau : oracle::all_permutations(k))
      CHECK(block_induced(tau, std::vector<int>(static_cast<std::size_t>(k), 1)) == tau);

  // agreement with the by-definition layout evaluator on random cases
  for (int s = 0; s < 500; ++s) {
    const int k = rng.range(1, 4);
    const auto taus = oracle::all_permutations(k);
    const auto& tau = taus[rng.below(taus.size())];
    std::vector<int> sizes;
    for (int i = 0; i < k; ++i) sizes.push_back(rng.range(0, 3));
    CHECK(block_induced(tau, sizes) == block_induced_by_definition(tau, sizes));
  }
}

TEST_CASE("one-line serialization is 1-based") {
  CHECK(to_string(block_swap(4, 3)) == "[4,5,6,7,1,2,3]");
  CHECK(to_string(Permutation::identity(0)) == "[]");
}
