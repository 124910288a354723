// Finite permutations of {1..n}: composition, block sums, block swaps, and
// the block permutations induced by reordering a list of sized blocks.

#ifndef NETOP_PERM_HPP
#define NETOP_PERM_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace netop {

// A bijection of {1..n}. Values are immutable once constructed; images are
// 1-based everywhere, including the serialized form.
class Permutation {
 public:
  // images[i-1] = sigma(i). Throws std::invalid_argument unless a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }

  // sigma(i), 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// sigma after tau: result(i) = sigma(tau(i)). Degrees must match.
Permutation compose(const Permutation& sigma, const Permutation& tau);

// Degree m+n; first m points through sigma, last n through tau shifted by m.
Permutation block_sum(const Permutation& sigma, const Permutation& tau);

// B_{m,n}: swaps the first m points with the last n, keeping each run in order.
Permutation block_swap(int m, int n);

// The permutation of degree sum(sizes) that moves whole blocks: with block i
// of size sizes[i] at offset s_i in the natural arrangement, the source lists
// blocks in order tau(1),...,tau(k) and each is sent home, position-for-
// position. Over singleton sizes this is tau itself. Requires tau.degree() ==
// sizes.size().
Permutation block_induced(const Permutation& tau, const std::vector<int>& sizes);

std::string to_string(const Permutation& p);

}  // namespace netop

#endif
