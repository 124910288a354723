#include "netop/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace netop {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
      throw std::invalid_argument("permutation images are not a bijection of {1.." +
                                  std::to_string(n) + "}");
    seen[static_cast<std::size_t>(v) - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation degree");
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 1; i <= degree(); ++i) im[static_cast<std::size_t>((*this)(i)) - 1] = i;
  return Permutation(std::move(im));
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree())
    throw std::invalid_argument("compose: degree mismatch (" + std::to_string(sigma.degree()) +
                                " vs " + std::to_string(tau.degree()) + ")");
  std::vector<int> im(static_cast<std::size_t>(sigma.degree()));
  for (int i = 1; i <= sigma.degree(); ++i) im[static_cast<std::size_t>(i) - 1] = sigma(tau(i));
  return Permutation(std::move(im));
}

Permutation block_sum(const Permutation& sigma, const Permutation& tau) {
  const int m = sigma.degree();
  const int n = tau.degree();
  std::vector<int> im(static_cast<std::size_t>(m + n));
  for (int j = 1; j <= m; ++j) im[static_cast<std::size_t>(j) - 1] = sigma(j);
  for (int j = 1; j <= n; ++j) im[static_cast<std::size_t>(m + j) - 1] = tau(j) + m;
  return Permutation(std::move(im));
}

Permutation block_swap(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("block_swap: negative block size");
  std::vector<int> im(static_cast<std::size_t>(m + n));
  for (int i = 1; i <= m; ++i) im[static_cast<std::size_t>(i) - 1] = i + n;
  for (int i = m + 1; i <= m + n; ++i) im[static_cast<std::size_t>(i) - 1] = i - m;
  return Permutation(std::move(im));
}

Permutation block_induced(const Permutation& tau, const std::vector<int>& sizes) {
  const int k = tau.degree();
  if (k != static_cast<int>(sizes.size()))
    throw std::invalid_argument("block_induced: tau degree does not match block count");
  int total = 0;
  for (int s : sizes) {
    if (s < 0) throw std::invalid_argument("block_induced: negative block size");
    total += s;
  }
  // offsets[i-1] = start of block i in the natural arrangement
  std::vector<int> offsets(sizes.size());
  int acc = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    offsets[i] = acc;
    acc += sizes[i];
  }
  std::vector<int> im(static_cast<std::size_t>(total));
  int src = 0;  // offset of source slot j, whose block is tau(j)
  for (int j = 1; j <= k; ++j) {
    const int b = tau(j);
    const int size = sizes[static_cast<std::size_t>(b) - 1];
    const int home = offsets[static_cast<std::size_t>(b) - 1];
    for (int r = 1; r <= size; ++r) im[static_cast<std::size_t>(src + r) - 1] = home + r;
    src += size;
  }
  return Permutation(std::move(im));
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= p.degree(); ++i) {
    if (i > 1) os << ',';
    os << p(i);
  }
  os << ']';
  return os.str();
}

}  // namespace netop
