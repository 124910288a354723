// The monoid catalog behind edge-labelled network models, and monoid
// homomorphisms. Carriers are either 64-bit naturals (bool as 0/1, truncated
// naturals B_k) or symbols from a finite multiplication table.

#ifndef NETOP_MONOID_HPP
#define NETOP_MONOID_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "netop/rng.hpp"

namespace netop {

using MonElem = std::variant<std::uint64_t, std::string>;

class Monoid {
 public:
  enum class Kind { boolean, nat_plus, nat_max, truncated, table };

  static std::shared_ptr<const Monoid> boolean();
  static std::shared_ptr<const Monoid> nat_plus();
  static std::shared_ptr<const Monoid> nat_max();
  static std::shared_ptr<const Monoid> truncated(std::uint64_t k);  // B_k

  // Finite-table monoid: {"id":..., "elements":[...], "unit":...,
  // "table":[[...],...]} with table[i][j] = index of elements[i]*elements[j].
  // Unit and associativity laws are verified eagerly.
  static std::shared_ptr<const Monoid> from_table(const std::string& json_text);

  // Catalog ids: "bool", "nat-plus", "nat-max", "bk:<k>".
  static std::shared_ptr<const Monoid> by_id(const std::string& id);

  const std::string& id() const { return id_; }
  Kind kind() const { return kind_; }
  std::uint64_t cap() const { return cap_; }  // k for truncated, else unused
  MonElem unit() const;
  bool commutative() const { return commutative_; }
  bool idempotent() const { return idempotent_; }

  bool contains(const MonElem& x) const;
  // The monoid operation. Throws if an argument is outside the carrier or a
  // natural sum overflows 64 bits.
  MonElem combine(const MonElem& x, const MonElem& y) const;

  std::string print(const MonElem& x) const;  // "T"/"F" for bool, decimal, symbol
  MonElem parse(const std::string& s) const;

  // Finite carriers only (bool, truncated, table).
  std::optional<std::vector<MonElem>> carrier() const;
  // Elements to draw from in randomized tests; infinite carriers are capped.
  std::vector<MonElem> sample_pool(std::uint64_t cap) const;
  MonElem sample(Rng& rng, std::uint64_t cap) const;

 private:
  Monoid() = default;
  std::string id_;
  Kind kind_ = Kind::boolean;
  std::uint64_t cap_ = 0;
  bool commutative_ = true;
  bool idempotent_ = false;
  // table monoids
  std::vector<std::string> elements_;
  std::string table_unit_;
  std::vector<std::vector<std::size_t>> table_;
};

// A homomorphism of monoids; the map is validated lazily (hom_apply checks
// membership) and the law suites check unit/operation preservation.
class MonoidHom {
 public:
  MonoidHom(std::shared_ptr<const Monoid> source, std::shared_ptr<const Monoid> target,
            std::function<MonElem(const MonElem&)> map, std::string id);

  // cutoff_k : (N,+) -> B_k, n |-> min(n, k).
  static MonoidHom cutoff(std::uint64_t k);
  static MonoidHom identity(std::shared_ptr<const Monoid> m);

  const std::string& id() const { return id_; }
  const std::shared_ptr<const Monoid>& source() const { return source_; }
  const std::shared_ptr<const Monoid>& target() const { return target_; }

  MonElem apply(const MonElem& x) const;

 private:
  std::shared_ptr<const Monoid> source_, target_;
  std::function<MonElem(const MonElem&)> map_;
  std::string id_;
};

// g after f; requires f.target id == g.source id.
MonoidHom compose(const MonoidHom& g, const MonoidHom& f);

}  // namespace netop

#endif
