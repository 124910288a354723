#include "netop/monoid.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace netop {

namespace {

std::uint64_t nat_of(const Monoid& m, const MonElem& x) {
  if (!std::holds_alternative<std::uint64_t>(x))
    throw std::invalid_argument("element outside the carrier of monoid " + m.id());
  return std::get<std::uint64_t>(x);
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw std::overflow_error("natural addition overflows 64 bits");
  return a + b;
}

}  // namespace

std::shared_ptr<const Monoid> Monoid::boolean() {
  static const auto instance = [] {
    auto m = std::shared_ptr<Monoid>(new Monoid());
    m->id_ = "bool";
    m->kind_ = Kind::boolean;
    m->commutative_ = true;
    m->idempotent_ = true;
    return std::shared_ptr<const Monoid>(m);
  }();
  return instance;
}

std::shared_ptr<const Monoid> Monoid::nat_plus() {
  static const auto instance = [] {
    auto m = std::shared_ptr<Monoid>(new Monoid());
    m->id_ = "nat-plus";
    m->kind_ = Kind::nat_plus;
    m->commutative_ = true;
    return std::shared_ptr<const Monoid>(m);
  }();
  return instance;
}

std::shared_ptr<const Monoid> Monoid::nat_max() {
  static const auto instance = [] {
    auto m = std::shared_ptr<Monoid>(new Monoid());
    m->id_ = "nat-max";
    m->kind_ = Kind::nat_max;
    m->commutative_ = true;
    m->idempotent_ = true;
    return std::shared_ptr<const Monoid>(m);
  }();
  return instance;
}

std::shared_ptr<const Monoid> Monoid::truncated(std::uint64_t k) {
  auto m = std::shared_ptr<Monoid>(new Monoid());
  m->id_ = "bk:" + std::to_string(k);
  m->kind_ = Kind::truncated;
  m->cap_ = k;
  m->commutative_ = true;
  m->idempotent_ = (k == 0);
  return m;
}

std::shared_ptr<const Monoid> Monoid::from_table(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  auto m = std::shared_ptr<Monoid>(new Monoid());
  m->kind_ = Kind::table;
  m->id_ = "table:" + j.at("id").get<std::string>();
  m->elements_ = j.at("elements").get<std::vector<std::string>>();
  m->table_unit_ = j.at("unit").get<std::string>();
  m->table_ = j.at("table").get<std::vector<std::vector<std::size_t>>>();
  const std::size_t n = m->elements_.size();
  if (m->table_.size() != n)
    throw std::invalid_argument("table monoid: table row count mismatch");
  for (const auto& row : m->table_) {
    if (row.size() != n) throw std::invalid_argument("table monoid: ragged table");
    for (std::size_t v : row)
      if (v >= n) throw std::invalid_argument("table monoid: index out of range");
  }
  auto index_of = [&](const std::string& s) {
    auto it = std::find(m->elements_.begin(), m->elements_.end(), s);
    if (it == m->elements_.end()) throw std::invalid_argument("table monoid: unknown unit");
    return static_cast<std::size_t>(it - m->elements_.begin());
  };
  const std::size_t e = index_of(m->table_unit_);
  for (std::size_t i = 0; i < n; ++i)
    if (m->table_[e][i] != i || m->table_[i][e] != i)
      throw std::invalid_argument("table monoid: unit law fails");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (m->table_[m->table_[a][b]][c] != m->table_[a][m->table_[b][c]])
          throw std::invalid_argument("table monoid: associativity fails");
  bool comm = true, idem = true;
  for (std::size_t a = 0; a < n; ++a) {
    idem = idem && m->table_[a][a] == a;
    for (std::size_t b = 0; b < n; ++b) comm = comm && m->table_[a][b] == m->table_[b][a];
  }
  m->commutative_ = comm;
  m->idempotent_ = idem;
  return m;
}

std::shared_ptr<const Monoid> Monoid::by_id(const std::string& id) {
  if (id == "bool") return boolean();
  if (id == "nat-plus") return nat_plus();
  if (id == "nat-max") return nat_max();
  if (id.rfind("bk:", 0) == 0) {
    const auto k = std::stoull(id.substr(3));
    return truncated(k);
  }
  throw std::invalid_argument("unknown monoid id: " + id);
}

MonElem Monoid::unit() const {
  if (kind_ == Kind::table) return MonElem(table_unit_);
  return MonElem(std::uint64_t{0});
}

bool Monoid::contains(const MonElem& x) const {
  switch (kind_) {
    case Kind::boolean:
      return std::holds_alternative<std::uint64_t>(x) && std::get<std::uint64_t>(x) <= 1;
    case Kind::nat_plus:
    case Kind::nat_max:
      return std::holds_alternative<std::uint64_t>(x);
    case Kind::truncated:
      return std::holds_alternative<std::uint64_t>(x) && std::get<std::uint64_t>(x) <= cap_;
    case Kind::table:
      return std::holds_alternative<std::string>(x) &&
             std::find(elements_.begin(), elements_.end(), std::get<std::string>(x)) !=
                 elements_.end();
  }
  return false;
}

MonElem Monoid::combine(const MonElem& x, const MonElem& y) const {
  if (!contains(x) || !contains(y))
    throw std::invalid_argument("element outside the carrier of monoid " + id_);
  switch (kind_) {
    case Kind::boolean:
      return MonElem(std::uint64_t{nat_of(*this, x) | nat_of(*this, y)});
    case Kind::nat_plus:
      return MonElem(checked_add(nat_of(*this, x), nat_of(*this, y)));
    case Kind::nat_max:
      return MonElem(std::max(nat_of(*this, x), nat_of(*this, y)));
    case Kind::truncated:
      return MonElem(std::min(checked_add(nat_of(*this, x), nat_of(*this, y)), cap_));
    case Kind::table: {
      auto ix = std::find(elements_.begin(), elements_.end(), std::get<std::string>(x));
      auto iy = std::find(elements_.begin(), elements_.end(), std::get<std::string>(y));
      return MonElem(elements_[table_[static_cast<std::size_t>(ix - elements_.begin())]
                                     [static_cast<std::size_t>(iy - elements_.begin())]]);
    }
  }
  throw std::logic_error("unreachable");
}

std::string Monoid::print(const MonElem& x) const {
  if (kind_ == Kind::boolean) return std::get<std::uint64_t>(x) != 0 ? "T" : "F";
  if (std::holds_alternative<std::uint64_t>(x)) return std::to_string(std::get<std::uint64_t>(x));
  return std::get<std::string>(x);
}

MonElem Monoid::parse(const std::string& s) const {
  if (kind_ == Kind::boolean) {
    if (s == "T" || s == "1") return MonElem(std::uint64_t{1});
    if (s == "F" || s == "0") return MonElem(std::uint64_t{0});
    throw std::invalid_argument("bool label must be T or F, got: " + s);
  }
  if (kind_ == Kind::table) {
    MonElem x{s};
    if (!contains(x)) throw std::invalid_argument("unknown table element: " + s);
    return x;
  }
  MonElem x{static_cast<std::uint64_t>(std::stoull(s))};
  if (!contains(x)) throw std::invalid_argument("element outside carrier of " + id_ + ": " + s);
  return x;
}

std::optional<std::vector<MonElem>> Monoid::carrier() const {
  std::vector<MonElem> out;
  switch (kind_) {
    case Kind::boolean:
      out = {MonElem(std::uint64_t{0}), MonElem(std::uint64_t{1})};
      return out;
    case Kind::truncated:
      for (std::uint64_t v = 0; v <= cap_; ++v) out.emplace_back(v);
      return out;
    case Kind::table:
      for (const auto& e : elements_) out.emplace_back(e);
      return out;
    default:
      return std::nullopt;
  }
}

std::vector<MonElem> Monoid::sample_pool(std::uint64_t cap) const {
  if (auto c = carrier()) return *c;
  std::vector<MonElem> out;
  for (std::uint64_t v = 0; v <= cap; ++v) out.emplace_back(v);
  return out;
}

MonElem Monoid::sample(Rng& rng, std::uint64_t cap) const {
  const auto pool = sample_pool(cap);
  return pool[rng.below(pool.size())];
}

MonoidHom::MonoidHom(std::shared_ptr<const Monoid> source, std::shared_ptr<const Monoid> target,
                     std::function<MonElem(const MonElem&)> map, std::string id)
    : source_(std::move(source)),
      target_(std::move(target)),
      map_(std::move(map)),
      id_(std::move(id)) {}

MonoidHom MonoidHom::cutoff(std::uint64_t k) {
  return MonoidHom(Monoid::nat_plus(), Monoid::truncated(k),
                   [k](const MonElem& x) {
                     return MonElem(std::min(std::get<std::uint64_t>(x), k));
                   },
                   "cutoff:" + std::to_string(k));
}

MonoidHom MonoidHom::identity(std::shared_ptr<const Monoid> m) {
  return MonoidHom(m, m, [](const MonElem& x) { return x; }, "id:" + m->id());
}

MonElem MonoidHom::apply(const MonElem& x) const {
  if (!source_->contains(x))
    throw std::invalid_argument("hom " + id_ + ": argument outside source carrier");
  MonElem y = map_(x);
  if (!target_->contains(y))
    throw std::invalid_argument("hom " + id_ + ": image outside target carrier");
  return y;
}

MonoidHom compose(const MonoidHom& g, const MonoidHom& f) {
  if (f.target()->id() != g.source()->id())
    throw std::invalid_argument("hom composition: target/source mismatch");
  return MonoidHom(f.source(), g.target(),
                   [g, f](const MonElem& x) { return g.apply(f.apply(x)); },
                   g.id() + "." + f.id());
}

}  // namespace netop
