#include "netop/models.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace netop {

namespace {

Edge canon_edge(int i, int j, bool directed) {
  if (i == j) throw std::invalid_argument("edge endpoints must differ");
  if (!directed && i > j) std::swap(i, j);
  return {i, j};
}

void check_vertex(int v, int n) {
  if (v < 1 || v > n)
    throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." +
                                std::to_string(n));
}

Edge shift_edge(const Edge& e, int by) { return {e.first + by, e.second + by}; }

Edge map_edge(const Permutation& sigma, const Edge& e, bool directed) {
  return canon_edge(sigma(e.first), sigma(e.second), directed);
}

std::vector<Edge> all_edges(int n, bool directed) {
  std::vector<Edge> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j || (!directed && i > j)) continue;
      out.push_back({i, j});
    }
  return out;
}

// Simple and directed graphs: payload is a set of edges.
class EdgeSetModel final : public Model {
 public:
  EdgeSetModel(std::string id, bool directed) : Model(std::move(id)), directed_(directed) {}

  Net unit(int n) const override { return Net(shared_from_this(), n, std::set<Edge>{}); }

  Net sample(int n, Rng& rng, std::uint64_t) const override {
    std::set<Edge> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j || (!directed_ && i > j)) continue;
        if (rng.coin()) edges.insert({i, j});
      }
    return Net(shared_from_this(), n, std::move(edges));
  }

  nlohmann::json to_json(const Net& g) const override {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
    return {{"model", id()}, {"n", g.n()}, {"edges", edges}};
  }

  Net from_json(const nlohmann::json& j) const override {
    const int n = j.at("n").get<int>();
    std::set<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
      const Edge ce = canon_edge(e[0].get<int>(), e[1].get<int>(), directed_);
      check_vertex(ce.first, n);
      check_vertex(ce.second, n);
      if (!edges.insert(ce).second) throw std::invalid_argument("duplicate edge");
    }
    return Net(shared_from_this(), n, std::move(edges));
  }

  std::shared_ptr<const Monoid> label_monoid() const override { return Monoid::boolean(); }

  std::map<Edge, MonElem> edge_labels(const Net& g) const override {
    std::map<Edge, MonElem> out;
    for (const auto& e : g.edges()) out.emplace(e, MonElem(std::uint64_t{1}));
    return out;
  }

  Net from_edge_labels(int n, const std::map<Edge, MonElem>& labels) const override {
    std::set<Edge> edges;
    for (const auto& [e, v] : labels) {
      if (!Monoid::boolean()->contains(v))
        throw std::invalid_argument("label outside Boolean carrier");
      const Edge ce = canon_edge(e.first, e.second, directed_);
      check_vertex(ce.first, n);
      check_vertex(ce.second, n);
      if (std::get<std::uint64_t>(v) != 0) edges.insert(ce);
    }
    return Net(shared_from_this(), n, std::move(edges));
  }

  std::vector<Edge> edge_domain(int n) const override { return all_edges(n, directed_); }

 protected:
  Net overlay_impl(const Net& g, const Net& h) const override {
    std::set<Edge> edges = g.edges();
    edges.insert(h.edges().begin(), h.edges().end());
    return Net(shared_from_this(), g.n(), std::move(edges));
  }

  Net act_impl(const Permutation& sigma, const Net& g) const override {
    std::set<Edge> edges;
    for (const auto& e : g.edges()) edges.insert(map_edge(sigma, e, directed_));
    return Net(shared_from_this(), g.n(), std::move(edges));
  }

  Net djunion_impl(const Net& g, const Net& h) const override {
    std::set<Edge> edges = g.edges();
    for (const auto& e : h.edges()) edges.insert(shift_edge(e, g.n()));
    return Net(shared_from_this(), g.n() + h.n(), std::move(edges));
  }

 private:
  bool directed_;
};

// Sparse edge labellings over a monoid (absent key = unit). Covers the
// multigraph models and every gamma model.
class EdgeMapModel final : public Model {
 public:
  EdgeMapModel(std::string id, std::shared_ptr<const Monoid> monoid, bool directed,
               bool numeric_json)
      : Model(std::move(id)),
        monoid_(std::move(monoid)),
        directed_(directed),
        numeric_json_(numeric_json) {}

  Net unit(int n) const override { return Net(shared_from_this(), n, std::map<Edge, MonElem>{}); }

  Net sample(int n, Rng& rng, std::uint64_t cap) const override {
    std::map<Edge, MonElem> labels;
    const MonElem e = monoid_->unit();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j || (!directed_ && i > j)) continue;
        MonElem v = monoid_->sample(rng, cap);
        if (v != e) labels.emplace(Edge{i, j}, std::move(v));
      }
    return Net(shared_from_this(), n, std::move(labels));
  }

  nlohmann::json to_json(const Net& g) const override {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [e, v] : g.labels()) {
      if (numeric_json_)
        entries.push_back({e.first, e.second, std::get<std::uint64_t>(v)});
      else
        entries.push_back({e.first, e.second, monoid_->print(v)});
    }
    return {{"model", id()}, {"n", g.n()}, {numeric_json_ ? "edges" : "labels", entries}};
  }

  Net from_json(const nlohmann::json& j) const override {
    const int n = j.at("n").get<int>();
    std::map<Edge, MonElem> labels;
    for (const auto& entry : j.at(numeric_json_ ? "edges" : "labels")) {
      if (!entry.is_array() || entry.size() != 3)
        throw std::invalid_argument("labelled edge must be a triple");
      const Edge ce = canon_edge(entry[0].get<int>(), entry[1].get<int>(), directed_);
      check_vertex(ce.first, n);
      check_vertex(ce.second, n);
      MonElem v = numeric_json_ ? MonElem(entry[2].get<std::uint64_t>())
                                : monoid_->parse(entry[2].get<std::string>());
      if (!monoid_->contains(v))
        throw std::invalid_argument("label outside carrier of " + monoid_->id());
      if (labels.count(ce)) throw std::invalid_argument("duplicate edge");
      if (v != monoid_->unit()) labels.emplace(ce, std::move(v));
    }
    return Net(shared_from_this(), n, std::move(labels));
  }

  std::shared_ptr<const Monoid> label_monoid() const override { return monoid_; }

  std::map<Edge, MonElem> edge_labels(const Net& g) const override { return g.labels(); }

  Net from_edge_labels(int n, const std::map<Edge, MonElem>& labels) const override {
    std::map<Edge, MonElem> out;
    for (const auto& [e, v] : labels) {
      if (!monoid_->contains(v))
        throw std::invalid_argument("label outside carrier of " + monoid_->id());
      const Edge ce = canon_edge(e.first, e.second, directed_);
      check_vertex(ce.first, n);
      check_vertex(ce.second, n);
      if (v != monoid_->unit()) out.emplace(ce, v);
    }
    return Net(shared_from_this(), n, std::move(out));
  }

  std::vector<Edge> edge_domain(int n) const override { return all_edges(n, directed_); }

 protected:
  Net overlay_impl(const Net& g, const Net& h) const override {
    std::map<Edge, MonElem> labels = g.labels();
    const MonElem e = monoid_->unit();
    for (const auto& [key, v] : h.labels()) {
      auto it = labels.find(key);
      if (it == labels.end()) {
        labels.emplace(key, v);
      } else {
        MonElem combined = monoid_->combine(it->second, v);
        if (combined == e)
          labels.erase(it);
        else
          it->second = std::move(combined);
      }
    }
    return Net(shared_from_this(), g.n(), std::move(labels));
  }

  Net act_impl(const Permutation& sigma, const Net& g) const override {
    std::map<Edge, MonElem> labels;
    for (const auto& [e, v] : g.labels()) labels.emplace(map_edge(sigma, e, directed_), v);
    return Net(shared_from_this(), g.n(), std::move(labels));
  }

  Net djunion_impl(const Net& g, const Net& h) const override {
    std::map<Edge, MonElem> labels = g.labels();
    for (const auto& [e, v] : h.labels()) labels.emplace(shift_edge(e, g.n()), v);
    return Net(shared_from_this(), g.n() + h.n(), std::move(labels));
  }

 private:
  std::shared_ptr<const Monoid> monoid_;
  bool directed_;
  bool numeric_json_;
};

class HypergraphModel final : public Model {
 public:
  HypergraphModel() : Model("hg") {}

  Net unit(int n) const override {
    return Net(shared_from_this(), n, std::set<std::vector<int>>{});
  }

  Net sample(int n, Rng& rng, std::uint64_t) const override {
    std::set<std::vector<int>> hyperedges;
    if (n > 0) {
      const auto count = rng.below(4);
      for (std::uint64_t c = 0; c < count; ++c) {
        std::vector<int> he;
        for (int v = 1; v <= n; ++v)
          if (rng.coin()) he.push_back(v);
        if (he.empty()) he.push_back(rng.range(1, n));
        hyperedges.insert(std::move(he));
      }
    }
    return Net(shared_from_this(), n, std::move(hyperedges));
  }

  nlohmann::json to_json(const Net& g) const override {
    nlohmann::json hs = nlohmann::json::array();
    for (const auto& he : g.hyperedges()) hs.push_back(he);
    return {{"model", id()}, {"n", g.n()}, {"hyperedges", hs}};
  }

  Net from_json(const nlohmann::json& j) const override {
    const int n = j.at("n").get<int>();
    std::set<std::vector<int>> hyperedges;
    for (const auto& raw : j.at("hyperedges")) {
      auto he = raw.get<std::vector<int>>();
      if (he.empty()) throw std::invalid_argument("hyperedge must be nonempty");
      std::sort(he.begin(), he.end());
      if (std::adjacent_find(he.begin(), he.end()) != he.end())
        throw std::invalid_argument("hyperedge has repeated vertex");
      for (int v : he) check_vertex(v, n);
      if (!hyperedges.insert(std::move(he)).second)
        throw std::invalid_argument("duplicate hyperedge");
    }
    return Net(shared_from_this(), n, std::move(hyperedges));
  }

 protected:
  Net overlay_impl(const Net& g, const Net& h) const override {
    std::set<std::vector<int>> hs = g.hyperedges();
    hs.insert(h.hyperedges().begin(), h.hyperedges().end());
    return Net(shared_from_this(), g.n(), std::move(hs));
  }

  Net act_impl(const Permutation& sigma, const Net& g) const override {
    std::set<std::vector<int>> hs;
    for (const auto& he : g.hyperedges()) {
      std::vector<int> mapped;
      mapped.reserve(he.size());
      for (int v : he) mapped.push_back(sigma(v));
      std::sort(mapped.begin(), mapped.end());
      hs.insert(std::move(mapped));
    }
    return Net(shared_from_this(), g.n(), std::move(hs));
  }

  Net djunion_impl(const Net& g, const Net& h) const override {
    std::set<std::vector<int>> hs = g.hyperedges();
    for (const auto& he : h.hyperedges()) {
      std::vector<int> shifted;
      shifted.reserve(he.size());
      for (int v : he) shifted.push_back(v + g.n());
      hs.insert(std::move(shifted));
    }
    return Net(shared_from_this(), g.n() + h.n(), std::move(hs));
  }
};

std::vector<std::vector<int>> canon_blocks(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

// Partitions of {1..n} under the refinement lattice; overlay is join or meet.
class PartitionModel final : public Model {
 public:
  explicit PartitionModel(bool join) : Model(join ? "part-join" : "part-meet"), join_(join) {}

  Net unit(int n) const override {
    std::vector<std::vector<int>> blocks;
    if (join_) {
      for (int v = 1; v <= n; ++v) blocks.push_back({v});
    } else if (n > 0) {
      std::vector<int> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 1);
      blocks.push_back(std::move(all));
    }
    return Net(shared_from_this(), n, std::move(blocks));
  }

  Net sample(int n, Rng& rng, std::uint64_t) const override {
    // random sequence of merges starting from singletons
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[static_cast<std::size_t>(x)] == x
                 ? x
                 : parent[static_cast<std::size_t>(x)] =
                       find(parent[static_cast<std::size_t>(x)]);
    };
    if (n > 1) {
      const auto merges = rng.below(static_cast<std::uint64_t>(n));
      for (std::uint64_t k = 0; k < merges; ++k) {
        int a = find(rng.range(0, n - 1));
        int b = find(rng.range(0, n - 1));
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
    }
    std::map<int, std::vector<int>> groups;
    for (int v = 1; v <= n; ++v) groups[find(v - 1)].push_back(v);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, members] : groups) blocks.push_back(std::move(members));
    return Net(shared_from_this(), n, canon_blocks(std::move(blocks)));
  }

  nlohmann::json to_json(const Net& g) const override {
    nlohmann::json bs = nlohmann::json::array();
    for (const auto& b : g.blocks()) bs.push_back(b);
    return {{"model", id()}, {"n", g.n()}, {"blocks", bs}};
  }

  Net from_json(const nlohmann::json& j) const override {
    const int n = j.at("n").get<int>();
    auto blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& b : blocks) {
      if (b.empty()) throw std::invalid_argument("partition block must be nonempty");
      for (int v : b) {
        check_vertex(v, n);
        if (seen[static_cast<std::size_t>(v) - 1])
          throw std::invalid_argument("partition blocks are not disjoint");
        seen[static_cast<std::size_t>(v) - 1] = true;
      }
    }
    for (bool s : seen)
      if (!s) throw std::invalid_argument("partition blocks do not cover {1..n}");
    return Net(shared_from_this(), n, canon_blocks(std::move(blocks)));
  }

 protected:
  Net overlay_impl(const Net& g, const Net& h) const override {
    return join_ ? join(g, h) : meet(g, h);
  }

  Net act_impl(const Permutation& sigma, const Net& g) const override {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : g.blocks()) {
      std::vector<int> mapped;
      mapped.reserve(b.size());
      for (int v : b) mapped.push_back(sigma(v));
      blocks.push_back(std::move(mapped));
    }
    return Net(shared_from_this(), g.n(), canon_blocks(std::move(blocks)));
  }

  Net djunion_impl(const Net& g, const Net& h) const override {
    const int n = g.n() + h.n();
    if (join_ || g.n() == 0 || h.n() == 0) {
      std::vector<std::vector<int>> blocks = g.blocks();
      for (const auto& b : h.blocks()) {
        std::vector<int> shifted;
        shifted.reserve(b.size());
        for (int v : b) shifted.push_back(v + g.n());
        blocks.push_back(std::move(shifted));
      }
      return Net(shared_from_this(), n, canon_blocks(std::move(blocks)));
    }
    // Meet model: the unit at n is the one-block partition, and any
    // equivariant structure map merging the halves closes transitively, so
    // the disjoint union of two nonempty partitions is the top partition.
    return unit(n);
  }

 private:
  Net join(const Net& g, const Net& h) const {
    const int n = g.n();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[static_cast<std::size_t>(x)] == x
                 ? x
                 : parent[static_cast<std::size_t>(x)] =
                       find(parent[static_cast<std::size_t>(x)]);
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[static_cast<std::size_t>(a)] = b;
    };
    for (const Net* part : {&g, &h})
      for (const auto& b : part->blocks())
        for (std::size_t i = 1; i < b.size(); ++i) unite(b[0] - 1, b[i] - 1);
    std::map<int, std::vector<int>> groups;
    for (int v = 1; v <= n; ++v) groups[find(v - 1)].push_back(v);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, members] : groups) blocks.push_back(std::move(members));
    return Net(shared_from_this(), n, canon_blocks(std::move(blocks)));
  }

  Net meet(const Net& g, const Net& h) const {
    std::vector<std::vector<int>> blocks;
    for (const auto& a : g.blocks())
      for (const auto& b : h.blocks()) {
        std::vector<int> inter;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(inter));
        if (!inter.empty()) blocks.push_back(std::move(inter));
      }
    return Net(shared_from_this(), g.n(), canon_blocks(std::move(blocks)));
  }

  bool join_;
};

// Pointwise product of two models; every structure map acts componentwise.
class TensorModel final : public Model {
 public:
  TensorModel(std::shared_ptr<const Model> left, std::shared_ptr<const Model> right)
      : Model("tensor(" + left->id() + "," + right->id() + ")"),
        left_(std::move(left)),
        right_(std::move(right)) {}

  Net unit(int n) const override { return make(left_->unit(n), right_->unit(n)); }

  Net sample(int n, Rng& rng, std::uint64_t cap) const override {
    return make(left_->sample(n, rng, cap), right_->sample(n, rng, cap));
  }

  nlohmann::json to_json(const Net& g) const override {
    const auto& p = g.pair();
    return {{"model", id()},
            {"n", g.n()},
            {"parts", nlohmann::json::array({left_->to_json(p.left), right_->to_json(p.right)})}};
  }

  Net from_json(const nlohmann::json& j) const override {
    const int n = j.at("n").get<int>();
    const auto& parts = j.at("parts");
    if (!parts.is_array() || parts.size() != 2)
      throw std::invalid_argument("tensor element needs exactly two parts");
    Net l = left_->from_json(parts[0]);
    Net r = right_->from_json(parts[1]);
    if (l.n() != n || r.n() != n)
      throw std::invalid_argument("tensor parts disagree with arity");
    return make(std::move(l), std::move(r));
  }

 protected:
  Net overlay_impl(const Net& g, const Net& h) const override {
    return make(left_->overlay(g.pair().left, h.pair().left),
                right_->overlay(g.pair().right, h.pair().right));
  }

  Net act_impl(const Permutation& sigma, const Net& g) const override {
    return make(left_->act(sigma, g.pair().left), right_->act(sigma, g.pair().right));
  }

  Net djunion_impl(const Net& g, const Net& h) const override {
    return make(left_->djunion(g.pair().left, h.pair().left),
                right_->djunion(g.pair().right, h.pair().right));
  }

 private:
  Net make(Net l, Net r) const {
    const int n = l.n();
    return Net(shared_from_this(), n,
               std::make_shared<const NetPair>(NetPair{std::move(l), std::move(r)}));
  }

  std::shared_ptr<const Model> left_, right_;
};

// Shared instances keyed by id; guarded so concurrent lookups stay safe.
std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::shared_ptr<const Model>>& registry() {
  static std::map<std::string, std::shared_ptr<const Model>> cache;
  return cache;
}

std::shared_ptr<const Model> remember(std::shared_ptr<const Model> m) {
  const std::lock_guard<std::mutex> lock(registry_mutex());
  auto [it, inserted] = registry().emplace(m->id(), std::move(m));
  return it->second;
}

std::shared_ptr<const Model> lookup(const std::string& id) {
  const std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry().find(id);
  return it == registry().end() ? nullptr : it->second;
}

}  // namespace

std::shared_ptr<const Model> gamma_model(const std::shared_ptr<const Monoid>& m) {
  switch (m->kind()) {
    case Monoid::Kind::nat_plus:
      return model_by_id("mgplus");
    case Monoid::Kind::nat_max:
      return model_by_id("mg");
    case Monoid::Kind::truncated:
      if (m->cap() == 1) return model_by_id("sg");
      [[fallthrough]];
    case Monoid::Kind::boolean:
    case Monoid::Kind::table: {
      const std::string id = "gamma:" + m->id();
      if (auto cached = lookup(id)) return cached;
      return remember(std::make_shared<EdgeMapModel>(id, m, false, false));
    }
  }
  throw std::logic_error("unreachable");
}

std::shared_ptr<const Model> tensor_models(const std::shared_ptr<const Model>& left,
                                           const std::shared_ptr<const Model>& right) {
  const std::string id = "tensor(" + left->id() + "," + right->id() + ")";
  if (auto cached = lookup(id)) return cached;
  return remember(std::make_shared<TensorModel>(left, right));
}

std::shared_ptr<const Model> model_by_id(const std::string& id) {
  if (auto cached = lookup(id)) return cached;

  if (id == "sg") return remember(std::make_shared<EdgeSetModel>("sg", false));
  if (id == "dg") return remember(std::make_shared<EdgeSetModel>("dg", true));
  if (id == "mg")
    return remember(std::make_shared<EdgeMapModel>("mg", Monoid::nat_max(), false, true));
  if (id == "mgplus")
    return remember(std::make_shared<EdgeMapModel>("mgplus", Monoid::nat_plus(), false, true));
  if (id == "dmg")
    return remember(std::make_shared<EdgeMapModel>("dmg", Monoid::nat_max(), true, true));
  if (id == "dmgplus")
    return remember(std::make_shared<EdgeMapModel>("dmgplus", Monoid::nat_plus(), true, true));
  if (id == "hg") return remember(std::make_shared<HypergraphModel>());
  if (id == "part-join") return remember(std::make_shared<PartitionModel>(true));
  if (id == "part-meet") return remember(std::make_shared<PartitionModel>(false));

  if (id.rfind("gamma:", 0) == 0) {
    const auto monoid = Monoid::by_id(id.substr(6));
    auto resolved = gamma_model(monoid);
    if (resolved->id() == id) return resolved;
    // alias like gamma:nat-plus -> mgplus; cache under the alias as well
    const std::lock_guard<std::mutex> lock(registry_mutex());
    registry().emplace(id, resolved);
    return resolved;
  }

  if (id.rfind("tensor(", 0) == 0 && id.back() == ')') {
    const std::string inner = id.substr(7, id.size() - 8);
    int depth = 0;
    for (std::size_t k = 0; k < inner.size(); ++k) {
      const char c = inner[k];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0)
        return tensor_models(model_by_id(inner.substr(0, k)), model_by_id(inner.substr(k + 1)));
    }
    throw std::invalid_argument("malformed tensor id: " + id);
  }

  throw std::invalid_argument("unknown model id: " + id);
}

Net convert_edge_valued(const Net& g, const std::shared_ptr<const Model>& target) {
  return target->from_edge_labels(g.n(), g.model().edge_labels(g));
}

Net net_from_json(const nlohmann::json& j) {
  return model_by_id(j.at("model").get<std::string>())->from_json(j);
}

Net net_from_json_text(const std::string& text) {
  return net_from_json(nlohmann::json::parse(text));
}

}  // namespace netop
