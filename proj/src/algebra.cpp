#include "netop/algebra.hpp"

#include <stdexcept>

namespace netop {

namespace {

void check_slots(const Op& f, std::size_t count) {
  if (count != f.profile().inputs.size())
    throw std::invalid_argument("action: expected " +
                                std::to_string(f.profile().inputs.size()) +
                                " arguments, got " + std::to_string(count));
}

const Point& point_of(const Attr& a) {
  if (auto* p = std::get_if<Point>(&a)) return *p;
  throw std::invalid_argument("distance rule needs planar point attributes");
}

}  // namespace

Net act_canonical(const Op& f, const std::vector<Net>& hs) {
  check_slots(f, hs.size());
  Net sum = f.model().unit(0);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (hs[i].n() != f.profile().inputs[i])
      throw std::invalid_argument("action: slot " + std::to_string(i + 1) + " has arity " +
                                  std::to_string(hs[i].n()) + ", expected " +
                                  std::to_string(f.profile().inputs[i]));
    sum = f.model().djunion(sum, hs[i]);
  }
  return f.model().overlay(f.net(), f.model().act(f.perm(), sum));
}

std::string attr_to_string(const Attr& a) {
  if (auto* s = std::get_if<std::string>(&a)) return *s;
  const auto& p = std::get<Point>(a);
  return "(" + p.x.str() + "," + p.y.str() + ")";
}

namespace {

nlohmann::json rat_json(const Rat& r) {
  if (r.den() == 1) return r.num();
  return r.str();
}

Rat rat_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Rat::from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_float()) return Rat::from_double(j.get<double>());
  throw std::invalid_argument("coordinate must be a number or a rational string");
}

}  // namespace

nlohmann::json attrs_to_json(const std::vector<Attr>& attrs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& a : attrs) {
    if (auto* s = std::get_if<std::string>(&a)) {
      out.push_back(*s);
    } else {
      const auto& p = std::get<Point>(a);
      out.push_back({rat_json(p.x), rat_json(p.y)});
    }
  }
  return out;
}

std::vector<Attr> attrs_from_json(const nlohmann::json& j) {
  std::vector<Attr> out;
  for (const auto& item : j) {
    if (item.is_string()) {
      out.emplace_back(item.get<std::string>());
    } else if (item.is_array() && item.size() == 2) {
      out.emplace_back(Point{rat_from_json(item[0]), rat_from_json(item[1])});
    } else {
      throw std::invalid_argument("attribute must be a symbol or an [x,y] point");
    }
  }
  return out;
}

AttributedNet::AttributedNet(Net net_in, std::vector<Attr> attrs_in)
    : net(std::move(net_in)), attrs(std::move(attrs_in)) {
  if (static_cast<int>(attrs.size()) != net.n())
    throw std::invalid_argument("attribute count " + std::to_string(attrs.size()) +
                                " does not match arity " + std::to_string(net.n()));
}

bool operator==(const AttributedNet& a, const AttributedNet& b) {
  return a.net == b.net && a.attrs == b.attrs;
}

nlohmann::json attributed_to_json(const AttributedNet& a) {
  nlohmann::json j = a.net.model().to_json(a.net);
  j["attrs"] = attrs_to_json(a.attrs);
  return j;
}

AttributedNet act_attributes(const Op& f, const std::vector<AttributedNet>& items) {
  check_slots(f, items.size());
  std::vector<Net> nets;
  std::vector<Attr> concat;
  nets.reserve(items.size());
  for (const auto& item : items) {
    nets.push_back(item.net);
    concat.insert(concat.end(), item.attrs.begin(), item.attrs.end());
  }
  Net out = act_canonical(f, nets);
  std::vector<Attr> permuted(concat.size(), Attr{});
  for (int i = 1; i <= f.perm().degree(); ++i)
    permuted[static_cast<std::size_t>(f.perm()(i)) - 1] =
        concat[static_cast<std::size_t>(i) - 1];
  return AttributedNet(std::move(out), std::move(permuted));
}

Net hom_forget(const AttributedNet& a) { return a.net; }

EdgePredicate::EdgePredicate(std::string id, std::function<bool(const Attr&, const Attr&)> fn)
    : id_(std::move(id)), fn_(std::move(fn)) {}

EdgePredicate EdgePredicate::always_true() {
  return EdgePredicate("true", [](const Attr&, const Attr&) { return true; });
}

EdgePredicate EdgePredicate::within_range(const Rat& limit) {
  const Rat l2 = limit * limit;
  return EdgePredicate("range:" + limit.str(), [l2](const Attr& a, const Attr& b) {
    return squared_distance(point_of(a), point_of(b)) <= l2;
  });
}

bool satisfies(const EdgePredicate& p, const AttributedNet& a) {
  for (const auto& [i, j] : a.net.edges())
    if (!p(a.attrs[static_cast<std::size_t>(i) - 1], a.attrs[static_cast<std::size_t>(j) - 1]))
      return false;
  return true;
}

AttributedNet enforce_predicate(const EdgePredicate& p, const AttributedNet& a) {
  std::set<Edge> kept;
  for (const auto& e : a.net.edges())
    if (p(a.attrs[static_cast<std::size_t>(e.first) - 1],
          a.attrs[static_cast<std::size_t>(e.second) - 1]))
      kept.insert(e);
  return AttributedNet(Net(a.net.model_ptr(), a.net.n(), std::move(kept)), a.attrs);
}

AttributedNet act_predicate(const EdgePredicate& p, const Op& f,
                            const std::vector<AttributedNet>& items) {
  for (std::size_t i = 0; i < items.size(); ++i)
    if (!satisfies(p, items[i]))
      throw std::invalid_argument("act_predicate: input " + std::to_string(i + 1) +
                                  " violates the rule " + p.id());
  return enforce_predicate(p, act_attributes(f, items));
}

EdgeBound::EdgeBound(std::string id, std::function<std::uint64_t(const Attr&, const Attr&)> fn)
    : id_(std::move(id)), fn_(std::move(fn)) {}

EdgeBound EdgeBound::constant(std::uint64_t c) {
  return EdgeBound("const:" + std::to_string(c),
                   [c](const Attr&, const Attr&) { return c; });
}

EdgeBound EdgeBound::two_range(const Rat& l1, const Rat& l2) {
  const Rat sq1 = l1 * l1;
  const Rat sq2 = l2 * l2;
  return EdgeBound("two-range:" + l1.str() + ":" + l2.str(),
                   [sq1, sq2](const Attr& a, const Attr& b) -> std::uint64_t {
                     const Rat d2 = squared_distance(point_of(a), point_of(b));
                     if (sq1 < d2) return 0;
                     if (sq2 < d2) return 1;
                     return 2;
                   });
}

bool satisfies(const EdgeBound& b, const AttributedNet& a) {
  for (const auto& [e, v] : a.net.labels())
    if (std::get<std::uint64_t>(v) > b(a.attrs[static_cast<std::size_t>(e.first) - 1],
                                       a.attrs[static_cast<std::size_t>(e.second) - 1]))
      return false;
  return true;
}

AttributedNet enforce_bound(const EdgeBound& b, const AttributedNet& a) {
  std::map<Edge, MonElem> clamped;
  for (const auto& [e, v] : a.net.labels()) {
    const std::uint64_t cap = b(a.attrs[static_cast<std::size_t>(e.first) - 1],
                                a.attrs[static_cast<std::size_t>(e.second) - 1]);
    const std::uint64_t kept = std::min(std::get<std::uint64_t>(v), cap);
    if (kept > 0) clamped.emplace(e, MonElem(kept));
  }
  return AttributedNet(Net(a.net.model_ptr(), a.net.n(), std::move(clamped)), a.attrs);
}

AttributedNet act_bounded(const EdgeBound& b, const Op& f,
                          const std::vector<AttributedNet>& items) {
  for (std::size_t i = 0; i < items.size(); ++i)
    if (!satisfies(b, items[i]))
      throw std::invalid_argument("act_bounded: input " + std::to_string(i + 1) +
                                  " exceeds the bound " + b.id());
  return enforce_bound(b, act_attributes(f, items));
}

std::vector<std::uint64_t> degrees(const Net& sg) {
  std::vector<std::uint64_t> deg(static_cast<std::size_t>(sg.n()), 0);
  for (const auto& [i, j] : sg.edges()) {
    ++deg[static_cast<std::size_t>(i) - 1];
    ++deg[static_cast<std::size_t>(j) - 1];
  }
  return deg;
}

PortedNet::PortedNet(Net graph_in, std::vector<std::uint64_t> ports_in)
    : graph(std::move(graph_in)), ports(std::move(ports_in)) {
  if (graph.model().id() != "sg")
    throw std::invalid_argument("ported network must be a simple graph");
  if (static_cast<int>(ports.size()) != graph.n())
    throw std::invalid_argument("port vector length does not match arity");
  const auto deg = degrees(graph);
  for (std::size_t i = 0; i < deg.size(); ++i)
    if (deg[i] > ports[i])
      throw std::invalid_argument("vertex " + std::to_string(i + 1) +
                                  " exceeds its port capacity");
}

bool operator==(const PortedNet& a, const PortedNet& b) {
  return a.graph == b.graph && a.ports == b.ports;
}

AttemptWord::AttemptWord(int n_in, std::vector<Edge> attempts_in)
    : n(n_in), attempts(std::move(attempts_in)) {
  for (auto& [i, j] : attempts) {
    if (i == j) throw std::invalid_argument("attempt endpoints must differ");
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n)
      throw std::invalid_argument("attempt references vertex outside 1.." + std::to_string(n));
  }
}

nlohmann::json ported_to_json(const PortedNet& p) {
  nlohmann::json j = p.graph.model().to_json(p.graph);
  j["ports"] = p.ports;
  return j;
}

PortedNet ported_from_json(const nlohmann::json& j) {
  Net graph = model_by_id(j.at("model").get<std::string>())->from_json(j);
  return PortedNet(std::move(graph), j.at("ports").get<std::vector<std::uint64_t>>());
}

nlohmann::json attempts_to_json(const AttemptWord& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [i, j] : w.attempts) out.push_back({i, j});
  return out;
}

AttemptWord attempts_from_json(int n, const nlohmann::json& j) {
  std::vector<Edge> attempts;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("attempt must be a vertex pair");
    attempts.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return AttemptWord(n, std::move(attempts));
}

PortedNet process_attempts(PortedNet state, const std::vector<Edge>& attempts) {
  const int n = state.graph.n();
  std::set<Edge> edges = state.graph.edges();
  auto deg = degrees(state.graph);
  for (auto [i, j] : attempts) {
    if (i > j) std::swap(i, j);
    if (i == j || i < 1 || j > n)
      throw std::invalid_argument("attempt references vertex outside 1.." + std::to_string(n));
    const Edge e{i, j};
    if (edges.count(e)) continue;
    if (deg[static_cast<std::size_t>(i) - 1] < state.ports[static_cast<std::size_t>(i) - 1] &&
        deg[static_cast<std::size_t>(j) - 1] < state.ports[static_cast<std::size_t>(j) - 1]) {
      edges.insert(e);
      ++deg[static_cast<std::size_t>(i) - 1];
      ++deg[static_cast<std::size_t>(j) - 1];
    }
  }
  return PortedNet(Net(state.graph.model_ptr(), n, std::move(edges)), state.ports);
}

PortedNet act_degree_limited(const Permutation& sigma, const AttemptWord& w,
                             const std::vector<PortedNet>& items) {
  const auto sg = model_by_id("sg");
  Net graph = sg->unit(0);
  std::vector<std::uint64_t> ports;
  for (const auto& item : items) {
    graph = sg->djunion(graph, item.graph);
    ports.insert(ports.end(), item.ports.begin(), item.ports.end());
  }
  if (graph.n() != w.n || sigma.degree() != w.n)
    throw std::invalid_argument("act_degree_limited: arity mismatch");
  graph = sg->act(sigma, graph);
  std::vector<std::uint64_t> permuted(ports.size(), 0);
  for (int i = 1; i <= sigma.degree(); ++i)
    permuted[static_cast<std::size_t>(sigma(i)) - 1] = ports[static_cast<std::size_t>(i) - 1];
  return process_attempts(PortedNet(std::move(graph), std::move(permuted)), w.attempts);
}

}  // namespace netop
