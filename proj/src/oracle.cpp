#include "netop/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

namespace netop {
namespace oracle {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

nlohmann::json net_json(const Net& g) { return g.model().to_json(g); }

Permutation random_perm(int n, Rng& rng) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(im[static_cast<std::size_t>(i)],
              im[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return Permutation(std::move(im));
}

std::vector<int> random_split(int total, int parts, Rng& rng) {
  std::vector<int> out(static_cast<std::size_t>(parts), 0);
  for (int u = 0; u < total; ++u) ++out[rng.below(static_cast<std::uint64_t>(parts))];
  return out;
}

Op random_op_with_output(const std::shared_ptr<const Model>& model, int output, Rng& rng,
                         std::uint64_t cap) {
  const int k = rng.range(1, 3);
  Profile profile{random_split(output, k, rng), output};
  return Op(model, std::move(profile), random_perm(output, rng),
            model->sample(output, rng, cap));
}

std::vector<Op> random_args(const std::shared_ptr<const Model>& model, const Profile& parent,
                            Rng& rng, std::uint64_t cap) {
  std::vector<Op> gs;
  gs.reserve(parent.inputs.size());
  for (int n : parent.inputs) gs.push_back(random_op_with_output(model, n, rng, cap));
  return gs;
}

// One law's run state: counts cases, stops at the first counterexample.
class LawRun {
 public:
  LawRun(std::string name, std::uint64_t seed) : start_(Clock::now()) {
    report_.law = std::move(name);
    report_.seed = seed;
  }

  bool failed() const { return !report_.passed; }

  template <typename Lhs, typename Rhs, typename InputsFn>
  void require_equal(const Lhs& lhs, const Rhs& rhs, InputsFn&& inputs) {
    if (failed()) return;
    ++report_.cases;
    if (lhs == rhs) return;
    report_.passed = false;
    nlohmann::json cx = inputs();
    if constexpr (std::is_same_v<Lhs, Net>) {
      cx["lhs"] = net_json(lhs);
      cx["rhs"] = net_json(rhs);
    } else {
      cx["lhs"] = lhs;
      cx["rhs"] = rhs;
    }
    report_.counterexample = cx.dump();
  }

  void check(bool ok, const std::function<nlohmann::json()>& inputs) {
    if (failed()) return;
    ++report_.cases;
    if (ok) return;
    report_.passed = false;
    report_.counterexample = inputs().dump();
  }

  LawReport finish() {
    report_.elapsed_ms = ms_since(start_);
    return report_;
  }

 private:
  LawReport report_;
  Clock::time_point start_;
};

}  // namespace

nlohmann::json report_json(const LawReport& r) {
  nlohmann::json j{{"law", r.law},
                   {"cases", r.cases},
                   {"passed", r.passed},
                   {"seed", r.seed}};
  if (!r.passed) j["counterexample"] = r.counterexample;
  return j;
}

bool all_passed(const std::vector<LawReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const LawReport& r) { return r.passed; });
}

Op compose_via_category(const Op& f, const std::vector<Op>& gs) {
  const std::size_t k = f.profile().inputs.size();
  if (gs.size() != k)
    throw std::invalid_argument("compose_via_category: expected " + std::to_string(k) +
                                " arguments, got " + std::to_string(gs.size()));
  Profile out;
  out.output = f.profile().output;
  for (std::size_t i = 0; i < k; ++i) {
    if (gs[i].model().id() != f.model().id())
      throw std::invalid_argument("compose_via_category: slot " + std::to_string(i + 1) +
                                  " is an operation of another model");
    if (gs[i].profile().output != f.profile().inputs[i])
      throw std::invalid_argument("compose_via_category: slot " + std::to_string(i + 1) +
                                  " output does not match the profile");
    out.inputs.insert(out.inputs.end(), gs[i].profile().inputs.begin(),
                      gs[i].profile().inputs.end());
  }
  // Morphisms of the category of elements are (permutation, network) pairs.
  struct CatMor {
    Permutation perm;
    Net net;
  };
  // (a, g) (x) (b, h) = (a + b, g ++ h), folded right-associated.
  CatMor tensored{Permutation::identity(0), f.model().unit(0)};
  for (std::size_t i = k; i-- > 0;)
    tensored = CatMor{block_sum(gs[i].perm(), tensored.perm),
                      f.model().djunion(gs[i].net(), tensored.net)};
  // (sigma, g) o (pi, h) = (sigma pi, g u sigma(h)).
  Permutation perm = compose(f.perm(), tensored.perm);
  Net net = f.model().overlay(f.net(), f.model().act(f.perm(), tensored.net));
  return Op(f.model_ptr(), std::move(out), std::move(perm), std::move(net));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

namespace {

void check_budget(long long count, long long budget, const std::string& what) {
  if (count > budget)
    throw std::length_error("enumeration of " + what + " needs " + std::to_string(count) +
                            " elements, over the budget of " + std::to_string(budget));
}

std::vector<Net> enumerate_edge_valued(const std::shared_ptr<const Model>& model, int n,
                                       long long budget, std::uint64_t label_cap) {
  const auto domain = model->edge_domain(n);
  const auto pool = model->label_monoid()->sample_pool(label_cap);
  long long count = 1;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    count *= static_cast<long long>(pool.size());
    check_budget(count, budget, model->id() + "(" + std::to_string(n) + ")");
  }
  std::vector<Net> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::size_t> odometer(domain.size(), 0);
  const MonElem unit = model->label_monoid()->unit();
  while (true) {
    std::map<Edge, MonElem> labels;
    for (std::size_t i = 0; i < domain.size(); ++i)
      if (pool[odometer[i]] != unit) labels.emplace(domain[i], pool[odometer[i]]);
    out.push_back(model->from_edge_labels(n, labels));
    std::size_t pos = 0;
    while (pos < odometer.size()) {
      if (++odometer[pos] < pool.size()) break;
      odometer[pos] = 0;
      ++pos;
    }
    if (pos == odometer.size()) break;
    if (domain.empty()) break;
  }
  return out;
}

std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  // restricted growth strings
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto emit = [&] {
    int blocks = 0;
    for (int v : rgs) blocks = std::max(blocks, v + 1);
    std::vector<std::vector<int>> bs(static_cast<std::size_t>(blocks));
    for (int i = 0; i < n; ++i) bs[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])]
        .push_back(i + 1);
    out.push_back(std::move(bs));
  };
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == n) {
      emit();
      return;
    }
    for (int v = 0; v <= max_used + 1; ++v) {
      rgs[static_cast<std::size_t>(i)] = v;
      rec(i + 1, std::max(max_used, v));
    }
  };
  rec(1, 0);  // rgs[0] = 0 always
  return out;
}

std::vector<std::vector<int>> nonempty_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) s.push_back(v + 1);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<Net> enumerate_model(const std::shared_ptr<const Model>& model, int n,
                                 long long budget, std::uint64_t label_cap) {
  if (model->label_monoid()) return enumerate_edge_valued(model, n, budget, label_cap);

  const std::string& id = model->id();
  if (id == "part-join" || id == "part-meet") {
    auto parts = set_partitions(n);
    check_budget(static_cast<long long>(parts.size()), budget, id);
    std::vector<Net> out;
    for (auto& blocks : parts) {
      nlohmann::json j{{"model", id}, {"n", n}, {"blocks", blocks}};
      out.push_back(model->from_json(j));
    }
    return out;
  }
  if (id == "hg") {
    const auto subsets = nonempty_subsets(n);
    if (subsets.size() > 20)
      throw std::length_error("hypergraph enumeration is infeasible at arity " +
                              std::to_string(n));
    const long long count = 1LL << subsets.size();
    check_budget(count, budget, id);
    std::vector<Net> out;
    for (long long mask = 0; mask < count; ++mask) {
      nlohmann::json hs = nlohmann::json::array();
      for (std::size_t b = 0; b < subsets.size(); ++b)
        if (mask & (1LL << b)) hs.push_back(subsets[b]);
      out.push_back(model->from_json({{"model", id}, {"n", n}, {"hyperedges", hs}}));
    }
    return out;
  }
  if (id.rfind("tensor(", 0) == 0) {
    // enumerate both components through their JSON forms
    const std::string inner = id.substr(7, id.size() - 8);
    int depth = 0;
    for (std::size_t c = 0; c < inner.size(); ++c) {
      if (inner[c] == '(') ++depth;
      if (inner[c] == ')') --depth;
      if (inner[c] == ',' && depth == 0) {
        auto left = model_by_id(inner.substr(0, c));
        auto right = model_by_id(inner.substr(c + 1));
        auto ls = enumerate_model(left, n, budget, label_cap);
        auto rs = enumerate_model(right, n, budget, label_cap);
        check_budget(static_cast<long long>(ls.size()) * static_cast<long long>(rs.size()),
                     budget, id);
        std::vector<Net> out;
        for (const auto& l : ls)
          for (const auto& r : rs)
            out.push_back(model->from_json(
                {{"model", id},
                 {"n", n},
                 {"parts", nlohmann::json::array({left->to_json(l), right->to_json(r)})}}));
        return out;
      }
    }
  }
  throw std::length_error("no exhaustive enumeration for model " + id);
}

namespace {

// Exhaustive runs never loop beyond these arities: 3 where three or more
// values are quantified at once, 4 otherwise, shrinking further when the
// carrier at some arity would push a law past the case budget.
constexpr int kTripleCeiling = 3;
constexpr int kWideCeiling = 4;
constexpr long long kExhaustiveCaseBudget = 2'000'000;

// Everything the twelve equation checks need, in both modes.
struct Thm3Context {
  std::shared_ptr<const Model> model;
  Thm3Options opt;
  Rng rng;
  // exhaustive caches, indexed by arity
  std::vector<std::vector<Net>> elems;
  std::vector<std::vector<Permutation>> perms;

  explicit Thm3Context(std::shared_ptr<const Model> m, const Thm3Options& o)
      : model(std::move(m)), opt(o), rng(o.seed) {
    if (opt.exhaustive) {
      for (int n = 0; n <= std::min(opt.max_n, kWideCeiling); ++n) {
        elems.push_back(enumerate_model(model, n, 1 << 20, opt.cap));
        perms.push_back(all_permutations(n));
      }
    }
  }

  long long esize(int n) const { return static_cast<long long>(elems[static_cast<std::size_t>(n)].size()); }
  long long psize(int n) const { return static_cast<long long>(perms[static_cast<std::size_t>(n)].size()); }

  // Largest arity <= hard_cap (and max_n) whose projected case count fits.
  int ceiling(int hard_cap, const std::function<long long(int)>& cases_for) const {
    int c = std::min(hard_cap, opt.max_n);
    while (c > 0 && cases_for(c) > kExhaustiveCaseBudget) --c;
    return c;
  }

  Net sample_net(int n) { return model->sample(n, rng, opt.cap); }
  Permutation sample_perm(int n) { return random_perm(n, rng); }
  int sample_arity() { return rng.range(0, opt.max_n); }
};

}  // namespace

std::vector<LawReport> check_thm3(const std::shared_ptr<const Model>& model,
                                  const Thm3Options& opt) {
  Thm3Context cx(model, opt);
  const Model& m = *model;
  std::vector<LawReport> reports;

  auto inputs1 = [&](const Net& g) {
    return [&m, g] { return nlohmann::json{{"g", m.to_json(g)}}; };
  };

  // eq 1: e_n u g = g u e_n = g
  {
    LawRun run("thm3.eq1", opt.seed);
    auto kase = [&](const Net& g) {
      const Net e = m.unit(g.n());
      run.require_equal(m.overlay(e, g), g, inputs1(g));
      run.require_equal(m.overlay(g, e), g, inputs1(g));
    };
    if (opt.exhaustive) {
      const int cap = cx.ceiling(kWideCeiling, [&](int c) {
        long long total = 0;
        for (int n = 0; n <= c; ++n) total += cx.esize(n);
        return total;
      });
      for (int n = 0; n <= cap && !run.failed(); ++n)
        for (const auto& g : cx.elems[static_cast<std::size_t>(n)]) kase(g);
    } else {
      for (long long s = 0; s < opt.samples && !run.failed(); ++s)
        kase(cx.sample_net(cx.sample_arity()));
    }
    reports.push_back(run.finish());
  }

  // eq 2: g1 u (g2 u g3) = (g1 u g2) u g3
  {
    LawRun run("thm3.eq2", opt.seed);
    auto kase = [&](const Net& g1, const Net& g2, const Net& g3) {
      run.require_equal(m.overlay(g1, m.overlay(g2, g3)), m.overlay(m.overlay(g1, g2), g3),
                        [&] {
                          return nlohmann::json{{"g1", net_json(g1)},
                                                {"g2", net_json(g2)},
                                                {"g3", net_json(g3)}};
                        });
    };
    if (opt.exhaustive) {
      const int cap = cx.ceiling(kTripleCeiling, [&](int c) {
        long long total = 0;
        for (int n = 0; n <= c; ++n) total += cx.esize(n) * cx.esize(n) * cx.esize(n);
        return total;
      });
      for (int n = 0; n <= cap && !run.failed(); ++n)
        for (const auto& g1 : cx.elems[static_cast<std::size_t>(n)])
          for (const auto& g2 : cx.elems[static_cast<std::size_t>(n)])
            for (const auto& g3 : cx.elems[static_cast<std::size_t>(n)]) {
              if (run.failed()) break;
              kase(g1, g2, g3);
            }
    } else {
      for (long long s = 0; s < opt.samples && !run.failed(); ++s) {
        const int n = cx.sample_arity();
        kase(cx.sample_net(n), cx.sample_net(n), cx.sample_net(n));
      }
    }
    reports.push_back(run.finish());
  }

  // eq 3: sigma(g1 u g2) = sigma g1 u sigma g2
  {
    LawRun run("thm3.eq3", opt.seed);
    auto kase = [&](const Permutation& s, const Net& g1, const Net& g2) {
      run.require_equal(m.act(s, m.overlay(g1, g2)), m.overlay(m.act(s, g1), m.act(s, g2)),
                        [&] {
                          return nlohmann::json{{"sigma", s.images()},
                                                {"g1", net_json(g1)},
                                                {"g2", net_json(g2)}};
                        });
    };
    if (opt.exhaustive) {
      const int cap = cx.ceiling(kTripleCeiling, [&](int c) {
        long long total = 0;
        for (int n = 0; n <= c; ++n) total += cx.psize(n) * cx.esize(n) * cx.esize(n);
        return total;
      });
      for (int n = 0; n <= cap && !run.failed(); ++n)
        for (const auto& s : cx.perms[static_cast<std::size_t>(n)])
          for (const auto& g1 : cx.elems[static_cast<std::size_t>(n)])
            for (const auto& g2 : cx.elems[static_cast<std::size_t>(n)]) {
              if (run.failed()) break;
              kase(s, g1, g2);
            }
    } else {
      for (long long s = 0; s < opt.samples && !run.failed(); ++s) {
        const int n = cx.sample_arity();
        kase(cx.sample_perm(n), cx.sample_net(n), cx.sample_net(n));
      }
    }
    reports.push_back(run.finish());
  }

  // eq 4: sigma e_n = e_n
  {
    LawRun run("thm3.eq4", opt.seed);
    auto kase = [&](const Permutation& s) {
      const Net e = m.unit(s.degree());
      run.require_equal(m.act(s, e), e,
                        [&] { return nlohmann::json{{"sigma", s.images()}}; });
    };
    if (opt.exhaustive) {
      const int cap = cx.ceiling(kWideCeiling, [&](int c) {
        long long total = 0;
        for (int n = 0; n <= c; ++n) total += cx.psize(n);
        return total;
      });
      for (int n = 0; n <= cap && !run.failed(); ++n)
        for (const auto& s : cx.perms[static_cast<std::size_t>(n)]) kase(s);
    } else {
      for (long long s = 0; s < opt.samples && !run.failed(); ++s)
        kase(cx.sample_perm(cx.sample_arity()));
    }
    reports.push_back(run.finish());
  }

  // eq 5: (s2 s1) g = s2 (s1 g)
  {
    LawRun run("thm3.eq5", opt.seed);
    auto kase = [&](const Permutation& s2, const Permutation& s1, const Net& g) {
      run.require_equal(m.act(compose(s2, s1), g), m.act(s2, m.act(s1, g)), [&] {
        return nlohmann::json{
            {"sigma2", s2.images()}, {"sigma1", s1.images()}, {"g", net_json(g)}};
      });
    };
    if (opt.exhaustive) {
      const int cap = cx.ceiling(kTripleCeiling, [&](int c) {
        long long total = 0;
        for (int n = 0; n <= c; ++n) total += cx.psize(n) * cx.psize(n) * cx.esize(n);
        return total;
      });
      for (int n = 0; n <= cap && !run.failed(); ++n)
        for (const auto& s2 : cx.perms[static_cast<std::size_t>(n)])
          for (const auto& s1 : cx.perms[static_cast<std::size_t>(n)])
            for (const auto& g : cx.elems[static_cast<std::size_t>(n)]) {
              if (run.failed()) break;
              kase(s2, s1, g);
            }
    } else {
      for (long long s = 0; s < opt.samples && !run.failed(); ++s) {
        const int n = cx.sample_arity();
        kase(cx.sample_perm(n), cx.sample_perm(n), cx.sample_net(n));
      }
    }
    reports.push_back(run.finish());
  }

  // eq 6: 1(g) = g
  {
    LawRun run("thm3.eq6", opt.seed);
    auto kase = [&](const Net& g) {
      run.require_equal(m.act(Permutation::identity(g.n()), g), g, inputs1(g));
    };
    if (opt.exhaustive) {
      const int cap = cx.ceiling(kWideCeiling, [&](int c) {
        long long total = 0;
        for (int n = 0; n <= c; ++n) total += cx.esize(n);
        return total;
      });
      for (int n = 0; n <= cap && !run.failed(); ++n)
        for (const auto& g : cx.elems[static_cast<std::size_t>(n)]) kase(g);
    } else {
      for (long long s = 0; s < opt.samples && !run.failed(); ++s)
        kase(cx.sample_net(cx.sample_arity()));
    }
    reports.push_back(run.finish());
  }

  // eq 7: (g1 u g2) ++ (h1 u h2) = (g1 ++ h1) u (g2 ++ h2)
  {
    LawRun run("thm3.eq7", opt.seed);
    auto kase = [&](const Net& g1, const Net& g2, const Net& h1, const Net& h2) {
      run.require_equal(m.djunion(m.overlay(g1, g2), m.overlay(h1, h2)),
                        m.overlay(m.djunion(g1, h1), m.djunion(g2, h2)), [&] {
                          return nlohmann::json{{"g1", net_json(g1)},
                                                {"g2", net_json(g2)},
                                                {"h1", net_json(h1)},
                                                {"h2", net_json(h2)}};
                        });
    };
    if (opt.exhaustive) {
      const int cap = cx.ceiling(kTripleCeiling, [&](int c) {
        long long sq = 0;
        for (int n = 0; n <= c; ++n) sq += cx.esize(n) * cx.esize(n);
        return sq * sq;
      });
      for (int a = 0; a <= cap && !run.failed(); ++a)
        for (int b = 0; b <= cap && !run.failed(); ++b)
          for (const auto& g1 : cx.elems[static_cast<std::size_t>(a)])
            for (const auto& g2 : cx.elems[static_cast<std::size_t>(a)])
              for (const auto& h1 : cx.elems[static_cast<std::size_t>(b)])
                for (const auto& h2 : cx.elems[static_cast<std::size_t>(b)]) {
                  if (run.failed()) break;
                  kase(g1, g2, h1, h2);
                }
    } else {
      for (long long s = 0; s < opt.samples && !run.failed(); ++s) {
        const int a = cx.sample_arity();
        const int b = cx.sample_arity();
        kase(cx.sample_net(a), cx.sample_net(a), cx.sample_net(b), cx.sample_net(b));
      }
    }
    reports.push_back(run.finish());
  }

  // eq 8: e_m ++ e_n = e_{m+n}
  {
    LawRun run("thm3.eq8", opt.seed);
    auto kase = [&](int a, int b) {
      run.require_equal(m.djunion(m.unit(a), m.unit(b)), m.unit(a + b), [&] {
        return nlohmann::json{{"m", a}, {"n", b}};
      });
    };
    if (opt.exhaustive) {
      const int cap = std::min(opt.max_n, kWideCeiling);
      for (int a = 0; a <= cap; ++a)
        for (int b = 0; b <= cap; ++b) kase(a, b);
    } else {
      for (long long s = 0; s < opt.samples && !run.failed(); ++s)
        kase(cx.sample_arity(), cx.sample_arity());
    }
    reports.push_back(run.finish());
  }

  // eq 9: sigma g ++ tau h = (sigma + tau)(g ++ h)
  {
    LawRun run("thm3.eq9", opt.seed);
    auto kase = [&](const Permutation& s, const Net& g, const Permutation& t, const Net& h) {
      run.require_equal(m.djunion(m.act(s, g), m.act(t, h)),
                        m.act(block_sum(s, t), m.djunion(g, h)), [&] {
                          return nlohmann::json{{"sigma", s.images()},
                                                {"g", net_json(g)},
                                                {"tau", t.images()},
                                                {"h", net_json(h)}};
                        });
    };
    if (opt.exhaustive) {
      const int cap = cx.ceiling(kTripleCeiling, [&](int c) {
        long long pe = 0;
        for (int n = 0; n <= c; ++n) pe += cx.psize(n) * cx.esize(n);
        return pe * pe;
      });
      for (int a = 0; a <= cap && !run.failed(); ++a)
        for (int b = 0; b <= cap && !run.failed(); ++b)
          for (const auto& s : cx.perms[static_cast<std::size_t>(a)])
            for (const auto& g : cx.elems[static_cast<std::size_t>(a)])
              for (const auto& t : cx.perms[static_cast<std::size_t>(b)])
                for (const auto& h : cx.elems[static_cast<std::size_t>(b)]) {
                  if (run.failed()) break;
                  kase(s, g, t, h);
                }
    } else {
      for (long long s = 0; s < opt.samples && !run.failed(); ++s) {
        const int a = cx.sample_arity();
        const int b = cx.sample_arity();
        kase(cx.sample_perm(a), cx.sample_net(a), cx.sample_perm(b), cx.sample_net(b));
      }
    }
    reports.push_back(run.finish());
  }

  // eq 10: g ++ (h ++ k) = (g ++ h) ++ k
  {
    LawRun run("thm3.eq10", opt.seed);
    auto kase = [&](const Net& g, const Net& h, const Net& k) {
      run.require_equal(m.djunion(g, m.djunion(h, k)), m.djunion(m.djunion(g, h), k), [&] {
        return nlohmann::json{
            {"g", net_json(g)}, {"h", net_json(h)}, {"k", net_json(k)}};
      });
    };
    if (opt.exhaustive) {
      const int cap = cx.ceiling(kTripleCeiling, [&](int c) {
        long long e = 0;
        for (int n = 0; n <= c; ++n) e += cx.esize(n);
        return e * e * e;
      });
      for (int a = 0; a <= cap && !run.failed(); ++a)
        for (int b = 0; b <= cap && !run.failed(); ++b)
          for (int c = 0; c <= cap && !run.failed(); ++c)
            for (const auto& g : cx.elems[static_cast<std::size_t>(a)])
              for (const auto& h : cx.elems[static_cast<std::size_t>(b)])
                for (const auto& k : cx.elems[static_cast<std::size_t>(c)]) {
                  if (run.failed()) break;
                  kase(g, h, k);
                }
    } else {
      for (long long s = 0; s < opt.samples && !run.failed(); ++s)
        kase(cx.sample_net(cx.sample_arity()), cx.sample_net(cx.sample_arity()),
             cx.sample_net(cx.sample_arity()));
    }
    reports.push_back(run.finish());
  }

  // eq 11: e_0 ++ g = g ++ e_0 = g
  {
    LawRun run("thm3.eq11", opt.seed);
    auto kase = [&](const Net& g) {
      const Net e0 = m.unit(0);
      run.require_equal(m.djunion(e0, g), g, inputs1(g));
      run.require_equal(m.djunion(g, e0), g, inputs1(g));
    };
    if (opt.exhaustive) {
      const int cap = cx.ceiling(kWideCeiling, [&](int c) {
        long long total = 0;
        for (int n = 0; n <= c; ++n) total += cx.esize(n);
        return total;
      });
      for (int n = 0; n <= cap && !run.failed(); ++n)
        for (const auto& g : cx.elems[static_cast<std::size_t>(n)]) kase(g);
    } else {
      for (long long s = 0; s < opt.samples && !run.failed(); ++s)
        kase(cx.sample_net(cx.sample_arity()));
    }
    reports.push_back(run.finish());
  }

  // eq 12: B_{m,n}(h ++ g) = g ++ h  for h in F(m), g in F(n)
  {
    LawRun run("thm3.eq12", opt.seed);
    auto kase = [&](const Net& h, const Net& g) {
      run.require_equal(m.act(block_swap(h.n(), g.n()), m.djunion(h, g)), m.djunion(g, h),
                        [&] {
                          return nlohmann::json{{"h", net_json(h)}, {"g", net_json(g)}};
                        });
    };
    if (opt.exhaustive) {
      const int cap = cx.ceiling(kWideCeiling, [&](int c) {
        long long e = 0;
        for (int n = 0; n <= c; ++n) e += cx.esize(n);
        return e * e;
      });
      for (int a = 0; a <= cap && !run.failed(); ++a)
        for (int b = 0; b <= cap && !run.failed(); ++b)
          for (const auto& h : cx.elems[static_cast<std::size_t>(a)])
            for (const auto& g : cx.elems[static_cast<std::size_t>(b)]) {
              if (run.failed()) break;
              kase(h, g);
            }
    } else {
      for (long long s = 0; s < opt.samples && !run.failed(); ++s)
        kase(cx.sample_net(cx.sample_arity()), cx.sample_net(cx.sample_arity()));
    }
    reports.push_back(run.finish());
  }

  return reports;
}

namespace {

nlohmann::json op_pair_json(const Op& f, const std::vector<Op>& gs) {
  nlohmann::json args = nlohmann::json::array();
  for (const auto& g : gs) args.push_back(op_to_json(g));
  return nlohmann::json{{"f", op_to_json(f)}, {"args", args}};
}

}  // namespace

std::vector<LawReport> check_operad(const std::shared_ptr<const Model>& model,
                                    const OperadOptions& opt) {
  Rng rng(opt.seed);
  const ComposeFn compose_fn =
      opt.compose_override ? opt.compose_override
                           : [](const Op& f, const std::vector<Op>& gs) { return compose(f, gs); };
  std::vector<LawReport> reports;

  // closed form vs the category-of-elements path
  {
    LawRun run("operad.two_path", opt.seed);
    for (long long s = 0; s < opt.samples && !run.failed(); ++s) {
      const Op f = random_op_with_output(model, rng.range(0, opt.out_cap), rng, opt.cap);
      const auto gs = random_args(model, f.profile(), rng, opt.cap);
      const Op lhs = compose_fn(f, gs);
      const Op rhs = compose_via_category(f, gs);
      run.check(lhs == rhs, [&] {
        auto cx = op_pair_json(f, gs);
        cx["lhs"] = op_to_json(lhs);
        cx["rhs"] = op_to_json(rhs);
        return cx;
      });
    }
    reports.push_back(run.finish());
  }

  // associativity across two layers of composition
  {
    LawRun run("operad.assoc", opt.seed);
    for (long long s = 0; s < opt.samples && !run.failed(); ++s) {
      const Op f = random_op_with_output(model, rng.range(0, opt.out_cap), rng, opt.cap);
      const auto gs = random_args(model, f.profile(), rng, opt.cap);
      std::vector<Op> inner_composites;
      std::vector<Op> flattened;
      for (const auto& g : gs) {
        auto hs = random_args(model, g.profile(), rng, opt.cap);
        inner_composites.push_back(compose_fn(g, hs));
        flattened.insert(flattened.end(), hs.begin(), hs.end());
      }
      const Op lhs = compose_fn(compose_fn(f, gs), flattened);
      const Op rhs = compose_fn(f, inner_composites);
      run.check(lhs == rhs, [&] {
        auto cx = op_pair_json(f, gs);
        cx["lhs"] = op_to_json(lhs);
        cx["rhs"] = op_to_json(rhs);
        return cx;
      });
    }
    reports.push_back(run.finish());
  }

  // two-sided unit laws
  {
    LawRun run("operad.unit", opt.seed);
    for (long long s = 0; s < opt.samples && !run.failed(); ++s) {
      const Op f = random_op_with_output(model, rng.range(0, opt.out_cap), rng, opt.cap);
      std::vector<Op> ids;
      for (int n : f.profile().inputs) ids.push_back(identity_op(model, n));
      run.check(compose_fn(f, ids) == f, [&] { return op_pair_json(f, ids); });
      const Op outer = identity_op(model, f.profile().output);
      run.check(compose_fn(outer, {f}) == f, [&] { return op_pair_json(outer, {f}); });
    }
    reports.push_back(run.finish());
  }

  // right action: f.1 = f and (f.tau).tau' = f.(tau o tau'), exhaustive for
  // k <= 3 and input sizes <= 2
  {
    LawRun run("operad.right_action", opt.seed);
    for (int k = 1; k <= 3 && !run.failed(); ++k) {
      const auto taus = all_permutations(k);
      std::vector<int> sizes(static_cast<std::size_t>(k), 0);
      std::function<void(int)> rec = [&](int pos) {
        if (run.failed()) return;
        if (pos == k) {
          int n = 0;
          for (int v : sizes) n += v;
          const Op f(model, Profile{sizes, n}, random_perm(n, rng),
                     model->sample(n, rng, opt.cap));
          run.check(right_action(f, Permutation::identity(k)) == f,
                    [&] { return nlohmann::json{{"f", op_to_json(f)}}; });
          for (const auto& tau : taus)
            for (const auto& tau2 : taus) {
              const Op lhs = right_action(right_action(f, tau), tau2);
              const Op rhs = right_action(f, compose(tau, tau2));
              run.check(lhs == rhs, [&] {
                return nlohmann::json{{"f", op_to_json(f)},
                                      {"tau", tau.images()},
                                      {"tau2", tau2.images()},
                                      {"lhs", op_to_json(lhs)},
                                      {"rhs", op_to_json(rhs)}};
              });
              if (run.failed()) return;
            }
          return;
        }
        for (int v = 0; v <= 2; ++v) {
          sizes[static_cast<std::size_t>(pos)] = v;
          rec(pos + 1);
        }
      };
      rec(0);
    }
    reports.push_back(run.finish());
  }

  // equivariance against the two-path oracle: composing the reordered
  // arguments with f.tau equals acting on the composite by the induced
  // block permutation of the concatenated input profile
  {
    LawRun run("operad.equivariance", opt.seed);
    for (long long s = 0; s < opt.samples && !run.failed(); ++s) {
      const Op f = random_op_with_output(model, rng.range(0, opt.out_cap), rng, opt.cap);
      const auto gs = random_args(model, f.profile(), rng, opt.cap);
      const int k = static_cast<int>(gs.size());
      const Permutation tau = random_perm(k, rng);
      std::vector<Op> reordered;
      std::vector<int> arg_input_counts;
      for (const auto& g : gs)
        arg_input_counts.push_back(static_cast<int>(g.profile().inputs.size()));
      for (int j = 1; j <= k; ++j) reordered.push_back(gs[static_cast<std::size_t>(tau(j)) - 1]);
      const Op lhs = compose_fn(right_action(f, tau), reordered);
      const Op rhs = right_action(compose_fn(f, gs), block_induced(tau, arg_input_counts));
      run.check(lhs == rhs, [&] {
        auto cx = op_pair_json(f, gs);
        cx["tau"] = tau.images();
        cx["lhs"] = op_to_json(lhs);
        cx["rhs"] = op_to_json(rhs);
        return cx;
      });
    }
    reports.push_back(run.finish());
  }

  return reports;
}

namespace {

std::vector<Attr> random_points(int n, Rng& rng) {
  std::vector<Attr> out;
  for (int i = 0; i < n; ++i)
    out.emplace_back(Point{Rat(static_cast<long long>(rng.below(7)), 2),
                           Rat(static_cast<long long>(rng.below(7)), 2)});
  return out;
}

std::vector<Attr> random_symbols(int n, Rng& rng) {
  static const std::vector<std::string> pool{"a", "b", "c", "d"};
  std::vector<Attr> out;
  for (int i = 0; i < n; ++i) out.emplace_back(pool[rng.below(pool.size())]);
  return out;
}

nlohmann::json items_json(const std::vector<AttributedNet>& items) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& a : items) out.push_back(attributed_to_json(a));
  return out;
}

}  // namespace

std::vector<LawReport> check_algebra(const AlgebraOptions& opt) {
  Rng rng(opt.seed);
  const bool bounded = opt.kind == AlgebraKind::two_range;
  const auto model =
      opt.model ? opt.model : model_by_id(bounded ? "mgplus" : "sg");
  std::vector<LawReport> reports;

  if (opt.kind == AlgebraKind::canonical) {
    LawRun unit_run("algebra.canonical.unit", opt.seed);
    LawRun comp_run("algebra.canonical.compose", opt.seed);
    for (long long s = 0; s < opt.samples; ++s) {
      const int n = rng.range(0, 5);
      const Net h = model->sample(n, rng, opt.cap);
      unit_run.require_equal(act_canonical(identity_op(model, n), {h}), h,
                             [&] { return nlohmann::json{{"h", net_json(h)}}; });

      const Op f = random_op_with_output(model, rng.range(0, 6), rng, opt.cap);
      const auto gs = random_args(model, f.profile(), rng, opt.cap);
      std::vector<Net> flat_items;
      std::vector<Net> staged;
      for (const auto& g : gs) {
        std::vector<Net> slice;
        for (int ni : g.profile().inputs) slice.push_back(model->sample(ni, rng, opt.cap));
        flat_items.insert(flat_items.end(), slice.begin(), slice.end());
        staged.push_back(act_canonical(g, slice));
      }
      comp_run.require_equal(act_canonical(compose(f, gs), flat_items),
                             act_canonical(f, staged),
                             [&] { return op_pair_json(f, gs); });
    }
    reports.push_back(unit_run.finish());
    reports.push_back(comp_run.finish());
    return reports;
  }

  if (opt.kind == AlgebraKind::degree_limited) {
    LawRun unit_run("algebra.degree.unit", opt.seed);
    LawRun safety_run("algebra.degree.safety", opt.seed);
    const auto sg = model_by_id("sg");
    auto random_item = [&](int n) {
      std::vector<std::uint64_t> ports;
      for (int i = 0; i < n; ++i) ports.push_back(rng.below(opt.cap + 1));
      PortedNet item(sg->unit(n), ports);
      std::vector<Edge> warmup;
      for (int t = 0; t < n; ++t)
        if (n >= 2) {
          int i = rng.range(1, n), j = rng.range(1, n);
          if (i != j) warmup.push_back({i, j});
        }
      return process_attempts(item, warmup);
    };
    for (long long s = 0; s < opt.samples; ++s) {
      const int n = rng.range(1, 5);
      const PortedNet item = random_item(n);
      unit_run.check(process_attempts(item, {}) == item &&
                         act_degree_limited(Permutation::identity(n), AttemptWord(n, {}),
                                            {item}) == item,
                     [&] { return nlohmann::json{{"graph", net_json(item.graph)}}; });

      const int k = rng.range(1, 3);
      std::vector<PortedNet> items;
      int total = 0;
      for (int i = 0; i < k; ++i) {
        const int ni = rng.range(1, 3);
        items.push_back(random_item(ni));
        total += ni;
      }
      std::vector<Edge> word;
      const int len = rng.range(0, 4);
      for (int t = 0; t < len && total >= 2; ++t) {
        int i = rng.range(1, total), j = rng.range(1, total);
        if (i != j) word.push_back({i, j});
      }
      const PortedNet out = act_degree_limited(random_perm(total, rng),
                                               AttemptWord(total, word), items);
      const auto deg = degrees(out.graph);
      bool ok = true;
      for (std::size_t i = 0; i < deg.size(); ++i) ok = ok && deg[i] <= out.ports[i];
      safety_run.check(ok, [&] {
        return nlohmann::json{{"graph", net_json(out.graph)}, {"ports", out.ports}};
      });
    }
    reports.push_back(unit_run.finish());
    reports.push_back(safety_run.finish());
    return reports;
  }

  // the attribute-carrying algebras: plain, predicate-constrained, bounded
  const EdgePredicate pred = EdgePredicate::within_range(opt.range_limit);
  const EdgeBound bound = EdgeBound::two_range(opt.range_l1, opt.range_l2);
  const BoundedActFn bounded_act =
      opt.bounded_override
          ? opt.bounded_override
          : [](const EdgeBound& b, const Op& f, const std::vector<AttributedNet>& items) {
              return act_bounded(b, f, items);
            };

  auto random_item = [&](int n) {
    AttributedNet raw(model->sample(n, rng, opt.cap),
                      opt.kind == AlgebraKind::attributes ? random_symbols(n, rng)
                                                          : random_points(n, rng));
    if (opt.kind == AlgebraKind::range_limited) return enforce_predicate(pred, raw);
    if (opt.kind == AlgebraKind::two_range) return enforce_bound(bound, raw);
    return raw;
  };
  auto apply = [&](const Op& f, const std::vector<AttributedNet>& items) {
    if (opt.kind == AlgebraKind::range_limited) return act_predicate(pred, f, items);
    if (opt.kind == AlgebraKind::two_range) return bounded_act(bound, f, items);
    return act_attributes(f, items);
  };
  const std::string tag = opt.kind == AlgebraKind::attributes   ? "attr"
                          : opt.kind == AlgebraKind::range_limited ? "range"
                                                                   : "two_range";

  LawRun unit_run("algebra." + tag + ".unit", opt.seed);
  LawRun comp_run("algebra." + tag + ".compose", opt.seed);
  LawRun square_run("algebra." + tag + ".hom_square", opt.seed);
  LawRun safety_run("algebra." + tag + ".safety", opt.seed);

  for (long long s = 0; s < opt.samples; ++s) {
    const int n = rng.range(0, 5);
    const AttributedNet item = random_item(n);
    unit_run.check(apply(identity_op(model, n), {item}) == item,
                   [&] { return nlohmann::json{{"item", attributed_to_json(item)}}; });

    const Op f = random_op_with_output(model, rng.range(0, 6), rng, opt.cap);
    const auto gs = random_args(model, f.profile(), rng, opt.cap);
    std::vector<AttributedNet> flat_items;
    std::vector<std::vector<AttributedNet>> slices;
    for (const auto& g : gs) {
      std::vector<AttributedNet> slice;
      for (int ni : g.profile().inputs) slice.push_back(random_item(ni));
      flat_items.insert(flat_items.end(), slice.begin(), slice.end());
      slices.push_back(std::move(slice));
    }
    const AttributedNet lhs = apply(compose(f, gs), flat_items);

    // safety first: every produced element must satisfy its constraint even
    // when the staged path below cannot be formed
    if (opt.kind == AlgebraKind::range_limited) {
      safety_run.check(satisfies(pred, lhs),
                       [&] { return nlohmann::json{{"result", attributed_to_json(lhs)}}; });
    } else if (opt.kind == AlgebraKind::two_range) {
      safety_run.check(satisfies(bound, lhs),
                       [&] { return nlohmann::json{{"result", attributed_to_json(lhs)}}; });
    } else {
      safety_run.check(true, [] { return nlohmann::json{}; });
    }

    try {
      std::vector<AttributedNet> staged;
      for (std::size_t i = 0; i < gs.size(); ++i) staged.push_back(apply(gs[i], slices[i]));
      const AttributedNet rhs = apply(f, staged);
      comp_run.check(lhs == rhs, [&] {
        auto cx = op_pair_json(f, gs);
        cx["items"] = items_json(flat_items);
        cx["lhs"] = attributed_to_json(lhs);
        cx["rhs"] = attributed_to_json(rhs);
        return cx;
      });
    } catch (const std::exception& e) {
      // an action leaving the algebra is itself a composition-law failure
      const std::string what = e.what();
      comp_run.check(false, [&] {
        auto cx = op_pair_json(f, gs);
        cx["items"] = items_json(flat_items);
        cx["error"] = what;
        return cx;
      });
    }

    // homomorphism squares into/out of the attribute algebra
    if (opt.kind == AlgebraKind::attributes) {
      std::vector<Net> forgotten;
      for (const auto& a : flat_items) forgotten.push_back(hom_forget(a));
      square_run.require_equal(hom_forget(apply(compose(f, gs), flat_items)),
                               act_canonical(compose(f, gs), forgotten),
                               [&] { return op_pair_json(f, gs); });
    } else {
      std::vector<AttributedNet> raw_items;
      for (const auto& a : flat_items) {
        // perturb back to unconstrained elements
        raw_items.emplace_back(model->overlay(a.net, model->sample(a.net.n(), rng, opt.cap)),
                               a.attrs);
      }
      const Op whole = compose(f, gs);
      std::vector<AttributedNet> enforced;
      for (const auto& a : raw_items)
        enforced.push_back(opt.kind == AlgebraKind::range_limited ? enforce_predicate(pred, a)
                                                                  : enforce_bound(bound, a));
      const AttributedNet sq_lhs =
          opt.kind == AlgebraKind::range_limited
              ? enforce_predicate(pred, act_attributes(whole, raw_items))
              : enforce_bound(bound, act_attributes(whole, raw_items));
      const AttributedNet sq_rhs = apply(whole, enforced);
      square_run.check(sq_lhs == sq_rhs, [&] {
        auto cx = op_pair_json(f, gs);
        cx["items"] = items_json(raw_items);
        cx["lhs"] = attributed_to_json(sq_lhs);
        cx["rhs"] = attributed_to_json(sq_rhs);
        return cx;
      });
    }

  }

  reports.push_back(unit_run.finish());
  reports.push_back(comp_run.finish());
  reports.push_back(square_run.finish());
  reports.push_back(safety_run.finish());
  return reports;
}

std::vector<LawReport> check_morphism(const MorphismOptions& opt) {
  Rng rng(opt.seed);
  const MonoidHom cut = MonoidHom::cutoff(opt.k);
  const ModelMorphism phi = gamma_hom(cut);
  const auto source = phi.source();
  const auto target = phi.target();
  std::vector<LawReport> reports;

  LawRun unit_run("morphism.unit", opt.seed);
  LawRun overlay_run("morphism.overlay", opt.seed);
  LawRun act_run("morphism.act", opt.seed);
  LawRun dj_run("morphism.djunion", opt.seed);
  LawRun support_run("morphism.support", opt.seed);
  for (long long s = 0; s < opt.samples; ++s) {
    const int n = rng.range(0, 5);
    const int n2 = rng.range(0, 4);
    const Net g = source->sample(n, rng, opt.cap);
    const Net h = source->sample(n, rng, opt.cap);
    const Net h2 = source->sample(n2, rng, opt.cap);
    const Permutation sigma = random_perm(n, rng);
    unit_run.require_equal(phi.apply(source->unit(n)), target->unit(n),
                           [&] { return nlohmann::json{{"n", n}}; });
    overlay_run.require_equal(phi.apply(source->overlay(g, h)),
                              target->overlay(phi.apply(g), phi.apply(h)), [&] {
                                return nlohmann::json{{"g", net_json(g)}, {"h", net_json(h)}};
                              });
    act_run.require_equal(phi.apply(source->act(sigma, g)), target->act(sigma, phi.apply(g)),
                          [&] {
                            return nlohmann::json{{"sigma", sigma.images()},
                                                  {"g", net_json(g)}};
                          });
    dj_run.require_equal(phi.apply(source->djunion(g, h2)),
                         target->djunion(phi.apply(g), phi.apply(h2)), [&] {
                           return nlohmann::json{{"g", net_json(g)}, {"h", net_json(h2)}};
                         });
    if (opt.k == 1) {
      // the image is the support of the multigraph
      const Net img = phi.apply(g);
      std::set<Edge> support;
      for (const auto& [e, v] : g.labels())
        if (std::get<std::uint64_t>(v) > 0) support.insert(e);
      support_run.check(img.edges() == support,
                        [&] { return nlohmann::json{{"g", net_json(g)}}; });
    }
  }
  reports.push_back(unit_run.finish());
  reports.push_back(overlay_run.finish());
  reports.push_back(act_run.finish());
  reports.push_back(dj_run.finish());
  if (opt.k == 1) reports.push_back(support_run.finish());

  // operad-morphism laws: identity and composition preservation
  {
    LawRun id_run("morphism.operad_identity", opt.seed);
    LawRun comp_run("morphism.operad_compose", opt.seed);
    for (long long s = 0; s < opt.samples; ++s) {
      const int n = rng.range(0, 5);
      id_run.check(morphism_apply(phi, identity_op(source, n)) == identity_op(target, n),
                   [&] { return nlohmann::json{{"n", n}}; });
      const Op f = random_op_with_output(source, rng.range(0, 6), rng, opt.cap);
      const auto gs = random_args(source, f.profile(), rng, opt.cap);
      std::vector<Op> mapped;
      for (const auto& g : gs) mapped.push_back(morphism_apply(phi, g));
      comp_run.check(
          morphism_apply(phi, compose(f, gs)) == compose(morphism_apply(phi, f), mapped),
          [&] { return op_pair_json(f, gs); });
    }
    reports.push_back(id_run.finish());
    reports.push_back(comp_run.finish());
  }

  // functoriality: gamma of a composite hom is the composite of gammas
  if (opt.k <= 3) {
    LawRun fun_run("morphism.functor", opt.seed);
    const MonoidHom h1 = MonoidHom::cutoff(3);
    const std::uint64_t kk = opt.k;
    const MonoidHom h2(Monoid::truncated(3), Monoid::truncated(kk),
                       [kk](const MonElem& x) {
                         return MonElem(std::min(std::get<std::uint64_t>(x), kk));
                       },
                       "trunc3to" + std::to_string(kk));
    const ModelMorphism composite = gamma_hom(compose(h2, h1));
    const ModelMorphism pair = compose(gamma_hom(h2), gamma_hom(h1));
    for (long long s = 0; s < opt.samples; ++s) {
      const int n = rng.range(0, 5);
      const Net g = source->sample(n, rng, opt.cap);
      fun_run.require_equal(composite.apply(g), pair.apply(g),
                            [&] { return nlohmann::json{{"g", net_json(g)}}; });
      const Op f = random_op_with_output(source, rng.range(0, 5), rng, opt.cap);
      fun_run.check(morphism_apply(composite, f) == morphism_apply(pair, f),
                    [&] { return nlohmann::json{{"f", op_to_json(f)}}; });
    }
    reports.push_back(fun_run.finish());
  }

  return reports;
}

namespace {

// Graphic-action machinery: states are edge subsets with degrees within the
// port capacities; transitions come from the real attempt processor.
struct GraphicSpace {
  int n = 0;
  std::vector<Edge> edges;                 // E(n)
  std::vector<std::uint64_t> ports;
  std::vector<unsigned> states;            // valid edge masks
  std::map<unsigned, int> index_of;
  std::vector<std::vector<int>> step;      // step[state][edge] -> state

  GraphicSpace(int n_in, std::vector<Edge> edges_in, std::vector<std::uint64_t> ports_in)
      : n(n_in), edges(std::move(edges_in)), ports(std::move(ports_in)) {
    const auto sg = model_by_id("sg");
    auto mask_net = [&](unsigned mask) {
      std::set<Edge> es;
      for (std::size_t b = 0; b < edges.size(); ++b)
        if (mask & (1u << b)) es.insert(edges[b]);
      return Net(sg, n, std::move(es));
    };
    auto net_mask = [&](const Net& g) {
      unsigned mask = 0;
      for (std::size_t b = 0; b < edges.size(); ++b)
        if (g.edges().count(edges[b])) mask |= (1u << b);
      return mask;
    };
    for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
      const Net g = mask_net(mask);
      const auto deg = degrees(g);
      bool valid = true;
      for (int v = 0; v < n; ++v)
        valid = valid && deg[static_cast<std::size_t>(v)] <= ports[static_cast<std::size_t>(v)];
      if (valid) {
        index_of[mask] = static_cast<int>(states.size());
        states.push_back(mask);
      }
    }
    step.assign(states.size(), std::vector<int>(edges.size(), 0));
    for (std::size_t si = 0; si < states.size(); ++si)
      for (std::size_t ei = 0; ei < edges.size(); ++ei) {
        const PortedNet next =
            process_attempts(PortedNet(mask_net(states[si]), ports), {edges[ei]});
        step[si][ei] = index_of.at(net_mask(next.graph));
      }
  }
};

}  // namespace

std::vector<LawReport> check_graphic(const GraphicOptions& opt) {
  LawRun sem_run("graphic.step_semantics", 0);
  LawRun aba_run("graphic.aba_ab", 0);
  LawRun comm_run("graphic.disjoint_comm", 0);
  const auto sg = model_by_id("sg");

  for (int n = 0; n <= opt.max_n; ++n) {
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});

    std::vector<std::uint64_t> ports(static_cast<std::size_t>(n), 0);
    std::function<void(int)> per_ports = [&](int pos) {
      if (aba_run.failed() || comm_run.failed() || sem_run.failed()) return;
      if (pos < n) {
        for (std::uint64_t p = 0; p <= opt.max_port; ++p) {
          ports[static_cast<std::size_t>(pos)] = p;
          per_ports(pos + 1);
        }
        return;
      }
      const GraphicSpace space(n, edges, ports);
      const int num_states = static_cast<int>(space.states.size());

      // words of length <= 2 re-checked against whole-word processing
      auto mask_net = [&](unsigned mask) {
        std::set<Edge> es;
        for (std::size_t b = 0; b < edges.size(); ++b)
          if (mask & (1u << b)) es.insert(edges[b]);
        return Net(sg, n, std::move(es));
      };
      for (int si = 0; si < num_states; ++si)
        for (std::size_t e1 = 0; e1 < edges.size(); ++e1)
          for (std::size_t e2 = 0; e2 < edges.size(); ++e2) {
            const PortedNet direct = process_attempts(
                PortedNet(mask_net(space.states[static_cast<std::size_t>(si)]), ports),
                {edges[e1], edges[e2]});
            const int folded = space.step[static_cast<std::size_t>(
                space.step[static_cast<std::size_t>(si)][e1])][e2];
            sem_run.check(
                direct.graph == mask_net(space.states[static_cast<std::size_t>(folded)]),
                [&] {
                  return nlohmann::json{{"n", n},
                                        {"ports", ports},
                                        {"state", si},
                                        {"attempts", {edges[e1], edges[e2]}}};
                });
            if (sem_run.failed()) return;
          }

      // distinct state maps of all words of length <= max_len
      std::map<std::vector<int>, std::vector<std::size_t>> distinct;
      std::vector<int> identity_map(static_cast<std::size_t>(num_states));
      for (int i = 0; i < num_states; ++i) identity_map[static_cast<std::size_t>(i)] = i;
      std::vector<std::size_t> empty_word;
      distinct.emplace(identity_map, empty_word);
      std::function<void(std::vector<int>&, std::vector<std::size_t>&, int)> grow =
          [&](std::vector<int>& map, std::vector<std::size_t>& word, int remaining) {
            if (remaining == 0) return;
            for (std::size_t e = 0; e < edges.size(); ++e) {
              std::vector<int> next(map.size());
              for (std::size_t s = 0; s < map.size(); ++s)
                next[s] = space.step[static_cast<std::size_t>(map[s])][e];
              word.push_back(e);
              distinct.emplace(next, word);
              grow(next, word, remaining - 1);
              word.pop_back();
            }
          };
      grow(identity_map, empty_word, opt.max_len);

      // aba = ab: the a-map fixes everything in the image of b-after-a
      for (const auto& [fa, wa] : distinct)
        for (const auto& [fb, wb] : distinct) {
          for (int s = 0; s < num_states && !aba_run.failed(); ++s) {
            const int ab = fb[static_cast<std::size_t>(fa[static_cast<std::size_t>(s)])];
            aba_run.check(fa[static_cast<std::size_t>(ab)] == ab, [&] {
              return nlohmann::json{{"n", n},
                                    {"ports", ports},
                                    {"word_a", wa},
                                    {"word_b", wb},
                                    {"state", s}};
            });
          }
          if (aba_run.failed()) return;
        }

      // disjoint attempts commute from every state
      for (std::size_t e1 = 0; e1 < edges.size(); ++e1)
        for (std::size_t e2 = 0; e2 < edges.size(); ++e2) {
          const auto& a = edges[e1];
          const auto& b = edges[e2];
          if (a.first == b.first || a.first == b.second || a.second == b.first ||
              a.second == b.second)
            continue;
          for (int s = 0; s < num_states && !comm_run.failed(); ++s) {
            const int lhs = space.step[static_cast<std::size_t>(
                space.step[static_cast<std::size_t>(s)][e1])][e2];
            const int rhs = space.step[static_cast<std::size_t>(
                space.step[static_cast<std::size_t>(s)][e2])][e1];
            comm_run.check(lhs == rhs, [&] {
              return nlohmann::json{
                  {"n", n}, {"ports", ports}, {"e1", a}, {"e2", b}, {"state", s}};
            });
          }
        }
    };
    per_ports(0);
  }

  return {sem_run.finish(), aba_run.finish(), comm_run.finish()};
}

namespace mutations {

namespace {

class BrokenOverlayModel final : public Model {
 public:
  explicit BrokenOverlayModel(std::shared_ptr<const Model> base)
      : Model("mutant:broken-overlay(" + base->id() + ")"), base_(std::move(base)) {}

  Net unit(int n) const override { return wrap(base_->unit(n)); }

  Net sample(int n, Rng& rng, std::uint64_t cap) const override {
    return wrap(base_->sample(n, rng, cap));
  }

  nlohmann::json to_json(const Net& g) const override {
    nlohmann::json j = base_->to_json(unwrap(g));
    j["model"] = id();
    return j;
  }

  Net from_json(const nlohmann::json& j) const override {
    nlohmann::json inner = j;
    inner["model"] = base_->id();
    return wrap(base_->from_json(inner));
  }

 protected:
  // g u h becomes g + h + min(g, h) pointwise: units survive, associativity
  // does not. Needs additive natural labels (mgplus/dmgplus).
  Net overlay_impl(const Net& g, const Net& h) const override {
    const auto monoid = base_->label_monoid();
    if (!monoid || monoid->kind() != Monoid::Kind::nat_plus)
      throw std::invalid_argument("broken-overlay mutant needs an additive multigraph model");
    const Net gu = unwrap(g);
    const Net hu = unwrap(h);
    const auto gl = base_->edge_labels(gu);
    const auto hl = base_->edge_labels(hu);
    std::map<Edge, MonElem> extra;
    for (const auto& [e, v] : gl) {
      auto it = hl.find(e);
      if (it == hl.end()) continue;
      const auto low = std::min(std::get<std::uint64_t>(v),
                                std::get<std::uint64_t>(it->second));
      if (low > 0) extra.emplace(e, MonElem(low));
    }
    return wrap(base_->overlay(base_->overlay(gu, hu),
                               base_->from_edge_labels(g.n(), extra)));
  }

  Net act_impl(const Permutation& sigma, const Net& g) const override {
    return wrap(base_->act(sigma, unwrap(g)));
  }

  Net djunion_impl(const Net& g, const Net& h) const override {
    return wrap(base_->djunion(unwrap(g), unwrap(h)));
  }

 private:
  Net wrap(const Net& g) const { return Net(shared_from_this(), g.n(), g.payload()); }
  Net unwrap(const Net& g) const { return Net(base_, g.n(), g.payload()); }

  std::shared_ptr<const Model> base_;
};

}  // namespace

std::shared_ptr<const Model> broken_overlay(const std::shared_ptr<const Model>& base) {
  return std::make_shared<BrokenOverlayModel>(base);
}

Op compose_dropping_sigma(const Op& f, const std::vector<Op>& gs) {
  const Op correct = compose(f, gs);
  Net h_sum = f.model().unit(0);
  Permutation tau_sum = Permutation::identity(0);
  for (const auto& g : gs) {
    tau_sum = block_sum(tau_sum, g.perm());
    h_sum = f.model().djunion(h_sum, g.net());
  }
  return Op(f.model_ptr(), correct.profile(), compose(f.perm(), tau_sum),
            f.model().overlay(f.net(), h_sum));
}

AttributedNet act_bounded_unclamped(const EdgeBound& b, const Op& f,
                                    const std::vector<AttributedNet>& items) {
  for (std::size_t i = 0; i < items.size(); ++i)
    if (!satisfies(b, items[i]))
      throw std::invalid_argument("act_bounded: input " + std::to_string(i + 1) +
                                  " exceeds the bound " + b.id());
  return act_attributes(f, items);
}

}  // namespace mutations

}  // namespace oracle
}  // namespace netop
