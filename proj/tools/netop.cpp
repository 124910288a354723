// netop: evaluate assembly terms against an algebra, apply morphisms, and run
// the law-check suites. Exit codes: 0 all good, 1 a law check found a
// counterexample, 2 usage or parse error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "netop/oracle.hpp"
#include "netop/term.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("NETOP_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

int emit_reports(const std::vector<netop::oracle::LawReport>& reports) {
  for (const auto& r : reports) std::cout << netop::oracle::report_json(r).dump() << "\n";
  return netop::oracle::all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace netop;

  CLI::App app{"network model operads and their algebras"};
  app.require_subcommand(1);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a term file against an algebra");
  std::string eval_file = "-";
  std::string eval_model;
  std::string eval_algebra = "canonical";
  std::string attrs_file;
  std::vector<std::string> params;
  eval_cmd->add_option("file", eval_file, "term file, or - for stdin");
  eval_cmd->add_option("--model", eval_model, "require every literal to use this model");
  eval_cmd->add_option("--algebra", eval_algebra,
                       "canonical | attrs | range | tworange");
  eval_cmd->add_option("--attrs", attrs_file,
                       "JSON file: one attribute vector per leaf literal");
  eval_cmd->add_option("--param", params, "algebra parameter, e.g. L=1 (repeatable)")
      ->allow_extra_args(false);

  // check
  auto* check_cmd = app.add_subcommand("check", "run a law suite, print JSON-line reports");
  std::string kind;
  std::string check_model = "sg";
  std::string algebra_id = "canonical";
  int max_n = 3;
  int budget = 7;
  bool exhaustive = false;
  long long samples = -1;
  std::uint64_t seed = default_seed();
  std::uint64_t cap = 3;
  std::uint64_t cutoff_k = 1;
  int max_len = 4;
  std::uint64_t max_port = 2;
  std::string mutate;
  check_cmd->add_option("kind", kind, "thm3 | operad | algebra | morphism | graphic")
      ->required();
  check_cmd->add_option("--model", check_model, "model id");
  check_cmd->add_option("--algebra", algebra_id,
                        "canonical | attrs | range | tworange | degree");
  check_cmd->add_option("--max-n", max_n, "largest arity exercised");
  check_cmd->add_option("--budget", budget, "largest output arity for operad cases");
  check_cmd->add_flag("--exhaustive", exhaustive, "enumerate instead of sampling");
  check_cmd->add_option("--samples", samples, "randomized cases per law");
  check_cmd->add_option("--seed", seed, "PRNG seed (default: NETOP_SEED or 0)");
  check_cmd->add_option("--cap", cap, "label/multiplicity bound for sampled elements");
  check_cmd->add_option("--k", cutoff_k, "cutoff parameter for morphism checks");
  check_cmd->add_option("--max-len", max_len, "attempt-word length for graphic checks");
  check_cmd->add_option("--max-port", max_port, "port capacity bound for graphic checks");
  check_cmd->add_option("--mutate", mutate,
                        "law breaker: broken-overlay | drop-sigma | unclamped-bound")
      ->group("");  // testing hook, hidden from help

  // apply-morphism
  auto* apply_cmd = app.add_subcommand("apply-morphism", "apply a model morphism to stdin JSON");
  std::string morphism_name;
  std::uint64_t apply_k = 1;
  apply_cmd->add_option("name", morphism_name, "currently: cutoff")->required();
  apply_cmd->add_option("--k", apply_k, "cutoff parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eval_cmd) {
      EvalConfig cfg;
      if (eval_algebra == "canonical") {
        cfg.algebra = EvalConfig::Algebra::canonical;
      } else if (eval_algebra == "attrs") {
        cfg.algebra = EvalConfig::Algebra::attributes;
      } else if (eval_algebra == "range") {
        cfg.algebra = EvalConfig::Algebra::range;
      } else if (eval_algebra == "tworange") {
        cfg.algebra = EvalConfig::Algebra::two_range;
      } else {
        throw std::runtime_error("unknown algebra: " + eval_algebra);
      }
      for (const auto& p : params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos) throw std::runtime_error("malformed --param " + p);
        const std::string key = p.substr(0, eq);
        const Rat value = Rat::from_string(p.substr(eq + 1));
        if (key == "L")
          cfg.range_limit = value;
        else if (key == "L1")
          cfg.range_l1 = value;
        else if (key == "L2")
          cfg.range_l2 = value;
        else
          throw std::runtime_error("unknown --param key " + key);
      }
      if (!attrs_file.empty()) {
        const auto j = nlohmann::json::parse(read_input(attrs_file));
        for (const auto& entry : j) cfg.leaf_attrs.push_back(attrs_from_json(entry));
      }
      const Term t = parse_term(read_input(eval_file));
      if (!eval_model.empty() && t.model().id() != eval_model)
        throw std::runtime_error("term uses model " + t.model().id() + ", expected " +
                                 eval_model);
      std::cout << serialize_result(eval_term(t, cfg)) << "\n";
      return 0;
    }

    if (*apply_cmd) {
      if (morphism_name != "cutoff")
        throw std::runtime_error("unknown morphism: " + morphism_name);
      const ModelMorphism phi = gamma_hom(MonoidHom::cutoff(apply_k));
      const Net g = net_from_json_text(read_input("-"));
      const Net out = phi.apply(g);
      std::cout << out.model().to_json(out).dump() << "\n";
      return 0;
    }

    using namespace netop::oracle;
    if (kind == "thm3") {
      Thm3Options opt;
      opt.max_n = max_n;
      opt.exhaustive = exhaustive;
      opt.samples = samples > 0 ? samples : 1000;
      opt.seed = seed;
      opt.cap = cap;
      auto model = model_by_id(check_model);
      if (mutate == "broken-overlay") {
        model = mutations::broken_overlay(model);
        opt.exhaustive = false;
      } else if (!mutate.empty()) {
        throw std::runtime_error("unknown mutation for thm3: " + mutate);
      }
      return emit_reports(check_thm3(model, opt));
    }
    if (kind == "operad") {
      OperadOptions opt;
      opt.out_cap = budget;
      opt.samples = samples > 0 ? samples : 1000;
      opt.seed = seed;
      opt.cap = cap;
      if (mutate == "drop-sigma")
        opt.compose_override = mutations::compose_dropping_sigma;
      else if (!mutate.empty())
        throw std::runtime_error("unknown mutation for operad: " + mutate);
      return emit_reports(check_operad(model_by_id(check_model), opt));
    }
    if (kind == "algebra") {
      AlgebraOptions opt;
      if (algebra_id == "canonical")
        opt.kind = AlgebraKind::canonical;
      else if (algebra_id == "attrs")
        opt.kind = AlgebraKind::attributes;
      else if (algebra_id == "range")
        opt.kind = AlgebraKind::range_limited;
      else if (algebra_id == "tworange")
        opt.kind = AlgebraKind::two_range;
      else if (algebra_id == "degree")
        opt.kind = AlgebraKind::degree_limited;
      else
        throw std::runtime_error("unknown algebra: " + algebra_id);
      if (check_cmd->count("--model")) opt.model = model_by_id(check_model);
      opt.samples = samples > 0 ? samples : 500;
      opt.seed = seed;
      opt.cap = cap;
      if (mutate == "unclamped-bound")
        opt.bounded_override = mutations::act_bounded_unclamped;
      else if (!mutate.empty())
        throw std::runtime_error("unknown mutation for algebra: " + mutate);
      return emit_reports(check_algebra(opt));
    }
    if (kind == "morphism") {
      MorphismOptions opt;
      opt.k = cutoff_k;
      opt.samples = samples > 0 ? samples : 500;
      opt.seed = seed;
      opt.cap = cap;
      return emit_reports(check_morphism(opt));
    }
    if (kind == "graphic") {
      GraphicOptions opt;
      opt.max_n = max_n <= 4 ? max_n : 4;
      opt.max_len = max_len;
      opt.max_port = max_port;
      return emit_reports(check_graphic(opt));
    }
    throw std::runtime_error("unknown check kind: " + kind);
  } catch (const std::exception& e) {
    std::cerr << "netop: " << e.what() << "\n";
    return 2;
  }
}
