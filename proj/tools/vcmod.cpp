// vcmod: command-line front end. Records go to stdout as JSON lines (or CSV with --csv for curve
// subcommands); a human summary goes to stderr.
//
// Exit codes: 0 success, 1 property check failed (stone-check mismatch), 2 bad flags or input,
// 3 work limit exceeded, 4 no consistent hypothesis (fatal policy).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "experiment_config.hpp"
#include "vcmod/vcmod.hpp"

namespace {

using vcmod::cli::Json;

struct Globals {
  std::size_t jobs = 1;
  std::optional<std::uint64_t> seed;
  vcmod::SearchLimits limits;
  bool csv = false;
};

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitWorkLimit = 3;
constexpr int kExitNoConsistent = 4;

std::string build_id() { return std::string(vcmod::kToolName) + "-" + vcmod::kVersion; }

Json record(const std::string& command, const Globals& g) {
  Json r;
  r["tool"] = vcmod::kToolName;
  r["version"] = build_id();
  r["command"] = command;
  r["seed"] = g.seed ? Json(*g.seed) : Json(nullptr);
  r["limits"] = {{"max_nodes", g.limits.max_nodes},
                 {"max_removal_subsets", g.limits.max_removal_subsets},
                 {"max_enumeration", g.limits.max_enumeration}};
  return r;
}

void emit(const Json& r) { std::cout << r.dump() << "\n"; }

Json points_json(const vcmod::PointSet& set) { return vcmod::bits_to_indices(set); }

Json family_json(const vcmod::ClusterFamily& family) {
  Json out = Json::array();
  for (const auto& c : family.clusters()) out.push_back(points_json(c));
  return out;
}

vcmod::PointSet load_negligible(const std::string& arg, std::size_t m) {
  vcmod::PointSet set;
  if (std::filesystem::exists(arg)) {
    set = vcmod::load_point_set(arg);
  } else {
    set = vcmod::bits_from_string(arg);
  }
  if (set.size() != m) {
    throw vcmod::InvalidArgument("negligible set has length " + std::to_string(set.size()) +
                                 ", class domain has " + std::to_string(m));
  }
  return set;
}

std::uint64_t require_seed(const Globals& g, const std::string& command) {
  if (!g.seed) throw vcmod::InvalidArgument(command + " requires --seed");
  return *g.seed;
}

std::string csv_number(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

// --- subcommands ----------------------------------------------------------------------------

int run_vc(const Globals& g, const std::string& class_path) {
  const auto cls = vcmod::load_class(class_path);
  const auto res = vcmod::vc_dimension(cls, g.limits);
  auto r = record("vc", g);
  r["class"] = class_path;
  r["vc"] = res.vc;
  r["witness"] = res.certificate.points;
  r["carvers"] = res.certificate.carvers;
  r["nodes"] = res.nodes;
  emit(r);
  std::cerr << "VC dimension " << res.vc << " (" << cls.size() << " concepts on " << cls.domain_size()
            << " points)\n";
  return 0;
}

int run_vc_thick(const Globals& g, const std::string& class_path, std::size_t min_size) {
  const auto cls = vcmod::load_class(class_path);
  const auto res = vcmod::vc_thick(cls, min_size, g.limits);
  auto r = record("vc-thick", g);
  r["class"] = class_path;
  r["min_size"] = min_size;
  r["vc_thick"] = res.vc;
  r["family"] = family_json(*res.certificate.family);
  r["carvers"] = res.certificate.carvers;
  r["nodes"] = res.nodes;
  if (!res.note.empty()) r["note"] = res.note;
  emit(r);
  std::cerr << "thick VC dimension at min-size " << min_size << ": " << res.vc << "\n";
  return 0;
}

int run_vc_mod(const Globals& g, const std::string& class_path, const std::string& negligible) {
  const auto cls = vcmod::load_class(class_path);
  const vcmod::PrincipalIdeal ideal(load_negligible(negligible, cls.domain_size()));
  const auto res = vcmod::vc_mod_ideal(cls, ideal, g.limits);
  auto r = record("vc-mod", g);
  r["class"] = class_path;
  r["negligible"] = points_json(ideal.negligible());
  r["vc_mod"] = res.vc;
  r["family"] = family_json(*res.certificate.family);
  r["carvers"] = res.certificate.carvers;
  emit(r);
  std::cerr << "VC dimension modulo the ideal: " << res.vc << "\n";
  return 0;
}

int run_vc_removal(const Globals& g, const std::string& class_path, std::size_t budget, const std::string& mode) {
  const auto cls = vcmod::load_class(class_path);
  const auto res = vcmod::vc_after_removal(
      cls, budget, mode == "greedy" ? vcmod::RemovalMode::greedy : vcmod::RemovalMode::exact, g.limits);
  auto r = record("vc-removal", g);
  r["class"] = class_path;
  r["budget"] = budget;
  r["mode"] = mode;
  r["vc"] = res.vc;
  r["removed"] = points_json(res.removed);
  r["heuristic"] = res.heuristic;
  r["evaluations"] = res.evaluations;
  emit(r);
  std::cerr << "VC after removing " << res.removed.count() << " point(s): " << res.vc
            << (res.heuristic ? " (greedy upper bound)" : " (exact)") << "\n";
  return 0;
}

int run_stone_check(const Globals& g, const std::string& class_path, const std::string& negligible) {
  const auto cls = vcmod::load_class(class_path);
  const vcmod::PrincipalIdeal ideal(load_negligible(negligible, cls.domain_size()));
  const auto mod = vcmod::vc_mod_ideal(cls, ideal, g.limits);
  const auto stone = vcmod::vc_on_stone(cls, ideal, g.limits);
  const auto lifted = vcmod::lift_witness(cls, stone.quotient, stone.shattered_atoms, stone.carvers);
  bool lifted_valid = vcmod::is_strongly_shattered(cls, lifted).shattered;
  for (const auto& a : lifted.clusters()) lifted_valid = lifted_valid && !ideal.contains(a);
  const bool equal = mod.vc == stone.vc;
  auto r = record("stone-check", g);
  r["class"] = class_path;
  r["negligible"] = points_json(ideal.negligible());
  r["vc_mod"] = mod.vc;
  r["vc_stone"] = stone.vc;
  r["equal"] = equal;
  r["atoms"] = stone.quotient.partition.blocks.size();
  r["surviving_atoms"] = stone.quotient.surviving.size();
  r["lifted_family"] = family_json(lifted);
  r["lifted_valid"] = lifted_valid;
  emit(r);
  std::cerr << "vc_mod = " << mod.vc << ", vc_stone = " << stone.vc << (equal && lifted_valid ? " (ok)" : " (MISMATCH)")
            << "\n";
  return equal && lifted_valid ? 0 : kExitCheckFailed;
}

int run_bound(const Globals& g, double epsilon, double delta, std::size_t d) {
  const auto s = vcmod::sample_complexity_bound(epsilon, delta, d);
  auto r = record("bound", g);
  r["epsilon"] = epsilon;
  r["delta"] = delta;
  r["d"] = d;
  r["sample_complexity"] = s;
  emit(r);
  std::cerr << "s(" << epsilon << ", " << delta << ", " << d << ") = " << s << "\n";
  return 0;
}

int run_packing_d(const Globals& g, std::size_t d, double epsilon, std::size_t cluster_size, const std::string& mode) {
  const auto bounds = vcmod::packing_lower_bounds(d, epsilon);
  const auto patterns = vcmod::gen_cluster_decorated(vcmod::gen_power_set(d), cluster_size, 0, 0);
  std::vector<vcmod::DiscreteMeasure> parts;
  for (std::size_t i = 0; i < d; ++i) {
    vcmod::PointSet cluster(patterns.domain_size());
    for (std::size_t k = 0; k < cluster_size; ++k) cluster.set(i * cluster_size + k);
    parts.push_back(vcmod::uniform_on(cluster));
  }
  const auto mu = vcmod::mixture(parts, std::vector<double>(d, 1.0 / static_cast<double>(d)));
  vcmod::PackingResult packing;
  if (mode == "greedy") {
    packing = vcmod::packing_number(patterns, mu, 2 * epsilon, vcmod::PackingMode::greedy, g.limits);
  } else {
    packing = vcmod::packing_number(patterns, mu, 2 * epsilon, vcmod::PackingMode::exact, g.limits);
  }
  auto r = record("packing", g);
  r["d"] = d;
  r["epsilon"] = epsilon;
  r["separation"] = 2 * epsilon;
  r["tail_terms"] = bounds.tail_terms;
  r["combinatorial"] = static_cast<double>(bounds.combinatorial);
  r["chernoff_okamoto"] = static_cast<double>(bounds.chernoff_okamoto);
  r["bounds_ordered"] = bounds.ordered;
  r["packing"] = packing.count;
  r["packing_exact"] = packing.exact;
  r["packing_meets_bound"] = static_cast<long double>(packing.count) >= bounds.combinatorial;
  r["atom_bound"] = mu.atom_bound();
  emit(r);
  std::cerr << "packing " << packing.count << (packing.exact ? " (exact)" : " (greedy lower bound)")
            << " vs combinatorial " << static_cast<double>(bounds.combinatorial) << " vs Chernoff-Okamoto "
            << static_cast<double>(bounds.chernoff_okamoto) << "\n";
  return 0;
}

int run_packing_class(const Globals& g, const std::string& class_path, double separation,
                      const std::string& measure_path, const std::string& mode) {
  const auto cls = vcmod::load_class(class_path);
  vcmod::DiscreteMeasure mu = vcmod::uniform_on(vcmod::full_set(cls.domain_size()));
  Json measure_spec = {{"kind", "uniform"}};
  if (!measure_path.empty()) {
    std::ifstream in(measure_path);
    if (!in) throw vcmod::ParseError("cannot open measure file '" + measure_path + "'");
    try {
      measure_spec = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw vcmod::ParseError(std::string("measure: invalid JSON: ") + e.what());
    }
    mu = vcmod::cli::parse_measure(measure_spec, cls.domain_size());
  }
  const auto packing = vcmod::packing_number(
      cls, mu, separation, mode == "greedy" ? vcmod::PackingMode::greedy : vcmod::PackingMode::exact, g.limits);
  auto r = record("packing", g);
  r["class"] = class_path;
  r["measure"] = measure_spec;
  r["separation"] = separation;
  r["packing"] = packing.count;
  r["packing_exact"] = packing.exact;
  r["witness"] = packing.witness;
  r["atom_bound"] = mu.atom_bound();
  emit(r);
  std::cerr << "packing number " << packing.count << (packing.exact ? " (exact)" : " (greedy lower bound)") << "\n";
  return 0;
}

Json experiment_echo(const vcmod::cli::Experiment& ex) {
  return {{"class", ex.class_spec}, {"measures", ex.measure_specs}, {"targets", ex.target_specs},
          {"trials", ex.trials}};
}

int run_pac_sim(const Globals& g, const std::string& config_path) {
  const auto seed = require_seed(g, "pac-sim");
  const auto ex = vcmod::cli::load_experiment(config_path);
  if (ex.raw.contains("seed") && ex.raw.at("seed").get<std::uint64_t>() != seed) {
    throw vcmod::InvalidArgument("config seed differs from --seed");
  }
  if (ex.targets.empty()) throw vcmod::ParseError("config: pac-sim needs at least one target");
  const auto echo = experiment_echo(ex);
  const std::string learner_name = ex.learner == vcmod::LearnerKind::enumeration ? "enumeration" : "adversarial";

  if (g.csv) {
    std::cout << "measure,target,n,trials,mean_error,std_error,n_atom_bound";
    for (double e : ex.epsilons) std::cout << ",exceed_" << csv_number(e);
    std::cout << "\n";
  }
  std::size_t grid = 0;
  double worst_mean = 0;
  for (std::size_t k = 0; k < ex.measures.size(); ++k) {
    const auto& mu = ex.measures[k];
    for (std::size_t t = 0; t < ex.targets.size(); ++t) {
      const auto& target = ex.targets[t];
      for (std::size_t n : ex.n_grid) {
        vcmod::PacOptions opts{ex.epsilons, ex.trials, vcmod::derive_seed(seed, "pac-sim", grid++), ex.policy, g.jobs};
        auto est = std::visit(
            [&](const auto& cls) {
              using C = std::decay_t<decltype(cls)>;
              if constexpr (std::is_same_v<C, vcmod::ConceptClass>) {
                if (ex.learner == vcmod::LearnerKind::enumeration) {
                  return vcmod::pac_error_estimate(vcmod::enumeration_rule(cls, ex.order), target, mu, n, opts);
                }
                return vcmod::pac_error_estimate(vcmod::adversarial_rule(cls, target, mu), target, mu, n, opts);
              } else {
                if (ex.learner == vcmod::LearnerKind::enumeration) {
                  return vcmod::pac_error_estimate(
                      [&](const vcmod::LabeledSample& s) { return vcmod::enumeration_learner(cls, s); }, target, mu,
                      n, opts);
                }
                return vcmod::pac_error_estimate(
                    [&](const vcmod::LabeledSample& s) {
                      return vcmod::adversarial_consistent_learner(cls, s, target, mu);
                    },
                    target, mu, n, opts);
              }
            },
            ex.cls);
        worst_mean = std::max(worst_mean, est.mean_error);
        if (g.csv) {
          std::cout << k << "," << t << "," << n << "," << est.trials << "," << csv_number(est.mean_error) << ","
                    << csv_number(est.std_error) << "," << csv_number(est.n_atom_bound);
          for (double p : est.exceed_fraction) std::cout << "," << csv_number(p);
          std::cout << "\n";
          continue;
        }
        auto r = record("pac-sim", g);
        r["rng"] = vcmod::kRngAlgorithm;
        r["experiment"] = echo;
        r["learner"] = learner_name;
        r["measure"] = k;
        r["target"] = t;
        r["target_in_class"] = static_cast<bool>(ex.target_in_class[t]);
        r["n"] = n;
        r["trials"] = est.trials;
        r["mean_error"] = est.mean_error;
        r["std_error"] = est.std_error;
        Json exceed = Json::array();
        for (std::size_t e = 0; e < ex.epsilons.size(); ++e) {
          exceed.push_back({{"epsilon", ex.epsilons[e]},
                            {"fraction", est.exceed_fraction[e]},
                            {"std_error", est.exceed_std_error[e]}});
        }
        r["exceed"] = exceed;
        Json quantiles = Json::array();
        for (const auto& [p, v] : est.quantiles) quantiles.push_back({p, v});
        r["error_quantiles"] = quantiles;
        r["no_consistent"] = est.no_consistent;
        r["consistency_violations"] = est.consistency_violations;
        r["atom_bound"] = est.atom_bound;
        r["n_atom_bound"] = est.n_atom_bound;
        emit(r);
      }
    }
  }
  std::cerr << "pac-sim: " << grid << " grid point(s), worst mean error " << worst_mean << "\n";
  return 0;
}

int run_ugc_sim(const Globals& g, const std::string& config_path) {
  const auto seed = require_seed(g, "ugc-sim");
  const auto ex = vcmod::cli::load_experiment(config_path);
  if (ex.raw.contains("seed") && ex.raw.at("seed").get<std::uint64_t>() != seed) {
    throw vcmod::InvalidArgument("config seed differs from --seed");
  }
  const auto curve = std::visit(
      [&](const auto& cls) {
        return vcmod::ugc_curve(cls, ex.measures, ex.n_grid, ex.epsilon, ex.trials,
                                vcmod::derive_seed(seed, "ugc-sim"), g.jobs);
      },
      ex.cls);
  std::optional<std::size_t> vc;
  if (const auto* explicit_class = std::get_if<vcmod::ConceptClass>(&ex.cls)) {
    vc = vcmod::vc_dimension(*explicit_class, g.limits).vc;
  }
  if (g.csv) {
    std::cout << "n,probability,std_error,worst_measure,n_atom_bound\n";
    for (const auto& p : curve) {
      std::cout << p.n << "," << csv_number(p.probability) << "," << csv_number(p.std_error) << ","
                << p.worst_measure << "," << csv_number(p.n_atom_bound) << "\n";
    }
  } else {
    const auto echo = experiment_echo(ex);
    for (const auto& p : curve) {
      auto r = record("ugc-sim", g);
      r["rng"] = vcmod::kRngAlgorithm;
      r["experiment"] = echo;
      r["epsilon"] = ex.epsilon;
      r["n"] = p.n;
      r["probability"] = p.probability;
      r["std_error"] = p.std_error;
      r["worst_measure"] = p.worst_measure;
      r["per_measure"] = p.per_measure;
      r["atom_bound"] = p.atom_bound;
      r["n_atom_bound"] = p.n_atom_bound;
      if (vc && *vc >= 1) {
        r["vc"] = *vc;
        r["delta"] = ex.delta;
        r["standard_bound"] = vcmod::sample_complexity_bound(ex.epsilon, ex.delta, *vc);
      }
      emit(r);
    }
  }
  std::cerr << "ugc-sim: " << curve.size() << " grid point(s)\n";
  return 0;
}

int run_gen(const Globals& g, const std::string& family, const std::string& out_path, std::size_t m, std::size_t t,
            std::size_t count, double density, const std::string& base_path, std::size_t cluster_size,
            std::size_t noise) {
  auto need_seed = [&] { return require_seed(g, "gen " + family); };
  auto cls = [&]() -> vcmod::ConceptClass {
    if (family == "finite-cofinite") return vcmod::gen_finite_cofinite(m, t, g.limits);
    if (family == "intervals") return vcmod::gen_intervals(m);
    if (family == "thresholds") return vcmod::gen_thresholds(m);
    if (family == "power-set") return vcmod::gen_power_set(m);
    if (family == "random") return vcmod::gen_random(m, count, density, need_seed());
    if (family == "cluster-decorated") {
      if (base_path.empty()) throw vcmod::InvalidArgument("gen cluster-decorated requires --base");
      return vcmod::gen_cluster_decorated(vcmod::load_class(base_path), cluster_size, noise, need_seed());
    }
    throw vcmod::InvalidArgument("unknown generator family '" + family + "'");
  }();
  if (out_path.empty()) {
    vcmod::write_class(std::cout, cls);
  } else {
    std::ofstream out(out_path);
    if (!out) throw vcmod::InvalidArgument("cannot write '" + out_path + "'");
    vcmod::write_class(out, cls);
  }
  std::cerr << "generated " << family << ": " << cls.size() << " concepts on " << cls.domain_size() << " points\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"VC dimension modulo ideals, thick VC dimension and learnability simulations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", build_id());
  app.fallthrough();

  Globals g;
  std::uint64_t seed = 0;
  auto* seed_opt = app.add_option("--seed", seed, "Seed for every stochastic step");
  app.add_option("--jobs", g.jobs, "Worker threads for Monte Carlo trials")->check(CLI::PositiveNumber);
  app.add_option("--max-nodes", g.limits.max_nodes, "Node budget for exact searches");
  app.add_option("--max-removal-subsets", g.limits.max_removal_subsets, "Subset budget for exact removal");
  app.add_option("--max-enumeration", g.limits.max_enumeration, "Budget for exhaustive enumerations");
  app.add_flag("--csv", g.csv, "Tabular CSV output for curve subcommands");

  std::string class_path, negligible, mode = "exact", config_path, measure_path, family, out_path, base_path;
  std::size_t min_size = 1, budget = 0, d = 1, m = 0, t = 0, count = 0, cluster_size = 1, noise = 0;
  double epsilon = 0.1, delta = 0.1, separation = 0.1, density = 0.5;

  auto* vc = app.add_subcommand("vc", "Classical VC dimension");
  vc->add_option("--class", class_path, "Class file")->required();

  auto* thick = app.add_subcommand("vc-thick", "Largest strongly shattered family of clusters >= min-size");
  thick->add_option("--class", class_path, "Class file")->required();
  thick->add_option("--min-size", min_size, "Cluster size threshold")->required();

  auto* mod = app.add_subcommand("vc-mod", "VC dimension modulo the ideal of subsets of a negligible set");
  mod->add_option("--class", class_path, "Class file")->required();
  mod->add_option("--negligible", negligible, "Set file or 0/1 string")->required();

  auto* removal = app.add_subcommand("vc-removal", "Minimum VC dimension after removing <= budget points");
  removal->add_option("--class", class_path, "Class file")->required();
  removal->add_option("--budget", budget, "Number of removable points")->required();
  removal->add_option("--mode", mode, "exact or greedy")->check(CLI::IsMember({"exact", "greedy"}));

  auto* stone = app.add_subcommand("stone-check", "Cross-check vc-mod against VC on the quotient Stone space");
  stone->add_option("--class", class_path, "Class file")->required();
  stone->add_option("--negligible", negligible, "Set file or 0/1 string")->required();

  auto* pac = app.add_subcommand("pac-sim", "Monte Carlo PAC error of a learning rule");
  pac->add_option("--config", config_path, "Experiment config (JSON)")->required();

  auto* ugc = app.add_subcommand("ugc-sim", "Monte Carlo uniform deviation curve");
  ugc->add_option("--config", config_path, "Experiment config (JSON)")->required();

  auto* packing = app.add_subcommand("packing", "Packing numbers and their lower bounds");
  auto* d_opt = packing->add_option("--d", d, "Pattern dimension (with --epsilon)");
  packing->add_option("--epsilon", epsilon, "Separation is 2·epsilon");
  packing->add_option("--cluster-size", cluster_size, "Points per cluster for the pattern class");
  auto* class_opt = packing->add_option("--class", class_path, "Class file (with --separation)");
  packing->add_option("--separation", separation, "Minimum pairwise d_mu");
  packing->add_option("--measure", measure_path, "Measure JSON (default uniform)");
  packing->add_option("--mode", mode, "exact or greedy")->check(CLI::IsMember({"exact", "greedy"}));
  d_opt->excludes(class_opt);

  auto* bound = app.add_subcommand("bound", "Standard sample complexity s(epsilon, delta, d)");
  bound->add_option("--epsilon", epsilon)->required();
  bound->add_option("--delta", delta)->required();
  bound->add_option("--d", d)->required();

  auto* gen = app.add_subcommand("gen", "Generate a class file");
  gen->add_option("family", family, "finite-cofinite | intervals | thresholds | power-set | random | cluster-decorated")
      ->required();
  gen->add_option("--m", m, "Domain size");
  gen->add_option("--t", t, "Finite/cofinite threshold");
  gen->add_option("--count", count, "Rows for random");
  gen->add_option("--density", density, "Membership probability for random");
  gen->add_option("--base", base_path, "Base class file for cluster-decorated");
  gen->add_option("--cluster-size", cluster_size, "Cluster size for cluster-decorated");
  gen->add_option("--noise", noise, "Noise points for cluster-decorated");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (seed_opt->count() > 0) g.seed = seed;

  try {
    if (vc->parsed()) return run_vc(g, class_path);
    if (thick->parsed()) return run_vc_thick(g, class_path, min_size);
    if (mod->parsed()) return run_vc_mod(g, class_path, negligible);
    if (removal->parsed()) return run_vc_removal(g, class_path, budget, mode);
    if (stone->parsed()) return run_stone_check(g, class_path, negligible);
    if (pac->parsed()) return run_pac_sim(g, config_path);
    if (ugc->parsed()) return run_ugc_sim(g, config_path);
    if (bound->parsed()) return run_bound(g, epsilon, delta, d);
    if (packing->parsed()) {
      if (!class_path.empty()) return run_packing_class(g, class_path, separation, measure_path, mode);
      if (d_opt->count() == 0) throw vcmod::InvalidArgument("packing needs --d/--epsilon or --class/--separation");
      return run_packing_d(g, d, epsilon, cluster_size, mode);
    }
    if (gen->parsed()) {
      return run_gen(g, family, out_path, m, t, count, density, base_path, cluster_size, noise);
    }
  } catch (const vcmod::WorkLimitExceeded& e) {
    std::cerr << "work limit exceeded: " << e.what() << "\n";
    return kExitWorkLimit;
  } catch (const vcmod::NoConsistentHypothesis& e) {
    std::cerr << "no consistent hypothesis: " << e.what() << "\n";
    return kExitNoConsistent;
  } catch (const vcmod::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
