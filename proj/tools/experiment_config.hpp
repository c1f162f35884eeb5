#pragma once

// Experiment configuration documents for pac-sim and ugc-sim (JSON):
//
//   {
//     "class":    {"file": "x.cls"} | {"family": "finite_cofinite", "m": 1000, "t": 5, "implicit": true}
//                 | {"family": "intervals" | "thresholds" | "power_set", "m": M}
//                 | {"family": "random", "m": M, "count": K, "density": p, "seed": S},
//     "learner":  {"kind": "enumeration", "order": [..]} | {"kind": "adversarial"},
//     "measures": [{"kind": "uniform"} | {"kind": "uniform_on", "support": [..]}
//                  | {"kind": "weights", "weights": [..]}
//                  | {"kind": "cluster_mixture", "clusters": [[..], ..], "coefficients": [..]}],
//     "targets":  [index | {"points": [..]} | {"complement_of": [..]}]   (need not be members),
//     "n_grid":   [..], "epsilons": [..] (pac-sim), "epsilon": e (ugc-sim), "delta": d,
//     "trials":   T, "no_consistent": "fatal" | "full_error", "seed": S (optional, must equal --seed)
//   }
//
// Relative class file paths resolve against the config file's directory.

#include <filesystem>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vcmod/vcmod.hpp"

namespace vcmod::cli {

using Json = nlohmann::ordered_json;

using AnyClass = std::variant<ConceptClass, FiniteCofiniteClass>;

struct Experiment {
  Json raw;
  AnyClass cls = FiniteCofiniteClass(2, 0);
  Json class_spec;
  LearnerKind learner = LearnerKind::enumeration;
  std::vector<std::size_t> order;  // explicit classes only
  std::vector<DiscreteMeasure> measures;
  Json measure_specs = Json::array();
  std::vector<Concept> targets;
  std::vector<bool> target_in_class;
  Json target_specs = Json::array();
  std::vector<std::size_t> n_grid;
  std::vector<double> epsilons;
  double epsilon = 0.1;
  double delta = 0.1;
  std::size_t trials = 100;
  NoConsistentPolicy policy = NoConsistentPolicy::fatal;
};

inline std::size_t domain_size(const AnyClass& cls) {
  return std::visit([](const auto& c) { return c.domain_size(); }, cls);
}

template <class T>
T require(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("config: missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config: bad value for '") + key + "': " + e.what());
  }
}

template <class T>
T optional_value(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? require<T>(j, key) : fallback;
}

inline AnyClass parse_class(const Json& spec, const std::filesystem::path& base_dir) {
  if (spec.contains("file")) {
    std::filesystem::path p = require<std::string>(spec, "file");
    if (p.is_relative()) p = base_dir / p;
    return load_class(p.string());
  }
  const auto family = require<std::string>(spec, "family");
  const auto m = require<std::size_t>(spec, "m");
  if (family == "finite_cofinite") {
    const auto t = require<std::size_t>(spec, "t");
    if (optional_value<bool>(spec, "implicit", false)) return FiniteCofiniteClass(m, t);
    return gen_finite_cofinite(m, t);
  }
  if (family == "intervals") return gen_intervals(m);
  if (family == "thresholds") return gen_thresholds(m);
  if (family == "power_set") return gen_power_set(m);
  if (family == "random") {
    return gen_random(m, require<std::size_t>(spec, "count"), require<double>(spec, "density"),
                      require<std::uint64_t>(spec, "seed"));
  }
  throw ParseError("config: unknown class family '" + family + "'");
}

inline DiscreteMeasure parse_measure(const Json& spec, std::size_t m) {
  const auto kind = require<std::string>(spec, "kind");
  if (kind == "uniform") return uniform_on(full_set(m));
  if (kind == "uniform_on") return uniform_on(bits_from_indices(m, require<std::vector<Point>>(spec, "support")));
  if (kind == "weights") {
    auto w = require<std::vector<double>>(spec, "weights");
    if (w.size() != m) throw ParseError("config: measure weights length differs from domain size");
    return DiscreteMeasure(std::move(w));
  }
  if (kind == "cluster_mixture") {
    std::vector<DiscreteMeasure> parts;
    for (const auto& cluster : require<std::vector<std::vector<Point>>>(spec, "clusters")) {
      parts.push_back(uniform_on(bits_from_indices(m, cluster)));
    }
    std::vector<double> coefficients;
    if (spec.contains("coefficients")) {
      coefficients = require<std::vector<double>>(spec, "coefficients");
    } else {
      coefficients.assign(parts.size(), 1.0 / static_cast<double>(parts.size()));
    }
    return mixture(parts, coefficients);
  }
  throw ParseError("config: unknown measure kind '" + kind + "'");
}

inline bool class_contains(const AnyClass& cls, const Concept& c) {
  return std::visit(
      [&](const auto& k) {
        if constexpr (std::is_same_v<std::decay_t<decltype(k)>, ConceptClass>) {
          return std::find(k.concepts().begin(), k.concepts().end(), c) != k.concepts().end();
        } else {
          return k.contains(c);
        }
      },
      cls);
}

// Targets outside the class are allowed; samples they label may admit no consistent member.
inline Concept parse_target(const Json& spec, const AnyClass& cls) {
  const auto m = domain_size(cls);
  Concept target(m);
  if (spec.is_number_integer()) {
    const auto* explicit_class = std::get_if<ConceptClass>(&cls);
    if (!explicit_class) throw ParseError("config: index targets need an explicit class");
    const auto index = spec.get<std::size_t>();
    if (index >= explicit_class->size()) throw ParseError("config: target index out of range");
    return (*explicit_class)[index];
  }
  if (spec.contains("points")) {
    target = bits_from_indices(m, require<std::vector<Point>>(spec, "points"));
  } else if (spec.contains("complement_of")) {
    target = ~bits_from_indices(m, require<std::vector<Point>>(spec, "complement_of"));
  } else {
    throw ParseError("config: target must be an index, {points} or {complement_of}");
  }
  return target;
}

inline Experiment load_experiment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config '" + path + "'");
  Experiment ex;
  try {
    ex.raw = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config: invalid JSON: ") + e.what());
  }
  const auto base_dir = std::filesystem::path(path).parent_path();
  ex.class_spec = require<Json>(ex.raw, "class");
  ex.cls = parse_class(ex.class_spec, base_dir);
  const auto m = domain_size(ex.cls);

  if (ex.raw.contains("learner")) {
    const auto& learner = ex.raw.at("learner");
    const auto kind = require<std::string>(learner, "kind");
    if (kind == "enumeration") {
      ex.learner = LearnerKind::enumeration;
    } else if (kind == "adversarial") {
      ex.learner = LearnerKind::adversarial;
    } else {
      throw ParseError("config: unknown learner kind '" + kind + "'");
    }
    if (learner.contains("order")) {
      const auto* explicit_class = std::get_if<ConceptClass>(&ex.cls);
      if (!explicit_class) throw ParseError("config: an implicit class has a fixed order");
      ex.order = require<std::vector<std::size_t>>(learner, "order");
      validate_order(ex.order, explicit_class->size());
    }
  }
  if (const auto* explicit_class = std::get_if<ConceptClass>(&ex.cls); explicit_class && ex.order.empty()) {
    ex.order = identity_order(explicit_class->size());
  }

  const Json measures = optional_value<Json>(ex.raw, "measures", Json::array({Json{{"kind", "uniform"}}}));
  for (const auto& spec : measures) {
    ex.measures.push_back(parse_measure(spec, m));
    ex.measure_specs.push_back(spec);
  }
  if (ex.measures.empty()) throw ParseError("config: empty measure list");

  if (ex.raw.contains("targets")) {
    for (const auto& spec : ex.raw.at("targets")) {
      ex.targets.push_back(parse_target(spec, ex.cls));
      ex.target_in_class.push_back(class_contains(ex.cls, ex.targets.back()));
      ex.target_specs.push_back(spec);
    }
  }
  ex.n_grid = require<std::vector<std::size_t>>(ex.raw, "n_grid");
  ex.epsilons = optional_value<std::vector<double>>(ex.raw, "epsilons", {});
  ex.epsilon = optional_value<double>(ex.raw, "epsilon", ex.epsilons.empty() ? 0.1 : ex.epsilons.front());
  ex.delta = optional_value<double>(ex.raw, "delta", 0.1);
  ex.trials = optional_value<std::size_t>(ex.raw, "trials", 100);
  const auto policy = optional_value<std::string>(ex.raw, "no_consistent", "fatal");
  if (policy == "fatal") {
    ex.policy = NoConsistentPolicy::fatal;
  } else if (policy == "full_error") {
    ex.policy = NoConsistentPolicy::full_error;
  } else {
    throw ParseError("config: no_consistent must be 'fatal' or 'full_error'");
  }
  return ex;
}

}  // namespace vcmod::cli
