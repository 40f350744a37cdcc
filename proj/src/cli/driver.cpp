#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "orlicz/cli.hpp"
#include "orlicz/config.hpp"
#include "orlicz/parallel.hpp"

namespace orlicz::cli {

namespace {

using nlohmann::json;

// A command-line flag copied into the effective config under `key`.
struct Flag {
  enum class Type { kNumber, kString, kNumberList, kStringList, kPhi };
  std::string name;
  std::string key;
  Type type;
  std::string help;
};

struct Sub {
  std::string name;
  std::string help;
  Command command;
  std::vector<Flag> flags;  // keys may be dotted, e.g. lemma7.seed
};

double parse_number(const Flag& f, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("--" + f.name + ": not a number: " + text);
  return v;
}

json to_json_value(const Flag& f, const std::vector<std::string>& raw) {
  switch (f.type) {
    case Flag::Type::kNumber: {
      const double v = parse_number(f, raw.front());
      if (v == static_cast<double>(static_cast<long long>(v)) && raw.front().find_first_of(".eE") == std::string::npos) {
        return static_cast<long long>(v);
      }
      return v;
    }
    case Flag::Type::kString:
      return raw.front();
    case Flag::Type::kPhi:
      if (!raw.front().empty() && raw.front().front() == '{') return json::parse(raw.front());
      return raw.front();
    case Flag::Type::kNumberList: {
      json a = json::array();
      for (const auto& item : raw) {
        std::stringstream ss(item);
        std::string tok;
        while (std::getline(ss, tok, ',')) a.push_back(parse_number(f, tok));
      }
      return a;
    }
    case Flag::Type::kStringList:
      return raw;
  }
  return nullptr;
}

// Sets a dotted key ("lemma7.seed") inside the config.
void set_path(json& cfg, const std::string& key, json value) {
  json* node = &cfg;
  std::size_t start = 0;
  for (;;) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot - start);
    if (dot == std::string::npos) {
      (*node)[part] = std::move(value);
      return;
    }
    if (!node->contains(part) || !(*node)[part].is_object()) (*node)[part] = json::object();
    node = &(*node)[part];
    start = dot + 1;
  }
}

std::vector<Sub> subcommands() {
  using T = Flag::Type;
  return {
      {"luxemburg-norm",
       "Luxemburg norms of sequences (closed-form check for power functions)",
       luxemburg_norm,
       {{"phi", "phi", T::kPhi, "Young function (shorthand, inline JSON or file)"},
        {"values", "values", T::kNumberList, "comma-separated sequence"},
        {"random-count", "random.count", T::kNumber, "number of random sequences"},
        {"random-max-length", "random.max_length", T::kNumber, "maximum random sequence length"},
        {"seed", "random.seed", T::kNumber, "seed of the random sequences"}}},
      {"besov-norm",
       "Classical and dyadic Besov-Orlicz norms of a polynomial with the comparison checks",
       besov_norm,
       {{"phi", "phi", T::kPhi, "Young function"},
        {"psi", "psi", T::kString, "weight: one | phi_inverse_sq | power:theta"},
        {"degree", "random.degree", T::kNumber, "degree of a random polynomial"},
        {"seed", "random.seed", T::kNumber, "seed of the random polynomial"},
        {"n-max", "n_max", T::kNumber, "last dyadic level of the classical norm"}}},
      {"check-conditions",
       "Integral embedding condition and the structural conditions on Phi",
       check_conditions,
       {{"phi", "phi", T::kPhi, "Young function"},
        {"psi", "psi", T::kString, "weight: one | phi_inverse_sq | power:theta"},
        {"d", "d", T::kNumber, "dimension"},
        {"s-max", "s_max", T::kNumber, "largest s of the sweep"},
        {"s-grid", "s_grid", T::kNumberList, "explicit s values"},
        {"expected", "expected", T::kString, "bounded | divergent"},
        {"C", "C", T::kNumber, "constant for the structural conditions"},
        {"expected-fail", "expected_fail", T::kStringList, "check ids expected to fail"}}},
      {"verify-sampling",
       "Sampling inequalities on random polynomials",
       verify_sampling,
       {{"kind", "kind", T::kString, "theorem5 | zygmund | l2 | chain"},
        {"level", "level", T::kNumber, "frame level n"},
        {"trials", "trials", T::kNumber, "number of random polynomials"},
        {"phi", "phi", T::kPhi, "Young function"},
        {"seed", "seed", T::kNumber, "batch seed"},
        {"law", "law", T::kString, "gaussian | unimodular"},
        {"C", "C", T::kNumber, "constant C (default e^{2e^2} for the explicit example, else 1)"},
        {"max-degree", "max_degree", T::kNumber, "maximum degree for zygmund / chain"}}},
      {"check-lemmas",
       "Ball lemma on an (r, alpha) grid and the inverse-to-forward transfer",
       check_lemmas,
       {{"grid", "lemma2.grid", T::kNumber, "grid size per axis"},
        {"samples", "lemma2.samples", T::kNumber, "Monte Carlo samples of the headline d = 3 check"},
        {"seed", "lemma2.seed", T::kNumber, "Monte Carlo seed"},
        {"phi", "lemma7.phi", T::kPhi, "Young function for the transfer lemma"},
        {"C", "lemma7.C", T::kNumber, "constant C"},
        {"pairs", "lemma7.pairs", T::kNumber, "number of random admissible pairs"},
        {"pair-seed", "lemma7.seed", T::kNumber, "seed of the pairs"}}},
      {"extrapolate",
       "Sobolev summing profile, admissible gamma and the summing integral",
       extrapolate,
       {{"d", "d", T::kNumber, "dimension"},
        {"k", "k", T::kNumber, "smoothness"},
        {"p", "p", T::kNumber, "integrability in [1, 2)"},
        {"alpha", "alpha", T::kNumber, "weight exponent (> -1)"}}},
      {"report",
       "Aggregate JSON-lines reports and recompute their pass flags",
       report,
       {{"inputs", "inputs", T::kStringList, "JSON-lines report files"}}},
  };
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Numerical verification toolkit for Orlicz and Besov-Orlicz embeddings"};
  app.require_subcommand(1);
  const auto subs = subcommands();
  struct State {
    std::string config_path;
    std::string out;
    bool timing = false;
    long workers = 0;
    std::map<std::string, std::vector<std::string>> raw;
  };
  std::vector<State> states(subs.size());
  std::vector<CLI::App*> apps;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    CLI::App* sc = app.add_subcommand(subs[i].name, subs[i].help);
    State& st = states[i];
    sc->add_option("--config", st.config_path, "JSON config file");
    sc->add_option("--out", st.out, "output prefix for .json/.jsonl/.csv");
    sc->add_flag("--timing", st.timing, "write wall time to a .timing.json sidecar");
    sc->add_option("--workers", st.workers, "worker threads (default: ORLICZ_WORKERS or hardware)");
    for (const auto& f : subs[i].flags) {
      auto* opt = sc->add_option("--" + f.name, st.raw[f.name], f.help);
      if (f.type == Flag::Type::kStringList) {
        opt->expected(1, -1);
      } else if (f.type != Flag::Type::kNumberList) {
        opt->expected(1);
      }
    }
    apps.push_back(sc);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kAllPass : kUsageError;
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!apps[i]->parsed()) continue;
    State& st = states[i];
    try {
      json cfg = json::object();
      if (!st.config_path.empty()) {
        std::ifstream in(st.config_path);
        if (!in) throw UsageError("cannot open config " + st.config_path);
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        if (text.find_first_not_of(" \t\r\n") != std::string::npos) cfg = json::parse(text);
        if (!cfg.is_object()) throw UsageError("config must be a JSON object");
      }
      bool any_flag = false;
      for (const auto& f : subs[i].flags) {
        const auto& raw = st.raw[f.name];
        if (raw.empty()) continue;
        any_flag = true;
        set_path(cfg, f.key, to_json_value(f, raw));
      }
      if (cfg.empty() && !any_flag) {
        throw UsageError("empty config: pass --config with content or subcommand flags (see --help)");
      }
      if (st.workers > 0) set_worker_count(static_cast<std::size_t>(st.workers));
      if (cfg.contains("workers")) set_worker_count(cfg.at("workers").get<std::size_t>());
      const auto t0 = std::chrono::steady_clock::now();
      const CommandResult result = subs[i].command(cfg);
      const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const int code = write_outputs(subs[i].name, result, st.out, st.timing, dt);
      set_worker_count(0);
      return code;
    } catch (const UsageError& e) {
      std::fprintf(stderr, "%s: usage error: %s\n", subs[i].name.c_str(), e.what());
      set_worker_count(0);
      return kUsageError;
    } catch (const json::exception& e) {
      std::fprintf(stderr, "%s: config error: %s\n", subs[i].name.c_str(), e.what());
      set_worker_count(0);
      return kUsageError;
    } catch (const std::exception& e) {
      std::fprintf(stderr, "%s: error: %s\n", subs[i].name.c_str(), e.what());
      set_worker_count(0);
      return kRuntimeError;
    }
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace orlicz::cli
