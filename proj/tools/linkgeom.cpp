#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "linkgeom/errors.hpp"
#include "linkgeom/io.hpp"

using namespace linkgeom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

struct Args {
  std::string input;
  std::string construct;
  bool random = false;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  int bits = 16;
  std::string out;
  bool quiet = false;
  std::size_t max_n = 8;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t r = 3;
  std::vector<std::size_t> shape;
  std::vector<std::size_t> deleted = {2};
  std::vector<std::string> apex;
  std::string hypergraph;
  unsigned jobs = 0;
};

std::uint64_t budget_from_env(std::uint64_t fallback) {
  const char* v = std::getenv("LINKGEOM_BUDGET");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const unsigned long long b = std::strtoull(v, &end, 10);
  if (*end != '\0' || b == 0) throw GeometryError(ErrorCode::kInvalidArgument, "LINKGEOM_BUDGET must be a positive integer");
  return b;
}

// A construction is either a plain configuration or a product grid.
struct Built {
  Configuration cfg;
  std::optional<ProductGrid> grid;
};

std::size_t or_default(std::size_t v, std::size_t fallback) { return v ? v : fallback; }

Built build(const std::string& name, const Args& a) {
  auto plain = [](Configuration c) { return Built{std::move(c), std::nullopt}; };
  auto grid = [](ProductGrid g) {
    Configuration c = g.configuration();
    return Built{std::move(c), std::move(g)};
  };
  if (name == "moment-curve") return plain(moment_curve(or_default(a.n, 7), or_default(a.d, 4)));
  if (name == "hexagon-helix") return plain(hexagon_helix6());
  if (name == "rational-helix") return plain(rational_helix(or_default(a.n, 6)));
  if (name == "simplex-plus-interior") return plain(simplex_plus_interior(or_default(a.d, 3)));
  if (name == "cone") {
    const std::size_t d = or_default(a.d, 4);
    if (a.apex.size() != d) throw GeometryError(ErrorCode::kInvalidArgument, "--apex needs d coordinates");
    Point apex;
    for (const auto& x : a.apex) apex.coords.emplace_back(parse_reduced_rational(x));
    const Configuration base = a.input.empty() ? moment_curve(or_default(a.n, 5), d - 1)
                                               : configuration_from_json(read_json_file(a.input));
    return plain(cone(apex, base));
  }
  if (name == "cylinder") return grid(cylinder_grid(or_default(a.n, 5)));
  if (name == "torus-k3x4") return grid(torus_k3n(4));
  if (name == "torus-k3n") return grid(torus_k3n(or_default(a.n, 4)));
  if (name == "k4n-r4") return grid(k4n_grid_r4(or_default(a.n, 5), budget_from_env(200)));
  if (name == "tverberg-counterexample") {
    TverbergOptions o;
    o.budget = budget_from_env(o.budget);
    return plain(tverberg_counterexample(or_default(a.d, 2), a.r, o));
  }
  throw GeometryError(ErrorCode::kInvalidArgument, "unknown construction " + name);
}

const char* const kConstructions =
    "moment-curve, hexagon-helix, rational-helix, simplex-plus-interior, cone, cylinder, torus-k3x4, torus-k3n, "
    "k4n-r4, tverberg-counterexample";

void emit(const Args& a, const Json& report) {
  const std::string text = report.dump(2) + "\n";
  if (!a.out.empty()) write_text_file(a.out, text);
  std::cout << text;
}

void say(const Args& a, const std::string& line) {
  if (!a.quiet) std::cerr << line << "\n";
}

int exit_for(const GeometryError& e) {
  switch (e.code()) {
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kSearchExhausted:
    case ErrorCode::kPerturbExhausted:
      return kExitBudget;
    default:
      return kExitInvalid;
  }
}

Json command_echo(int argc, char** argv) {
  Json j = Json::array();
  for (int i = 1; i < argc; ++i) j.push_back(argv[i]);
  return j;
}

int sources_given(const Args& a) {
  return static_cast<int>(!a.input.empty()) + static_cast<int>(!a.construct.empty()) + static_cast<int>(a.random);
}

struct TrialResult {
  std::optional<ParityReport> report;
  std::optional<std::string> error;
  int exit_code = 0;
};

// Runs fn(i) for i < count on a worker pool; results keep index order.
template <typename Fn>
std::vector<TrialResult> run_pool(std::size_t count, unsigned jobs, Fn fn) {
  std::vector<TrialResult> out(count);
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i].report = fn(i);
      } catch (const GeometryError& e) {
        out[i].error = e.what();
        out[i].exit_code = exit_for(e);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

int cmd_verify(const std::string& id, const Args& a, int argc, char** argv) {
  const VerifierEntry* entry = find_verifier(id);
  if (!entry) {
    std::string known;
    for (const auto& e : verifier_registry()) known += (known.empty() ? "" : ", ") + e.id;
    throw GeometryError(ErrorCode::kInvalidArgument, "unknown theorem id " + id + " (known: " + known + ")");
  }
  if (sources_given(a) != 1) {
    throw GeometryError(ErrorCode::kInvalidArgument, "give exactly one of --input, --construct, --random");
  }
  VerifyOptions opts;
  opts.max_n = a.max_n;
  if (a.d) {
    opts.stat_il_n = a.d;
    opts.grid_dim = a.d;
  }
  if (!a.shape.empty()) {
    if (a.shape.size() != 2) throw GeometryError(ErrorCode::kInvalidArgument, "--shape takes m n");
    opts.grid_m = a.shape[0];
    opts.grid_n = a.shape[1];
  }
  opts.deleted = a.deleted;

  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialResult> results;
  if (a.random) {
    if (a.trials == 0) throw GeometryError(ErrorCode::kInvalidArgument, "--trials must be positive");
    const unsigned jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
    results = run_pool(a.trials, jobs, [&](std::size_t i) {
      const Configuration cfg = entry->sample(trial_seed(a.seed, i), a.bits, opts);
      return entry->run(cfg, opts);
    });
  } else {
    std::optional<ProductGrid> grid;
    Configuration cfg = [&] {
      if (!a.construct.empty()) {
        Built b = build(a.construct, a);
        grid = std::move(b.grid);
        return b.cfg;
      }
      const Json j = read_json_file(a.input);
      if (j.contains("shape")) {
        grid = grid_from_json(j);
        return grid->configuration();
      }
      return configuration_from_json(j);
    }();
    TrialResult t;
    t.report = (id == "product" && grid) ? verify_product(*grid) : entry->run(cfg, opts);
    results.push_back(std::move(t));
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::size_t confirmed = 0;
  std::size_t degenerate = 0;
  std::size_t violated = 0;
  std::size_t failed = 0;
  int worst_error = kExitOk;
  Json trials = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    Json t = results[i].report ? report_to_json(*results[i].report) : Json{{"error", *results[i].error}};
    if (a.random) t["seed"] = trial_seed(a.seed, i);
    trials.push_back(std::move(t));
    if (!results[i].report) {
      ++failed;
      worst_error = std::max(worst_error, results[i].exit_code);
      continue;
    }
    switch (results[i].report->verdict) {
      case ParityReport::Verdict::kConfirmed: ++confirmed; break;
      case ParityReport::Verdict::kDegenerate: ++degenerate; break;
      case ParityReport::Verdict::kViolated: ++violated; break;
    }
  }
  Json report{{"command", command_echo(argc, argv)},
              {"theorem", id},
              {"seed", a.random ? Json(a.seed) : Json(nullptr)},
              {"trials", trials},
              {"aggregate",
               {{"trials", results.size()},
                {"confirmed", confirmed},
                {"degenerate", degenerate},
                {"violated", violated},
                {"errors", failed}}},
              {"wall_time_s", wall}};
  emit(a, report);
  std::ostringstream s;
  s << id << ": " << results.size() << " trial(s), " << confirmed << " confirmed, " << degenerate << " degenerate, "
    << violated << " violated";
  if (failed) s << ", " << failed << " failed";
  if (results.size() == 1 && results[0].report) {
    const auto& r = *results[0].report;
    s << " (count " << r.count << ", claim " << claim_name(r.claim) << ")";
  }
  say(a, s.str());
  if (violated) return kExitViolated;
  if (failed && worst_error == kExitOk) return kExitInvalid;
  return worst_error;
}

int cmd_construct(const std::string& name, const Args& a) {
  Built b = build(name, a);
  emit(a, b.grid ? grid_to_json(*b.grid) : configuration_to_json(b.cfg));
  say(a, name + ": " + std::to_string(b.cfg.size()) + " points in R^" + std::to_string(b.cfg.dimension()));
  return kExitOk;
}

Configuration partition_input(const Args& a, std::size_t default_n, std::size_t default_d) {
  if (sources_given(a) != 1) {
    throw GeometryError(ErrorCode::kInvalidArgument, "give exactly one of --input, --construct, --random");
  }
  if (!a.input.empty()) return configuration_from_json(read_json_file(a.input));
  if (!a.construct.empty()) return build(a.construct, a).cfg;
  return random_configuration(or_default(a.n, default_n), or_default(a.d, default_d), a.seed, a.bits);
}

int cmd_radon(const Args& a, int argc, char** argv) {
  const std::size_t d = or_default(a.d, 2);
  const Configuration cfg = partition_input(a, d + 2, d);
  const PartitionCertificate cert = radon_partition(cfg);
  const bool valid = validate_certificate(cfg, cert);
  emit(a, Json{{"command", command_echo(argc, argv)}, {"certificate", certificate_to_json(cert)}, {"valid", valid}});
  say(a, std::string("radon: blocks of size ") + std::to_string(cert.blocks[0].size()) + " and " +
             std::to_string(cert.blocks[1].size()) + (valid ? ", certificate valid" : ", certificate INVALID"));
  return valid ? kExitOk : kExitViolated;
}

int cmd_tverberg(const Args& a, int argc, char** argv) {
  const std::size_t d = or_default(a.d, 2);
  const Configuration cfg = partition_input(a, (d + 1) * (a.r - 1) + 1, d);
  TverbergOptions o;
  o.budget = budget_from_env(o.budget);
  const TverbergSearch s = tverberg_partition(cfg, a.r, o);
  Json report{{"command", command_echo(argc, argv)},
              {"r", a.r},
              {"points", cfg.size()},
              {"partitions_examined", s.partitions_examined},
              {"partitions_total", s.partitions_total}};
  report["certificate"] = s.certificate ? certificate_to_json(*s.certificate) : Json(nullptr);
  report["certified_absence"] = !s.certificate.has_value();
  const bool valid = !s.certificate || validate_certificate(cfg, *s.certificate);
  report["valid"] = valid;
  emit(a, report);
  say(a, s.certificate ? "tverberg: partition found"
                       : "tverberg: no partition among " + std::to_string(s.partitions_total) + " (certified absence)");
  return valid ? kExitOk : kExitViolated;
}

int cmd_check_embedding(const Args& a, int argc, char** argv) {
  if (a.hypergraph.empty() || (a.input.empty() && a.construct.empty())) {
    throw GeometryError(ErrorCode::kInvalidArgument, "check embedding needs --hypergraph and --input or --construct");
  }
  const Hypergraph2 hg = hypergraph_from_json(read_json_file(a.hypergraph));
  const Configuration cfg =
      a.input.empty() ? build(a.construct, a).cfg : configuration_from_json(read_json_file(a.input));
  const EmbeddingCheck check = is_linear_realization(hg, cfg);
  Json report{{"command", command_echo(argc, argv)}, {"embedded", check.embedded}};
  report["witness"] = check.witness ? Json::array({check.witness->first.vertices(), check.witness->second.vertices()})
                                    : Json(nullptr);
  emit(a, report);
  say(a, check.embedded ? "embedding: every pair meets properly" : "embedding: improper pair found");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact linking and intersection parity checks for point configurations"};
  app.require_subcommand(1);
  Args a;

  auto add_source = [&a](CLI::App* c) {
    c->add_option("--input", a.input, "point file");
    c->add_option("--construct", a.construct, std::string("construction: ") + kConstructions);
    c->add_flag("--random", a.random, "seeded random input");
  };
  auto add_common = [&a](CLI::App* c) {
    c->add_option("--seed", a.seed, "campaign seed");
    c->add_option("--bits", a.bits, "random coordinate bits")->check(CLI::Range(1, 60));
    c->add_option("--out", a.out, "also write the JSON report here");
    c->add_flag("--quiet", a.quiet, "no summary on stderr");
    c->add_option("-n", a.n, "point count / size parameter");
    c->add_option("-d", a.d, "dimension");
    c->add_option("-r", a.r, "number of Tverberg blocks")->check(CLI::Range(2, 64));
  };

  std::string theorem;
  auto* verify = app.add_subcommand("verify", "run a theorem verifier");
  verify->add_option("theorem", theorem, "theorem id")->required();
  add_source(verify);
  add_common(verify);
  verify->add_option("--trials", a.trials, "number of random trials");
  verify->add_option("--max-n", a.max_n, "stat-il dimension cap");
  verify->add_option("--shape", a.shape, "product grid shape m n")->expected(2);
  verify->add_option("--deleted", a.deleted, "deleted-face edges 1k, e.g. 2 3");
  verify->add_option("--jobs", a.jobs, "worker threads");

  std::string name;
  auto* construct = app.add_subcommand("construct", "write a construction as a point file");
  construct->add_option("name", name, kConstructions)->required();
  construct->add_option("--input", a.input, "base point file (cone)");
  construct->add_option("--apex", a.apex, "apex coordinates (cone)");
  add_common(construct);

  auto* radon = app.add_subcommand("radon", "Radon partition of d+2 points");
  add_source(radon);
  add_common(radon);

  auto* tverberg = app.add_subcommand("tverberg", "exhaustive Tverberg partition search");
  add_source(tverberg);
  add_common(tverberg);

  std::string what;
  auto* check = app.add_subcommand("check", "realizability checks");
  check->add_option("what", what, "embedding")->required()->check(CLI::IsMember({"embedding"}));
  check->add_option("--hypergraph", a.hypergraph, "hypergraph file");
  check->add_option("--input", a.input, "point file");
  check->add_option("--construct", a.construct, "construction for the points");
  add_common(check);

  auto* list = app.add_subcommand("list", "list verifier ids and constructions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*verify) return cmd_verify(theorem, a, argc, argv);
    if (*construct) return cmd_construct(name, a);
    if (*radon) return cmd_radon(a, argc, argv);
    if (*tverberg) return cmd_tverberg(a, argc, argv);
    if (*check) return cmd_check_embedding(a, argc, argv);
    if (*list) {
      for (const auto& e : verifier_registry()) std::cout << e.id << "\t" << e.description << "\n";
      std::cout << "constructions: " << kConstructions << "\n";
      return kExitOk;
    }
  } catch (const GeometryError& e) {
    std::cout << Json{{"error", error_code_name(e.code())}, {"message", e.message()}}.dump(2) << "\n";
    if (!a.quiet) std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cout << Json{{"error", "INTERNAL"}, {"message", e.what()}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
