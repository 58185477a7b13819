#include "gsf/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "gsf/certificate.hpp"
#include "gsf/decomp.hpp"
#include "gsf/exactla.hpp"
#include "gsf/extremal.hpp"
#include "gsf/io.hpp"

namespace gsf::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunConfig {
  std::string command;
  std::uint32_t p = 0;
  std::uint32_t s = 1;
  std::uint32_t n = 0;
  std::uint32_t sigma_power = 1;
  std::string b;
  std::string mode = "auto";
  std::uint64_t sample_count = 10'000;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget;
  std::string output_path;
  std::string format = "json";
  unsigned workers = 0;

  std::string kind;
  std::uint64_t q = 0;
  std::uint32_t kk = 1;
  std::string target = "tau";
  std::string method = "exhaustive";
  std::uint32_t restarts = 32;
  std::string golden_dir = "golden";
  bool update = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A report and the exit code it implies.
struct Report {
  json body;
  int code = kOk;
};

std::uint64_t effective_budget(const RunConfig& cfg) {
  if (cfg.budget) return *cfg.budget;
  if (const char* env = std::getenv("GSF_BUDGET")) {
    std::uint64_t v = 0;
    std::istringstream is(env);
    if (!(is >> v) || v == 0 || !is.eof()) throw UsageError(std::string("GSF_BUDGET must be a positive integer, got '") + env + "'");
    return v;
  }
  return kDefaultBudget;
}

ProfileOptions profile_options(const RunConfig& cfg) {
  ProfileOptions opts;
  if (cfg.mode == "exhaustive") {
    opts.mode = EnumerationMode::kExhaustive;
  } else if (cfg.mode == "sampled") {
    opts.mode = EnumerationMode::kSampled;
  } else {
    opts.mode = EnumerationMode::kAuto;
  }
  opts.sample_count = cfg.sample_count;
  opts.seed = cfg.seed;
  opts.budget = effective_budget(cfg);
  opts.workers = cfg.workers;
  return opts;
}

FieldTower make_tower(const RunConfig& cfg) {
  if (cfg.p == 0) throw UsageError("--p is required");
  if (cfg.n == 0) throw UsageError("--n is required");
  return FieldTower(PrimePower{cfg.p, cfg.s}, cfg.n);
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return kOk;
    case Verdict::kFail:
      return kFail;
    case Verdict::kOutsideHypotheses:
      return kOutside;
  }
  return kFail;
}

Report certificate_report(const Certificate& cert) { return {cert.to_json(), verdict_code(cert.verdict())}; }

Report cmd_tower(const RunConfig& cfg) {
  const FieldTower tower = make_tower(cfg);
  json j = tower_json(tower);
  j["trace_vector"] = vector_json(tower.base(), tower.trace_vector());
  j["frobenius"] = matrix_json(tower.base(), tower.frobenius_matrix(1));
  return {j};
}

Report cmd_form(const RunConfig& cfg) {
  const FieldTower tower = make_tower(cfg);
  if (cfg.b.empty()) throw UsageError("--b is required");
  const FieldElement b = parse_element(tower, cfg.b);
  const SymForm form = gram(tower, b, cfg.sigma_power);
  json j = form_json(tower, form);
  j["tower"] = tower_json(tower);
  j["rank"] = rank(tower.base(), form.gram);
  j["order"] = tower.order_of_power(cfg.sigma_power);
  if (!b.is_zero() && tower.order_of_power(cfg.sigma_power) > 2) {
    j["degenerate_by_norm"] = degenerate_by_norm(tower, b, cfg.sigma_power);
  }
  return {j};
}

Report cmd_family(const RunConfig& cfg) {
  const FieldTower tower = make_tower(cfg);
  const FormSubspace forms = family(tower, cfg.sigma_power);
  json j = form_subspace_json(tower, forms);
  j["tower"] = tower_json(tower);
  j["order"] = tower.order_of_power(cfg.sigma_power);
  j["rank_histogram"] = to_json(rank_profile(tower, forms, profile_options(cfg)));
  return {j};
}

Report cmd_refine(const RunConfig& cfg) {
  const FieldTower tower = make_tower(cfg);
  const ProfileOptions opts = profile_options(cfg);
  if (cfg.kind == "a1-2k") return certificate_report(refine_A1_2k(tower, opts));
  if (cfg.kind == "ai-mod2") return certificate_report(refine_Ai_mod2(tower, cfg.sigma_power, opts));
  if (cfg.kind == "a1-pow4") return certificate_report(refine_A1_pow4(tower, opts));
  if (cfg.kind == "full") return certificate_report(verify_full_refined(tower, opts));
  throw UsageError("unknown --kind '" + cfg.kind + "' (expected a1-2k, ai-mod2, a1-pow4 or full)");
}

Report cmd_theorem_c(const RunConfig& cfg) {
  if (cfg.q == 0 || cfg.n == 0) throw UsageError("--q and --n are required");
  const FieldTower tower(prime_power_of(cfg.q), cfg.n);
  return certificate_report(refine_A1_pow4(tower, profile_options(cfg)));
}

Report cmd_rho(const RunConfig& cfg) {
  if (cfg.n == 0) throw UsageError("--n is required");
  return {json{{"rho", rho(cfg.n)}}};
}

Report cmd_real_mu(const RunConfig& cfg) {
  if (cfg.n == 0) throw UsageError("--n is required");
  const auto iv = real_mu_interval(cfg.n);
  const auto r = RhoDecomposition::of(cfg.n);
  return {json{{"n", cfg.n}, {"c", r.c}, {"d", r.d}, {"interval", {iv.lo, iv.hi}}}};
}

Report cmd_search(const RunConfig& cfg) {
  if (cfg.n == 0 || cfg.q == 0) throw UsageError("--n and --q are required");
  const SearchTarget target = parse_target(cfg.target);
  const PrimePower field = prime_power_of(cfg.q);
  SearchResult result;
  if (cfg.method == "exhaustive") {
    result = exhaustive_search(target, cfg.n, field, effective_budget(cfg));
  } else if (cfg.method == "greedy") {
    GreedyOptions g;
    g.seed = cfg.seed;
    g.restarts = cfg.restarts;
    result = greedy_search(target, cfg.n, field, g);
  } else if (cfg.method == "construction") {
    const FieldTower tower(field, cfg.n);
    result = target == SearchTarget::kTau ? construct_regular_rep_subspace(tower, profile_options(cfg))
                                          : construct_symmetric_witness(tower, profile_options(cfg));
  } else {
    throw UsageError("unknown --method '" + cfg.method + "' (expected exhaustive, greedy or construction)");
  }
  return {result.to_json(), result.verified ? kOk : kFail};
}

Report cmd_block(const RunConfig& cfg) {
  if (cfg.n == 0 || cfg.q == 0) throw UsageError("--n and --q are required");
  if (cfg.n % 2 != 0) throw UsageError("block: --n must be even");
  const FieldTower half(prime_power_of(cfg.q), cfg.n / 2);
  const ProfileOptions opts = profile_options(cfg);
  const SearchResult u = construct_regular_rep_subspace(half, opts);
  const MatrixSubspace out = block_construction(half.base(), u.witness(), opts);
  json basis = json::array();
  for (const auto& m : out.basis) basis.push_back(matrix_json(half.base(), m));
  const InvertibilityCheck chk = check_invertible_span(half.base(), out.basis, opts);
  json j = {{"n", out.n},
            {"q", cfg.q},
            {"input_dim", u.best_dim},
            {"dim", out.basis.size()},
            {"basis", basis},
            {"symmetric", std::all_of(out.basis.begin(), out.basis.end(), [](const Mat& m) { return m.is_symmetric(); })},
            {"verified", out.verified},
            {"checked", chk.checked}};
  return {j, out.verified ? kOk : kFail};
}

std::string file_contents(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_golden_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const fs::path dir(cfg.golden_dir);
  const auto manifest = golden_manifest();
  if (cfg.update) {
    fs::create_directories(dir);
    for (const auto& e : manifest) {
      std::ostringstream report;
      std::ostringstream diag;
      run(e.args, report, diag);
      std::ofstream(dir / e.file, std::ios::binary) << report.str();
    }
    out << "golden: wrote " << manifest.size() << " files to " << dir.string() << "\n";
    return kOk;
  }

  std::size_t present = 0;
  if (fs::is_directory(dir)) {
    for (const auto& entry : fs::directory_iterator(dir)) present += entry.path().extension() == ".json";
  }
  if (present == 0) {
    err << "usage error: golden directory '" << dir.string() << "' is missing or holds no .json files\n";
    return kUsage;
  }

  std::size_t diffs = 0;
  for (const auto& e : manifest) {
    const fs::path path = dir / e.file;
    if (!fs::exists(path)) {
      out << "MISSING " << e.file << "\n";
      ++diffs;
      continue;
    }
    std::ostringstream report;
    std::ostringstream diag;
    run(e.args, report, diag);
    const std::string expected = file_contents(path);
    const std::string actual = report.str();
    if (expected == actual) {
      out << "ok      " << e.file << "\n";
      continue;
    }
    ++diffs;
    std::size_t line = 1;
    std::size_t at = 0;
    while (at < expected.size() && at < actual.size() && expected[at] == actual[at]) line += expected[at++] == '\n';
    out << "DIFF    " << e.file << " (first difference at line " << line << ", " << expected.size() << " vs "
        << actual.size() << " bytes)\n";
  }
  out << "golden: " << manifest.size() - diffs << "/" << manifest.size() << " identical\n";
  return diffs == 0 ? kOk : kFail;
}

// Human-readable rendering. Lossy; JSON stays the contract format.
std::string render_table(const json& j) {
  std::ostringstream os;
  if (j.contains("theorem_id")) {
    os << j["theorem_id"].get<std::string>() << "  " << j["instance"].dump() << "\n";
    os << std::left << std::setw(28) << "subspace" << std::setw(8) << "claim" << std::setw(8) << "dim"
       << std::setw(24) << "ranks" << "histogram\n";
    for (const auto& c : j["claims"]) {
      os << std::setw(28) << c["subspace"].get<std::string>() << std::setw(8)
         << (c["claimed_dim"].is_null() ? "-" : c["claimed_dim"].dump()) << std::setw(8) << c["observed_dim"].dump()
         << std::setw(24) << (c["claimed_ranks"].is_null() ? "-" : c["claimed_ranks"].dump())
         << (c["observed_rank_histogram"].is_null() ? "-" : c["observed_rank_histogram"]["histogram"].dump())
         << (c["ok"].get<bool>() ? "" : "  MISMATCH") << "\n";
    }
    for (const auto& c : j["checks"]) {
      os << (c["ok"].get<bool>() ? "ok    " : "FAIL  ") << c["name"].get<std::string>() << "\n";
    }
    os << "verdict: " << j["verdict"].get<std::string>() << "\n";
    return os.str();
  }
  for (const auto& [key, value] : j.items()) os << std::left << std::setw(16) << key << value.dump() << "\n";
  return os.str();
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--mode", cfg.mode, "Enumeration mode")->check(CLI::IsMember({"exhaustive", "sampled", "auto"}));
  sub->add_option("--samples", cfg.sample_count, "Forms per piece in sampled mode")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "Sampling seed");
  sub->add_option("--budget", cfg.budget, "Largest exhaustive enumeration")->check(CLI::PositiveNumber);
  sub->add_option("--workers", cfg.workers, "Worker threads (0: hardware concurrency)");
  sub->add_option("--output", cfg.output_path, "Write the report here instead of stdout");
  sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "table"}));
}

void add_tower(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--p", cfg.p, "Characteristic (odd prime)")->required();
  sub->add_option("--s", cfg.s, "Base field degree over GF(p)");
  sub->add_option("--n", cfg.n, "Extension degree")->required();
}

}  // namespace

std::vector<GoldenEntry> golden_manifest() {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> instances;
  for (std::uint32_t n = 2; n <= 6; ++n) instances.emplace_back(3, n);
  instances.emplace_back(3, 8);
  instances.emplace_back(7, 4);

  std::vector<GoldenEntry> out;
  for (const auto& [p, n] : instances) {
    const std::string tag = "p" + std::to_string(p) + "_s1_n" + std::to_string(n);
    const std::vector<std::string> field = {"--p", std::to_string(p), "--s", "1", "--n", std::to_string(n)};
    auto entry = [&](const std::string& name, std::vector<std::string> head) {
      head.insert(head.begin(), "gsf");
      head.insert(head.end(), field.begin(), field.end());
      out.push_back({name + "_" + tag + ".json", std::move(head)});
    };
    entry("decompose", {"decompose"});
    entry("rank_laws", {"rank-laws"});
    if (n % 2 == 0) entry("refine_full", {"refine", "--kind", "full"});
    if (n % 4 == 2) entry("refine_a1_2k", {"refine", "--kind", "a1-2k"});
    if (n % 4 == 0 && p % 4 == 3) entry("refine_a1_pow4", {"refine", "--kind", "a1-pow4"});
    if ((n - 1) / 2 >= 1) entry("min_rank_kk1", {"min-rank", "--kk", "1"});
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Verifier for decompositions of symmetric trace forms over finite fields", "gsf"};
  app.require_subcommand(1);

  struct Spec {
    const char* name;
    const char* help;
    bool tower;
  };
  const Spec specs[] = {
      {"tower", "Print the extension tower", true},
      {"form", "Gram matrix and rank of one trace form", true},
      {"family", "Basis and rank histogram of the family for sigma^i", true},
      {"rank-laws", "Rank laws of every family", true},
      {"decompose", "Global decomposition of the symmetric forms", true},
      {"refine", "Refined decompositions (--kind)", true},
      {"theorem-c", "Eigenspace refinement of A^1 by q and n", false},
      {"min-rank", "Minimum rank over A^1 + ... + A^kk", true},
      {"rho", "Radon-Hurwitz number", false},
      {"real-mu", "Range of mu_n over the reals", false},
      {"search", "Search for invertible-closed matrix subspaces", false},
      {"block", "Symmetric block construction from M(n/2, K)", false},
      {"golden-check", "Recompute and compare the golden certificates", false},
  };
  for (const auto& sp : specs) {
    CLI::App* sub = app.add_subcommand(sp.name, sp.help);
    sub->callback([&cfg, name = std::string(sp.name)] { cfg.command = name; });
    add_common(sub, cfg);
    if (sp.tower) add_tower(sub, cfg);
    const std::string name = sp.name;
    if (name == "form" || name == "family" || name == "refine") sub->add_option("--i", cfg.sigma_power, "Power of sigma");
    if (name == "form") sub->add_option("--b", cfg.b, "Element as comma-separated base-p digits, little-endian");
    if (name == "refine") {
      sub->add_option("--kind", cfg.kind, "a1-2k | ai-mod2 | a1-pow4 | full")
          ->required()
          ->check(CLI::IsMember({"a1-2k", "ai-mod2", "a1-pow4", "full"}));
    }
    if (name == "theorem-c") {
      sub->add_option("--q", cfg.q, "Base field size")->required();
      sub->add_option("--n", cfg.n, "Extension degree")->required();
    }
    if (name == "min-rank") sub->add_option("--kk", cfg.kk, "Number of families summed");
    if (name == "rho" || name == "real-mu") sub->add_option("--n", cfg.n, "Dimension")->required();
    if (name == "search" || name == "block") {
      sub->add_option("--q", cfg.q, "Field size")->required();
      sub->add_option("--n", cfg.n, "Matrix size")->required();
    }
    if (name == "search") {
      sub->add_option("--target", cfg.target, "tau | mu")->check(CLI::IsMember({"tau", "mu"}));
      sub->add_option("--method", cfg.method, "exhaustive | greedy | construction")
          ->check(CLI::IsMember({"exhaustive", "greedy", "construction"}));
      sub->add_option("--restarts", cfg.restarts, "Greedy restarts");
    }
    if (name == "golden-check") {
      sub->add_option("--golden-dir", cfg.golden_dir, "Golden directory");
      sub->add_flag("--update", cfg.update, "Rewrite the golden files");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  Report report;
  try {
    if (cfg.command == "golden-check") return cmd_golden_check(cfg, out, err);
    if (cfg.command == "tower") {
      report = cmd_tower(cfg);
    } else if (cfg.command == "form") {
      report = cmd_form(cfg);
    } else if (cfg.command == "family") {
      report = cmd_family(cfg);
    } else if (cfg.command == "rank-laws") {
      report = certificate_report(verify_rank_laws(make_tower(cfg), profile_options(cfg)));
    } else if (cfg.command == "decompose") {
      report = certificate_report(verify_global(make_tower(cfg), profile_options(cfg)));
    } else if (cfg.command == "refine") {
      report = cmd_refine(cfg);
    } else if (cfg.command == "theorem-c") {
      report = cmd_theorem_c(cfg);
    } else if (cfg.command == "min-rank") {
      report = certificate_report(min_rank_lower_bound(make_tower(cfg), cfg.kk, profile_options(cfg)));
    } else if (cfg.command == "rho") {
      report = cmd_rho(cfg);
    } else if (cfg.command == "real-mu") {
      report = cmd_real_mu(cfg);
    } else if (cfg.command == "search") {
      report = cmd_search(cfg);
    } else if (cfg.command == "block") {
      report = cmd_block(cfg);
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (raise --budget or GSF_BUDGET, or use --mode sampled)\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kUsage;
  }

  const std::string text = cfg.format == "table" ? render_table(report.body) : dump(report.body);
  if (cfg.output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) {
      err << "usage error: cannot write '" << cfg.output_path << "'\n";
      return kUsage;
    }
    file << text;
  }
  return report.code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gsf::cli
