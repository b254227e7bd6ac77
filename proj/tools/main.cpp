#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "svx/certificates.hpp"
#include "svx/expansion.hpp"
#include "svx/families.hpp"
#include "svx/graph_io.hpp"
#include "svx/harness.hpp"
#include "svx/spectra.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

svx::Digraph load_graph(const std::string& path) {
  return svx::parse_graph(read_file(path));
}

int run_gen(const svx::GeneratorSpec& spec, const std::string& out_path) {
  svx::Digraph g = spec.build();
  std::string text = svx::serialize_graph(g);
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_file(out_path, text);
  std::cerr << spec.id() << ": " << g.size() << " vertices, " << g.edge_pair_count()
            << " weight entries\n";
  return kExitOk;
}

int run_analyze(const std::string& path, int k, const svx::ExactLimits& limits) {
  svx::Digraph g = load_graph(path);
  svx::Json report = svx::Json::object();
  report["n"] = g.size();
  report["directed"] = !g.undirected_flag();
  report["tol_spectral"] = 1e-9;

  bool eulerian = g.is_eulerian();
  report["eulerian"] = eulerian;
  svx::Digraph work = g;
  if (!eulerian) {
    work = svx::eulerianize(g);
    report["eulerianized"] = true;
  } else {
    report["eulerianized"] = false;
  }

  report["spectrum"] = svx::spectrum_json(svx::singular_values(work));

  auto witness_pair = [](const svx::CutPair& cut) {
    svx::Json w = svx::Json::object();
    w["S"] = svx::vertex_set_json(cut.S);
    w["T"] = svx::vertex_set_json(cut.T);
    return w;
  };

  try {
    auto [value, witness] = svx::min_phi(work, limits);
    report["min_phi"] = value.fraction_str();
    report["min_phi_approx"] = value.to_double();
    report["min_phi_witness"] = svx::vertex_set_json(witness);
  } catch (const std::exception& e) {
    report["min_phi"] = nullptr;
    report["min_phi_reason"] = e.what();
  }
  try {
    svx::CutPair cut = svx::min_phi_dir(work, limits);
    report["min_phi_dir"] = cut.value.fraction_str();
    report["min_phi_dir_approx"] = cut.value.to_double();
    report["min_phi_dir_witness"] = witness_pair(cut);
  } catch (const std::exception& e) {
    report["min_phi_dir"] = nullptr;
    report["min_phi_dir_reason"] = e.what();
  }
  try {
    svx::CutPair cut = svx::min_beta_dir(work, limits);
    report["min_beta_dir"] = cut.value.fraction_str();
    report["min_beta_dir_approx"] = cut.value.to_double();
    report["min_beta_dir_witness"] = witness_pair(cut);
  } catch (const std::exception& e) {
    report["min_beta_dir"] = nullptr;
    report["min_beta_dir_reason"] = e.what();
  }
  if (work.undirected_flag()) {
    try {
      auto [value, witness] = svx::min_beta(work, limits);
      report["min_beta"] = value.fraction_str();
      report["min_beta_approx"] = value.to_double();
      report["min_beta_witness"] = svx::vertex_set_json(witness.support());
    } catch (const std::exception& e) {
      report["min_beta"] = nullptr;
      report["min_beta_reason"] = e.what();
    }
  }
  if (k >= 1) {
    try {
      svx::PartitionFamily fam = svx::min_phi_k_dir(work, k, limits);
      svx::Json fj = svx::Json::object();
      fj["k"] = k;
      fj["value"] = fam.max_value.fraction_str();
      fj["value_approx"] = fam.max_value.to_double();
      svx::Json sets = svx::Json::array();
      for (int i = 0; i < fam.k; ++i) {
        svx::Json pair = svx::Json::object();
        pair["S"] = svx::vertex_set_json(fam.s_sets[i]);
        pair["T"] = svx::vertex_set_json(fam.t_sets[i]);
        pair["value"] = fam.values[i].fraction_str();
        sets.push_back(std::move(pair));
      }
      fj["pairs"] = std::move(sets);
      report["min_phi_k_dir"] = std::move(fj);
    } catch (const std::exception& e) {
      report["min_phi_k_dir"] = nullptr;
      report["min_phi_k_dir_reason"] = e.what();
    }
  }
  try {
    svx::ExpansionProfile prof = svx::vertex_expansion(work, std::max(1, g.size() / 2), limits);
    svx::Json vj = svx::Json::object();
    vj["delta"] = prof.delta.fraction_str();
    vj["delta_approx"] = prof.delta.to_double();
    vj["delta_witness"] = svx::vertex_set_json(prof.delta_witness);
    vj["magnifier_delta"] = prof.delta_prime.fraction_str();
    vj["magnifier_delta_approx"] = prof.delta_prime.to_double();
    vj["magnifier_witness"] = svx::vertex_set_json(prof.magnifier_witness);
    report["vertex_expansion"] = std::move(vj);
  } catch (const std::exception& e) {
    report["vertex_expansion"] = nullptr;
    report["vertex_expansion_reason"] = e.what();
  }
  try {
    report["certificate"] = svx::certificate_json(svx::sweep_cut_pair(work));
  } catch (const std::exception& e) {
    report["certificate"] = nullptr;
    report["certificate_reason"] = e.what();
  }

  std::cout << report.dump() << "\n";
  std::cerr << "analyzed " << path << " (n=" << g.size() << ")\n";
  return kExitOk;
}

int run_certify(const std::string& path) {
  svx::Digraph g = load_graph(path);
  if (!g.is_eulerian()) g = svx::eulerianize(g);
  svx::Certificate cert = svx::sweep_cut_pair(g);
  std::cout << svx::certificate_json(cert).dump() << "\n";
  std::cerr << "certificate value " << cert.cut.value.fraction_str() << " against bound "
            << cert.bound << (cert.satisfied ? " (satisfied)" : " (VIOLATED)") << "\n";
  return cert.satisfied ? kExitOk : kExitVerifyFailed;
}

std::vector<svx::GeneratorSpec> parse_corpus_file(const std::string& path) {
  nlohmann::json doc = nlohmann::json::parse(read_file(path));
  if (!doc.is_array()) throw std::runtime_error("corpus file must be a JSON array");
  std::vector<svx::GeneratorSpec> corpus;
  for (const auto& item : doc) {
    svx::GeneratorSpec spec;
    spec.family = item.at("family").get<std::string>();
    spec.n = item.value("n", 0);
    spec.d = item.value("d", 0);
    spec.loops = item.value("loops", 0);
    spec.half = item.value("half", 0);
    spec.directed = item.value("directed", false);
    spec.density = item.value("density", 0.0);
    spec.seed = item.value("seed", 0ULL);
    corpus.push_back(std::move(spec));
  }
  return corpus;
}

int run_verify(const std::vector<svx::GeneratorSpec>& corpus, const std::string& checks_arg,
               bool negative_control) {
  std::vector<svx::CheckId> checks;
  if (checks_arg.empty()) {
    checks = svx::all_checks();
  } else {
    std::stringstream ss(checks_arg);
    std::string name;
    while (std::getline(ss, name, ',')) {
      auto id = svx::check_from_name(name);
      if (!id) throw CLI::ValidationError("--checks", "unknown check '" + name + "'");
      checks.push_back(*id);
    }
  }
  svx::CheckOptions opts;
  if (negative_control) opts.sigma2_perturb = 0.5;

  std::vector<svx::VerificationRecord> records = svx::run_suite(corpus, checks, opts);
  int failures = 0, passes = 0, skips = 0;
  for (const auto& r : records) {
    std::cout << svx::record_json(r).dump() << "\n";
    if (r.failed())
      ++failures;
    else if (r.passed())
      ++passes;
    else
      ++skips;
  }
  std::cerr << "verify: " << passes << " pass, " << failures << " fail, " << skips
            << " skip over " << corpus.size() << " graphs\n";
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral and combinatorial expansion toolkit for Eulerian digraphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a named graph family as TSV");
  svx::GeneratorSpec spec;
  std::string out_path;
  gen->add_option("family", spec.family,
                  "family: fig5 | fig6_unit | fig6_half | cycle | hypercube | "
                  "complete_bipartite | random_eulerian | random_regular | random_undirected")
      ->required();
  gen->add_option("--n", spec.n, "vertex count (cycle, random families)");
  gen->add_option("--d", spec.d, "dimension (hypercube) or degree (random_regular)");
  gen->add_option("--loops", spec.loops, "self-loops per vertex");
  gen->add_option("--half", spec.half, "half size (complete_bipartite)");
  gen->add_flag("--directed", spec.directed, "directed cycle");
  gen->add_option("--density", spec.density, "edge density (random families)");
  gen->add_option("--seed", spec.seed, "PRNG seed");
  gen->add_option("-o,--output", out_path, "output file (default stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "full JSON report for a graph file");
  std::string analyze_path;
  int analyze_k = 0;
  svx::ExactLimits limits;
  analyze->add_option("file", analyze_path, "graph TSV file")->required();
  analyze->add_option("--k", analyze_k, "also compute the k-way directed conductance");
  analyze->add_option("--max-exact-n", limits.pair_n, "pair enumeration cap (default 12)");
  analyze->add_option("--max-subset-n", limits.subset_n, "subset enumeration cap (default 16)");
  analyze->add_option("--max-kway-n", limits.kway_pair_n, "k-way enumeration cap (default 9)");

  // certify
  auto* certify = app.add_subcommand("certify", "sweep-cut certificate JSON for a graph file");
  std::string certify_path;
  certify->add_option("file", certify_path, "graph TSV file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run theorem checks, one JSON line per record");
  bool use_default_corpus = false;
  bool negative_control = false;
  std::string corpus_path, checks_arg;
  verify->add_flag("--default-corpus", use_default_corpus,
                   "named families plus 50 seeded random graphs");
  verify->add_option("--corpus", corpus_path, "JSON array of generator specs");
  verify->add_option("--checks", checks_arg, "comma-separated list of check names");
  verify->add_flag("--negative-control", negative_control,
                   "perturb sigma_2 to prove the harness can fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(spec, out_path);
    if (analyze->parsed()) return run_analyze(analyze_path, analyze_k, limits);
    if (certify->parsed()) return run_certify(certify_path);
    if (verify->parsed()) {
      if (use_default_corpus == !corpus_path.empty())
        throw CLI::ValidationError("verify", "pass exactly one of --default-corpus, --corpus");
      auto corpus = use_default_corpus ? svx::default_corpus() : parse_corpus_file(corpus_path);
      return run_verify(corpus, checks_arg, negative_control);
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
