#include "svx/harness.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "svx/certificates.hpp"
#include "svx/spectra.hpp"
#include "svx/threading.hpp"

namespace svx {

namespace {

struct NamedCheck {
  CheckId id;
  const char* name;
};

constexpr NamedCheck kChecks[] = {
    {CheckId::Cheeger, "cheeger"},
    {CheckId::DiCheeger, "di_cheeger"},
    {CheckId::BipartiteCheeger, "bipartite_cheeger"},
    {CheckId::Relating46, "relating_4_6"},
    {CheckId::Prop37, "prop_3_7"},
    {CheckId::Prop47, "prop_4_7"},
    {CheckId::HigherOrderK, "higher_order_k"},
    {CheckId::SvHigherOrderK, "sv_higher_order_k"},
    {CheckId::Thm54, "thm_5_4"},
    {CheckId::VertexSpectralD2, "vertex_spectral_d2"},
    {CheckId::VertexSpectralD, "vertex_spectral_d"},
    {CheckId::MagnifierLemma, "magnifier_lemma"},
};

}  // namespace

const char* check_name(CheckId id) {
  for (const auto& c : kChecks)
    if (c.id == id) return c.name;
  return "unknown";
}

std::optional<CheckId> check_from_name(const std::string& name) {
  for (const auto& c : kChecks)
    if (name == c.name) return c.id;
  return std::nullopt;
}

std::vector<CheckId> all_checks() {
  std::vector<CheckId> out;
  for (const auto& c : kChecks) out.push_back(c.id);
  return out;
}

namespace {

/// Lazily computed per-graph quantities shared between checks.
struct GraphContext {
  const Digraph& g;
  const CheckOptions& opts;

  GraphContext(const Digraph& graph, const CheckOptions& options)
      : g(graph), opts(options) {}

  std::optional<Spectrum> spectrum_;
  std::optional<CutPair> min_phi_dir_, min_beta_dir_;
  std::optional<std::pair<Rat, VertexSet>> min_phi_;
  std::optional<std::pair<Rat, SignVector>> min_beta_;
  std::optional<ExpansionProfile> profile_;  // at bound n/2

  const Spectrum& spectrum() {
    if (!spectrum_) spectrum_ = singular_values(g);
    return *spectrum_;
  }
  const ExpansionProfile& half_profile() {
    if (!profile_)
      profile_ = vertex_expansion(g, g.size() / 2, opts.limits, opts.threads);
    return *profile_;
  }
  const CutPair& phi_dir_min() {
    if (!min_phi_dir_) min_phi_dir_ = min_phi_dir(g, opts.limits);
    return *min_phi_dir_;
  }
  const CutPair& beta_dir_min() {
    if (!min_beta_dir_) min_beta_dir_ = min_beta_dir(g, opts.limits);
    return *min_beta_dir_;
  }
  const std::pair<Rat, VertexSet>& phi_min() {
    if (!min_phi_) min_phi_ = min_phi(g, opts.limits);
    return *min_phi_;
  }
  const std::pair<Rat, SignVector>& beta_min() {
    if (!min_beta_) min_beta_ = min_beta(g, opts.limits);
    return *min_beta_;
  }
};

VerificationRecord base_record(CheckId id, const std::string& graph_id) {
  VerificationRecord r;
  r.check = check_name(id);
  r.graph = graph_id;
  r.status = "pass";
  return r;
}

VerificationRecord skip(CheckId id, const std::string& graph_id, const std::string& why) {
  VerificationRecord r = base_record(id, graph_id);
  r.status = "skip";
  r.reason = why;
  return r;
}

void finish_chain(VerificationRecord& r, double lhs, double mid, double rhs, double tol) {
  r.lhs = lhs;
  r.mid = mid;
  r.rhs = rhs;
  r.slack = std::min(mid - lhs, rhs - mid);
  if (!(lhs <= mid + tol && mid <= rhs + tol)) {
    r.status = "fail";
    if (r.reason.empty()) r.reason = "inequality chain violated";
  }
}

bool integral_weights(const Digraph& g) {
  for (const Edge& e : g.edges())
    if (e.weight.raw().get_den() != 1) return false;
  return true;
}

double sqrt_clamped(double x) { return std::sqrt(std::max(0.0, x)); }

VerificationRecord check_cheeger(GraphContext& ctx, const std::string& gid) {
  const Digraph& g = ctx.g;
  if (!g.undirected_flag()) return skip(CheckId::Cheeger, gid, "needs an undirected graph");
  if (g.size() < 2) return skip(CheckId::Cheeger, gid, "needs at least two vertices");
  if (g.size() > ctx.opts.limits.subset_n)
    return skip(CheckId::Cheeger, gid, "above subset enumeration cap");
  VerificationRecord r = base_record(CheckId::Cheeger, gid);
  const Spectrum& s = ctx.spectrum();
  double mu2 = (*s.mus)[1];
  const auto& [value, witness] = ctx.phi_min();
  r.notes["phi"] = value.fraction_str();
  r.notes["witness"] = witness.str();
  finish_chain(r, (1.0 - mu2) / 2.0, value.to_double(), sqrt_clamped(2.0 * (1.0 - mu2)),
               ctx.opts.spectral_tol);
  return r;
}

VerificationRecord check_di_cheeger(GraphContext& ctx, const std::string& gid) {
  const Digraph& g = ctx.g;
  if (!g.is_eulerian()) return skip(CheckId::DiCheeger, gid, "needs an Eulerian graph");
  if (g.size() < 2) return skip(CheckId::DiCheeger, gid, "needs at least two vertices");
  if (g.size() > ctx.opts.limits.pair_n)
    return skip(CheckId::DiCheeger, gid, "above pair enumeration cap");
  VerificationRecord r = base_record(CheckId::DiCheeger, gid);
  double sigma2 = ctx.spectrum().sigmas[1];
  if (ctx.opts.sigma2_perturb != 0.0)
    sigma2 = std::max(0.0, sigma2 - ctx.opts.sigma2_perturb);
  const CutPair& cut = ctx.phi_dir_min();
  r.notes["phi_dir"] = cut.value.fraction_str();
  r.notes["S"] = cut.S.str();
  r.notes["T"] = cut.T.str();
  finish_chain(r, (1.0 - sigma2) / 2.0, cut.value.to_double(),
               sqrt_clamped(2.0 * (1.0 - sigma2)), ctx.opts.spectral_tol);
  return r;
}

VerificationRecord check_bipartite_cheeger(GraphContext& ctx, const std::string& gid) {
  const Digraph& g = ctx.g;
  if (!g.undirected_flag())
    return skip(CheckId::BipartiteCheeger, gid, "needs an undirected graph");
  if (!g.regular_degree())
    return skip(CheckId::BipartiteCheeger, gid, "stated for regular graphs only");
  if (g.size() > ctx.opts.limits.sign_n)
    return skip(CheckId::BipartiteCheeger, gid, "above sign enumeration cap");
  VerificationRecord r = base_record(CheckId::BipartiteCheeger, gid);
  const Spectrum& s = ctx.spectrum();
  double mun = s.mus->back();
  const auto& [value, witness] = ctx.beta_min();
  r.notes["beta"] = value.fraction_str();
  r.notes["support"] = witness.support().str();
  finish_chain(r, (1.0 + mun) / 2.0, value.to_double(), sqrt_clamped(2.0 * (1.0 + mun)),
               ctx.opts.spectral_tol);
  return r;
}

VerificationRecord check_relating(GraphContext& ctx, const std::string& gid) {
  const Digraph& g = ctx.g;
  if (!g.is_eulerian()) return skip(CheckId::Relating46, gid, "needs an Eulerian graph");
  if (g.size() > ctx.opts.limits.pair_n || g.size() > ctx.opts.limits.subset_n)
    return skip(CheckId::Relating46, gid, "above enumeration cap");
  VerificationRecord r = base_record(CheckId::Relating46, gid);

  const Rat& dir = ctx.phi_dir_min().value;
  Rat phi_val;
  bool phi_defined = true;
  try {
    phi_val = ctx.phi_min().first;
  } catch (const std::invalid_argument&) {
    phi_defined = false;  // no set with vol(S) <= vol(V)/2
  }
  const Rat& bdir = ctx.beta_dir_min().value;
  Rat upper = phi_defined ? std::min(phi_val, bdir) : bdir;
  r.notes["phi_dir"] = dir.fraction_str();
  r.notes["phi"] = phi_defined ? phi_val.fraction_str() : "undefined";
  r.notes["beta_dir"] = bdir.fraction_str();

  bool upper_ok = dir <= upper;

  bool lower_ok = true;
  double lhs = 0.0;
  if (g.undirected_flag() && g.size() <= ctx.opts.limits.sign_n) {
    const Rat& beta = ctx.beta_min().first;
    if (beta != bdir) {
      r.status = "fail";
      r.reason = "beta and beta_dir disagree on an undirected graph";
    }
    Rat lower = phi_defined ? std::min(phi_val, beta) : beta;
    lower_ok = lower <= Rat(3) * dir;
    lhs = (lower / Rat(3)).to_double();
    r.notes["min_phi_beta"] = lower.fraction_str();
  }
  finish_chain(r, lhs, dir.to_double(), upper.to_double(), 0.0);
  if (!upper_ok || !lower_ok) {
    r.status = "fail";
    if (r.reason.empty()) r.reason = "exact comparison violated";
  }
  return r;
}

VerificationRecord check_prop_3_7(GraphContext& ctx, const std::string& gid) {
  const Digraph& g = ctx.g;
  if (!g.regular_degree()) return skip(CheckId::Prop37, gid, "needs a regular graph");
  if (g.size() > ctx.opts.limits.pair_n)
    return skip(CheckId::Prop37, gid, "above pair enumeration cap");
  const CutPair& base = ctx.phi_dir_min();
  if (base.value >= Rat(1))
    return skip(CheckId::Prop37, gid, "phi_dir = 1, bound degenerate");
  VerificationRecord r = base_record(CheckId::Prop37, gid);
  CutPair balanced = min_phi_dir_balanced(g, ctx.opts.limits);
  Rat bound = Rat(2) * base.value / (Rat(1) - base.value);
  r.notes["phi_dir"] = base.value.fraction_str();
  r.notes["balanced"] = balanced.value.fraction_str();
  r.notes["balanced_S"] = balanced.S.str();
  r.notes["balanced_T"] = balanced.T.str();
  bool ok = base.value <= balanced.value && balanced.value <= bound;
  finish_chain(r, base.value.to_double(), balanced.value.to_double(), bound.to_double(), 0.0);
  if (!ok) {
    r.status = "fail";
    r.reason = "exact comparison violated";
  }
  return r;
}

VerificationRecord check_prop_4_7(GraphContext& ctx, const std::string& gid) {
  if (gid.rfind("fig", 0) != 0)
    return skip(CheckId::Prop47, gid, "separation is specific to the counterexample graphs");
  VerificationRecord r = base_record(CheckId::Prop47, gid);
  const CutPair& dir = ctx.phi_dir_min();
  const Rat& phi_val = ctx.phi_min().first;
  const Rat& bdir = ctx.beta_dir_min().value;
  double sigma2 = ctx.spectrum().sigmas[1];

  bool zero_dir = dir.value.is_zero();
  bool positive_rest = phi_val.sign() > 0 && bdir.sign() > 0;
  bool sigma_one = std::abs(sigma2 - 1.0) <= ctx.opts.spectral_tol;

  r.notes["phi_dir"] = dir.value.fraction_str();
  r.notes["S"] = dir.S.str();
  r.notes["T"] = dir.T.str();
  r.notes["phi"] = phi_val.fraction_str();
  r.notes["beta_dir"] = bdir.fraction_str();
  r.notes["sigma2"] = std::to_string(sigma2);
  // The separation record is a conjunction rather than a single chain:
  // phi_dir = 0, min(phi, beta_dir) > 0, sigma_2 = 1.
  r.lhs = dir.value.to_double();
  r.mid = std::min(phi_val, bdir).to_double();
  r.rhs = sigma2;
  r.slack = r.mid;
  if (!(zero_dir && positive_rest && sigma_one)) {
    r.status = "fail";
    r.reason = "separation conditions not all met";
  }
  return r;
}

/// Ratio-form upper sides: value <= ceiling * k^2 * sqrt(gap), with a
/// small absolute guard so solver noise near gap = 0 cannot flip the
/// verdict. Omega-form lower sides: ratio >= floor.
VerificationRecord check_higher_order(GraphContext& ctx, const std::string& gid, int k) {
  const Digraph& g = ctx.g;
  VerificationRecord r = base_record(CheckId::HigherOrderK, gid);
  r.notes["k"] = std::to_string(k);
  if (!g.undirected_flag())
    return skip(CheckId::HigherOrderK, gid, "needs an undirected graph");
  if (k > g.size()) return skip(CheckId::HigherOrderK, gid, "k exceeds vertex count");
  if (g.size() > ctx.opts.limits.kway_set_n)
    return skip(CheckId::HigherOrderK, gid, "above k-way set cap");
  DisjointFamily fam = rho_k(g, k, ctx.opts.limits);
  double mu_k = (*ctx.spectrum().mus)[k - 1];
  double gap = std::max(0.0, 1.0 - mu_k);
  double upper = ctx.opts.ratio_ceiling * k * k * sqrt_clamped(gap) + 1e-6;
  r.notes["rho_k"] = fam.max_value.fraction_str();
  if (gap > 0) r.notes["upper_ratio"] = std::to_string(fam.max_value.to_double() / (k * k * std::sqrt(gap)));
  finish_chain(r, gap / 2.0, fam.max_value.to_double(), upper, ctx.opts.spectral_tol);
  return r;
}

VerificationRecord check_sv_higher_order(GraphContext& ctx, const std::string& gid, int k) {
  const Digraph& g = ctx.g;
  VerificationRecord r = base_record(CheckId::SvHigherOrderK, gid);
  r.notes["k"] = std::to_string(k);
  if (!g.is_eulerian()) return skip(CheckId::SvHigherOrderK, gid, "needs an Eulerian graph");
  if (k > g.size()) return skip(CheckId::SvHigherOrderK, gid, "k exceeds vertex count");
  if (g.size() > ctx.opts.limits.kway_pair_n ||
      (k >= 3 && g.size() > ctx.opts.kway_n3) ||
      2 * g.size() > ctx.opts.limits.kway_set_n)
    return skip(CheckId::SvHigherOrderK, gid, "above k-way enumeration cap");

  PartitionFamily fam = min_phi_k_dir(g, k, ctx.opts.limits);
  DisjointFamily lifted = rho_k(symmetric_lift(g), k, ctx.opts.limits);
  double sigma_k = ctx.spectrum().sigmas[k - 1];
  double gap = std::max(0.0, 1.0 - sigma_k);
  r.notes["phi_k_dir"] = fam.max_value.fraction_str();
  r.notes["rho_k_lift"] = lifted.max_value.fraction_str();
  if (gap > 0)
    r.notes["upper_ratio"] =
        std::to_string(fam.max_value.to_double() / (k * k * std::sqrt(gap)));
  double upper = ctx.opts.ratio_ceiling * k * k * sqrt_clamped(gap) + 1e-6;
  finish_chain(r, gap / 2.0, fam.max_value.to_double(), upper, ctx.opts.spectral_tol);
  if (fam.max_value != lifted.max_value) {
    r.status = "fail";
    r.reason = "k-way directed conductance and lift expansion disagree";
  }
  return r;
}

VerificationRecord check_thm_5_4(GraphContext& ctx, const std::string& gid, int k) {
  const Digraph& g = ctx.g;
  VerificationRecord r = base_record(CheckId::Thm54, gid);
  r.notes["k"] = std::to_string(k);
  if (!g.undirected_flag()) return skip(CheckId::Thm54, gid, "needs an undirected graph");
  if (k > g.size()) return skip(CheckId::Thm54, gid, "k exceeds vertex count");
  if (g.size() > ctx.opts.limits.kway_pair_n || (k >= 3 && g.size() > ctx.opts.kway_n3))
    return skip(CheckId::Thm54, gid, "above k-way enumeration cap");

  PartitionFamily unconstrained = min_phi_k_dir(g, k, ctx.opts.limits);
  PartitionFamily constrained = min_rho_k_dir(g, k, ctx.opts.limits);
  r.notes["phi_k_dir"] = unconstrained.max_value.fraction_str();
  r.notes["rho_k_dir"] = constrained.max_value.fraction_str();
  bool ok = unconstrained.max_value <= constrained.max_value &&
            constrained.max_value <= Rat(3) * unconstrained.max_value;
  finish_chain(r, unconstrained.max_value.to_double(), constrained.max_value.to_double(),
               (Rat(3) * unconstrained.max_value).to_double(), 0.0);
  if (!ok) {
    r.status = "fail";
    r.reason = "exact comparison violated";
  }
  return r;
}

struct VertexData {
  Rat delta;        // expander slack of G at bound n/2
  Rat delta_prime;  // magnifier constant at bound n/2
  double d;
  ExpansionProfile profile;
};

std::optional<std::string> vertex_preconditions(const Digraph& g, const CheckOptions& opts) {
  if (!g.regular_degree()) return "needs a regular graph";
  if (!integral_weights(g)) return "needs integer (multigraph) weights";
  if (g.size() < 2) return "needs at least two vertices";
  if (g.size() > opts.limits.vertex_n) return "above neighborhood enumeration cap";
  return std::nullopt;
}

VertexData vertex_data(GraphContext& ctx) {
  VertexData out;
  out.profile = ctx.half_profile();
  out.delta = out.profile.delta;
  out.delta_prime = out.profile.delta_prime;
  out.d = ctx.g.regular_degree()->to_double();
  return out;
}

VerificationRecord check_vertex_spectral(GraphContext& ctx, const std::string& gid,
                                         CheckId id) {
  const Digraph& g = ctx.g;
  if (auto why = vertex_preconditions(g, ctx.opts)) return skip(id, gid, *why);
  VerificationRecord r = base_record(id, gid);
  VertexData vd = vertex_data(ctx);
  double sigma2 = ctx.spectrum().sigmas[1];
  double gap = std::max(0.0, 1.0 - sigma2);
  double delta = vd.delta.to_double();
  r.notes["delta"] = vd.delta.fraction_str();
  r.notes["d"] = std::to_string(vd.d);

  bool expander_ok = true;
  if (id == CheckId::VertexSpectralD) {
    // Constant-free implication: every |S| <= n/2 has at least
    // (2 - sigma_2) |S| out-neighbors.
    for (int s = 1; s <= g.size() / 2; ++s) {
      double need = (2.0 - sigma2 - ctx.opts.spectral_tol) * s;
      if (static_cast<double>(vd.profile.min_neighbors[s]) < need) {
        expander_ok = false;
        r.notes["expander_violation_size"] = std::to_string(s);
      }
    }
  }

  if (vd.delta.is_zero()) {
    r.notes["ratio"] = "vacuous (delta = 0)";
    finish_chain(r, 0.0, 0.0, 0.0, 0.0);
  } else {
    double denom = id == CheckId::VertexSpectralD2 ? delta * delta / (vd.d * vd.d)
                                                   : delta * delta / vd.d;
    double ratio = gap / denom;
    r.notes["ratio"] = std::to_string(ratio);
    finish_chain(r, ctx.opts.ratio_floor, ratio, std::max(ratio, ctx.opts.ratio_floor),
                 ctx.opts.spectral_tol);
  }
  if (!expander_ok) {
    r.status = "fail";
    r.reason = "spectral vertex-expansion implication violated";
  }
  return r;
}

VerificationRecord check_magnifier(GraphContext& ctx, const std::string& gid) {
  const Digraph& g = ctx.g;
  if (auto why = vertex_preconditions(g, ctx.opts))
    return skip(CheckId::MagnifierLemma, gid, *why);
  if (2 * g.size() > ctx.opts.limits.vertex_n || g.size() > ctx.opts.magnifier_n)
    return skip(CheckId::MagnifierLemma, gid, "lift above neighborhood enumeration cap");
  VerificationRecord r = base_record(CheckId::MagnifierLemma, gid);
  VertexData vd = vertex_data(ctx);
  ExpansionProfile lift_profile =
      vertex_expansion(symmetric_lift(g), g.size(), ctx.opts.limits, ctx.opts.threads);
  Rat need = vd.delta / Rat(8);
  r.notes["delta"] = vd.delta.fraction_str();
  r.notes["lift_magnifier"] = lift_profile.delta_prime.fraction_str();
  r.notes["lift_witness"] = lift_profile.magnifier_witness.str();
  finish_chain(r, need.to_double(), lift_profile.delta_prime.to_double(),
               std::max(need, lift_profile.delta_prime).to_double(), 0.0);
  if (lift_profile.delta_prime < need) {
    r.status = "fail";
    r.reason = "lift magnifier constant below delta / 8";
  }
  return r;
}

}  // namespace

std::vector<VerificationRecord> run_checks(const Digraph& g, const std::string& graph_id,
                                           const std::vector<CheckId>& checks,
                                           const CheckOptions& opts) {
  GraphContext ctx(g, opts);
  std::vector<VerificationRecord> out;
  for (CheckId id : checks) {
    auto guarded = [&](auto&& fn) {
      try {
        out.push_back(fn());
      } catch (const CapExceeded& e) {
        out.push_back(skip(id, graph_id, e.what()));
      } catch (const std::exception& e) {
        VerificationRecord r = base_record(id, graph_id);
        r.status = "fail";
        r.reason = std::string("error: ") + e.what();
        out.push_back(r);
      }
    };
    switch (id) {
      case CheckId::Cheeger:
        guarded([&] { return check_cheeger(ctx, graph_id); });
        break;
      case CheckId::DiCheeger:
        guarded([&] { return check_di_cheeger(ctx, graph_id); });
        break;
      case CheckId::BipartiteCheeger:
        guarded([&] { return check_bipartite_cheeger(ctx, graph_id); });
        break;
      case CheckId::Relating46:
        guarded([&] { return check_relating(ctx, graph_id); });
        break;
      case CheckId::Prop37:
        guarded([&] { return check_prop_3_7(ctx, graph_id); });
        break;
      case CheckId::Prop47:
        guarded([&] { return check_prop_4_7(ctx, graph_id); });
        break;
      case CheckId::HigherOrderK:
        for (int k = 2; k <= opts.limits.kmax; ++k)
          guarded([&] { return check_higher_order(ctx, graph_id, k); });
        break;
      case CheckId::SvHigherOrderK:
        for (int k = 2; k <= opts.limits.kmax; ++k)
          guarded([&] { return check_sv_higher_order(ctx, graph_id, k); });
        break;
      case CheckId::Thm54:
        for (int k = 2; k <= opts.limits.kmax; ++k)
          guarded([&] { return check_thm_5_4(ctx, graph_id, k); });
        break;
      case CheckId::VertexSpectralD2:
        guarded([&] { return check_vertex_spectral(ctx, graph_id, CheckId::VertexSpectralD2); });
        break;
      case CheckId::VertexSpectralD:
        guarded([&] { return check_vertex_spectral(ctx, graph_id, CheckId::VertexSpectralD); });
        break;
      case CheckId::MagnifierLemma:
        guarded([&] { return check_magnifier(ctx, graph_id); });
        break;
    }
  }
  return out;
}

std::vector<VerificationRecord> run_suite(const std::vector<GeneratorSpec>& corpus,
                                          const std::vector<CheckId>& checks,
                                          const CheckOptions& opts) {
  std::vector<std::vector<VerificationRecord>> per_entry(corpus.size());
  const int workers =
      std::min<int>(resolve_threads(opts.threads), std::max<size_t>(corpus.size(), 1));
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      try {
        Digraph g = corpus[i].build();
        per_entry[i] = run_checks(g, corpus[i].id(), checks, opts);
      } catch (const std::exception& e) {
        VerificationRecord r;
        r.check = "build";
        r.graph = corpus[i].id();
        r.status = "fail";
        r.reason = std::string("error: ") + e.what();
        per_entry[i] = {r};
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::vector<VerificationRecord> out;
  for (auto& batch : per_entry)
    for (auto& r : batch) out.push_back(std::move(r));
  return out;
}

std::vector<GeneratorSpec> default_corpus() {
  std::vector<GeneratorSpec> corpus;
  auto add = [&](GeneratorSpec s) { corpus.push_back(std::move(s)); };

  add({.family = "fig5"});
  add({.family = "fig6_half"});
  add({.family = "fig6_unit"});
  for (int n : {3, 4, 5, 8}) add({.family = "cycle", .n = n, .directed = true});
  for (int n : {3, 4, 5, 6, 8}) add({.family = "cycle", .n = n});
  add({.family = "cycle", .n = 5, .loops = 1});
  add({.family = "cycle", .n = 8, .loops = 4});
  add({.family = "cycle", .n = 16, .loops = 4});
  for (int d : {1, 2, 3}) add({.family = "hypercube", .d = d});
  add({.family = "hypercube", .d = 2, .loops = 1});
  add({.family = "hypercube", .d = 3, .loops = 1});
  for (int h : {1, 2, 3}) add({.family = "complete_bipartite", .half = h});

  // 50 seeded random graphs.
  for (int n = 4; n <= 10; ++n)
    for (std::uint64_t seed : {1, 2, 3})
      add({.family = "random_eulerian", .n = n, .density = 0.35, .seed = seed});
  int pairs[][2] = {{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 3}, {8, 3}, {9, 3}, {10, 3}};
  for (auto& p : pairs)
    for (std::uint64_t seed : {1, 2})
      add({.family = "random_regular", .n = p[0], .d = p[1], .seed = seed});
  for (int n = 4; n <= 8; ++n)
    for (std::uint64_t seed : {1, 2})
      add({.family = "random_undirected", .n = n, .density = 0.45, .seed = seed});
  for (std::uint64_t seed : {11, 12, 13})
    add({.family = "random_eulerian", .n = 6, .density = 0.6, .seed = seed});
  return corpus;
}

Json record_json(const VerificationRecord& r) {
  Json j = Json::object();
  j["check"] = r.check;
  j["graph"] = r.graph;
  j["status"] = r.status;
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["lhs"] = r.lhs;
  j["mid"] = r.mid;
  j["rhs"] = r.rhs;
  j["slack"] = r.slack;
  j["tol_spectral"] = 1e-9;
  Json notes = Json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  j["witnesses"] = std::move(notes);
  return j;
}

}  // namespace svx
