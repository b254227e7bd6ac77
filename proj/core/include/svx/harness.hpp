#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svx/expansion.hpp"
#include "svx/families.hpp"
#include "svx/json_writer.hpp"

namespace svx {

enum class CheckId {
  Cheeger,
  DiCheeger,
  BipartiteCheeger,
  Relating46,
  Prop37,
  Prop47,
  HigherOrderK,
  SvHigherOrderK,
  Thm54,
  VertexSpectralD2,
  VertexSpectralD,
  MagnifierLemma,
};

const char* check_name(CheckId id);
std::optional<CheckId> check_from_name(const std::string& name);
std::vector<CheckId> all_checks();

/// One inequality chain evaluated on one graph. For chain-style checks
/// pass means lhs <= mid + tol and mid <= rhs + tol, with tol the spectral
/// tolerance on spectral sides and 0 on exact-vs-exact sides. Skips are
/// first-class: status is "pass", "fail" or "skip".
struct VerificationRecord {
  std::string check;
  std::string graph;
  std::string status;
  std::string reason;  // skip reason or failure note
  double lhs = 0.0, mid = 0.0, rhs = 0.0;
  double slack = 0.0;  // min(mid - lhs, rhs - mid)
  std::map<std::string, std::string> notes;

  bool passed() const { return status == "pass"; }
  bool failed() const { return status == "fail"; }
};

struct CheckOptions {
  ExactLimits limits;
  double spectral_tol = 1e-9;
  /// Conservative constant floor for Omega-form ratio claims and ceiling
  /// for O-form ones; adjustable, documented in the README.
  double ratio_floor = 1.0 / 64.0;
  double ratio_ceiling = 64.0;
  /// Three-way family scans are quadratic in the partition count, so the
  /// harness only runs k = 3 up to this vertex count.
  int kway_n3 = 7;
  /// The magnifier check scans 2^(2n) lift subsets; capped separately.
  int magnifier_n = 12;
  /// Negative-control knob: subtracted from sigma_2 before the
  /// singular-value Cheeger chain is evaluated.
  double sigma2_perturb = 0.0;
  int threads = 0;
};

std::vector<VerificationRecord> run_checks(const Digraph& g, const std::string& graph_id,
                                           const std::vector<CheckId>& checks,
                                           const CheckOptions& opts = {});

/// Runs every applicable check on every corpus entry; entries verified in
/// parallel, records merged in corpus order.
std::vector<VerificationRecord> run_suite(const std::vector<GeneratorSpec>& corpus,
                                          const std::vector<CheckId>& checks,
                                          const CheckOptions& opts = {});

/// Named families plus 50 seeded random graphs.
std::vector<GeneratorSpec> default_corpus();

Json record_json(const VerificationRecord& r);

}  // namespace svx
