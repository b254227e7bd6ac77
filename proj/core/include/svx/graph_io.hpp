#pragma once

#include <string>

#include "svx/certificates.hpp"
#include "svx/digraph.hpp"
#include "svx/json_writer.hpp"
#include "svx/spectra.hpp"

namespace svx {

/// TSV graph format. Header "n <count> <directed|undirected>", then one
/// "u v w" line per edge (0-indexed, decimal weight). Undirected files
/// list each unordered edge once. Rejects duplicate edge lines,
/// out-of-range indices and non-positive weights.
Digraph parse_graph(const std::string& text);

/// Writer counterpart; edges sorted by (u, v), exact decimals whenever the
/// weight has a finite expansion.
std::string serialize_graph(const Digraph& g);

Json spectrum_json(const Spectrum& s);
Json certificate_json(const Certificate& c);
Json vertex_set_json(const VertexSet& s);

/// Exact value rendered as {"exact": "p/q", "approx": <double>}.
Json rat_json(const Rat& r);

}  // namespace svx
