#pragma once

namespace svx {

/// Worker count for partitioned scans: `requested` if positive, else the
/// SVX_THREADS environment variable, else hardware concurrency. Clamped
/// to [1, 64]. Results never depend on the count.
int resolve_threads(int requested = 0);

}  // namespace svx
