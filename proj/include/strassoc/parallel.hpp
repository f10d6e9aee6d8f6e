#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "strassoc/report.hpp"

namespace strassoc {

/// Result of scanning one item of an instance space (typically all instances that
/// share one outer string). `witness` is the item's least counterexample.
struct ItemResult {
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    std::optional<Witness> witness;
};

/// Scans items 0..n-1 looking for the first item that carries a witness.
///
/// Items are grouped into fixed-size chunks handed to `jobs` workers; a worker
/// stops at the first failing item of its chunk and skips chunks past the best
/// failure seen so far. The merge walks chunks in order, so the witness and the
/// counters are identical for every worker count.
[[nodiscard]] ItemResult scan_first_failure(std::uint64_t n_items, const Exec& exec,
                                            const std::function<ItemResult(std::uint64_t)>& item);

/// Builds a CheckReport from a merged scan.
[[nodiscard]] CheckReport make_report(ItemResult scan, std::string note = {});

/// Runs body(i) for i in [0, n) on `jobs` workers. Each index runs exactly once;
/// the body must only write to state owned by its index.
void parallel_for(std::uint64_t n, unsigned jobs, const std::function<void(std::uint64_t)>& body);

}  // namespace strassoc
