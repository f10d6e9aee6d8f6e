#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strassoc/value.hpp"

namespace strassoc {

enum class Verdict { holds, fails, vacuous };

[[nodiscard]] const char* to_string(Verdict v) noexcept;

/// A concrete counterexample: the quantified strings and the two sides that disagree
/// (or, for properties that forbid an equality, the two sides that coincide).
struct Witness {
    std::vector<std::pair<std::string, Str>> bindings;
    Value lhs;
    std::optional<Value> rhs;

    /// Binding by name; throws std::out_of_range when absent.
    [[nodiscard]] const Str& at(const std::string& name) const;
};

/// Outcome of one bounded-domain check.
///
/// `holds` means no counterexample exists among the evaluated instances, all of
/// whose strings have length <= L. `checked` counts evaluated instances and
/// `skipped` those whose intermediate strings left X^{<=L}; `incomplete` is set
/// when a non-failing verdict rests on a domain with skips. For a failing check
/// the counters cover the enumeration up to the witness's group.
struct CheckReport {
    Verdict verdict = Verdict::vacuous;
    std::optional<Witness> witness;
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    bool incomplete = false;
    std::string note;

    [[nodiscard]] bool holds() const noexcept { return verdict == Verdict::holds; }
    [[nodiscard]] bool fails() const noexcept { return verdict == Verdict::fails; }
};

/// Execution settings shared by the exhaustive checkers.
struct Exec {
    unsigned jobs = 1;
};

}  // namespace strassoc
