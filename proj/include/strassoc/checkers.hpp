#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "strassoc/function.hpp"
#include "strassoc/report.hpp"

// Exhaustive checks of the defining identities on the bounded domain X^{<=L}.
//
// Every check enumerates its instances grouped by an outer string in length-lex
// order and reports the first counterexample in that order, so witnesses are
// reproducible across runs and worker counts. Instances whose intermediate
// strings leave X^{<=L} are counted as skipped, never as failures.

namespace strassoc {

/// Partition of X^{<=L} by equal F-value. `value_id[r]` is the class of the
/// string of rank r; classes are numbered in order of their least member, and
/// `members[c]` lists ranks in increasing order.
struct Kernel {
    std::vector<std::uint32_t> value_id;
    std::vector<std::vector<std::uint64_t>> members;
    std::vector<Value> class_value;
};

[[nodiscard]] Kernel compute_kernel(const BoundedFn& f, std::size_t bound, const Exec& exec = {});

/// F(xyz) = F(xF(y)z) for all |xyz| <= L. String-valued F only.
[[nodiscard]] CheckReport check_associative_full(const BoundedFn& f, std::size_t bound,
                                                 const Exec& exec = {});

/// The same identity restricted to |xz| <= 1.
[[nodiscard]] CheckReport check_associative_reduced(const BoundedFn& f, std::size_t bound,
                                                    const Exec& exec = {});

/// F(y) = F(y') implies F(xyz) = F(xy'z). Any codomain. Witness bindings are
/// y, y2, x, z with y preceding y2 in length-lex order.
[[nodiscard]] CheckReport check_preassociative(const BoundedFn& f, std::size_t bound,
                                               const Exec& exec = {});

/// F(x) = F(epsilon) only for x = epsilon.
[[nodiscard]] CheckReport check_standard(const BoundedFn& f, std::size_t bound,
                                         const Exec& exec = {});

/// F(F(x)) = F(x). String-valued F only.
[[nodiscard]] CheckReport check_idempotent(const BoundedFn& f, std::size_t bound,
                                           const Exec& exec = {});

/// |F(x)| <= m. String-valued F only.
[[nodiscard]] CheckReport check_m_bounded(const BoundedFn& f, std::size_t m, std::size_t bound,
                                          const Exec& exec = {});

/// Every value of F on X^{<=L} is already a value on X^{<=m}. Requires m <= L.
[[nodiscard]] CheckReport check_m_determined_range(const BoundedFn& f, std::size_t m,
                                                   std::size_t bound, const Exec& exec = {});

/// The four equivalent formulations of associativity for F with F(epsilon) = epsilon.
struct EquivalentDefinitions {
    CheckReport associative;     ///< F(xyz) = F(xF(y)z)
    CheckReport split_invariant; ///< xyz = x'y'z' implies F(xF(y)z) = F(x'F(y')z')
    CheckReport regrouping;      ///< F(F(xy)z) = F(xF(yz))
    CheckReport pairwise;        ///< F(xy) = F(F(x)F(y))
};

/// Throws PreconditionViolated when F(epsilon) != epsilon.
[[nodiscard]] EquivalentDefinitions check_equivalent_definitions(const BoundedFn& f,
                                                                 std::size_t bound,
                                                                 const Exec& exec = {});

/// If F is injective and idempotent on X^{<=L}, checks F = id there. Vacuous when
/// F is not injective or not idempotent on the domain.
[[nodiscard]] CheckReport check_injective_rigidity(const BoundedFn& f, std::size_t bound,
                                                   const Exec& exec = {});

/// For non-standard F: the first a != epsilon with F(a) = F(epsilon) such that
/// F(xz) = F(xaz) whenever |xaz| <= L. An empty result is inconclusive, since the
/// absorbed string may be longer than L. Throws NotApplicable when F is standard
/// on the bounded domain.
[[nodiscard]] std::optional<Str> find_absorbed_string(const BoundedFn& f, std::size_t bound,
                                                      const Exec& exec = {});

}  // namespace strassoc
