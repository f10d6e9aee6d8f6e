#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strassoc/alpha.hpp"
#include "strassoc/function.hpp"
#include "strassoc/report.hpp"

// Length-based functions F(x) = psi(alpha(|x|)) and the arithmetic of the length
// map alpha: the identities alpha(alpha(n)) = alpha(n) and
// alpha(n) = alpha(n') => alpha(n+k) = alpha(n'+k), and their structural form.

namespace strassoc {

/// Checks both identities on the table's horizon N; for the second, only
/// indices with n+k <= N and n'+k <= N are quantified. Witness bindings are the
/// indices written in decimal. Throws Unevaluable when some value exceeds N.
[[nodiscard]] CheckReport check_alpha_equations(const AlphaTable& t);

enum class AlphaStatus { accepted, rejected, insufficient_horizon };

[[nodiscard]] const char* to_string(AlphaStatus s) noexcept;

struct AlphaClassification {
    AlphaStatus status = AlphaStatus::rejected;
    std::optional<AlphaFn> alpha;  ///< set when accepted
    std::optional<AlphaViolation> violation;  ///< set when rejected
    /// alpha(n) = 0 only for n = 0; meaningful when accepted.
    bool standard = false;
    /// The candidate threshold and period read off the table (0 for the identity).
    std::uint64_t n1 = 0;
    std::uint64_t ell = 0;
    std::string reason;
};

/// Identity on the horizon gives the identity map. Otherwise, with
/// D = {n : alpha(n) != n}, takes n1 = min(D ∪ alpha(D)) and ell = min |n - alpha(n)|
/// over D, requires N >= n1 + 2*ell, and verifies the structural conditions and
/// (n1, ell)-periodicity on the horizon.
[[nodiscard]] AlphaClassification classify_alpha(const AlphaTable& t);

/// Builds a structured alpha; throws InvalidAlpha naming the violated condition.
[[nodiscard]] AlphaFn synthesize_alpha(std::uint64_t n1, std::uint64_t ell,
                                       std::vector<std::uint64_t> window);

/// A periodicity claim: t(n) = t(n + period) for all n >= threshold.
struct Periodicity {
    std::uint64_t threshold = 0;
    std::uint64_t period = 1;
    friend bool operator==(const Periodicity&, const Periodicity&) = default;
};

/// Whether the claim holds for every n with n + period <= N.
[[nodiscard]] bool periodic_on_horizon(const AlphaTable& t, const Periodicity& p);

struct PeriodResult {
    Periodicity combined;
    bool verified = false;  ///< the combined claim holds on the horizon
};

/// Combines verified witnesses into (min threshold, gcd of periods). Throws
/// InvalidArgument when the list is empty, a period is 0, or a witness fails.
[[nodiscard]] PeriodResult minimal_period(const AlphaTable& t,
                                          const std::vector<Periodicity>& candidates);

/// F(x) = psi(alpha(|x|)) on X^{<=L}. Throws MissingEntry when psi lacks alpha(n)
/// for some n <= L.
[[nodiscard]] BoundedFn compose_length_based(const AlphaFn& alpha, const PsiTable& psi,
                                             const Alphabet& alphabet,
                                             std::size_t bound = kDefaultBound);

struct LengthBasedDecomposition {
    bool accepted = false;
    AlphaFn alpha;
    PsiTable psi;
    AlphaClassification classification;
    std::string reason;  ///< why it was rejected
};

/// Reads alpha(k) = |F(X^k)| and psi(alpha(k)) = F(X^k) for k <= L and classifies
/// alpha. Rejects when F is token-valued, not constant on some X^k, assigns two
/// values to one psi entry, or alpha fails classification.
[[nodiscard]] LengthBasedDecomposition decompose_length_based(const BoundedFn& f,
                                                              std::size_t bound,
                                                              const Exec& exec = {});

/// |F(x)| = |F(y)| whenever |x| = |y|. String-valued F only. Witness x and
/// y, the first string of that length.
[[nodiscard]] CheckReport check_weakly_length_based(const BoundedFn& f, std::size_t bound,
                                                    const Exec& exec = {});

/// F(x) = F(y) whenever |x| = |y|. Any codomain.
[[nodiscard]] CheckReport check_length_based(const BoundedFn& f, std::size_t bound,
                                             const Exec& exec = {});

/// F(x) = f(mu(|x|)) on X^{<=L}. `mu[n]` is mu(n) for n up to its horizon (>= L).
/// Throws InvalidArgument when alpha(n) = |mu(n)| fails classification, when
/// mu(alpha(n)) != mu(n) for some n with alpha(n) inside the horizon (then
/// mu∘|·| is not associative), or when f is not injective on mu(0..L);
/// MissingEntry when f lacks some mu(n).
[[nodiscard]] BoundedFn compose_preassoc_length_based(const std::vector<Str>& mu,
                                                      const std::map<Str, Value>& f,
                                                      const Alphabet& alphabet,
                                                      std::size_t bound = kDefaultBound);

}  // namespace strassoc
