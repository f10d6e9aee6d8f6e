#pragma once

#include <map>
#include <string>
#include <vector>

#include "strassoc/function.hpp"
#include "strassoc/report.hpp"

// Quasi-inverses and the factorization F = f∘H of a function through an
// idempotent string function H = g∘F.

namespace strassoc {

/// A report labelled with the identity it checks.
struct NamedReport {
    std::string name;
    CheckReport report;
};

/// Looks up a report by name; throws std::out_of_range when absent.
[[nodiscard]] const CheckReport& find_report(const std::vector<NamedReport>& reports,
                                             const std::string& name);

/// X^{<=L} grouped by F-value; classes ordered by their least member, members in
/// length-lex order.
[[nodiscard]] std::vector<std::vector<Str>> kernel_classes(const BoundedFn& f, std::size_t bound,
                                                           const Exec& exec = {});

/// g: ran(F) -> X* with F(g(y)) = y, choosing for each value its length-lex least
/// preimage in X^{<=L}. That preimage also has minimal length, so g is
/// length-optimized relative to the bound.
class QuasiInverse {
public:
    QuasiInverse() = default;
    explicit QuasiInverse(std::map<Value, Str> entries) : entries_(std::move(entries)) {}

    [[nodiscard]] bool contains(const Value& y) const { return entries_.contains(y); }
    /// Throws MissingEntry for values outside the recorded range.
    [[nodiscard]] const Str& at(const Value& y) const;
    /// Length of the shortest preimage of y found within the bound.
    [[nodiscard]] std::size_t min_length(const Value& y) const { return at(y).size(); }
    [[nodiscard]] const std::map<Value, Str>& entries() const noexcept { return entries_; }

private:
    std::map<Value, Str> entries_;
};

[[nodiscard]] QuasiInverse quasi_inverse(const BoundedFn& f, std::size_t bound, const Exec& exec = {});

/// H = g∘F with the canonical quasi-inverse, and f = F restricted to ran(H).
/// `checks` carries, in order: preassociative, F_of_g_is_identity,
/// F_equals_f_of_H, F_equals_F_of_H, H_idempotent, f_injective, H_associative,
/// and for standard F also H_standard and H_fixes_epsilon.
struct Factorization {
    QuasiInverse g;
    BoundedFn h;
    std::map<Str, Value> f;
    std::vector<NamedReport> checks;
    /// False when F fails preassociativity; H then need not be associative.
    bool preassociative = true;
};

/// Never throws on a non-preassociative F; the failure is recorded in `checks`.
[[nodiscard]] Factorization factorize(const BoundedFn& f, std::size_t bound, const Exec& exec = {});

/// Conditions for F to be preassociative with an m-determined range, with H = g∘F
/// and g the canonical quasi-inverse on X^{<=L}. Reports, in order:
///   range: ran(F_{m+1}) ⊆ ran(F_0) ∪ ... ∪ ran(F_m);
///   a: F(x) = F(xH(ε)) for letters x;
///   b: F(H(xy)z) = F(xH(yz)) for letters x, z and |xyz| <= m+2;
///   c: F(yz) = F(H(y)z) for letters z and |yz| <= L.
/// Throws InvalidArgument when L < m+2.
[[nodiscard]] std::vector<NamedReport> check_preassoc_range_conditions(const BoundedFn& f,
                                                                       std::size_t m,
                                                                       std::size_t bound,
                                                                       const Exec& exec = {});

/// F_n(x_1...x_n) = F(g(F_{n-1}(x_1...x_{n-1})) x_n) evaluated from the parts
/// F_0 .. F_{m+1} (a function with bound m+1). Strings of length <= m+1 are looked
/// up directly. Throws Unevaluable when g(v) x_n is longer than m+1, and
/// MissingEntry when g has no entry for an intermediate value.
[[nodiscard]] Value recursive_eval(const BoundedFn& parts, const QuasiInverse& g, const Str& x);

/// Equivalent descriptions of an m-determined range. Reports, in order:
///   m_determined_range;
/// and, only when that holds, with H = g∘F for the canonical g:
///   H_m_bounded, F_equals_F_of_H,
///   partition_parts: on A_k = H^{-1}(X^k), H = H_k∘H and F = F_k∘H.
[[nodiscard]] std::vector<NamedReport> check_range_factorizations(const BoundedFn& f,
                                                                  std::size_t m,
                                                                  std::size_t bound,
                                                                  const Exec& exec = {});

}  // namespace strassoc
