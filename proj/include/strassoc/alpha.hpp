#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "strassoc/error.hpp"
#include "strassoc/strings.hpp"

namespace strassoc {

/// Which structural condition of a Structured alpha is violated.
enum class AlphaViolation {
    window_shape,      ///< ell == 0 or values.size() != n1 + ell
    not_fixed_below,   ///< alpha(n) != n for some n < n1
    below_argument,    ///< alpha(n) < n inside the window
    wrong_residue,     ///< alpha(n) != n (mod ell) inside the window
    not_periodic,      ///< a raw table is not (n1, ell)-periodic on its horizon
};

[[nodiscard]] const char* to_string(AlphaViolation v) noexcept;

class InvalidAlpha : public InvalidArgument {
public:
    InvalidAlpha(AlphaViolation violation, const std::string& what)
        : InvalidArgument(what), violation_(violation) {}
    [[nodiscard]] AlphaViolation violation() const noexcept { return violation_; }

private:
    AlphaViolation violation_;
};

/// A finitely represented eventually periodic map N -> N: either the identity, or
/// alpha(n) = n below n1, and (n1, ell)-periodic from n1 on with the window
/// values[n1 .. n1+ell) satisfying alpha(n) >= n and alpha(n) = n (mod ell).
class AlphaFn {
public:
    struct Structured {
        std::uint64_t n1 = 0;
        std::uint64_t ell = 1;
        std::vector<std::uint64_t> values;  ///< alpha(0) .. alpha(n1+ell-1)

        friend bool operator==(const Structured&, const Structured&) = default;
    };

    /// The identity map.
    AlphaFn() = default;
    /// Validates the structural conditions; throws InvalidAlpha naming the violated one.
    explicit AlphaFn(Structured s);

    [[nodiscard]] bool is_identity() const noexcept {
        return std::holds_alternative<std::monostate>(repr_);
    }
    [[nodiscard]] const Structured& structured() const { return std::get<Structured>(repr_); }

    [[nodiscard]] std::uint64_t operator()(std::uint64_t n) const;

    /// alpha(n) = 0 iff n = 0 holds for this map.
    [[nodiscard]] bool standard() const noexcept;

    friend bool operator==(const AlphaFn&, const AlphaFn&) = default;

private:
    std::variant<std::monostate, Structured> repr_;
};

/// Evaluates alpha(n), using (n1, ell)-periodicity beyond the stored window.
[[nodiscard]] inline std::uint64_t eval_alpha(const AlphaFn& alpha, std::uint64_t n) {
    return alpha(n);
}

/// Raw values alpha(0..N) with no structural guarantee; N = values.size() - 1.
struct AlphaTable {
    std::vector<std::uint64_t> values;

    [[nodiscard]] std::uint64_t horizon() const { return values.empty() ? 0 : values.size() - 1; }
    [[nodiscard]] std::uint64_t operator()(std::uint64_t n) const { return values.at(n); }
};

/// psi(n) for finitely many n; every stored string has exactly n letters.
class PsiTable {
public:
    PsiTable() = default;
    /// Throws InvalidArgument if some |psi(n)| != n.
    explicit PsiTable(std::map<std::uint64_t, Str> entries);

    [[nodiscard]] bool contains(std::uint64_t n) const { return entries_.contains(n); }
    /// Throws MissingEntry when n is not stored.
    [[nodiscard]] const Str& at(std::uint64_t n) const;
    [[nodiscard]] const std::map<std::uint64_t, Str>& entries() const noexcept { return entries_; }

    friend bool operator==(const PsiTable&, const PsiTable&) = default;

private:
    std::map<std::uint64_t, Str> entries_;
};

}  // namespace strassoc
