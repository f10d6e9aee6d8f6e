#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "strassoc/function.hpp"

// The chain of associative functions F^m whose kernels are the congruences
// theta_m: two strings are theta_m-equivalent when one turns into the other by
// swapping occurrences of x0^(2^m) and x1^(2^m).

namespace strassoc {

class ThetaSpec {
public:
    /// Throws InvalidArgument if x0 or x1 is empty or x0 == x1.
    ThetaSpec(Str x0, Str x1, unsigned m);

    [[nodiscard]] const Str& x0() const noexcept { return x0_; }
    [[nodiscard]] const Str& x1() const noexcept { return x1_; }
    [[nodiscard]] unsigned m() const noexcept { return m_; }
    /// x0^(2^m) and x1^(2^m).
    [[nodiscard]] const Str& block0() const noexcept { return block0_; }
    [[nodiscard]] const Str& block1() const noexcept { return block1_; }
    [[nodiscard]] ThetaSpec with_m(unsigned m) const { return ThetaSpec(x0_, x1_, m); }

private:
    Str x0_, x1_;
    unsigned m_;
    Str block0_, block1_;
};

/// The theta_m class of a string as seen inside X^{<=L}. Members are in
/// length-lex order. `truncated` is set when some rewrite produced a string
/// longer than L; the class in X* is then larger than `members`.
struct ThetaClass {
    std::vector<Str> members;
    bool truncated = false;
};

/// Breadth-first closure of {x} under single-occurrence block swaps.
[[nodiscard]] ThetaClass theta_class(const Alphabet& alphabet, const Str& x, const ThetaSpec& spec,
                                     std::size_t bound);

/// Length-lex least member of theta_class(x); this is F^m(x).
[[nodiscard]] Str canonical_rep(const Alphabet& alphabet, const Str& x, const ThetaSpec& spec,
                                std::size_t bound);

struct ThetaFunction {
    BoundedFn function;
    std::uint64_t classes = 0;
    std::uint64_t truncated_classes = 0;
};

/// Tabulates F^m on X^{<=L}. Every class is explored once.
[[nodiscard]] ThetaFunction theta_function(const Alphabet& alphabet, const ThetaSpec& spec,
                                           std::size_t bound);

enum class KernelOrder { f_below_g, g_below_f, equivalent, incomparable };

[[nodiscard]] const char* to_string(KernelOrder o) noexcept;

/// A pair of strings identified by one function and separated by the other.
using StrPair = std::pair<Str, Str>;

/// F ⪯ G means ker(G) ⊆ ker(F). `f_merges` is the first pair with F(x) = F(y) and
/// G(x) != G(y), so it separates F ≺ G; `g_merges` is the converse. Pairs are
/// (least member of the class, first member that splits from it).
struct KernelComparison {
    KernelOrder relation = KernelOrder::equivalent;
    std::optional<StrPair> f_merges;
    std::optional<StrPair> g_merges;
};

/// Compares kernels on X^{<=L}. Throws InvalidArgument when the alphabets differ
/// or L exceeds either function's bound.
[[nodiscard]] KernelComparison preceq(const BoundedFn& f, const BoundedFn& g, std::size_t bound);

}  // namespace strassoc
