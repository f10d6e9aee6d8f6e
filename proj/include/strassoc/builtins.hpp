#pragma once

#include "strassoc/function.hpp"

// Closed-form string functions. Each throws AlphabetMismatch when its letter
// parameter is not in the alphabet.

namespace strassoc {

/// x with every occurrence of `a` deleted.
[[nodiscard]] Str letter_remove(const Alphabet& alphabet, char a, const Str& x);

/// "a" when x is a power of `a` (including epsilon), letter_remove(a, x) otherwise.
[[nodiscard]] Str letter_remove_g(const Alphabet& alphabet, char a, const Str& x);

/// The letters of x in order of first occurrence, duplicates dropped.
[[nodiscard]] Str ofo(const Str& x);

/// Inserts `bar` between every adjacent pair of letters neither of which is `bar`.
/// Runs of bars are copied verbatim.
[[nodiscard]] Str separator_insert(const Alphabet& alphabet, char bar, const Str& x);

/// Letters of x in nondecreasing alphabet order.
[[nodiscard]] Str sort(const Alphabet& alphabet, const Str& x);

/// Token(|x|).
[[nodiscard]] Value length_fn(const Str& x);

/// Token(|inner(x)|); `inner` must be string-valued.
[[nodiscard]] Value length_of(const Builtin& inner, const Alphabet& alphabet, const Str& x);

}  // namespace strassoc
