#pragma once

// Function fixtures shared by the unit and acceptance suites.

#include <functional>
#include <string>

#include "strassoc/function.hpp"

namespace fixtures {

using namespace strassoc;

inline BoundedFn builtin(Builtin b, const char* letters, std::size_t bound) {
    return BoundedFn::builtin(std::move(b), Alphabet(letters), bound);
}

inline BoundedFn string_fn(const char* letters, std::size_t bound,
                           const std::function<Str(const Str&)>& f) {
    return BoundedFn::tabulate(Alphabet(letters), bound, Codomain::string,
                               [&](const Str& x) { return Value(f(x)); });
}

inline BoundedFn token_fn(const char* letters, std::size_t bound,
                          const std::function<std::int64_t(const Str&)>& f) {
    return BoundedFn::tabulate(Alphabet(letters), bound, Codomain::token,
                               [&](const Str& x) { return Value(Token(f(x))); });
}

/// x1...xn -> complemented letters over {0,1}.
inline BoundedFn bit_flip(std::size_t bound) {
    return string_fn("01", bound, [](const Str& x) {
        std::string out = x.text();
        for (char& c : out) c = c == '0' ? '1' : '0';
        return Str(out);
    });
}

inline BoundedFn first_letter(const char* letters, std::size_t bound) {
    return string_fn(letters, bound, [](const Str& x) { return x.substr(0, 1); });
}

inline BoundedFn last_letter(const char* letters, std::size_t bound) {
    return string_fn(letters, bound,
                     [](const Str& x) { return x.empty() ? Str() : x.substr(x.size() - 1); });
}

/// Identity on single letters, "a" on every other arity.
inline BoundedFn identity_unary_else_a(std::size_t bound) {
    return string_fn("ab", bound, [](const Str& x) { return x.size() == 1 ? x : Str("a"); });
}

/// Over the digit alphabet {0,1,2}: ε -> ε, x_1...x_n -> Token(x_1 + ... + x_n).
inline BoundedFn digit_sum(std::size_t bound) {
    return BoundedFn::tabulate(Alphabet("012"), bound, Codomain::token, [](const Str& x) {
        if (x.empty()) return Value(Str());
        std::int64_t sum = 0;
        for (char c : x) sum += c - '0';
        return Value(Token(sum));
    });
}

/// The first letter as a token ("none" for ε).
inline BoundedFn first_letter_token(const char* letters, std::size_t bound) {
    return BoundedFn::tabulate(Alphabet(letters), bound, Codomain::token, [](const Str& x) {
        return Value(Token(x.empty() ? std::string("none") : x.substr(0, 1).text()));
    });
}

}  // namespace fixtures
