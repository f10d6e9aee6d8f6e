#include "strassoc/builtins.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "strassoc/error.hpp"

namespace strassoc {

Str letter_remove(const Alphabet& alphabet, char a, const Str& x) {
    alphabet.require(a);
    std::string out;
    out.reserve(x.size());
    for (char c : x)
        if (c != a) out.push_back(c);
    return Str(std::move(out));
}

Str letter_remove_g(const Alphabet& alphabet, char a, const Str& x) {
    alphabet.require(a);
    if (std::all_of(x.begin(), x.end(), [a](char c) { return c == a; }))
        return Str(std::string(1, a));
    return letter_remove(alphabet, a, x);
}

Str ofo(const Str& x) {
    std::array<bool, 256> seen{};
    std::string out;
    for (char c : x) {
        auto& flag = seen[static_cast<unsigned char>(c)];
        if (!flag) {
            flag = true;
            out.push_back(c);
        }
    }
    return Str(std::move(out));
}

Str separator_insert(const Alphabet& alphabet, char bar, const Str& x) {
    alphabet.require(bar);
    std::string out;
    out.reserve(2 * x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0 && x[i - 1] != bar && x[i] != bar) out.push_back(bar);
        out.push_back(x[i]);
    }
    return Str(std::move(out));
}

Str sort(const Alphabet& alphabet, const Str& x) {
    std::string out = x.text();
    std::stable_sort(out.begin(), out.end(), [&alphabet](char a, char b) {
        return alphabet.index_of(a) < alphabet.index_of(b);
    });
    return Str(std::move(out));
}

Value length_fn(const Str& x) { return Token(static_cast<std::int64_t>(x.size())); }

Value length_of(const Builtin& inner, const Alphabet& alphabet, const Str& x) {
    if (inner.codomain() != Codomain::string)
        throw CodomainMismatch("length_of needs a string-valued inner function, got " +
                               inner.name());
    return Token(static_cast<std::int64_t>(inner.apply(alphabet, x).str().size()));
}

}  // namespace strassoc
