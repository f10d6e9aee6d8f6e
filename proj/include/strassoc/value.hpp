#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>

#include "strassoc/strings.hpp"

namespace strassoc {

/// An opaque element of an external codomain Y: an integer or an interned symbol.
/// Tokens are only ever compared for equality (ordering exists for containers).
class Token {
public:
    explicit Token(std::int64_t n) : repr_(n) {}
    explicit Token(std::string symbol) : repr_(std::move(symbol)) {}

    [[nodiscard]] bool is_integer() const noexcept {
        return std::holds_alternative<std::int64_t>(repr_);
    }
    [[nodiscard]] std::int64_t integer() const { return std::get<std::int64_t>(repr_); }
    [[nodiscard]] const std::string& symbol() const { return std::get<std::string>(repr_); }

    friend bool operator==(const Token&, const Token&) = default;
    friend std::strong_ordering operator<=>(const Token&, const Token&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Token& t) {
        if (t.is_integer()) return os << "#" << t.integer();
        return os << "#" << t.symbol();
    }

private:
    std::variant<std::int64_t, std::string> repr_;
};

/// Output of a variadic function: either a string over the ambient alphabet or a Token.
class Value {
public:
    Value(Str s) : repr_(std::move(s)) {}  // NOLINT(google-explicit-constructor)
    Value(Token t) : repr_(std::move(t)) {}  // NOLINT(google-explicit-constructor)

    [[nodiscard]] bool is_string() const noexcept { return std::holds_alternative<Str>(repr_); }
    [[nodiscard]] bool is_token() const noexcept { return std::holds_alternative<Token>(repr_); }
    [[nodiscard]] const Str& str() const { return std::get<Str>(repr_); }
    [[nodiscard]] const Token& token() const { return std::get<Token>(repr_); }

    friend bool operator==(const Value&, const Value&) = default;
    friend std::strong_ordering operator<=>(const Value&, const Value&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Value& v) {
        if (v.is_string()) return os << '"' << v.str().text() << '"';
        return os << v.token();
    }

private:
    std::variant<Str, Token> repr_;
};

}  // namespace strassoc
