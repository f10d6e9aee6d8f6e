#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "strassoc/alpha.hpp"
#include "strassoc/strings.hpp"
#include "strassoc/value.hpp"

namespace strassoc {

/// Whether a function maps into X* or into an opaque token set Y.
enum class Codomain { string, token };

[[nodiscard]] const char* to_string(Codomain c) noexcept;

class Builtin;

namespace builtins {

struct Identity {
    friend bool operator==(const Identity&, const Identity&) = default;
};
struct Sort {
    friend bool operator==(const Sort&, const Sort&) = default;
};
/// F_a: delete every occurrence of `a`.
struct LetterRemove {
    char a;
    friend bool operator==(const LetterRemove&, const LetterRemove&) = default;
};
/// G_a: "a" on powers of `a` (epsilon included), F_a elsewhere.
struct LetterRemoveG {
    char a;
    friend bool operator==(const LetterRemoveG&, const LetterRemoveG&) = default;
};
/// Keep the first occurrence of each letter.
struct Ofo {
    friend bool operator==(const Ofo&, const Ofo&) = default;
};
/// Insert `bar` between adjacent letters neither of which is `bar`.
struct SeparatorInsert {
    char bar;
    friend bool operator==(const SeparatorInsert&, const SeparatorInsert&) = default;
};
/// Token(|x|).
struct Length {
    friend bool operator==(const Length&, const Length&) = default;
};
/// Token(|inner(x)|) for a string-valued inner builtin.
struct LengthOf {
    std::shared_ptr<const Builtin> inner;
    friend bool operator==(const LengthOf& a, const LengthOf& b);
};
/// psi(alpha(|x|)).
struct LengthBased {
    AlphaFn alpha;
    PsiTable psi;
    friend bool operator==(const LengthBased&, const LengthBased&) = default;
};
/// The same value for every input.
struct Constant {
    Value value;
    friend bool operator==(const Constant&, const Constant&) = default;
};

}  // namespace builtins

/// A closed-form variadic function.
class Builtin {
public:
    using Repr = std::variant<builtins::Identity, builtins::Sort, builtins::LetterRemove,
                              builtins::LetterRemoveG, builtins::Ofo, builtins::SeparatorInsert,
                              builtins::Length, builtins::LengthOf, builtins::LengthBased,
                              builtins::Constant>;

    template <class T>
        requires std::is_constructible_v<Repr, T>
    Builtin(T descriptor)  // NOLINT(google-explicit-constructor)
        : repr_(std::move(descriptor)) {}

    [[nodiscard]] const Repr& repr() const noexcept { return repr_; }
    [[nodiscard]] std::string name() const;
    [[nodiscard]] Codomain codomain() const;

    /// Checks parameters against the alphabet and, for length_based, that psi covers
    /// alpha(0..bound). Throws AlphabetMismatch / InvalidArgument / MissingEntry.
    void validate(const Alphabet& alphabet, std::size_t bound) const;

    /// Closed-form evaluation; `x` is assumed to be over `alphabet`.
    [[nodiscard]] Value apply(const Alphabet& alphabet, const Str& x) const;

    friend bool operator==(const Builtin&, const Builtin&) = default;

private:
    Repr repr_;
};

/// Shorthand for length_of(inner).
[[nodiscard]] Builtin length_of(Builtin inner);

/// Arity-indexed lookup table, total on X^{<=bound}; entry i is the value at rank i.
struct Table {
    Codomain codomain = Codomain::string;
    std::shared_ptr<const std::vector<Value>> values;
};

/// Builtin descriptor or table.
using FnDef = std::variant<Builtin, Table>;

/// A variadic function restricted to X^{<=bound}. Immutable and safe to share
/// across threads.
class BoundedFn {
public:
    static BoundedFn builtin(Builtin b, Alphabet alphabet, std::size_t bound);
    /// `values[i]` is the output at rank i; size must be |X^{<=bound}|.
    static BoundedFn table(Alphabet alphabet, std::size_t bound, Codomain codomain,
                           std::vector<Value> values);
    /// Tabulates `f` on X^{<=bound}.
    static BoundedFn tabulate(Alphabet alphabet, std::size_t bound, Codomain codomain,
                              const std::function<Value(const Str&)>& f);

    [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] std::size_t bound() const noexcept { return bound_; }
    [[nodiscard]] Codomain codomain() const noexcept { return codomain_; }
    [[nodiscard]] bool string_valued() const noexcept { return codomain_ == Codomain::string; }
    [[nodiscard]] const FnDef& def() const noexcept { return def_; }
    [[nodiscard]] bool is_table() const noexcept { return std::holds_alternative<Table>(def_); }

    /// F(x). Throws OutOfDomain when |x| > bound, AlphabetMismatch for foreign
    /// letters, MissingEntry for a malformed table.
    [[nodiscard]] Value eval(const Str& x) const;
    /// F(x) for a string-valued function.
    [[nodiscard]] Str eval_str(const Str& x) const { return eval(x).str(); }

    /// The same function tabulated on X^{<=bound} (a no-op copy for tables of that bound).
    [[nodiscard]] BoundedFn materialize(std::size_t bound) const;

private:
    BoundedFn(FnDef def, Alphabet alphabet, std::size_t bound, Codomain codomain)
        : def_(std::move(def)), alphabet_(std::move(alphabet)), bound_(bound), codomain_(codomain) {}

    FnDef def_;
    Alphabet alphabet_;
    std::size_t bound_;
    Codomain codomain_;
};

/// Default bound L for functions loaded without an explicit one.
inline constexpr std::size_t kDefaultBound = 6;

}  // namespace strassoc
