#include "strassoc/function.hpp"

#include <type_traits>

#include "strassoc/builtins.hpp"
#include "strassoc/error.hpp"

namespace strassoc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_value(const Alphabet& alphabet, const Value& v) {
    if (v.is_string()) alphabet.require(v.str());
}

}  // namespace

const char* to_string(Codomain c) noexcept { return c == Codomain::string ? "string" : "token"; }

namespace builtins {
bool operator==(const LengthOf& a, const LengthOf& b) {
    if (a.inner == b.inner) return true;
    if (!a.inner || !b.inner) return false;
    return *a.inner == *b.inner;
}
}  // namespace builtins

Builtin length_of(Builtin inner) {
    return builtins::LengthOf{std::make_shared<const Builtin>(std::move(inner))};
}

std::string Builtin::name() const {
    return std::visit(
        overloaded{
            [](const builtins::Identity&) -> std::string { return "identity"; },
            [](const builtins::Sort&) -> std::string { return "sort"; },
            [](const builtins::LetterRemove&) -> std::string { return "letter_remove"; },
            [](const builtins::LetterRemoveG&) -> std::string { return "letter_remove_g"; },
            [](const builtins::Ofo&) -> std::string { return "ofo"; },
            [](const builtins::SeparatorInsert&) -> std::string { return "separator_insert"; },
            [](const builtins::Length&) -> std::string { return "length"; },
            [](const builtins::LengthOf&) -> std::string { return "length_of"; },
            [](const builtins::LengthBased&) -> std::string { return "length_based"; },
            [](const builtins::Constant&) -> std::string { return "constant"; },
        },
        repr_);
}

Codomain Builtin::codomain() const {
    return std::visit(overloaded{
                          [](const builtins::Length&) { return Codomain::token; },
                          [](const builtins::LengthOf&) { return Codomain::token; },
                          [](const builtins::Constant& c) {
                              return c.value.is_string() ? Codomain::string : Codomain::token;
                          },
                          [](const auto&) { return Codomain::string; },
                      },
                      repr_);
}

void Builtin::validate(const Alphabet& alphabet, std::size_t bound) const {
    std::visit(overloaded{
                   [&](const builtins::LetterRemove& d) { alphabet.require(d.a); },
                   [&](const builtins::LetterRemoveG& d) { alphabet.require(d.a); },
                   [&](const builtins::SeparatorInsert& d) { alphabet.require(d.bar); },
                   [&](const builtins::LengthOf& d) {
                       if (!d.inner) throw InvalidArgument("length_of is missing its inner builtin");
                       if (d.inner->codomain() != Codomain::string)
                           throw CodomainMismatch("length_of needs a string-valued inner builtin, got " +
                                                  d.inner->name());
                       d.inner->validate(alphabet, bound);
                   },
                   [&](const builtins::LengthBased& d) {
                       for (const auto& [n, s] : d.psi.entries()) alphabet.require(s);
                       for (std::size_t n = 0; n <= bound; ++n) (void)d.psi.at(d.alpha(n));
                   },
                   [&](const builtins::Constant& d) { require_value(alphabet, d.value); },
                   [](const auto&) {},
               },
               repr_);
}

Value Builtin::apply(const Alphabet& alphabet, const Str& x) const {
    return std::visit(
        overloaded{
            [&](const builtins::Identity&) -> Value { return x; },
            [&](const builtins::Sort&) -> Value { return sort(alphabet, x); },
            [&](const builtins::LetterRemove& d) -> Value { return letter_remove(alphabet, d.a, x); },
            [&](const builtins::LetterRemoveG& d) -> Value {
                return letter_remove_g(alphabet, d.a, x);
            },
            [&](const builtins::Ofo&) -> Value { return ofo(x); },
            [&](const builtins::SeparatorInsert& d) -> Value {
                return separator_insert(alphabet, d.bar, x);
            },
            [&](const builtins::Length&) -> Value { return length_fn(x); },
            [&](const builtins::LengthOf& d) -> Value { return length_of(*d.inner, alphabet, x); },
            [&](const builtins::LengthBased& d) -> Value { return d.psi.at(d.alpha(x.size())); },
            [&](const builtins::Constant& d) -> Value { return d.value; },
        },
        repr_);
}

BoundedFn BoundedFn::builtin(Builtin b, Alphabet alphabet, std::size_t bound) {
    b.validate(alphabet, bound);
    const Codomain codomain = b.codomain();
    return BoundedFn(FnDef(std::move(b)), std::move(alphabet), bound, codomain);
}

BoundedFn BoundedFn::table(Alphabet alphabet, std::size_t bound, Codomain codomain,
                           std::vector<Value> values) {
    const std::uint64_t expected = alphabet.count_up_to(bound);
    if (values.size() != expected)
        throw MissingEntry("table has " + std::to_string(values.size()) + " entries, X^{<=" +
                           std::to_string(bound) + "} has " + std::to_string(expected));
    for (std::size_t i = 0; i < values.size(); ++i) {
        const Value& v = values[i];
        if (codomain == Codomain::string && !v.is_string())
            throw CodomainMismatch("string-valued table maps \"" + alphabet.unrank(i).text() +
                                   "\" to a token");
        require_value(alphabet, v);
    }
    Table t{codomain, std::make_shared<const std::vector<Value>>(std::move(values))};
    return BoundedFn(FnDef(std::move(t)), std::move(alphabet), bound, codomain);
}

BoundedFn BoundedFn::tabulate(Alphabet alphabet, std::size_t bound, Codomain codomain,
                              const std::function<Value(const Str&)>& f) {
    std::vector<Value> values;
    values.reserve(alphabet.count_up_to(bound));
    for (const Str& x : enumerate_strings(alphabet, bound)) values.push_back(f(x));
    return table(std::move(alphabet), bound, codomain, std::move(values));
}

Value BoundedFn::eval(const Str& x) const {
    if (x.size() > bound_)
        throw OutOfDomain("input \"" + x.text() + "\" has length " + std::to_string(x.size()) +
                          " > bound " + std::to_string(bound_));
    alphabet_.require(x);
    if (const auto* t = std::get_if<Table>(&def_)) {
        const std::uint64_t r = alphabet_.rank(x);
        if (!t->values || r >= t->values->size())
            throw MissingEntry("table has no entry for \"" + x.text() + "\"");
        return (*t->values)[r];
    }
    return std::get<Builtin>(def_).apply(alphabet_, x);
}

BoundedFn BoundedFn::materialize(std::size_t bound) const {
    if (bound > bound_)
        throw OutOfDomain("cannot tabulate up to " + std::to_string(bound) + " beyond bound " +
                          std::to_string(bound_));
    if (is_table() && bound == bound_) return *this;
    return tabulate(alphabet_, bound, codomain_, [this](const Str& x) { return eval(x); });
}

}  // namespace strassoc
