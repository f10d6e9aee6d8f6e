#include <doctest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "strassoc/checkers.hpp"
#include "strassoc/error.hpp"
#include "strassoc/extension.hpp"
#include "strassoc/factorization.hpp"

using namespace strassoc;
using fixtures::builtin;

namespace {

const Builtin kFa = builtins::LetterRemove{'a'};
const Builtin kGa = builtins::LetterRemoveG{'a'};

std::vector<BoundedFn> token_fixtures(std::size_t bound) {
    return {builtin(builtins::Length{}, "ab", bound),
            builtin(length_of(kFa), "ab", bound),
            builtin(length_of(kGa), "ab", bound),
            builtin(length_of(builtins::Ofo{}), "ab", bound),
            builtin(builtins::Identity{}, "ab", bound),
            builtin(builtins::Sort{}, "abc", bound),
            builtin(builtins::Ofo{}, "abc", bound),
            builtin(kGa, "ab", bound),
            fixtures::bit_flip(bound),
            fixtures::first_letter_token("ab", bound),
            fixtures::digit_sum(bound),
            builtin(builtins::Constant{Value(Token(0))}, "ab", bound)};
}

// Either an injective relabeling of an associative 1-bounded function (hence
// preassociative), or an unstructured table over three tokens.
BoundedFn random_token_table(std::mt19937_64& rng, const std::vector<PartialSpec>& specs,
                             std::size_t bound) {
    const Alphabet ab("ab");
    if (rng() % 2 == 0) {
        for (;;) {
            const PartialSpec& spec = specs[rng() % specs.size()];
            if (!verify_conditions(spec).all_hold()) continue;
            const auto g = extend(spec, bound);
            const std::int64_t shift = static_cast<std::int64_t>(rng() % 100);
            return BoundedFn::tabulate(ab, bound, Codomain::token, [&](const Str& x) {
                return Value(Token(static_cast<std::int64_t>(ab.rank(g.eval_str(x))) * 7 + shift));
            });
        }
    }
    std::vector<Value> values;
    for (std::uint64_t i = 0; i < ab.count_up_to(bound); ++i)
        values.emplace_back(Token(static_cast<std::int64_t>(rng() % 3)));
    return BoundedFn::table(ab, bound, Codomain::token, std::move(values));
}

}  // namespace

TEST_CASE("kernel_classes") {
    const auto len = kernel_classes(builtin(builtins::Length{}, "ab", 2), 2);
    CHECK(len == std::vector<std::vector<Str>>{
                     {Str()}, {Str("a"), Str("b")}, {Str("aa"), Str("ab"), Str("ba"), Str("bb")}});
    const auto id = kernel_classes(builtin(builtins::Identity{}, "ab", 1), 1);
    CHECK(id.size() == 3);
    for (const auto& c : id) CHECK(c.size() == 1);
    CHECK(kernel_classes(builtin(builtins::Constant{Value(Token(1))}, "ab", 1), 1).size() == 1);
}

TEST_CASE("quasi_inverse") {
    const auto g = quasi_inverse(builtin(builtins::Length{}, "ab", 4), 4);
    CHECK(g.entries().size() == 5);
    for (int n = 0; n <= 4; ++n) CHECK(g.at(Value(Token(n))) == power(Str("a"), n));
    CHECK_THROWS_AS((void)g.at(Value(Token(9))), MissingEntry);

    const auto id = quasi_inverse(builtin(builtins::Identity{}, "ab", 2), 2);
    for (const Str& x : enumerate_strings(Alphabet("ab"), 2)) CHECK(id.at(Value(x)) == x);

    const auto o = quasi_inverse(builtin(builtins::Ofo{}, "ab", 3), 3);
    CHECK(o.entries() == std::map<Value, Str>{{Value(Str()), Str()},
                                               {Value(Str("a")), Str("a")},
                                               {Value(Str("b")), Str("b")},
                                               {Value(Str("ab")), Str("ab")},
                                               {Value(Str("ba")), Str("ba")}});
}

TEST_CASE("factorize length") {
    const auto fz = factorize(builtin(builtins::Length{}, "ab", 4), 4);
    CHECK(fz.preassociative);
    for (const Str& x : enumerate_strings(Alphabet("ab"), 4))
        CHECK(fz.h.eval_str(x) == power(Str("a"), x.size()));
    CHECK(fz.f.size() == 5);
    for (int n = 0; n <= 4; ++n) CHECK(fz.f.at(power(Str("a"), n)) == Value(Token(n)));
    for (const auto& [name, report] : fz.checks) {
        INFO(name);
        CHECK(report.holds());
    }
    CHECK(find_report(fz.checks, "H_standard").holds());
}

TEST_CASE("factorize identity and a non-preassociative function") {
    const auto id = factorize(builtin(builtins::Identity{}, "ab", 3), 3);
    for (const Str& x : enumerate_strings(Alphabet("ab"), 3)) {
        CHECK(id.h.eval_str(x) == x);
        CHECK(id.f.at(x) == Value(x));
    }

    const auto ga = factorize(builtin(length_of(kGa), "ab", 3), 3);
    CHECK_FALSE(ga.preassociative);
    CHECK(find_report(ga.checks, "H_associative").fails());
    // The construction-level identities survive regardless.
    CHECK(find_report(ga.checks, "F_equals_f_of_H").holds());
    CHECK(find_report(ga.checks, "H_idempotent").holds());
    CHECK(find_report(ga.checks, "f_injective").holds());
}

TEST_CASE("factorization invariants on every fixture") {
    for (const auto& F : token_fixtures(4)) {
        const auto fz = factorize(F, 4);
        for (const char* name : {"F_of_g_is_identity", "F_equals_f_of_H", "F_equals_F_of_H",
                                 "H_idempotent", "f_injective"})
            CHECK(find_report(fz.checks, name).holds());
        // H never lengthens its input.
        std::size_t m = 0;
        for (const Str& x : enumerate_strings(F.alphabet(), 4)) {
            CHECK(fz.h.eval_str(x).size() <= x.size());
            m = std::max(m, fz.h.eval_str(x).size());
        }
        // An m-bounded H forces an m-determined range.
        CHECK_FALSE(check_m_determined_range(F, m, 4).fails());
        // Preassociativity of F matches associativity of H.
        CHECK(check_preassociative(F, 4).fails() == find_report(fz.checks, "H_associative").fails());
        CHECK(find_report(fz.checks, "H_associative").skipped == 0);
    }
}

TEST_CASE("preassociativity of F iff associativity of g∘F on random tables") {
    std::mt19937_64 rng(31337);
    const auto specs = enumerate_partial_specs(Alphabet("ab"), 1);
    int pre = 0;
    for (int i = 0; i < 200; ++i) {
        const auto F = random_token_table(rng, specs, 4);
        const bool preassoc = !check_preassociative(F, 4).fails();
        const auto H = factorize(F, 4).h;
        CHECK(preassoc == !check_associative_full(H, 4).fails());
        pre += preassoc;
    }
    CHECK(pre >= 50);
}

TEST_CASE("injective relabeling preserves preassociativity") {
    for (const auto& F : token_fixtures(4)) {
        if (check_preassociative(F, 4).fails()) continue;
        // Relabel every value through an injective map into symbols.
        const auto G = BoundedFn::tabulate(F.alphabet(), 4, Codomain::token, [&](const Str& x) {
            std::ostringstream os;
            os << "v" << F.eval(x);
            return Value(Token(os.str()));
        });
        CHECK_FALSE(check_preassociative(G, 4).fails());
    }
}

TEST_CASE("preassociative range conditions") {
    const auto len_fa = check_preassoc_range_conditions(builtin(length_of(kFa), "ab", 4), 1, 4);
    CHECK(find_report(len_fa, "range").fails());

    for (const auto& r : check_preassoc_range_conditions(fixtures::first_letter("ab", 4), 1, 4)) {
        INFO(r.name);
        CHECK(r.report.holds());
    }

    // Digit sums reach 3 and 4 only at arity 2, so the range over {0,1,2} is not
    // 1-determined; the remaining conditions hold.
    const auto sum = check_preassoc_range_conditions(fixtures::digit_sum(3), 1, 3);
    const auto& range = find_report(sum, "range");
    REQUIRE(range.fails());
    CHECK(range.witness->at("x") == Str("12"));
    CHECK(find_report(sum, "a").holds());
    CHECK(find_report(sum, "b").holds());
    CHECK(find_report(sum, "c").holds());

    CHECK_THROWS_AS((void)check_preassoc_range_conditions(fixtures::first_letter("ab", 4), 3, 4),
                    InvalidArgument);
}

TEST_CASE("recursive_eval") {
    const auto parts = fixtures::digit_sum(2);
    const auto g = quasi_inverse(parts, 2);
    CHECK(recursive_eval(parts, g, Str("111")) == Value(Token(3)));
    CHECK(recursive_eval(parts, g, Str("012")) == Value(Token(3)));
    CHECK(recursive_eval(parts, g, Str("12")) == Value(Token(3)));
    CHECK(recursive_eval(parts, g, Str()) == Value(Str()));
    // g(4) = "22" leaves no room for the next digit.
    CHECK_THROWS_AS((void)recursive_eval(parts, g, Str("222")), Unevaluable);

    // A preassociative function with a 1-determined range is recovered from its
    // parts of arity <= 2.
    const auto first = fixtures::first_letter_token("ab", 5);
    const auto low = first.materialize(2);
    const auto gf = quasi_inverse(low, 2);
    for (const Str& x : enumerate_strings(Alphabet("ab"), 5))
        CHECK(recursive_eval(low, gf, x) == first.eval(x));
}

TEST_CASE("m-determined range factorizations") {
    for (const auto& r : check_range_factorizations(fixtures::first_letter("ab", 4), 1, 4)) {
        INFO(r.name);
        CHECK(r.report.holds());
    }
    const auto len = check_range_factorizations(builtin(builtins::Length{}, "ab", 4), 1, 4);
    REQUIRE(len.size() == 1);
    CHECK(len[0].report.fails());

    const auto zero = builtin(builtins::Constant{Value(Token(0))}, "ab", 3);
    const auto reports = check_range_factorizations(zero, 0, 3);
    CHECK(reports.size() == 4);
    for (const auto& r : reports) CHECK(r.report.holds());
    for (const Str& x : enumerate_strings(Alphabet("ab"), 3))
        CHECK(factorize(zero, 3).h.eval_str(x).empty());
}
