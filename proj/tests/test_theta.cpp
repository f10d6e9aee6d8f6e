#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "strassoc/checkers.hpp"
#include "strassoc/error.hpp"
#include "strassoc/theta.hpp"

using namespace strassoc;

namespace {

const Alphabet ab("ab");

std::vector<Str> strs(std::initializer_list<const char*> xs) {
    std::vector<Str> out;
    for (const char* x : xs) out.emplace_back(x);
    return out;
}

// Naive oracle: x and y are connected by block swaps within X^{<=L}, found by
// repeated relaxation over the whole domain.
bool connected(const Str& x, const Str& y, const ThetaSpec& spec, std::size_t bound) {
    std::set<Str> reach{x};
    for (bool grew = true; grew;) {
        grew = false;
        for (const Str& s : enumerate_strings(ab, bound)) {
            if (reach.count(s)) continue;
            for (const Str& t : reach) {
                if (t.size() != s.size()) continue;
                bool one_swap = false;
                for (std::size_t p = 0; p + spec.block0().size() <= s.size(); ++p) {
                    for (const auto& [from, to] : {std::pair{spec.block0(), spec.block1()},
                                                   std::pair{spec.block1(), spec.block0()}}) {
                        if (t.substr(p, from.size()) == from &&
                            t.substr(0, p) + to + t.substr(p + from.size()) == s)
                            one_swap = true;
                    }
                }
                if (one_swap) {
                    reach.insert(s);
                    grew = true;
                    break;
                }
            }
        }
    }
    return reach.count(y) > 0;
}

}  // namespace

TEST_CASE("ThetaSpec validation") {
    CHECK_THROWS_AS(ThetaSpec(Str(), Str("b"), 0), InvalidArgument);
    CHECK_THROWS_AS(ThetaSpec(Str("a"), Str(), 0), InvalidArgument);
    CHECK_THROWS_AS(ThetaSpec(Str("a"), Str("a"), 1), InvalidArgument);
    const ThetaSpec s(Str("ab"), Str("b"), 2);
    CHECK(s.block0() == Str("abababab"));
    CHECK(s.block1() == Str("bbbb"));
}

TEST_CASE("theta_class") {
    const ThetaSpec m0(Str("a"), Str("b"), 0), m1(Str("a"), Str("b"), 1);
    const auto c = theta_class(ab, Str("ab"), m0, 4);
    CHECK(c.members == strs({"aa", "ab", "ba", "bb"}));
    CHECK_FALSE(c.truncated);
    CHECK(theta_class(ab, Str("aa"), m1, 4).members == strs({"aa", "bb"}));
    CHECK(theta_class(ab, Str(), m1, 4).members == strs({""}));
    CHECK(theta_class(ab, Str("aab"), m1, 4).members == strs({"aab", "baa", "bbb"}));
    CHECK_THROWS_AS((void)theta_class(ab, Str("aaaaa"), m1, 4), OutOfDomain);
}

TEST_CASE("theta_class with unequal block lengths is truncated") {
    const ThetaSpec s(Str("a"), Str("bb"), 0);
    const auto c = theta_class(ab, Str("aa"), s, 3);
    CHECK(c.members == strs({"aa", "abb", "bba"}));
    CHECK(c.truncated);
    CHECK_FALSE(theta_class(ab, Str("a"), s, 3).truncated);
    CHECK_FALSE(theta_class(ab, Str(), s, 3).truncated);
}

TEST_CASE("canonical_rep") {
    const ThetaSpec m0(Str("a"), Str("b"), 0), m1(Str("a"), Str("b"), 1);
    CHECK(canonical_rep(ab, Str("bb"), m1, 4) == Str("aa"));
    CHECK(canonical_rep(ab, Str("ab"), m0, 4) == Str("aa"));
    CHECK(canonical_rep(ab, Str("b"), m1, 4) == Str("b"));
    CHECK(canonical_rep(ab, Str("babb"), m1, 4) == Str("aaba"));
}

TEST_CASE("theta classes agree with a naive connectivity oracle") {
    for (unsigned m : {0u, 1u}) {
        const ThetaSpec spec(Str("a"), Str("b"), m);
        const auto f = theta_function(ab, spec, 4).function;
        const auto domain = enumerate_strings(ab, 4);
        for (const Str& x : domain)
            for (const Str& y : domain)
                if (x.size() == y.size() && !(y < x))
                    CHECK((f.eval(x) == f.eval(y)) == connected(x, y, spec, 4));
    }
}

TEST_CASE("theta functions are associative, idempotent and class-constant") {
    for (unsigned m : {0u, 1u, 2u}) {
        for (const auto& [x0, x1] : {std::pair{"a", "b"}, std::pair{"ab", "ba"}}) {
            const ThetaSpec spec(Str(x0), Str(x1), m);
            const auto t = theta_function(ab, spec, 6);
            CHECK(t.truncated_classes == 0);
            CHECK(check_associative_full(t.function, 6).holds());
            CHECK(check_idempotent(t.function, 6).holds());
            for (const Str& x : enumerate_strings(ab, 6)) {
                const Str r = t.function.eval_str(x);
                CHECK(r == canonical_rep(ab, x, spec, 6));
                for (const Str& y : theta_class(ab, x, spec, 6).members)
                    CHECK(t.function.eval_str(y) == r);
            }
        }
    }
}

TEST_CASE("preceq") {
    const ThetaSpec m1(Str("a"), Str("b"), 1);
    const auto f1 = theta_function(ab, m1, 4).function;
    const auto f2 = theta_function(ab, m1.with_m(2), 4).function;
    const auto r = preceq(f1, f2, 4);
    CHECK(r.relation == KernelOrder::f_below_g);
    REQUIRE(r.f_merges);
    CHECK(*r.f_merges == StrPair{Str("aa"), Str("bb")});
    CHECK_FALSE(r.g_merges);
    CHECK(preceq(f2, f1, 4).relation == KernelOrder::g_below_f);

    CHECK(preceq(f1, f1, 4).relation == KernelOrder::equivalent);

    const auto len = fixtures::builtin(builtins::Length{}, "ab", 4);
    const auto id = fixtures::builtin(builtins::Identity{}, "ab", 4);
    const auto li = preceq(len, id, 4);
    CHECK(li.relation == KernelOrder::f_below_g);
    CHECK(*li.f_merges == StrPair{Str("a"), Str("b")});

    const auto first = fixtures::first_letter("ab", 4);
    const auto last = fixtures::last_letter("ab", 4);
    const auto fl = preceq(first, last, 4);
    CHECK(fl.relation == KernelOrder::incomparable);
    CHECK(fl.f_merges);
    CHECK(fl.g_merges);

    CHECK_THROWS_AS((void)preceq(f1, fixtures::builtin(builtins::Identity{}, "abc", 4), 4),
                    InvalidArgument);
    CHECK_THROWS_AS((void)preceq(f1, f2, 5), InvalidArgument);
}

TEST_CASE("theta chain is strict") {
    for (unsigned m = 0; m < 3; ++m) {
        const ThetaSpec spec(Str("a"), Str("b"), m);
        const std::size_t bound = std::size_t{1} << (m + 1);
        const auto lo = theta_function(ab, spec, bound).function;
        const auto hi = theta_function(ab, spec.with_m(m + 1), bound).function;
        const auto r = preceq(lo, hi, bound);
        CHECK(r.relation == KernelOrder::f_below_g);
        const Str block = power(Str("a"), std::size_t{1} << m);
        CHECK(*r.f_merges == StrPair{block, power(Str("b"), block.size())});
    }
}
