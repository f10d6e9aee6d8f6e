#include "strassoc/theta.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "strassoc/checkers.hpp"
#include "strassoc/error.hpp"

namespace strassoc {

ThetaSpec::ThetaSpec(Str x0, Str x1, unsigned m) : x0_(std::move(x0)), x1_(std::move(x1)), m_(m) {
    if (x0_.empty() || x1_.empty()) throw InvalidArgument("x0 and x1 must be nonempty");
    if (x0_ == x1_) throw InvalidArgument("x0 and x1 must differ");
    if (m_ >= 32) throw InvalidArgument("m = " + std::to_string(m_) + " is too large");
    block0_ = power(x0_, std::size_t{1} << m_);
    block1_ = power(x1_, std::size_t{1} << m_);
}

namespace {

// Every string obtained from x by replacing one occurrence of `from` with `to`.
template <typename Visit>
void rewrites(const Str& x, const Str& from, const Str& to, Visit&& visit) {
    const std::string& s = x.text();
    for (std::size_t pos = s.find(from.text()); pos != std::string::npos;
         pos = s.find(from.text(), pos + 1)) {
        std::string next = s;
        next.replace(pos, from.size(), to.text());
        visit(Str(std::move(next)));
    }
}

}  // namespace

ThetaClass theta_class(const Alphabet& alphabet, const Str& x, const ThetaSpec& spec,
                       std::size_t bound) {
    alphabet.require(x);
    alphabet.require(spec.x0());
    alphabet.require(spec.x1());
    if (x.size() > bound)
        throw OutOfDomain("|x| = " + std::to_string(x.size()) + " exceeds the bound " +
                          std::to_string(bound));

    ThetaClass out;
    std::set<Str> seen{x};
    std::deque<Str> queue{x};
    auto visit = [&](Str y) {
        if (y.size() > bound) {
            out.truncated = true;
            return;
        }
        if (seen.insert(y).second) queue.push_back(std::move(y));
    };
    while (!queue.empty()) {
        const Str cur = std::move(queue.front());
        queue.pop_front();
        rewrites(cur, spec.block0(), spec.block1(), visit);
        rewrites(cur, spec.block1(), spec.block0(), visit);
    }
    out.members.assign(seen.begin(), seen.end());
    std::sort(out.members.begin(), out.members.end(),
              [&](const Str& a, const Str& b) { return alphabet.less(a, b); });
    return out;
}

Str canonical_rep(const Alphabet& alphabet, const Str& x, const ThetaSpec& spec,
                  std::size_t bound) {
    return theta_class(alphabet, x, spec, bound).members.front();
}

ThetaFunction theta_function(const Alphabet& alphabet, const ThetaSpec& spec, std::size_t bound) {
    const std::uint64_t n = alphabet.count_up_to(bound);
    std::vector<std::optional<Value>> rep(n);
    std::uint64_t classes = 0, truncated = 0;
    for (std::uint64_t r = 0; r < n; ++r) {
        if (rep[r]) continue;
        const ThetaClass c = theta_class(alphabet, alphabet.unrank(r), spec, bound);
        ++classes;
        truncated += c.truncated;
        const Value v(c.members.front());
        for (const Str& s : c.members) rep[alphabet.rank(s)] = v;
    }
    std::vector<Value> values;
    values.reserve(n);
    for (auto& v : rep) values.push_back(std::move(*v));
    return {BoundedFn::table(alphabet, bound, Codomain::string, std::move(values)), classes,
            truncated};
}

const char* to_string(KernelOrder o) noexcept {
    switch (o) {
        case KernelOrder::f_below_g: return "f_below_g";
        case KernelOrder::g_below_f: return "g_below_f";
        case KernelOrder::equivalent: return "equivalent";
        case KernelOrder::incomparable: return "incomparable";
    }
    return "?";
}

namespace {

// First pair merged by `a` but split by `b`.
std::optional<StrPair> first_split(const Kernel& a, const Kernel& b, const Alphabet& alphabet) {
    for (const auto& members : a.members) {
        const std::uint32_t head = b.value_id[members.front()];
        for (std::uint64_t r : members)
            if (b.value_id[r] != head) return StrPair{alphabet.unrank(members.front()), alphabet.unrank(r)};
    }
    return std::nullopt;
}

}  // namespace

KernelComparison preceq(const BoundedFn& f, const BoundedFn& g, std::size_t bound) {
    if (!(f.alphabet() == g.alphabet()))
        throw InvalidArgument("the functions are over different alphabets");
    if (bound > f.bound() || bound > g.bound())
        throw InvalidArgument("bound " + std::to_string(bound) + " exceeds a function's domain");
    const Kernel kf = compute_kernel(f, bound);
    const Kernel kg = compute_kernel(g, bound);

    KernelComparison out;
    out.f_merges = first_split(kf, kg, f.alphabet());
    out.g_merges = first_split(kg, kf, f.alphabet());
    if (out.f_merges && out.g_merges)
        out.relation = KernelOrder::incomparable;
    else if (out.f_merges)
        out.relation = KernelOrder::f_below_g;
    else if (out.g_merges)
        out.relation = KernelOrder::g_below_f;
    else
        out.relation = KernelOrder::equivalent;
    return out;
}

}  // namespace strassoc
