#include "strassoc/length_based.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "strassoc/error.hpp"
#include "strassoc/parallel.hpp"

namespace strassoc {

namespace {

Str num(std::uint64_t n) { return Str(std::to_string(n)); }

Value tok(std::uint64_t n) { return Value(Token(static_cast<std::int64_t>(n))); }

CheckReport fail_report(std::uint64_t checked, Witness w, std::string note) {
    CheckReport r;
    r.verdict = Verdict::fails;
    r.checked = checked;
    r.witness = std::move(w);
    r.note = std::move(note);
    return r;
}

AlphaClassification reject(AlphaClassification c, AlphaViolation v, std::string reason) {
    c.status = AlphaStatus::rejected;
    c.violation = v;
    c.reason = std::move(reason);
    return c;
}

std::string show(std::uint64_t n, std::uint64_t v) {
    return "alpha(" + std::to_string(n) + ") = " + std::to_string(v);
}

// Instances grouped by string rank; `probe` compares x against the first string
// of its length.
CheckReport per_length(const BoundedFn& f, std::size_t bound, const Exec& exec,
                       bool (*same)(const Value&, const Value&)) {
    if (bound > f.bound()) throw OutOfDomain("check bound exceeds the function's bound");
    const Alphabet& alphabet = f.alphabet();
    return make_report(scan_first_failure(alphabet.count_up_to(bound), exec, [&](std::uint64_t r) {
        ItemResult item;
        const Str x = alphabet.unrank(r);
        const Str y = alphabet.unrank(alphabet.offset_of_length(x.size()));
        ++item.checked;
        Value fx = f.eval(x), fy = f.eval(y);
        if (!same(fx, fy)) item.witness = Witness{{{"x", x}, {"y", y}}, std::move(fx), std::move(fy)};
        return item;
    }));
}

}  // namespace

const char* to_string(AlphaStatus s) noexcept {
    switch (s) {
        case AlphaStatus::accepted: return "accepted";
        case AlphaStatus::rejected: return "rejected";
        case AlphaStatus::insufficient_horizon: return "insufficient_horizon";
    }
    return "?";
}

CheckReport check_alpha_equations(const AlphaTable& t) {
    const auto& a = t.values;
    const std::uint64_t N = t.horizon();
    for (std::uint64_t n = 0; n < a.size(); ++n)
        if (a[n] > N)
            throw Unevaluable(show(n, a[n]) + " exceeds the horizon " + std::to_string(N));

    std::uint64_t checked = 0;
    for (std::uint64_t n = 0; n <= N; ++n) {
        ++checked;
        if (a[a[n]] != a[n])
            return fail_report(checked, Witness{{{"n", num(n)}}, tok(a[a[n]]), tok(a[n])},
                               "alpha(alpha(n)) != alpha(n)");
    }
    for (std::uint64_t n = 0; n <= N; ++n) {
        for (std::uint64_t n2 = n + 1; n2 <= N; ++n2) {
            if (a[n] != a[n2]) continue;
            for (std::uint64_t k = 1; n2 + k <= N; ++k) {
                ++checked;
                if (a[n + k] != a[n2 + k])
                    return fail_report(checked,
                                       Witness{{{"n", num(n)}, {"n2", num(n2)}, {"k", num(k)}},
                                               tok(a[n + k]), tok(a[n2 + k])},
                                       "alpha(n) = alpha(n2) but alpha(n+k) != alpha(n2+k)");
            }
        }
    }
    CheckReport r;
    r.verdict = Verdict::holds;
    r.checked = checked;
    return r;
}

AlphaClassification classify_alpha(const AlphaTable& t) {
    const auto& a = t.values;
    AlphaClassification c;
    if (a.empty()) return reject(c, AlphaViolation::window_shape, "empty table");
    const std::uint64_t N = t.horizon();

    std::optional<std::uint64_t> n1, ell;
    for (std::uint64_t n = 0; n <= N; ++n) {
        if (a[n] == n) continue;
        const std::uint64_t lo = std::min(n, a[n]);
        const std::uint64_t gap = a[n] > n ? a[n] - n : n - a[n];
        n1 = n1 ? std::min(*n1, lo) : lo;
        ell = ell ? std::min(*ell, gap) : gap;
    }
    if (!n1) {
        c.status = AlphaStatus::accepted;
        c.alpha = AlphaFn();
        c.standard = true;
        return c;
    }
    c.n1 = *n1;
    c.ell = *ell;
    if (N < c.n1 + 2 * c.ell) {
        c.status = AlphaStatus::insufficient_horizon;
        c.reason = "horizon " + std::to_string(N) + " is below n1 + 2*ell = " +
                   std::to_string(c.n1 + 2 * c.ell);
        return c;
    }
    for (std::uint64_t n = 0; n < c.n1; ++n)
        if (a[n] != n)
            return reject(c, AlphaViolation::not_fixed_below, show(n, a[n]) + " below n1");
    for (std::uint64_t n = c.n1; n < c.n1 + c.ell; ++n) {
        if (a[n] < n) return reject(c, AlphaViolation::below_argument, show(n, a[n]) + " < n");
        if ((a[n] - n) % c.ell != 0)
            return reject(c, AlphaViolation::wrong_residue,
                          show(n, a[n]) + " is not congruent to n modulo " + std::to_string(c.ell));
    }
    for (std::uint64_t n = c.n1; n + c.ell <= N; ++n)
        if (a[n] != a[n + c.ell])
            return reject(c, AlphaViolation::not_periodic,
                          show(n, a[n]) + " but " + show(n + c.ell, a[n + c.ell]));

    c.status = AlphaStatus::accepted;
    c.alpha = AlphaFn(AlphaFn::Structured{
        c.n1, c.ell,
        std::vector<std::uint64_t>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(c.n1 + c.ell))});
    c.standard = c.n1 > 0;
    return c;
}

AlphaFn synthesize_alpha(std::uint64_t n1, std::uint64_t ell, std::vector<std::uint64_t> window) {
    return AlphaFn(AlphaFn::Structured{n1, ell, std::move(window)});
}

bool periodic_on_horizon(const AlphaTable& t, const Periodicity& p) {
    for (std::uint64_t n = p.threshold; n + p.period <= t.horizon(); ++n)
        if (t(n) != t(n + p.period)) return false;
    return true;
}

PeriodResult minimal_period(const AlphaTable& t, const std::vector<Periodicity>& candidates) {
    if (candidates.empty()) throw InvalidArgument("no periodicity witnesses supplied");
    Periodicity combined{candidates.front().threshold, 0};
    for (const auto& p : candidates) {
        if (p.period == 0) throw InvalidArgument("period must be positive");
        if (!periodic_on_horizon(t, p))
            throw InvalidArgument("witness (" + std::to_string(p.threshold) + ", " +
                                  std::to_string(p.period) + ") fails on the horizon");
        combined.threshold = std::min(combined.threshold, p.threshold);
        combined.period = std::gcd(combined.period, p.period);
    }
    return PeriodResult{combined, periodic_on_horizon(t, combined)};
}

BoundedFn compose_length_based(const AlphaFn& alpha, const PsiTable& psi, const Alphabet& alphabet,
                               std::size_t bound) {
    return BoundedFn::builtin(builtins::LengthBased{alpha, psi}, alphabet, bound);
}

LengthBasedDecomposition decompose_length_based(const BoundedFn& f, std::size_t bound,
                                                const Exec& exec) {
    LengthBasedDecomposition out;
    if (!f.string_valued()) {
        out.reason = "token-valued functions have no length map";
        return out;
    }
    const CheckReport lb = check_length_based(f, bound, exec);
    if (lb.fails()) {
        std::ostringstream os;
        os << "not length-based: F(\"" << lb.witness->at("x").text() << "\") = " << lb.witness->lhs
           << " but F(\"" << lb.witness->at("y").text() << "\") = " << *lb.witness->rhs;
        out.reason = os.str();
        return out;
    }
    const Alphabet& alphabet = f.alphabet();
    AlphaTable table;
    std::map<std::uint64_t, Str> psi;
    for (std::size_t k = 0; k <= bound; ++k) {
        const Str v = f.eval_str(alphabet.unrank(alphabet.offset_of_length(k)));
        table.values.push_back(v.size());
        const auto [it, inserted] = psi.emplace(v.size(), v);
        if (!inserted && it->second != v) {
            out.reason = "psi(" + std::to_string(v.size()) + ") would be both \"" + it->second.text() +
                         "\" and \"" + v.text() + "\"";
            return out;
        }
    }
    out.classification = classify_alpha(table);
    if (out.classification.status != AlphaStatus::accepted) {
        out.reason = std::string("alpha ") + to_string(out.classification.status) + ": " +
                     out.classification.reason;
        return out;
    }
    out.accepted = true;
    out.alpha = *out.classification.alpha;
    out.psi = PsiTable(std::move(psi));
    return out;
}

CheckReport check_weakly_length_based(const BoundedFn& f, std::size_t bound, const Exec& exec) {
    if (!f.string_valued())
        throw CodomainMismatch("weak length-basedness is defined only for string-valued functions");
    return per_length(f, bound, exec,
                      [](const Value& a, const Value& b) { return a.str().size() == b.str().size(); });
}

CheckReport check_length_based(const BoundedFn& f, std::size_t bound, const Exec& exec) {
    return per_length(f, bound, exec, [](const Value& a, const Value& b) { return a == b; });
}

BoundedFn compose_preassoc_length_based(const std::vector<Str>& mu, const std::map<Str, Value>& f,
                                        const Alphabet& alphabet, std::size_t bound) {
    if (mu.size() <= bound)
        throw MissingEntry("mu is defined up to " + std::to_string(mu.size()) +
                           " - 1 but the bound is " + std::to_string(bound));
    AlphaTable table;
    for (const Str& s : mu) {
        alphabet.require(s);
        table.values.push_back(s.size());
    }
    const AlphaClassification c = classify_alpha(table);
    if (c.status != AlphaStatus::accepted)
        throw InvalidArgument(std::string("alpha(n) = |mu(n)| is ") + to_string(c.status) + ": " +
                              c.reason);
    for (std::uint64_t n = 0; n < mu.size(); ++n) {
        const std::uint64_t a = table.values[n];
        if (a < mu.size() && mu[a] != mu[n])
            throw InvalidArgument("mu(" + std::to_string(a) + ") = \"" + mu[a].text() +
                                  "\" differs from mu(" + std::to_string(n) + ") = \"" +
                                  mu[n].text() + "\" although alpha(" + std::to_string(n) +
                                  ") = " + std::to_string(a));
    }

    std::map<Value, Str> seen;
    Codomain codomain = Codomain::string;
    for (std::size_t n = 0; n <= bound; ++n) {
        const auto it = f.find(mu[n]);
        if (it == f.end()) throw MissingEntry("f is not defined at \"" + mu[n].text() + "\"");
        if (it->second.is_token()) codomain = Codomain::token;
        const auto [prev, inserted] = seen.emplace(it->second, mu[n]);
        if (!inserted && prev->second != mu[n]) {
            std::ostringstream os;
            os << "f is not injective: f(\"" << prev->second.text() << "\") = f(\"" << mu[n].text()
               << "\") = " << it->second;
            throw InvalidArgument(os.str());
        }
    }
    return BoundedFn::tabulate(alphabet, bound, codomain,
                               [&](const Str& x) { return f.at(mu[x.size()]); });
}

}  // namespace strassoc
