#include "strassoc/extension.hpp"

#include <string>

#include "strassoc/checkers.hpp"
#include "strassoc/parallel.hpp"

namespace strassoc {

namespace {

std::string describe(const CheckReport& r) {
    if (!r.witness) return to_string(r.verdict);
    std::string out = "fails at";
    for (const auto& [name, value] : r.witness->bindings) out += " " + name + "=\"" + value.text() + "\"";
    return out;
}

void require_assoc_bounded(const BoundedFn& f, const char* label, std::size_t m, std::size_t bound,
                           const Exec& exec) {
    const CheckReport assoc = check_associative_full(f, bound, exec);
    if (assoc.fails())
        throw PreconditionViolated(std::string(label) + " is not associative: " + describe(assoc));
    const CheckReport bounded = check_m_bounded(f, m, bound, exec);
    if (bounded.fails())
        throw PreconditionViolated(std::string(label) + " is not " + std::to_string(m) +
                                   "-bounded: " + describe(bounded));
}

}  // namespace

PartialSpec::PartialSpec(Alphabet alphabet, std::size_t m, std::vector<Str> outputs)
    : alphabet_(std::move(alphabet)), m_(m), outputs_(std::move(outputs)) {
    const std::uint64_t expected = alphabet_.count_up_to(m_ + 1);
    if (outputs_.size() != expected)
        throw InvalidArgument("partial spec has " + std::to_string(outputs_.size()) +
                              " outputs, X^{<=" + std::to_string(m_ + 1) + "} has " +
                              std::to_string(expected));
    for (std::size_t r = 0; r < outputs_.size(); ++r) {
        alphabet_.require(outputs_[r]);
        if (outputs_[r].size() > m_)
            throw InvalidArgument("F(\"" + alphabet_.unrank(r).text() + "\") = \"" +
                                  outputs_[r].text() + "\" is longer than m = " + std::to_string(m_));
    }
}

PartialSpec PartialSpec::of(const BoundedFn& f, std::size_t m) {
    if (!f.string_valued()) throw CodomainMismatch("partial specs are string-valued");
    std::vector<Str> outputs;
    for (const Str& x : enumerate_strings(f.alphabet(), m + 1)) outputs.push_back(f.eval_str(x));
    return PartialSpec(f.alphabet(), m, std::move(outputs));
}

const Str& PartialSpec::at(const Str& x) const {
    if (x.size() > m_ + 1)
        throw OutOfDomain("partial spec is defined up to length " + std::to_string(m_ + 1) +
                          ", got \"" + x.text() + "\"");
    return outputs_[alphabet_.rank(x)];
}

BoundedFn PartialSpec::as_function() const {
    std::vector<Value> values(outputs_.begin(), outputs_.end());
    return BoundedFn::table(alphabet_, m_ + 1, Codomain::string, std::move(values));
}

ConditionReports verify_conditions(const PartialSpec& spec, const Exec& exec) {
    const Alphabet& alphabet = spec.alphabet();
    const std::size_t m = spec.m();
    auto F = [&](const Str& x) -> const Str& { return spec.at(x); };
    auto mismatch = [](std::vector<std::pair<std::string, Str>> bindings, const Str& lhs,
                       const Str& rhs) { return Witness{std::move(bindings), Value(lhs), Value(rhs)}; };

    ConditionReports out;
    out.a = make_report(scan_first_failure(alphabet.count_up_to(m + 1), exec, [&](std::uint64_t r) {
        ItemResult item;
        const Str x = alphabet.unrank(r);
        const Str& fx = F(x);
        ++item.checked;
        if (F(fx) != fx) item.witness = mismatch({{"x", x}}, F(fx), fx);
        return item;
    }));

    const Str& fe = F(Str());
    out.b = make_report(scan_first_failure(alphabet.size(), exec, [&](std::uint64_t i) {
        ItemResult item;
        const Str x = alphabet.unrank(i + 1);
        ++item.checked;
        const Str& lhs = F(x);
        const Str& rhs = F(x + fe);
        if (lhs != rhs) item.witness = mismatch({{"x", x}}, lhs, rhs);
        return item;
    }));

    // Outer string xyz with x, z letters, so 2 <= |xyz| <= m+2.
    const std::uint64_t first = alphabet.offset_of_length(2);
    out.c = make_report(scan_first_failure(alphabet.count_up_to(m + 2) - first, exec,
                                           [&](std::uint64_t i) {
        ItemResult item;
        const Str w = alphabet.unrank(first + i);
        const Str x = w.substr(0, 1), y = w.substr(1, w.size() - 2), z = w.substr(w.size() - 1);
        ++item.checked;
        const Str& lhs = F(F(x + y) + z);
        const Str& rhs = F(x + F(y + z));
        if (lhs != rhs) item.witness = mismatch({{"x", x}, {"y", y}, {"z", z}}, lhs, rhs);
        return item;
    }));

    out.d = make_report(scan_first_failure(alphabet.count_up_to(m + 1) - 1, exec,
                                           [&](std::uint64_t i) {
        ItemResult item;
        const Str w = alphabet.unrank(i + 1);
        const Str y = w.substr(0, w.size() - 1), z = w.substr(w.size() - 1);
        ++item.checked;
        const Str& lhs = F(w);
        const Str& rhs = F(F(y) + z);
        if (lhs != rhs) item.witness = mismatch({{"y", y}, {"z", z}}, lhs, rhs);
        return item;
    }));
    return out;
}

BoundedFn extend_by_recursion(const PartialSpec& spec, std::size_t bound, const Exec& exec) {
    const Alphabet& alphabet = spec.alphabet();
    const std::size_t direct = std::min(bound, spec.m() + 1);
    std::vector<Value> values(alphabet.count_up_to(bound), Value(Str()));
    for (std::uint64_t r = 0; r < alphabet.count_up_to(direct); ++r) values[r] = spec.outputs()[r];

    // Level n depends only on level n-1 and the parts, so each level is parallel.
    const std::uint64_t k = alphabet.size();
    for (std::size_t n = direct + 1; n <= bound; ++n) {
        const std::uint64_t begin = alphabet.offset_of_length(n);
        const std::uint64_t count = alphabet.offset_of_length(n + 1) - begin;
        parallel_for(count, exec.jobs, [&](std::uint64_t i) {
            // The prefix of a string at offset i in level n sits at offset i / k in level n-1.
            const std::uint64_t r = begin + i;
            const Str& prefix_value = values[alphabet.offset_of_length(n - 1) + i / k].str();
            Str arg = prefix_value;
            arg += alphabet.letters()[i % k];
            // m-bounded parts keep the argument inside X^{<=m+1}.
            if (arg.size() > spec.m() + 1)
                throw Error("recursion left the supplied arities at \"" + alphabet.unrank(r).text() +
                            "\"");
            values[r] = spec.at(arg);
        });
    }
    return BoundedFn::table(alphabet, bound, Codomain::string, std::move(values));
}

BoundedFn extend(const PartialSpec& spec, std::size_t bound, const Exec& exec) {
    if (bound < spec.m() + 2)
        throw InvalidArgument("extension bound " + std::to_string(bound) + " is below m+2 = " +
                              std::to_string(spec.m() + 2));
    ConditionReports reports = verify_conditions(spec, exec);
    if (!reports.all_hold()) {
        std::string what = "conditions fail:";
        if (reports.a.fails()) what += " (a) " + describe(reports.a);
        if (reports.b.fails()) what += " (b) " + describe(reports.b);
        if (reports.c.fails()) what += " (c) " + describe(reports.c);
        if (reports.d.fails()) what += " (d) " + describe(reports.d);
        throw ConditionsFailed(what, std::move(reports));
    }
    return extend_by_recursion(spec, bound, exec);
}

CheckReport check_determination(const BoundedFn& f, const BoundedFn& g, std::size_t m,
                                std::size_t bound, const Exec& exec) {
    if (!(f.alphabet() == g.alphabet()))
        throw AlphabetMismatch("functions are over different alphabets");
    require_assoc_bounded(f, "F", m, bound, exec);
    require_assoc_bounded(g, "G", m, bound, exec);
    const Alphabet& alphabet = f.alphabet();
    const std::uint64_t low = alphabet.count_up_to(std::min(bound, m + 1));
    for (std::uint64_t r = 0; r < low; ++r) {
        const Str x = alphabet.unrank(r);
        if (f.eval(x) != g.eval(x)) {
            CheckReport report;
            report.verdict = Verdict::vacuous;
            report.note = "parts differ at \"" + x.text() + "\"";
            return report;
        }
    }
    return make_report(scan_first_failure(alphabet.count_up_to(bound), exec, [&](std::uint64_t r) {
        ItemResult item;
        const Str x = alphabet.unrank(r);
        ++item.checked;
        Value fx = f.eval(x), gx = g.eval(x);
        if (fx != gx) item.witness = Witness{{{"x", x}}, std::move(fx), std::move(gx)};
        return item;
    }));
}

BoundedFn identity_patch(const BoundedFn& f, std::size_t k, std::size_t m, std::size_t bound,
                         const Exec& exec) {
    if (k > m)
        throw InvalidArgument("patch arity k = " + std::to_string(k) + " exceeds m = " +
                              std::to_string(m));
    require_assoc_bounded(f, "F", m, bound, exec);
    return BoundedFn::tabulate(f.alphabet(), bound, Codomain::string, [&](const Str& x) {
        return x.size() <= k ? Value(x) : f.eval(x);
    });
}

std::vector<PartialSpec> enumerate_partial_specs(const Alphabet& alphabet, std::size_t m) {
    const std::vector<Str> choices = all_strings(alphabet, m);
    const std::uint64_t positions = alphabet.count_up_to(m + 1);
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 24;
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < positions; ++i) {
        if (total > kLimit / choices.size())
            throw InvalidArgument("more than 2^24 partial specs for m = " + std::to_string(m));
        total *= choices.size();
    }
    std::vector<PartialSpec> out;
    out.reserve(total);
    std::vector<std::size_t> digits(positions, 0);
    for (std::uint64_t n = 0; n < total; ++n) {
        std::vector<Str> outputs;
        outputs.reserve(positions);
        for (auto d : digits) outputs.push_back(choices[d]);
        out.emplace_back(alphabet, m, std::move(outputs));
        for (std::size_t p = positions; p-- > 0;) {
            if (++digits[p] < choices.size()) break;
            digits[p] = 0;
        }
    }
    return out;
}

}  // namespace strassoc
