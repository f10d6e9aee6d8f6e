#include "strassoc/factorization.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <optional>
#include <stdexcept>

#include "strassoc/checkers.hpp"
#include "strassoc/error.hpp"
#include "strassoc/parallel.hpp"

namespace strassoc {

namespace {

// One instance per string of X^{<=L}; `probe` returns a witness on violation.
CheckReport pointwise(const Alphabet& alphabet, std::size_t bound, const Exec& exec,
                      const std::function<std::optional<Witness>(const Str&)>& probe) {
    return make_report(scan_first_failure(alphabet.count_up_to(bound), exec, [&](std::uint64_t r) {
        ItemResult item;
        ++item.checked;
        item.witness = probe(alphabet.unrank(r));
        return item;
    }));
}

std::optional<Witness> unequal(std::vector<std::pair<std::string, Str>> bindings, Value lhs,
                               Value rhs) {
    if (lhs == rhs) return std::nullopt;
    return Witness{std::move(bindings), std::move(lhs), std::move(rhs)};
}

QuasiInverse from_kernel(const Kernel& kernel, const Alphabet& alphabet) {
    std::map<Value, Str> entries;
    for (std::size_t c = 0; c < kernel.members.size(); ++c)
        entries.emplace(kernel.class_value[c], alphabet.unrank(kernel.members[c].front()));
    return QuasiInverse(std::move(entries));
}

BoundedFn compose(const QuasiInverse& g, const BoundedFn& f, std::size_t bound) {
    return BoundedFn::tabulate(f.alphabet(), bound, Codomain::string,
                               [&](const Str& x) { return Value(g.at(f.eval(x))); });
}

}  // namespace

const CheckReport& find_report(const std::vector<NamedReport>& reports, const std::string& name) {
    for (const auto& r : reports)
        if (r.name == name) return r.report;
    throw std::out_of_range("no report named " + name);
}

const Str& QuasiInverse::at(const Value& y) const {
    const auto it = entries_.find(y);
    if (it == entries_.end()) {
        std::ostringstream os;
        os << "quasi-inverse has no entry for " << y;
        throw MissingEntry(os.str());
    }
    return it->second;
}

std::vector<std::vector<Str>> kernel_classes(const BoundedFn& f, std::size_t bound, const Exec& exec) {
    const Kernel kernel = compute_kernel(f, bound, exec);
    std::vector<std::vector<Str>> out;
    out.reserve(kernel.members.size());
    for (const auto& cls : kernel.members) {
        auto& strings = out.emplace_back();
        for (auto r : cls) strings.push_back(f.alphabet().unrank(r));
    }
    return out;
}

QuasiInverse quasi_inverse(const BoundedFn& f, std::size_t bound, const Exec& exec) {
    return from_kernel(compute_kernel(f, bound, exec), f.alphabet());
}

Factorization factorize(const BoundedFn& F, std::size_t bound, const Exec& exec) {
    const Alphabet& alphabet = F.alphabet();
    Factorization out{quasi_inverse(F, bound, exec), F, {}, {}, true};
    const QuasiInverse& g = out.g;
    out.h = compose(g, F, bound);
    const BoundedFn& H = out.h;
    for (const auto& [y, s] : g.entries()) out.f.emplace(s, F.eval(s));

    auto& checks = out.checks;
    checks.push_back({"preassociative", check_preassociative(F, bound, exec)});
    out.preassociative = !checks.back().report.fails();

    {
        // One instance per recorded value y, in the order of the classes' least members.
        std::vector<std::pair<Str, Value>> by_rep;
        for (const auto& [y, s] : g.entries()) by_rep.emplace_back(s, y);
        std::sort(by_rep.begin(), by_rep.end(), [&](const auto& a, const auto& b) {
            return alphabet.rank(a.first) < alphabet.rank(b.first);
        });
        checks.push_back({"F_of_g_is_identity",
                          make_report(scan_first_failure(by_rep.size(), exec, [&](std::uint64_t i) {
                              ItemResult item;
                              ++item.checked;
                              const auto& [s, y] = by_rep[i];
                              item.witness = unequal({{"g(y)", s}}, F.eval(s), y);
                              return item;
                          }))});
    }
    checks.push_back({"F_equals_f_of_H", pointwise(alphabet, bound, exec, [&](const Str& x) {
                          const auto it = out.f.find(H.eval_str(x));
                          if (it == out.f.end())
                              return std::optional<Witness>(
                                  Witness{{{"x", x}}, F.eval(x), std::nullopt});
                          return unequal({{"x", x}}, F.eval(x), it->second);
                      })});
    checks.push_back({"F_equals_F_of_H", pointwise(alphabet, bound, exec, [&](const Str& x) {
                          return unequal({{"x", x}}, F.eval(x), F.eval(H.eval_str(x)));
                      })});
    checks.push_back({"H_idempotent", check_idempotent(H, bound, exec)});
    {
        std::vector<std::pair<Str, Value>> entries(out.f.begin(), out.f.end());
        std::map<Value, Str> seen;
        CheckReport injective;
        for (const auto& [s, v] : entries) {
            ++injective.checked;
            const auto [it, inserted] = seen.emplace(v, s);
            if (!inserted) {
                injective.witness = Witness{{{"s", it->second}, {"s2", s}}, v, v};
                break;
            }
        }
        injective.verdict = injective.witness ? Verdict::fails
                            : injective.checked ? Verdict::holds
                                                : Verdict::vacuous;
        checks.push_back({"f_injective", std::move(injective)});
    }
    checks.push_back({"H_associative", check_associative_full(H, bound, exec)});
    if (check_standard(F, bound, exec).holds()) {
        checks.push_back({"H_standard", check_standard(H, bound, exec)});
        CheckReport eps;
        eps.checked = 1;
        eps.verdict = Verdict::holds;
        if (!H.eval_str(Str()).empty()) {
            eps.verdict = Verdict::fails;
            eps.witness = Witness{{{"x", Str()}}, H.eval(Str()), Value(Str())};
        }
        checks.push_back({"H_fixes_epsilon", std::move(eps)});
    }
    return out;
}

std::vector<NamedReport> check_preassoc_range_conditions(const BoundedFn& F, std::size_t m,
                                                         std::size_t bound, const Exec& exec) {
    if (bound < m + 2)
        throw InvalidArgument("bound " + std::to_string(bound) + " is below m+2 = " +
                              std::to_string(m + 2));
    if (bound > F.bound())
        throw OutOfDomain("check bound exceeds the function's bound");
    const Alphabet& alphabet = F.alphabet();
    const Kernel kernel = compute_kernel(F, bound, exec);
    const QuasiInverse g = from_kernel(kernel, alphabet);
    auto H = [&](const Str& x) -> const Str& { return g.at(F.eval(x)); };
    std::vector<NamedReport> out;

    const std::uint64_t low = alphabet.count_up_to(m);
    const std::uint64_t top = alphabet.count_up_to(m + 1);
    out.push_back({"range", make_report(scan_first_failure(top - low, exec, [&](std::uint64_t i) {
                       ItemResult item;
                       ++item.checked;
                       const std::uint32_t id = kernel.value_id[low + i];
                       if (kernel.members[id].front() >= low)
                           item.witness = Witness{{{"x", alphabet.unrank(low + i)}},
                                                  kernel.class_value[id], std::nullopt};
                       return item;
                   }))});

    const Str h_eps = H(Str());
    out.push_back({"a", make_report(scan_first_failure(alphabet.size(), exec, [&](std::uint64_t i) {
                       ItemResult item;
                       const Str x = alphabet.unrank(i + 1);
                       const Str t = x + h_eps;
                       if (t.size() > bound) {
                           ++item.skipped;
                           return item;
                       }
                       ++item.checked;
                       item.witness = unequal({{"x", x}}, F.eval(x), F.eval(t));
                       return item;
                   }))});

    const std::uint64_t first = alphabet.offset_of_length(2);
    out.push_back({"b", make_report(scan_first_failure(
                            alphabet.count_up_to(m + 2) - first, exec, [&](std::uint64_t i) {
                                ItemResult item;
                                const Str w = alphabet.unrank(first + i);
                                const Str x = w.substr(0, 1), y = w.substr(1, w.size() - 2),
                                          z = w.substr(w.size() - 1);
                                ++item.checked;
                                item.witness = unequal({{"x", x}, {"y", y}, {"z", z}},
                                                       F.eval(H(x + y) + z), F.eval(x + H(y + z)));
                                return item;
                            }))});

    // H never lengthens its input, so H(y)z stays inside X^{<=L}.
    out.push_back({"c", make_report(scan_first_failure(
                            alphabet.count_up_to(bound) - 1, exec, [&](std::uint64_t i) {
                                ItemResult item;
                                const Str w = alphabet.unrank(i + 1);
                                const Str y = w.substr(0, w.size() - 1), z = w.substr(w.size() - 1);
                                ++item.checked;
                                item.witness =
                                    unequal({{"y", y}, {"z", z}}, F.eval(w), F.eval(H(y) + z));
                                return item;
                            }))});
    return out;
}

Value recursive_eval(const BoundedFn& parts, const QuasiInverse& g, const Str& x) {
    const std::size_t top = parts.bound();
    if (x.size() <= top) return parts.eval(x);
    const Value prefix = recursive_eval(parts, g, x.substr(0, x.size() - 1));
    Str arg = g.at(prefix);
    arg += x[x.size() - 1];
    if (arg.size() > top) {
        std::ostringstream os;
        os << "g(" << prefix << ") = \"" << g.at(prefix).text() << "\" followed by a letter needs arity "
           << arg.size() << " > " << top;
        throw Unevaluable(os.str());
    }
    return parts.eval(arg);
}

std::vector<NamedReport> check_range_factorizations(const BoundedFn& F, std::size_t m,
                                                    std::size_t bound, const Exec& exec) {
    std::vector<NamedReport> out;
    out.push_back({"m_determined_range", check_m_determined_range(F, m, bound, exec)});
    if (out.back().report.fails()) return out;

    const Alphabet& alphabet = F.alphabet();
    const QuasiInverse g = quasi_inverse(F, bound, exec);
    const BoundedFn H = compose(g, F, bound);
    out.push_back({"H_m_bounded", check_m_bounded(H, m, bound, exec)});
    out.push_back({"F_equals_F_of_H", pointwise(alphabet, bound, exec, [&](const Str& x) {
                       return unequal({{"x", x}}, F.eval(x), F.eval(H.eval_str(x)));
                   })});
    out.push_back({"partition_parts", pointwise(alphabet, bound, exec, [&](const Str& x) {
                       const Str hx = H.eval_str(x);
                       if (auto w = unequal({{"x", x}}, H.eval(hx), Value(hx))) return w;
                       return unequal({{"x", x}}, F.eval(x), F.eval(hx));
                   })});
    return out;
}

}  // namespace strassoc
