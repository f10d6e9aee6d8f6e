#include "strassoc/checkers.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "strassoc/error.hpp"
#include "strassoc/parallel.hpp"

namespace strassoc {

namespace {

void require_bound(const BoundedFn& f, std::size_t bound) {
    if (bound > f.bound())
        throw OutOfDomain("check bound " + std::to_string(bound) + " exceeds the function's bound " +
                          std::to_string(f.bound()));
}

void require_string_valued(const BoundedFn& f, const char* property) {
    if (!f.string_valued())
        throw CodomainMismatch(std::string(property) + " is defined only for string-valued functions");
}

Witness witness(std::vector<std::pair<std::string, Str>> bindings, Value lhs,
                std::optional<Value> rhs) {
    return Witness{std::move(bindings), std::move(lhs), std::move(rhs)};
}

CheckReport check_associative(const BoundedFn& f, std::size_t bound, bool reduced,
                              const Exec& exec) {
    require_string_valued(f, "associativity");
    require_bound(f, bound);
    const Alphabet& alphabet = f.alphabet();
    auto scan = scan_first_failure(alphabet.count_up_to(bound), exec, [&](std::uint64_t r) {
        ItemResult out;
        const Str w = alphabet.unrank(r);
        const std::size_t n = w.size();
        const Value fw = f.eval(w);
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (reduced && n - j > 1) continue;
                const Str x = w.substr(0, i);
                const Str y = w.substr(i, j);
                const Str z = w.substr(i + j);
                const Str t = x + f.eval_str(y) + z;
                if (t.size() > bound) {
                    ++out.skipped;
                    continue;
                }
                ++out.checked;
                Value ft = f.eval(t);
                if (ft != fw) {
                    out.witness = witness({{"x", x}, {"y", y}, {"z", z}}, fw, std::move(ft));
                    return out;
                }
            }
        }
        return out;
    });
    return make_report(std::move(scan));
}

}  // namespace

Kernel compute_kernel(const BoundedFn& f, std::size_t bound, const Exec& exec) {
    require_bound(f, bound);
    const Alphabet& alphabet = f.alphabet();
    const std::uint64_t n = alphabet.count_up_to(bound);
    std::vector<std::optional<Value>> values(n);
    parallel_for(n, exec.jobs, [&](std::uint64_t r) { values[r] = f.eval(alphabet.unrank(r)); });

    Kernel k;
    k.value_id.resize(n);
    std::map<Value, std::uint32_t> ids;
    for (std::uint64_t r = 0; r < n; ++r) {
        auto [it, inserted] = ids.try_emplace(*values[r], static_cast<std::uint32_t>(k.members.size()));
        if (inserted) {
            k.members.emplace_back();
            k.class_value.push_back(*values[r]);
        }
        k.value_id[r] = it->second;
        k.members[it->second].push_back(r);
    }
    return k;
}

CheckReport check_associative_full(const BoundedFn& f, std::size_t bound, const Exec& exec) {
    return check_associative(f, bound, false, exec);
}

CheckReport check_associative_reduced(const BoundedFn& f, std::size_t bound, const Exec& exec) {
    return check_associative(f, bound, true, exec);
}

CheckReport check_preassociative(const BoundedFn& f, std::size_t bound, const Exec& exec) {
    const Kernel kernel = compute_kernel(f, bound, exec);
    const Alphabet& alphabet = f.alphabet();

    // Outer string w = xyz where y is the smaller member of the kernel pair {y, y2};
    // within w the least counterexample minimizes (rank(x y2 z), |x|, |y|).
    auto scan = scan_first_failure(kernel.value_id.size(), exec, [&](std::uint64_t r) {
        ItemResult out;
        const Str w = alphabet.unrank(r);
        const std::size_t n = w.size();
        const std::uint32_t fw = kernel.value_id[r];
        std::optional<std::tuple<std::uint64_t, std::size_t, std::size_t, std::uint64_t>> best;
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; i + j <= n; ++j) {
                const Str y = w.substr(i, j);
                const std::uint64_t ry = alphabet.rank(y);
                const auto& cls = kernel.members[kernel.value_id[ry]];
                const std::size_t context = n - j;
                for (auto it = std::upper_bound(cls.begin(), cls.end(), ry); it != cls.end(); ++it) {
                    const std::uint64_t ry2 = *it;
                    const Str y2 = alphabet.unrank(ry2);
                    if (context + y2.size() > bound) {
                        ++out.skipped;
                        continue;
                    }
                    ++out.checked;
                    const std::uint64_t rt = alphabet.rank(w.substr(0, i) + y2 + w.substr(i + j));
                    if (kernel.value_id[rt] != fw) {
                        auto key = std::make_tuple(rt, i, j, ry2);
                        if (!best || key < *best) best = key;
                        break;
                    }
                }
            }
        }
        if (best) {
            const auto [rt, i, j, ry2] = *best;
            out.witness = witness({{"y", w.substr(i, j)},
                                   {"y2", alphabet.unrank(ry2)},
                                   {"x", w.substr(0, i)},
                                   {"z", w.substr(i + j)}},
                                  kernel.class_value[fw], kernel.class_value[kernel.value_id[rt]]);
        }
        return out;
    });
    return make_report(std::move(scan));
}

CheckReport check_standard(const BoundedFn& f, std::size_t bound, const Exec& exec) {
    require_bound(f, bound);
    const Alphabet& alphabet = f.alphabet();
    const Value fe = f.eval(Str());
    const std::uint64_t n = alphabet.count_up_to(bound);
    auto scan = scan_first_failure(n == 0 ? 0 : n - 1, exec, [&](std::uint64_t i) {
        ItemResult out;
        const Str x = alphabet.unrank(i + 1);
        ++out.checked;
        Value fx = f.eval(x);
        if (fx == fe) out.witness = witness({{"x", x}}, std::move(fx), fe);
        return out;
    });
    return make_report(std::move(scan));
}

CheckReport check_idempotent(const BoundedFn& f, std::size_t bound, const Exec& exec) {
    require_string_valued(f, "idempotence");
    require_bound(f, bound);
    const Alphabet& alphabet = f.alphabet();
    auto scan = scan_first_failure(alphabet.count_up_to(bound), exec, [&](std::uint64_t r) {
        ItemResult out;
        const Str x = alphabet.unrank(r);
        const Str fx = f.eval_str(x);
        if (fx.size() > bound) {
            ++out.skipped;
            return out;
        }
        ++out.checked;
        Value ffx = f.eval(fx);
        if (ffx != Value(fx)) out.witness = witness({{"x", x}}, std::move(ffx), Value(fx));
        return out;
    });
    return make_report(std::move(scan));
}

CheckReport check_m_bounded(const BoundedFn& f, std::size_t m, std::size_t bound, const Exec& exec) {
    require_string_valued(f, "m-boundedness");
    require_bound(f, bound);
    const Alphabet& alphabet = f.alphabet();
    auto scan = scan_first_failure(alphabet.count_up_to(bound), exec, [&](std::uint64_t r) {
        ItemResult out;
        const Str x = alphabet.unrank(r);
        ++out.checked;
        Str fx = f.eval_str(x);
        if (fx.size() > m)
            out.witness = witness({{"x", x}}, Value(std::move(fx)),
                                  Value(Token(static_cast<std::int64_t>(m))));
        return out;
    });
    return make_report(std::move(scan));
}

CheckReport check_m_determined_range(const BoundedFn& f, std::size_t m, std::size_t bound,
                                     const Exec& exec) {
    if (m > bound)
        throw InvalidArgument("m = " + std::to_string(m) + " exceeds the bound " +
                              std::to_string(bound));
    const Kernel kernel = compute_kernel(f, bound, exec);
    const Alphabet& alphabet = f.alphabet();
    const std::uint64_t low = alphabet.count_up_to(m);
    // Classes are numbered by least member, so a class is reached at arity <= m
    // exactly when its least member has rank < low.
    auto scan = scan_first_failure(kernel.value_id.size() - low, exec, [&](std::uint64_t i) {
        ItemResult out;
        const std::uint64_t r = low + i;
        ++out.checked;
        const std::uint32_t id = kernel.value_id[r];
        if (kernel.members[id].front() >= low)
            out.witness = witness({{"x", alphabet.unrank(r)}}, kernel.class_value[id], std::nullopt);
        return out;
    });
    return make_report(std::move(scan));
}

EquivalentDefinitions check_equivalent_definitions(const BoundedFn& f, std::size_t bound,
                                                   const Exec& exec) {
    require_string_valued(f, "associativity");
    require_bound(f, bound);
    if (f.eval(Str()) != Value(Str()))
        throw PreconditionViolated("equivalent definitions require F(ε) = ε");
    const Alphabet& alphabet = f.alphabet();
    const std::uint64_t n_items = alphabet.count_up_to(bound);

    EquivalentDefinitions out{check_associative_full(f, bound, exec), {}, {}, {}};

    out.split_invariant = make_report(scan_first_failure(n_items, exec, [&](std::uint64_t r) {
        ItemResult item;
        const Str w = alphabet.unrank(r);
        const std::size_t n = w.size();
        std::optional<std::tuple<Str, Str, Str, Value>> reference;
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; i + j <= n; ++j) {
                Str x = w.substr(0, i), y = w.substr(i, j), z = w.substr(i + j);
                const Str t = x + f.eval_str(y) + z;
                if (t.size() > bound) {
                    ++item.skipped;
                    continue;
                }
                Value ft = f.eval(t);
                if (!reference) {
                    reference.emplace(std::move(x), std::move(y), std::move(z), std::move(ft));
                    continue;
                }
                ++item.checked;
                const auto& [rx, ry, rz, rv] = *reference;
                if (ft != rv) {
                    item.witness = witness(
                        {{"x", rx}, {"y", ry}, {"z", rz}, {"x2", x}, {"y2", y}, {"z2", z}}, rv,
                        std::move(ft));
                    return item;
                }
            }
        }
        return item;
    }));

    out.regrouping = make_report(scan_first_failure(n_items, exec, [&](std::uint64_t r) {
        ItemResult item;
        const Str w = alphabet.unrank(r);
        const std::size_t n = w.size();
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; i + j <= n; ++j) {
                const Str x = w.substr(0, i), y = w.substr(i, j), z = w.substr(i + j);
                const Str left = f.eval_str(x + y) + z;
                const Str right = x + f.eval_str(y + z);
                if (left.size() > bound || right.size() > bound) {
                    ++item.skipped;
                    continue;
                }
                ++item.checked;
                Value fl = f.eval(left), fr = f.eval(right);
                if (fl != fr) {
                    item.witness = witness({{"x", x}, {"y", y}, {"z", z}}, std::move(fl), std::move(fr));
                    return item;
                }
            }
        }
        return item;
    }));

    out.pairwise = make_report(scan_first_failure(n_items, exec, [&](std::uint64_t r) {
        ItemResult item;
        const Str w = alphabet.unrank(r);
        const Value fw = f.eval(w);
        for (std::size_t i = 0; i <= w.size(); ++i) {
            const Str x = w.substr(0, i), y = w.substr(i);
            const Str t = f.eval_str(x) + f.eval_str(y);
            if (t.size() > bound) {
                ++item.skipped;
                continue;
            }
            ++item.checked;
            Value ft = f.eval(t);
            if (ft != fw) {
                item.witness = witness({{"x", x}, {"y", y}}, fw, std::move(ft));
                return item;
            }
        }
        return item;
    }));
    return out;
}

CheckReport check_injective_rigidity(const BoundedFn& f, std::size_t bound, const Exec& exec) {
    require_string_valued(f, "rigidity");
    const Kernel kernel = compute_kernel(f, bound, exec);
    const Alphabet& alphabet = f.alphabet();
    for (const auto& cls : kernel.members) {
        if (cls.size() > 1) {
            CheckReport r;
            r.verdict = Verdict::vacuous;
            r.note = "not injective: F(\"" + alphabet.unrank(cls[0]).text() + "\") = F(\"" +
                     alphabet.unrank(cls[1]).text() + "\")";
            return r;
        }
    }
    const CheckReport idem = check_idempotent(f, bound, exec);
    if (idem.fails()) {
        CheckReport r;
        r.verdict = Verdict::vacuous;
        r.note = "not idempotent at x = \"" + idem.witness->at("x").text() + "\"";
        return r;
    }
    auto scan = scan_first_failure(kernel.value_id.size(), exec, [&](std::uint64_t r) {
        ItemResult out;
        const Str x = alphabet.unrank(r);
        ++out.checked;
        const Value& fx = kernel.class_value[kernel.value_id[r]];
        if (fx != Value(x)) out.witness = witness({{"x", x}}, fx, Value(x));
        return out;
    });
    scan.skipped += idem.skipped;
    return make_report(std::move(scan));
}

std::optional<Str> find_absorbed_string(const BoundedFn& f, std::size_t bound, const Exec& exec) {
    const CheckReport standard = check_standard(f, bound, exec);
    if (!standard.fails())
        throw NotApplicable("function is standard on X^{<=" + std::to_string(bound) + "}");
    const Kernel kernel = compute_kernel(f, bound, exec);
    const Alphabet& alphabet = f.alphabet();
    for (const std::uint64_t ra : kernel.members[kernel.value_id[0]]) {
        if (ra == 0) continue;
        const Str a = alphabet.unrank(ra);
        // F(xz) = F(xaz) over every context with |xaz| <= L, grouped by xz.
        const std::size_t max_context = bound - a.size();
        auto scan = scan_first_failure(alphabet.count_up_to(max_context), exec,
                                       [&](std::uint64_t r) {
                                           ItemResult out;
                                           const Str xz = alphabet.unrank(r);
                                           for (std::size_t i = 0; i <= xz.size(); ++i) {
                                               ++out.checked;
                                               const Str t = xz.substr(0, i) + a + xz.substr(i);
                                               if (kernel.value_id[r] !=
                                                   kernel.value_id[alphabet.rank(t)]) {
                                                   out.witness = Witness{{}, Value(Str()), std::nullopt};
                                                   return out;
                                               }
                                           }
                                           return out;
                                       });
        if (!scan.witness) return a;
    }
    return std::nullopt;
}

}  // namespace strassoc
