#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "strassoc/checkers.hpp"
#include "strassoc/error.hpp"
#include "strassoc/extension.hpp"
#include "strassoc/factorization.hpp"
#include "strassoc/json_io.hpp"
#include "strassoc/length_based.hpp"
#include "strassoc/theta.hpp"

namespace strassoc::cli {

namespace {

using json_io::Json;

struct Options {
    std::vector<std::string> inputs;
    std::optional<std::size_t> bound;
    std::optional<std::size_t> m;
    unsigned jobs = 1;
    std::string output;
    std::string alphabet;
    std::string builtin;
    std::string letter;
    std::vector<std::string> strings;
    std::optional<std::string> x0, x1;
    std::optional<unsigned> m_exp;
    std::vector<std::uint64_t> values;
    std::optional<std::uint64_t> n1, ell;
    std::vector<std::string> witnesses;

    [[nodiscard]] Exec exec() const { return Exec{std::max(1u, jobs)}; }
};

int exit_for(const CheckReport& r) {
    if (r.fails()) return kFails;
    if (r.verdict == Verdict::vacuous || r.incomplete) return kInconclusive;
    return kHolds;
}

// Failure dominates inconclusive, which dominates success.
int combine(int a, int b) {
    if (a == kFails || b == kFails) return kFails;
    if (a == kInconclusive || b == kInconclusive) return kInconclusive;
    return kHolds;
}

std::string summary(const CheckReport& r) {
    std::ostringstream os;
    os << to_string(r.verdict) << " (checked " << r.checked << ", skipped " << r.skipped << ")";
    if (r.incomplete) os << ", incomplete";
    return os.str();
}

// What a command produced: the JSON for stdout, the exit code, and one line for stderr.
struct Outcome {
    Json doc;
    int code = kHolds;
    std::string line;
};

Outcome from_report(const CheckReport& r, std::size_t bound) {
    return {Json{{"bound", bound}, {"report", json_io::to_json(r)}}, exit_for(r), summary(r)};
}

Outcome from_reports(const std::vector<NamedReport>& reports, std::size_t bound) {
    Outcome o{Json{{"bound", bound}, {"reports", json_io::to_json(reports)}}, kHolds, {}};
    for (const auto& [name, r] : reports) {
        o.code = combine(o.code, exit_for(r));
        if (!o.line.empty()) o.line += "; ";
        o.line += name + ": " + to_string(r.verdict);
    }
    return o;
}

std::size_t require_m(const Options& o) {
    if (!o.m) throw InvalidArgument("this command needs --m");
    return *o.m;
}

void write_file(const std::string& path, const Json& doc) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path);
    out << json_io::dump(doc);
}

// The function under test and the bound to use, from --builtin or --input.
struct Loaded {
    BoundedFn fn;
    std::size_t bound;
};

Loaded load_function(const Options& o, std::size_t input_index = 0, std::size_t min_bound = 0) {
    if (!o.builtin.empty()) {
        if (o.alphabet.empty()) throw InvalidArgument("--builtin needs --alphabet");
        const Alphabet ab(o.alphabet);
        Json desc{{"name", o.builtin}};
        if (!o.letter.empty()) {
            const char* key = o.builtin == "separator_insert" ? "bar" : "a";
            desc["params"] = Json{{key, o.letter}};
        }
        const Builtin b = json_io::builtin_from_json(desc, ab, "--builtin");
        const std::size_t bound = std::max(o.bound.value_or(kDefaultBound), min_bound);
        return {BoundedFn::builtin(b, ab, bound), bound};
    }
    if (o.inputs.size() <= input_index) throw InvalidArgument("missing --input");
    const auto doc = json_io::function_doc_from_json(json_io::read_file(o.inputs[input_index]));
    std::size_t bound = o.bound.value_or(doc.default_bound());
    if (doc.builtin) bound = std::max(bound, min_bound);
    return {doc.at_bound(bound), bound};
}

Outcome cmd_eval(const Options& o) {
    std::size_t longest = 0;
    for (const auto& s : o.strings) longest = std::max(longest, s.size());
    const Loaded f = load_function(o, 0, longest);
    Json results = Json::array();
    for (const auto& s : o.strings) {
        const Str x(s);
        results.push_back(Json{{"x", s}, {"value", json_io::to_json(f.fn.eval(x))}});
    }
    return {Json{{"results", std::move(results)}}, kHolds,
            std::to_string(o.strings.size()) + " value(s)"};
}

using CheckFn = std::function<Outcome(const BoundedFn&, std::size_t, const Options&)>;

const std::map<std::string, CheckFn>& check_table() {
    static const std::map<std::string, CheckFn> table{
        {"assoc", [](const BoundedFn& f, std::size_t L, const Options& o) {
             return from_report(check_associative_full(f, L, o.exec()), L);
         }},
        {"assoc-reduced", [](const BoundedFn& f, std::size_t L, const Options& o) {
             return from_report(check_associative_reduced(f, L, o.exec()), L);
         }},
        {"preassoc", [](const BoundedFn& f, std::size_t L, const Options& o) {
             return from_report(check_preassociative(f, L, o.exec()), L);
         }},
        {"standard", [](const BoundedFn& f, std::size_t L, const Options& o) {
             return from_report(check_standard(f, L, o.exec()), L);
         }},
        {"idempotent", [](const BoundedFn& f, std::size_t L, const Options& o) {
             return from_report(check_idempotent(f, L, o.exec()), L);
         }},
        {"bounded", [](const BoundedFn& f, std::size_t L, const Options& o) {
             return from_report(check_m_bounded(f, require_m(o), L, o.exec()), L);
         }},
        {"range", [](const BoundedFn& f, std::size_t L, const Options& o) {
             return from_report(check_m_determined_range(f, require_m(o), L, o.exec()), L);
         }},
        {"equiv-defs", [](const BoundedFn& f, std::size_t L, const Options& o) {
             const auto d = check_equivalent_definitions(f, L, o.exec());
             return from_reports({{"associative", d.associative},
                                  {"split_invariant", d.split_invariant},
                                  {"regrouping", d.regrouping},
                                  {"pairwise", d.pairwise}},
                                 L);
         }},
        {"rigidity", [](const BoundedFn& f, std::size_t L, const Options& o) {
             return from_report(check_injective_rigidity(f, L, o.exec()), L);
         }},
        {"weakly-length", [](const BoundedFn& f, std::size_t L, const Options& o) {
             return from_report(check_weakly_length_based(f, L, o.exec()), L);
         }},
        {"length", [](const BoundedFn& f, std::size_t L, const Options& o) {
             return from_report(check_length_based(f, L, o.exec()), L);
         }},
        {"absorbed", [](const BoundedFn& f, std::size_t L, const Options& o) {
             const auto a = find_absorbed_string(f, L, o.exec());
             Outcome out{Json{{"bound", L}, {"absorbed", a ? Json(a->text()) : Json(nullptr)}},
                         a ? kHolds : kInconclusive,
                         a ? "absorbed string \"" + a->text() + "\"" : "none within the bound"};
             return out;
         }},
        {"range-conditions", [](const BoundedFn& f, std::size_t L, const Options& o) {
             return from_reports(check_preassoc_range_conditions(f, require_m(o), L, o.exec()), L);
         }},
        {"range-factorizations", [](const BoundedFn& f, std::size_t L, const Options& o) {
             return from_reports(check_range_factorizations(f, require_m(o), L, o.exec()), L);
         }},
    };
    return table;
}

Outcome cmd_extend(const Options& o) {
    if (o.inputs.empty()) throw InvalidArgument("missing --input");
    const Json in = json_io::read_file(o.inputs.front());
    std::optional<PartialSpec> spec;
    if (in.contains("parts")) {
        spec = json_io::partial_spec_from_json(in);
    } else {
        const auto doc = json_io::function_doc_from_json(in);
        const std::size_t m = require_m(o);
        spec = PartialSpec::of(doc.at_bound(m + 1), m);
    }
    const std::size_t bound = o.bound.value_or(kDefaultBound);
    const ConditionReports conditions = verify_conditions(*spec, o.exec());
    if (!conditions.all_hold())
        return {Json{{"conditions", json_io::to_json(conditions)}}, kFails,
                "conditions fail; no associative extension"};
    const Json fn = json_io::function_to_json(extend(*spec, bound, o.exec()));
    const std::string line = "extended to X^{<=" + std::to_string(bound) + "}";
    if (o.output.empty()) return {fn, kHolds, line};
    write_file(o.output, fn);
    return {Json{{"conditions", json_io::to_json(conditions)}, {"output", o.output}}, kHolds,
            line + ", written to " + o.output};
}

Outcome cmd_factorize(const Options& o) {
    const Loaded f = load_function(o);
    const Factorization fz = factorize(f.fn, f.bound, o.exec());
    Json doc = json_io::to_json(fz);
    if (!o.output.empty()) write_file(o.output, doc);
    int code = kHolds;
    for (const auto& [name, r] : fz.checks) code = combine(code, exit_for(r));
    if (!fz.preassociative) code = kFails;
    return {std::move(doc), code,
            fz.preassociative ? "factorized through " + std::to_string(fz.g.entries().size()) + " values"
                              : "not preassociative"};
}

AlphaTable load_alpha_table(const Options& o) {
    if (!o.values.empty()) return AlphaTable{o.values};
    if (o.inputs.empty()) throw InvalidArgument("give --input or --values");
    return json_io::alpha_table_from_json(json_io::read_file(o.inputs.front()));
}

Outcome cmd_alpha_check(const Options& o) {
    const AlphaTable t = load_alpha_table(o);
    const CheckReport r = check_alpha_equations(t);
    return {Json{{"horizon", t.horizon()}, {"report", json_io::to_json(r)}}, exit_for(r), summary(r)};
}

Outcome cmd_alpha_classify(const Options& o) {
    const AlphaClassification c = classify_alpha(load_alpha_table(o));
    const int code = c.status == AlphaStatus::accepted   ? kHolds
                     : c.status == AlphaStatus::rejected ? kFails
                                                         : kInconclusive;
    return {json_io::to_json(c), code,
            std::string(to_string(c.status)) + (c.reason.empty() ? "" : ": " + c.reason)};
}

Outcome cmd_alpha_synth(const Options& o) {
    if (!o.n1 || !o.ell) throw InvalidArgument("alpha synth needs --n1 and --ell");
    const std::size_t bound = o.bound.value_or(kDefaultBound);
    try {
        const AlphaFn alpha = synthesize_alpha(*o.n1, *o.ell, o.values);
        std::vector<std::uint64_t> table;
        for (std::uint64_t n = 0; n <= bound; ++n) table.push_back(alpha(n));
        return {Json{{"alpha", json_io::to_json(alpha)}, {"table", table}}, kHolds, "valid"};
    } catch (const InvalidAlpha& e) {
        return {Json{{"violation", to_string(e.violation())}, {"reason", e.what()}}, kFails,
                std::string("rejected: ") + e.what()};
    }
}

Periodicity parse_witness(const std::string& s) {
    const auto colon = s.find(':');
    try {
        if (colon == std::string::npos) throw std::invalid_argument(s);
        return {std::stoull(s.substr(0, colon)), std::stoull(s.substr(colon + 1))};
    } catch (const std::exception&) {
        throw InvalidArgument("--witness expects THRESHOLD:PERIOD, got \"" + s + "\"");
    }
}

Outcome cmd_alpha_minimize(const Options& o) {
    std::vector<Periodicity> witnesses;
    for (const auto& w : o.witnesses) witnesses.push_back(parse_witness(w));
    const PeriodResult r = minimal_period(load_alpha_table(o), witnesses);
    return {Json{{"threshold", r.combined.threshold},
                 {"period", r.combined.period},
                 {"verified", r.verified}},
            r.verified ? kHolds : kFails,
            "(" + std::to_string(r.combined.threshold) + ", " + std::to_string(r.combined.period) + ")"};
}

struct ThetaSetup {
    Alphabet alphabet;
    ThetaSpec spec;
    std::size_t bound;
};

ThetaSetup load_theta(const Options& o) {
    Json base = Json::object();
    if (!o.inputs.empty()) base = json_io::read_file(o.inputs.front());
    std::string letters = o.alphabet;
    if (letters.empty()) {
        if (!base.contains("alphabet")) throw InvalidArgument("theta needs --alphabet");
        letters = json_io::alphabet_from_json(base["alphabet"], "/alphabet").letters();
    }
    const Alphabet ab(letters);
    if (o.x0) base["x0"] = *o.x0;
    if (o.x1) base["x1"] = *o.x1;
    if (o.m_exp) base["m"] = *o.m_exp;
    std::size_t bound = o.bound.value_or(kDefaultBound);
    if (!o.bound && base.contains("bound") && base["bound"].is_number_unsigned())
        bound = base["bound"].get<std::size_t>();
    return {ab, json_io::theta_spec_from_json(base, ab), bound};
}

Str single_string(const Options& o) {
    if (o.strings.size() != 1) throw InvalidArgument("expected exactly one string argument");
    return Str(o.strings.front());
}

Outcome cmd_theta_class(const Options& o) {
    const ThetaSetup t = load_theta(o);
    const ThetaClass c = theta_class(t.alphabet, single_string(o), t.spec, t.bound);
    Json members = Json::array();
    for (const Str& s : c.members) members.push_back(s.text());
    return {Json{{"bound", t.bound}, {"members", std::move(members)}, {"truncated", c.truncated}},
            c.truncated ? kInconclusive : kHolds,
            std::to_string(c.members.size()) + " member(s)" + (c.truncated ? ", truncated" : "")};
}

Outcome cmd_theta_rep(const Options& o) {
    const ThetaSetup t = load_theta(o);
    if (!o.strings.empty()) {
        const Str r = canonical_rep(t.alphabet, single_string(o), t.spec, t.bound);
        return {Json{{"bound", t.bound}, {"rep", r.text()}}, kHolds, "\"" + r.text() + "\""};
    }
    const ThetaFunction tf = theta_function(t.alphabet, t.spec, t.bound);
    Json doc = json_io::function_to_json(tf.function);
    doc["classes"] = tf.classes;
    doc["truncated_classes"] = tf.truncated_classes;
    if (!o.output.empty()) write_file(o.output, json_io::function_to_json(tf.function));
    return {std::move(doc), tf.truncated_classes ? kInconclusive : kHolds,
            std::to_string(tf.classes) + " classes"};
}

Json comparison_json(const KernelComparison& c) {
    auto pair = [](const std::optional<StrPair>& p) {
        return p ? Json::array({p->first.text(), p->second.text()}) : Json(nullptr);
    };
    return Json{{"relation", to_string(c.relation)},
                {"f_merges", pair(c.f_merges)},
                {"g_merges", pair(c.g_merges)}};
}

Outcome cmd_theta_chain(const Options& o) {
    const ThetaSetup t = load_theta(o);
    const ThetaSpec next = t.spec.with_m(t.spec.m() + 1);
    const ThetaFunction lo = theta_function(t.alphabet, t.spec, t.bound);
    const ThetaFunction hi = theta_function(t.alphabet, next, t.bound);
    const CheckReport a_lo = check_associative_full(lo.function, t.bound, o.exec());
    const CheckReport a_hi = check_associative_full(hi.function, t.bound, o.exec());
    const KernelComparison c = preceq(lo.function, hi.function, t.bound);
    int code = combine(exit_for(a_lo), exit_for(a_hi));
    if (c.relation != KernelOrder::f_below_g) code = kFails;
    const std::string mlo = std::to_string(t.spec.m()), mhi = std::to_string(next.m());
    return {Json{{"bound", t.bound},
                 {"m", t.spec.m()},
                 {"associative", Json{{mlo, json_io::to_json(a_lo)}, {mhi, json_io::to_json(a_hi)}}},
                 {"comparison", comparison_json(c)}},
            code,
            "F^" + mlo + " vs F^" + mhi + ": " + to_string(c.relation)};
}

Outcome cmd_compare(const Options& o) {
    if (o.inputs.size() != 2) throw InvalidArgument("compare needs two --input files");
    const Loaded f = load_function(o, 0);
    const Loaded g = load_function(o, 1);
    const std::size_t bound = std::min(f.bound, g.bound);
    const KernelComparison c = preceq(f.fn, g.fn, bound);
    Json doc = comparison_json(c);
    doc["bound"] = bound;
    return {std::move(doc), kHolds, to_string(c.relation)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Bounded-domain checks and constructions for associative string functions",
                 "strassoc"};
    app.require_subcommand(1);
    std::function<Outcome()> action;
    std::string label;

    auto function_opts = [&](CLI::App* sub) {
        sub->add_option("--input", o.inputs, "Function-spec JSON file")->allow_extra_args(false);
        sub->add_option("--bound", o.bound, "Domain bound L (default: the file's, else 6)");
        sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--builtin", o.builtin, "Use a builtin instead of --input");
        sub->add_option("--alphabet", o.alphabet, "Letters for --builtin, e.g. abc");
        sub->add_option("--letter", o.letter, "Letter parameter of the builtin");
    };
    auto leaf = [&](CLI::App* sub, std::string name, std::function<Outcome()> fn) {
        sub->callback([&, name = std::move(name), fn = std::move(fn)] {
            label = name;
            action = fn;
        });
    };

    auto* eval = app.add_subcommand("eval", "Evaluate a function at the given strings");
    function_opts(eval);
    eval->add_option("strings", o.strings, "Input strings (\"\" is epsilon)");
    leaf(eval, "eval", [&] { return cmd_eval(o); });

    auto* check = app.add_subcommand("check", "Check a property on X^{<=L}");
    check->require_subcommand(1);
    for (const auto& [name, fn] : check_table()) {
        auto* sub = check->add_subcommand(name);
        function_opts(sub);
        sub->add_option("--m", o.m, "Arity or length parameter m");
        leaf(sub, "check " + name, [&, fn = fn] {
            const Loaded f = load_function(o);
            return fn(f.fn, f.bound, o);
        });
    }

    auto* ext = app.add_subcommand("extend", "Extend low-arity parts to an associative function");
    ext->add_option("--input", o.inputs, "PartialSpec or function-spec JSON file")
        ->allow_extra_args(false)
        ->required();
    ext->add_option("--bound", o.bound, "Target bound L");
    ext->add_option("--m", o.m, "m, when --input is a function spec");
    ext->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    ext->add_option("--output", o.output, "Write the extended function here");
    leaf(ext, "extend", [&] { return cmd_extend(o); });

    auto* fac = app.add_subcommand("factorize", "Factor F = f(H) through a quasi-inverse");
    function_opts(fac);
    fac->add_option("--output", o.output, "Also write the factorization here");
    leaf(fac, "factorize", [&] { return cmd_factorize(o); });

    auto* alpha = app.add_subcommand("alpha", "Length maps of length-based functions");
    alpha->require_subcommand(1);
    auto table_opts = [&](CLI::App* sub) {
        sub->add_option("--input", o.inputs, "AlphaTable JSON file")->allow_extra_args(false);
        sub->add_option("--values", o.values, "alpha(0), alpha(1), ...")
            ->delimiter(',')
            ->allow_extra_args(false);
    };
    auto* a_check = alpha->add_subcommand("check", "Check the two identities on a table");
    table_opts(a_check);
    leaf(a_check, "alpha check", [&] { return cmd_alpha_check(o); });
    auto* a_class = alpha->add_subcommand("classify", "Read off the structured form");
    table_opts(a_class);
    leaf(a_class, "alpha classify", [&] { return cmd_alpha_classify(o); });
    auto* a_synth = alpha->add_subcommand("synth", "Build a structured map from n1, ell, window");
    a_synth->add_option("--n1", o.n1)->required();
    a_synth->add_option("--ell", o.ell)->required();
    a_synth->add_option("--window", o.values, "alpha(0..n1+ell-1)")
        ->delimiter(',')
        ->allow_extra_args(false)
        ->required();
    a_synth->add_option("--bound", o.bound, "Print the map up to this n");
    leaf(a_synth, "alpha synth", [&] { return cmd_alpha_synth(o); });
    auto* a_min = alpha->add_subcommand("minimize", "Combine periodicity witnesses");
    table_opts(a_min);
    a_min->add_option("--witness", o.witnesses, "THRESHOLD:PERIOD")
        ->allow_extra_args(false)
        ->required();
    leaf(a_min, "alpha minimize", [&] { return cmd_alpha_minimize(o); });

    auto* theta = app.add_subcommand("theta", "Block-swap congruences and their representatives");
    theta->require_subcommand(1);
    auto theta_opts = [&](CLI::App* sub) {
        sub->add_option("--input", o.inputs, "JSON {alphabet, x0, x1, m}")->allow_extra_args(false);
        sub->add_option("--alphabet", o.alphabet);
        sub->add_option("--x0", o.x0);
        sub->add_option("--x1", o.x1);
        sub->add_option("--m-exp", o.m_exp, "Blocks are x0^(2^m) and x1^(2^m)");
        sub->add_option("--bound", o.bound);
        sub->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    };
    auto* t_class = theta->add_subcommand("class", "The class of one string");
    theta_opts(t_class);
    t_class->add_option("string", o.strings);
    leaf(t_class, "theta class", [&] { return cmd_theta_class(o); });
    auto* t_rep = theta->add_subcommand("rep", "Canonical representative, or the whole table");
    theta_opts(t_rep);
    t_rep->add_option("string", o.strings);
    t_rep->add_option("--output", o.output, "Write the table as a function spec");
    leaf(t_rep, "theta rep", [&] { return cmd_theta_rep(o); });
    auto* t_chain = theta->add_subcommand("chain", "Compare F^m with F^(m+1)");
    theta_opts(t_chain);
    leaf(t_chain, "theta chain", [&] { return cmd_theta_chain(o); });

    auto* cmp = app.add_subcommand("compare", "Kernel order of two functions");
    function_opts(cmp);
    leaf(cmp, "compare", [&] { return cmd_compare(o); });

    std::vector<const char*> argv{"strassoc"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kHolds : kUsage;
    }

    try {
        const Outcome result = action();
        out << json_io::dump(result.doc);
        err << label << ": " << result.line << "\n";
        return result.code;
    } catch (const Error& e) {
        err << label << ": error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace strassoc::cli
