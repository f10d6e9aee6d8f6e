#include "strassoc/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "strassoc/error.hpp"

namespace strassoc::json_io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw SpecError((where.empty() ? std::string("/") : where) + ": " + what);
}

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string child(const std::string& where, std::size_t i) {
    return where + "/" + std::to_string(i);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
    return *it;
}

std::uint64_t as_count(const Json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        fail(where, "expected a nonnegative integer");
    return j.get<std::uint64_t>();
}

std::string as_text(const Json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
}

Str as_str(const Json& j, const Alphabet& alphabet, const std::string& where) {
    Str s(as_text(j, where));
    if (!alphabet.contains(s)) fail(where, "\"" + s.text() + "\" has letters outside the alphabet");
    return s;
}

char as_letter(const Json& j, const Alphabet& alphabet, const std::string& where) {
    const std::string t = as_text(j, where);
    if (t.size() != 1) fail(where, "expected a single letter");
    if (!alphabet.contains(t[0])) fail(where, "'" + t + "' is not in the alphabet");
    return t[0];
}

const Json& as_array(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j;
}

const Json& pair_at(const Json& arr, std::size_t i, const std::string& where) {
    const Json& e = arr[i];
    if (!e.is_array() || e.size() != 2) fail(child(where, i), "expected a pair [input, output]");
    return e;
}

// Parses a builtin descriptor; `j` may omit "kind".
Builtin parse_builtin(const Json& j, const Alphabet& alphabet, const std::string& where) {
    const std::string name = as_text(member(j, "name", where), child(where, "name"));
    static const Json kNoParams = Json::object();
    const auto pit = j.find("params");
    const Json& params = pit == j.end() ? kNoParams : *pit;
    const std::string pw = child(where, "params");
    if (!params.is_object()) fail(pw, "expected an object");

    if (name == "identity") return builtins::Identity{};
    if (name == "sort") return builtins::Sort{};
    if (name == "ofo") return builtins::Ofo{};
    if (name == "length") return builtins::Length{};
    if (name == "letter_remove")
        return builtins::LetterRemove{as_letter(member(params, "a", pw), alphabet, child(pw, "a"))};
    if (name == "letter_remove_g")
        return builtins::LetterRemoveG{as_letter(member(params, "a", pw), alphabet, child(pw, "a"))};
    if (name == "separator_insert")
        return builtins::SeparatorInsert{
            as_letter(member(params, "bar", pw), alphabet, child(pw, "bar"))};
    if (name == "length_of") {
        Builtin inner = parse_builtin(member(params, "inner", pw), alphabet, child(pw, "inner"));
        if (inner.codomain() != Codomain::string)
            fail(child(pw, "inner"), "length_of needs a string-valued inner function");
        return length_of(std::move(inner));
    }
    if (name == "length_based")
        return builtins::LengthBased{alpha_from_json(member(params, "alpha", pw), child(pw, "alpha")),
                                     psi_from_json(member(params, "psi", pw), alphabet, child(pw, "psi"))};
    if (name == "constant")
        return builtins::Constant{
            value_from_json(member(params, "value", pw), alphabet, child(pw, "value"))};
    fail(child(where, "name"), "unknown builtin \"" + name + "\"");
}

// Reads [[input, output], …] into a table indexed by rank over X^{<=bound}.
std::vector<Value> parse_entries(const Json& entries, const Alphabet& alphabet, std::size_t bound,
                                 const std::string& where,
                                 const std::function<Value(const Json&, const std::string&)>& out) {
    as_array(entries, where);
    const std::uint64_t n = alphabet.count_up_to(bound);
    std::vector<std::optional<Value>> slots(n);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Json& e = pair_at(entries, i, where);
        const std::string ew = child(where, i);
        const Str x = as_str(e[0], alphabet, child(ew, 0));
        if (x.size() > bound)
            fail(child(ew, 0), "\"" + x.text() + "\" is longer than the bound " + std::to_string(bound));
        auto& slot = slots[alphabet.rank(x)];
        if (slot) fail(child(ew, 0), "duplicate entry for \"" + x.text() + "\"");
        slot = out(e[1], child(ew, 1));
    }
    std::vector<Value> values;
    values.reserve(n);
    for (std::uint64_t r = 0; r < n; ++r) {
        if (!slots[r])
            fail(where, "no entry for \"" + alphabet.unrank(r).text() + "\"; tables must be total");
        values.push_back(std::move(*slots[r]));
    }
    return values;
}

}  // namespace

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError(path + ": cannot open file");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecError(path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Value& v) {
    if (v.is_string()) return v.str().text();
    const Token& t = v.token();
    if (t.is_integer()) return Json{{"token", t.integer()}};
    return Json{{"token", t.symbol()}};
}

Value value_from_json(const Json& j, const Alphabet& alphabet, const std::string& where) {
    if (j.is_string()) return as_str(j, alphabet, where);
    if (j.is_object() && j.size() == 1 && j.contains("token")) {
        const Json& t = j["token"];
        if (t.is_number_integer()) return Token(t.get<std::int64_t>());
        if (t.is_string()) return Token(t.get<std::string>());
        fail(child(where, "token"), "a token is an integer or a string");
    }
    fail(where, "expected a string or {\"token\": …}");
}

Json to_json(const Alphabet& alphabet) {
    Json out = Json::array();
    for (char c : alphabet.letters()) out.push_back(std::string(1, c));
    return out;
}

Alphabet alphabet_from_json(const Json& j, const std::string& where) {
    as_array(j, where);
    if (j.empty()) fail(where, "the alphabet must be nonempty");
    std::string letters;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string t = as_text(j[i], child(where, i));
        if (t.size() != 1) fail(child(where, i), "letters are single characters");
        if (letters.find(t[0]) != std::string::npos) fail(child(where, i), "duplicate letter");
        letters += t;
    }
    return Alphabet(letters);
}

Json to_json(const Builtin& b) {
    Json params = Json::object();
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, builtins::LetterRemove> ||
                          std::is_same_v<T, builtins::LetterRemoveG>)
                params["a"] = std::string(1, d.a);
            else if constexpr (std::is_same_v<T, builtins::SeparatorInsert>)
                params["bar"] = std::string(1, d.bar);
            else if constexpr (std::is_same_v<T, builtins::LengthOf>)
                params["inner"] = to_json(*d.inner);
            else if constexpr (std::is_same_v<T, builtins::LengthBased>) {
                params["alpha"] = to_json(d.alpha);
                params["psi"] = to_json(d.psi);
            } else if constexpr (std::is_same_v<T, builtins::Constant>)
                params["value"] = to_json(d.value);
        },
        b.repr());
    Json out{{"kind", "builtin"}, {"name", b.name()}};
    if (!params.empty()) out["params"] = std::move(params);
    return out;
}

Builtin builtin_from_json(const Json& j, const Alphabet& alphabet, const std::string& where) {
    return parse_builtin(j, alphabet, where);
}

Json to_json(const AlphaFn& alpha) {
    if (alpha.is_identity()) return Json{{"kind", "identity"}};
    const auto& s = alpha.structured();
    return Json{{"kind", "structured"}, {"n1", s.n1}, {"ell", s.ell}, {"values", s.values}};
}

AlphaFn alpha_from_json(const Json& j, const std::string& where) {
    const std::string kind = as_text(member(j, "kind", where), child(where, "kind"));
    if (kind == "identity") return AlphaFn();
    if (kind != "structured") fail(child(where, "kind"), "expected \"identity\" or \"structured\"");
    AlphaFn::Structured s;
    s.n1 = as_count(member(j, "n1", where), child(where, "n1"));
    s.ell = as_count(member(j, "ell", where), child(where, "ell"));
    const std::string vw = child(where, "values");
    const Json& values = as_array(member(j, "values", where), vw);
    for (std::size_t i = 0; i < values.size(); ++i) s.values.push_back(as_count(values[i], child(vw, i)));
    try {
        return AlphaFn(std::move(s));
    } catch (const InvalidAlpha& e) {
        fail(where, std::string(to_string(e.violation())) + ": " + e.what());
    }
}

AlphaTable alpha_table_from_json(const Json& j, const std::string& where) {
    const bool wrapped = j.is_object();
    const std::string vw = wrapped ? child(where, "values") : where;
    const Json& values = as_array(wrapped ? member(j, "values", where) : j, vw);
    if (values.empty()) fail(vw, "the table must hold alpha(0)");
    AlphaTable t;
    for (std::size_t i = 0; i < values.size(); ++i) t.values.push_back(as_count(values[i], child(vw, i)));
    return t;
}

Json to_json(const PsiTable& psi) {
    Json out = Json::array();
    for (const auto& [n, s] : psi.entries()) out.push_back(Json::array({n, s.text()}));
    return out;
}

PsiTable psi_from_json(const Json& j, const Alphabet& alphabet, const std::string& where) {
    as_array(j, where);
    std::map<std::uint64_t, Str> entries;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& e = pair_at(j, i, where);
        const std::string ew = child(where, i);
        const std::uint64_t n = as_count(e[0], child(ew, 0));
        Str s = as_str(e[1], alphabet, child(ew, 1));
        if (s.size() != n) fail(child(ew, 1), "psi(" + std::to_string(n) + ") must have " + std::to_string(n) + " letters");
        if (!entries.emplace(n, std::move(s)).second) fail(child(ew, 0), "duplicate entry");
    }
    return PsiTable(std::move(entries));
}

BoundedFn FunctionDoc::at_bound(std::size_t b) const {
    if (builtin) return BoundedFn::builtin(*builtin, alphabet, b);
    if (b > table->bound())
        throw SpecError("/bound: the table is defined up to length " + std::to_string(table->bound()) +
                        ", bound " + std::to_string(b) + " requested");
    return *table;
}

FunctionDoc function_doc_from_json(const Json& j) {
    FunctionDoc doc{alphabet_from_json(member(j, "alphabet", ""), "/alphabet"), std::nullopt,
                    std::nullopt, std::nullopt};
    if (j.contains("bound")) doc.bound = as_count(j["bound"], "/bound");
    const Json& fn = member(j, "function", "");
    const std::string kind = as_text(member(fn, "kind", "/function"), "/function/kind");
    if (kind == "builtin") {
        doc.builtin = parse_builtin(fn, doc.alphabet, "/function");
        try {
            doc.builtin->validate(doc.alphabet, doc.default_bound());
        } catch (const Error& e) {
            fail("/function", e.what());
        }
        return doc;
    }
    if (kind != "table") fail("/function/kind", "expected \"builtin\" or \"table\"");
    if (!doc.bound) fail("", "table functions need a \"bound\"");
    const std::string cod = as_text(member(fn, "codomain", "/function"), "/function/codomain");
    if (cod != "string" && cod != "token")
        fail("/function/codomain", "expected \"string\" or \"token\"");
    const Codomain codomain = cod == "string" ? Codomain::string : Codomain::token;
    auto values = parse_entries(
        member(fn, "entries", "/function"), doc.alphabet, *doc.bound, "/function/entries",
        [&](const Json& v, const std::string& where) {
            Value out = value_from_json(v, doc.alphabet, where);
            if (codomain == Codomain::string && !out.is_string())
                fail(where, "a string-valued table cannot hold tokens");
            return out;
        });
    doc.table = BoundedFn::table(doc.alphabet, *doc.bound, codomain, std::move(values));
    return doc;
}

Json function_to_json(const BoundedFn& f) {
    Json out{{"alphabet", to_json(f.alphabet())}, {"bound", f.bound()}};
    if (const auto* b = std::get_if<Builtin>(&f.def())) {
        out["function"] = to_json(*b);
        return out;
    }
    Json entries = Json::array();
    for (const Str& x : enumerate_strings(f.alphabet(), f.bound()))
        entries.push_back(Json::array({x.text(), to_json(f.eval(x))}));
    out["function"] = Json{{"kind", "table"}, {"codomain", to_string(f.codomain())}, {"entries", std::move(entries)}};
    return out;
}

Json to_json(const PartialSpec& spec) {
    const Alphabet& ab = spec.alphabet();
    Json parts = Json::object();
    parts["0"] = spec.outputs().front().text();
    for (std::size_t k = 1; k <= spec.m() + 1; ++k) {
        Json part = Json::array();
        for (std::uint64_t r = ab.offset_of_length(k); r < ab.offset_of_length(k + 1); ++r)
            part.push_back(Json::array({ab.unrank(r).text(), spec.outputs()[r].text()}));
        parts[std::to_string(k)] = std::move(part);
    }
    return Json{{"alphabet", to_json(ab)}, {"m", spec.m()}, {"parts", std::move(parts)}};
}

PartialSpec partial_spec_from_json(const Json& j) {
    const Alphabet ab = alphabet_from_json(member(j, "alphabet", ""), "/alphabet");
    const std::size_t m = as_count(member(j, "m", ""), "/m");
    const Json& parts = member(j, "parts", "");
    if (!parts.is_object()) fail("/parts", "expected an object");
    std::vector<std::optional<Str>> outputs(ab.count_up_to(m + 1));
    for (const auto& [key, part] : parts.items()) {
        const std::string pw = child("/parts", key);
        std::size_t k = 0;
        try {
            std::size_t used = 0;
            k = std::stoul(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            fail(pw, "part keys are arities");
        }
        if (k > m + 1) fail(pw, "arity above m+1 = " + std::to_string(m + 1));
        if (k == 0 && part.is_string()) {
            outputs[0] = as_str(part, ab, pw);
            continue;
        }
        as_array(part, pw);
        for (std::size_t i = 0; i < part.size(); ++i) {
            const Json& e = pair_at(part, i, pw);
            const std::string ew = child(pw, i);
            const Str x = as_str(e[0], ab, child(ew, 0));
            if (x.size() != k) fail(child(ew, 0), "\"" + x.text() + "\" does not have " + std::to_string(k) + " letters");
            auto& slot = outputs[ab.rank(x)];
            if (slot) fail(child(ew, 0), "duplicate entry for \"" + x.text() + "\"");
            slot = as_str(e[1], ab, child(ew, 1));
        }
    }
    std::vector<Str> values;
    for (std::uint64_t r = 0; r < outputs.size(); ++r) {
        if (!outputs[r])
            fail("/parts", "no entry for \"" + ab.unrank(r).text() + "\"; parts must be total");
        values.push_back(std::move(*outputs[r]));
    }
    try {
        return PartialSpec(ab, m, std::move(values));
    } catch (const InvalidArgument& e) {
        fail("/parts", e.what());
    }
}

Json to_json(const Witness& w) {
    Json bindings = Json::object();
    for (const auto& [name, s] : w.bindings) bindings[name] = s.text();
    Json out{{"bindings", std::move(bindings)}, {"lhs", to_json(w.lhs)}};
    out["rhs"] = w.rhs ? to_json(*w.rhs) : Json(nullptr);
    return out;
}

Json to_json(const CheckReport& r) {
    Json out{{"verdict", to_string(r.verdict)},
             {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
             {"checked", r.checked},
             {"skipped", r.skipped},
             {"incomplete", r.incomplete}};
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

Json to_json(const std::vector<NamedReport>& reports) {
    Json out = Json::object();
    for (const auto& [name, report] : reports) out[name] = to_json(report);
    return out;
}

Json to_json(const ConditionReports& r) {
    return Json{{"a", to_json(r.a)}, {"b", to_json(r.b)}, {"c", to_json(r.c)}, {"d", to_json(r.d)}};
}

Json to_json(const Factorization& fz) {
    Json g = Json::array();
    for (const auto& [y, x] : fz.g.entries()) g.push_back(Json::array({to_json(y), x.text()}));
    Json f = Json::array();
    for (const auto& [x, y] : fz.f) f.push_back(Json::array({x.text(), to_json(y)}));
    return Json{{"g", std::move(g)},
                {"H", function_to_json(fz.h)},
                {"f", std::move(f)},
                {"preassociative", fz.preassociative},
                {"checks", to_json(fz.checks)}};
}

Json to_json(const AlphaClassification& c) {
    Json out{{"status", to_string(c.status)}};
    if (c.alpha) {
        const Json alpha = to_json(*c.alpha);
        for (const auto& [k, v] : alpha.items()) out[k] = v;
        out["standard"] = c.standard;
    } else {
        out["n1"] = c.n1;
        out["ell"] = c.ell;
    }
    if (c.violation) out["violation"] = to_string(*c.violation);
    if (!c.reason.empty()) out["reason"] = c.reason;
    return out;
}

ThetaSpec theta_spec_from_json(const Json& j, const Alphabet& alphabet) {
    const Str x0 = as_str(member(j, "x0", ""), alphabet, "/x0");
    const Str x1 = as_str(member(j, "x1", ""), alphabet, "/x1");
    const unsigned m = j.contains("m") ? static_cast<unsigned>(as_count(j["m"], "/m")) : 0;
    try {
        return ThetaSpec(x0, x1, m);
    } catch (const InvalidArgument& e) {
        fail("", e.what());
    }
}

}  // namespace strassoc::json_io
