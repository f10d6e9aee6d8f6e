#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "strassoc/alpha.hpp"
#include "strassoc/extension.hpp"
#include "strassoc/factorization.hpp"
#include "strassoc/function.hpp"
#include "strassoc/length_based.hpp"
#include "strassoc/report.hpp"
#include "strassoc/theta.hpp"

// JSON documents read and written by the command-line tool. Every reader throws
// SpecError whose message starts with the JSON pointer of the offending node.

namespace strassoc::json_io {

using Json = nlohmann::ordered_json;

/// Parses a file; SpecError on I/O or syntax errors.
[[nodiscard]] Json read_file(const std::string& path);
/// Two-space indented text with a trailing newline.
[[nodiscard]] std::string dump(const Json& j);

/// A string value is plain text; a token is {"token": <int or string>}.
[[nodiscard]] Json to_json(const Value& v);
[[nodiscard]] Value value_from_json(const Json& j, const Alphabet& alphabet,
                                    const std::string& where = "");

[[nodiscard]] Json to_json(const Alphabet& alphabet);
[[nodiscard]] Alphabet alphabet_from_json(const Json& j, const std::string& where = "");

/// {"kind":"builtin","name":…,"params":{…}}.
[[nodiscard]] Json to_json(const Builtin& b);
[[nodiscard]] Builtin builtin_from_json(const Json& j, const Alphabet& alphabet,
                                        const std::string& where = "");

[[nodiscard]] Json to_json(const AlphaFn& alpha);
[[nodiscard]] AlphaFn alpha_from_json(const Json& j, const std::string& where = "");
/// A bare array of values, or {"values": […]}.
[[nodiscard]] AlphaTable alpha_table_from_json(const Json& j, const std::string& where = "");
[[nodiscard]] Json to_json(const PsiTable& psi);
[[nodiscard]] PsiTable psi_from_json(const Json& j, const Alphabet& alphabet,
                                     const std::string& where = "");

/// A function-spec document {alphabet, bound, function}.
struct FunctionDoc {
    Alphabet alphabet;
    std::optional<std::size_t> bound;  ///< absent for builtins that omit it
    std::optional<Builtin> builtin;
    std::optional<BoundedFn> table;

    /// The function on X^{<=L}. Builtins are instantiated at L; tables require
    /// L <= their own bound (else SpecError).
    [[nodiscard]] BoundedFn at_bound(std::size_t bound) const;
    /// The bound to use when the caller gives none: the document's, else the default.
    [[nodiscard]] std::size_t default_bound() const { return bound.value_or(kDefaultBound); }
};

[[nodiscard]] FunctionDoc function_doc_from_json(const Json& j);
/// Table functions are written entry by entry in length-lex order; builtins by
/// descriptor.
[[nodiscard]] Json function_to_json(const BoundedFn& f);

/// {alphabet, m, parts: {"0": "<str>", "1": [[in, out], …], …}}.
[[nodiscard]] Json to_json(const PartialSpec& spec);
[[nodiscard]] PartialSpec partial_spec_from_json(const Json& j);

[[nodiscard]] Json to_json(const Witness& w);
[[nodiscard]] Json to_json(const CheckReport& r);
/// An object keyed by report name.
[[nodiscard]] Json to_json(const std::vector<NamedReport>& reports);
[[nodiscard]] Json to_json(const ConditionReports& r);

/// {g: [[value, string]…], H: function-spec, f: [[string, value]…], checks: {…}}.
[[nodiscard]] Json to_json(const Factorization& fz);

[[nodiscard]] Json to_json(const AlphaClassification& c);

/// {x0, x1, m}; m defaults to 0.
[[nodiscard]] ThetaSpec theta_spec_from_json(const Json& j, const Alphabet& alphabet);

}  // namespace strassoc::json_io
