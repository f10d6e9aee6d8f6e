#pragma once

#include <cstdint>
#include <vector>

#include "strassoc/error.hpp"
#include "strassoc/function.hpp"
#include "strassoc/report.hpp"

// Extension of low-arity data F_0 .. F_{m+1} to an associative m-bounded function
// by the recursion G(x_1...x_n) = G(G(x_1...x_{n-1}) x_n).

namespace strassoc {

/// The parts F_0 .. F_{m+1} of an m-bounded string function: `outputs[r]` is the
/// value at the string of rank r, for every string of length <= m+1.
class PartialSpec {
public:
    /// Throws InvalidArgument on a size mismatch or an output longer than m, and
    /// AlphabetMismatch on foreign letters.
    PartialSpec(Alphabet alphabet, std::size_t m, std::vector<Str> outputs);

    /// The low-arity parts of `f` (which must be string-valued with bound >= m+1).
    static PartialSpec of(const BoundedFn& f, std::size_t m);

    [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] std::size_t m() const noexcept { return m_; }
    [[nodiscard]] const std::vector<Str>& outputs() const noexcept { return outputs_; }

    /// F(x) for |x| <= m+1; throws OutOfDomain beyond.
    [[nodiscard]] const Str& at(const Str& x) const;

    /// The parts as a table on X^{<=m+1}.
    [[nodiscard]] BoundedFn as_function() const;

    friend bool operator==(const PartialSpec&, const PartialSpec&) = default;

private:
    Alphabet alphabet_;
    std::size_t m_;
    std::vector<Str> outputs_;
};

/// One report per condition, all evaluated inside the supplied arities:
/// (a) F(F_k(x)) = F_k(x) for k <= m+1;
/// (b) F(x) = F(xF(ε)) for letters x;
/// (c) F(F(xy)z) = F(xF(yz)) for letters x, z and |xyz| <= m+2;
/// (d) F(yz) = F(F(y)z) for letters z and |yz| <= m+1, i.e. the recursion itself
///     already holds on the supplied parts. Without (d), parts such as F(a) = ε,
///     F(aa) = b pass (a)-(c) yet admit no associative extension.
struct ConditionReports {
    CheckReport a;
    CheckReport b;
    CheckReport c;
    CheckReport d;

    [[nodiscard]] bool all_hold() const {
        return !a.fails() && !b.fails() && !c.fails() && !d.fails();
    }
};

[[nodiscard]] ConditionReports verify_conditions(const PartialSpec& spec, const Exec& exec = {});

class ConditionsFailed : public Error {
public:
    ConditionsFailed(const std::string& what, ConditionReports reports)
        : Error(what), reports_(std::move(reports)) {}
    [[nodiscard]] const ConditionReports& reports() const noexcept { return reports_; }

private:
    ConditionReports reports_;
};

/// The recursion alone, without checking the conditions. Agrees with the parts on
/// X^{<=m+1}; every longer string is evaluated from its prefix.
[[nodiscard]] BoundedFn extend_by_recursion(const PartialSpec& spec, std::size_t bound,
                                            const Exec& exec = {});

/// Verifies the conditions, then extends. Throws ConditionsFailed, or
/// InvalidArgument when bound < m+2.
[[nodiscard]] BoundedFn extend(const PartialSpec& spec, std::size_t bound, const Exec& exec = {});

/// With F and G associative and m-bounded on X^{<=L} (verified first, else
/// PreconditionViolated), checks F = G whenever their parts of arity <= m+1 agree.
/// Vacuous with a note when the low-arity parts differ.
[[nodiscard]] CheckReport check_determination(const BoundedFn& f, const BoundedFn& g,
                                              std::size_t m, std::size_t bound,
                                              const Exec& exec = {});

/// F with its parts of arity <= k replaced by the identity. Requires k <= m and F
/// associative and m-bounded on X^{<=L} (else InvalidArgument / PreconditionViolated).
[[nodiscard]] BoundedFn identity_patch(const BoundedFn& f, std::size_t k, std::size_t m,
                                       std::size_t bound, const Exec& exec = {});

/// Every m-bounded PartialSpec over the alphabet; the output at the highest rank
/// varies fastest. Throws InvalidArgument when there are more than 2^24.
[[nodiscard]] std::vector<PartialSpec> enumerate_partial_specs(const Alphabet& alphabet,
                                                               std::size_t m);

}  // namespace strassoc
