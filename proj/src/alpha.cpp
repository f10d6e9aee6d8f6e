#include "strassoc/alpha.hpp"

#include <string>

namespace strassoc {

const char* to_string(AlphaViolation v) noexcept {
    switch (v) {
        case AlphaViolation::window_shape: return "window_shape";
        case AlphaViolation::not_fixed_below: return "not_fixed_below";
        case AlphaViolation::below_argument: return "below_argument";
        case AlphaViolation::wrong_residue: return "wrong_residue";
        case AlphaViolation::not_periodic: return "not_periodic";
    }
    return "?";
}

AlphaFn::AlphaFn(Structured s) {
    if (s.ell == 0)
        throw InvalidAlpha(AlphaViolation::window_shape, "period ell must be positive");
    if (s.values.size() != s.n1 + s.ell)
        throw InvalidAlpha(AlphaViolation::window_shape,
                           "window must hold n1 + ell = " + std::to_string(s.n1 + s.ell) +
                               " values, got " + std::to_string(s.values.size()));
    for (std::uint64_t n = 0; n < s.n1; ++n) {
        if (s.values[n] != n)
            throw InvalidAlpha(AlphaViolation::not_fixed_below,
                               "alpha(" + std::to_string(n) + ") = " +
                                   std::to_string(s.values[n]) + " but must equal " +
                                   std::to_string(n) + " below n1");
    }
    for (std::uint64_t n = s.n1; n < s.n1 + s.ell; ++n) {
        const std::uint64_t v = s.values[n];
        if (v < n)
            throw InvalidAlpha(AlphaViolation::below_argument,
                               "alpha(" + std::to_string(n) + ") = " + std::to_string(v) +
                                   " is smaller than " + std::to_string(n));
        if ((v - n) % s.ell != 0)
            throw InvalidAlpha(AlphaViolation::wrong_residue,
                               "alpha(" + std::to_string(n) + ") = " + std::to_string(v) +
                                   " is not congruent to " + std::to_string(n) + " modulo " +
                                   std::to_string(s.ell));
    }
    repr_ = std::move(s);
}

std::uint64_t AlphaFn::operator()(std::uint64_t n) const {
    if (is_identity()) return n;
    const auto& s = structured();
    if (n < s.n1 + s.ell) return s.values[n];
    return s.values[s.n1 + (n - s.n1) % s.ell];
}

bool AlphaFn::standard() const noexcept {
    if (is_identity()) return true;
    return std::get<Structured>(repr_).n1 > 0;
}

PsiTable::PsiTable(std::map<std::uint64_t, Str> entries) : entries_(std::move(entries)) {
    for (const auto& [n, s] : entries_) {
        if (s.size() != n)
            throw InvalidArgument("psi(" + std::to_string(n) + ") = \"" + s.text() + "\" has " +
                                  std::to_string(s.size()) + " letters, expected " +
                                  std::to_string(n));
    }
}

const Str& PsiTable::at(std::uint64_t n) const {
    auto it = entries_.find(n);
    if (it == entries_.end()) throw MissingEntry("psi(" + std::to_string(n) + ") is not defined");
    return it->second;
}

}  // namespace strassoc
