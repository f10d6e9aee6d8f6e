#include "strassoc/strings.hpp"

#include <cctype>
#include <limits>

#include "strassoc/error.hpp"

namespace strassoc {

namespace {

std::string describe_letter(char c) {
    if (std::isprint(static_cast<unsigned char>(c))) return std::string("'") + c + "'";
    return "byte " + std::to_string(static_cast<unsigned char>(c));
}

}  // namespace

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
    index_.fill(kNotALetter);
    if (letters_.empty()) throw InvalidArgument("alphabet must be nonempty");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const auto c = static_cast<unsigned char>(letters_[i]);
        if (!std::isgraph(c))
            throw InvalidArgument("alphabet letter " + describe_letter(letters_[i]) +
                                  " is not a printable symbol");
        if (index_[c] != kNotALetter)
            throw InvalidArgument("alphabet letter " + describe_letter(letters_[i]) +
                                  " is repeated");
        index_[c] = static_cast<int>(i);
    }
}

bool Alphabet::contains(const Str& s) const noexcept {
    for (char c : s)
        if (!contains(c)) return false;
    return true;
}

void Alphabet::require(char c) const {
    if (!contains(c))
        throw AlphabetMismatch("letter " + describe_letter(c) + " is not in alphabet \"" +
                               letters_ + "\"");
}

void Alphabet::require(const Str& s) const {
    for (char c : s) require(c);
}

std::uint64_t Alphabet::offset_of_length(std::size_t len) const {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max() / 2;
    const std::uint64_t k = size();
    std::uint64_t total = 0;
    std::uint64_t layer = 1;
    for (std::size_t i = 0; i < len; ++i) {
        total += layer;
        if (layer > kMax / k || total > kMax)
            throw InvalidArgument("bounded domain too large to enumerate");
        layer *= k;
    }
    return total;
}

std::uint64_t Alphabet::count_up_to(std::size_t len) const { return offset_of_length(len + 1); }

std::uint64_t Alphabet::rank(const Str& s) const {
    std::uint64_t within = 0;
    for (char c : s) {
        const int d = index_of(c);
        if (d == kNotALetter) require(c);
        within = within * size() + static_cast<std::uint64_t>(d);
    }
    return offset_of_length(s.size()) + within;
}

Str Alphabet::unrank(std::uint64_t r) const {
    std::size_t len = 0;
    std::uint64_t layer = 1;
    while (r >= layer) {
        r -= layer;
        layer *= size();
        ++len;
    }
    std::string out(len, letters_[0]);
    for (std::size_t i = len; i-- > 0;) {
        out[i] = letters_[r % size()];
        r /= size();
    }
    return Str(std::move(out));
}

bool Alphabet::less(const Str& a, const Str& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int da = index_of(a[i]);
        const int db = index_of(b[i]);
        if (da != db) return da < db;
    }
    return false;
}

Str concat(const Alphabet& alphabet, const Str& x, const Str& y) {
    alphabet.require(x);
    alphabet.require(y);
    return x + y;
}

Str power(const Str& x, std::size_t n) {
    std::string out;
    out.reserve(x.size() * n);
    for (std::size_t i = 0; i < n; ++i) out += x.text();
    return Str(std::move(out));
}

StringEnumeration::iterator::iterator(const Alphabet* alphabet, std::size_t max_len, bool at_end)
    : alphabet_(alphabet), max_len_(max_len), done_(at_end) {}

StringEnumeration::iterator& StringEnumeration::iterator::operator++() {
    // Odometer increment over digit positions; rolling over every position moves
    // to the first string of the next length.
    const std::size_t k = alphabet_->size();
    std::size_t i = digits_.size();
    while (i > 0) {
        --i;
        if (++digits_[i] < k) {
            std::string text = current_.text();
            text[i] = alphabet_->letter(digits_[i]);
            for (std::size_t j = i + 1; j < digits_.size(); ++j) {
                digits_[j] = 0;
                text[j] = alphabet_->letter(0);
            }
            current_ = Str(std::move(text));
            return *this;
        }
    }
    if (digits_.size() == max_len_) {
        done_ = true;
        current_ = Str();
        return *this;
    }
    digits_.assign(digits_.size() + 1, 0);
    current_ = Str(std::string(digits_.size(), alphabet_->letter(0)));
    return *this;
}

std::vector<Str> all_strings(const Alphabet& alphabet, std::size_t max_len) {
    std::vector<Str> out;
    out.reserve(alphabet.count_up_to(max_len));
    for (const Str& s : enumerate_strings(alphabet, max_len)) out.push_back(s);
    return out;
}

std::vector<Str> strings_of_length(const Alphabet& alphabet, std::size_t len) {
    const std::uint64_t first = alphabet.offset_of_length(len);
    const std::uint64_t last = alphabet.offset_of_length(len + 1);
    std::vector<Str> out;
    out.reserve(last - first);
    for (std::uint64_t r = first; r < last; ++r) out.push_back(alphabet.unrank(r));
    return out;
}

}  // namespace strassoc
