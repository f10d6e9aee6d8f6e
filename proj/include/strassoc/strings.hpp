#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace strassoc {

/// A finite string of letters. Letters are single bytes; which bytes are legal
/// is decided by the Alphabet a string is used with. The empty Str is epsilon.
class Str {
public:
    Str() = default;
    explicit Str(std::string letters) : letters_(std::move(letters)) {}
    explicit Str(std::string_view letters) : letters_(letters) {}
    explicit Str(const char* letters) : letters_(letters) {}

    [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
    [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
    [[nodiscard]] char operator[](std::size_t i) const { return letters_[i]; }
    [[nodiscard]] const std::string& text() const noexcept { return letters_; }
    [[nodiscard]] std::string_view view() const noexcept { return letters_; }

    [[nodiscard]] Str substr(std::size_t pos, std::size_t len = std::string::npos) const {
        return Str(letters_.substr(pos, len));
    }

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    Str& operator+=(const Str& rhs) {
        letters_ += rhs.letters_;
        return *this;
    }
    Str& operator+=(char letter) {
        letters_.push_back(letter);
        return *this;
    }

    friend Str operator+(Str lhs, const Str& rhs) { return lhs += rhs; }

    friend bool operator==(const Str&, const Str&) = default;
    friend std::strong_ordering operator<=>(const Str&, const Str&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Str& s) {
        if (s.empty()) return os << "ε";
        return os << s.letters_;
    }

private:
    std::string letters_;
};

/// A nonempty ordered set of distinct single-byte letters. The declared order is
/// the "alphabetical" order used by sorting and by length-lex enumeration.
class Alphabet {
public:
    static constexpr int kNotALetter = -1;

    explicit Alphabet(std::string_view letters);
    Alphabet(std::initializer_list<char> letters) : Alphabet(std::string(letters)) {}

    [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
    [[nodiscard]] char letter(std::size_t index) const { return letters_.at(index); }
    [[nodiscard]] const std::string& letters() const noexcept { return letters_; }

    /// Position of `c` in the declared order, or kNotALetter.
    [[nodiscard]] int index_of(char c) const noexcept {
        return index_[static_cast<unsigned char>(c)];
    }
    [[nodiscard]] bool contains(char c) const noexcept { return index_of(c) != kNotALetter; }
    [[nodiscard]] bool contains(const Str& s) const noexcept;

    /// Throws AlphabetMismatch naming the first offending letter.
    void require(const Str& s) const;
    void require(char c) const;

    /// |X^0| + ... + |X^len|, i.e. the number of strings of length < len+1.
    [[nodiscard]] std::uint64_t count_up_to(std::size_t len) const;
    /// Number of strings strictly shorter than `len`; the rank of the first string of that length.
    [[nodiscard]] std::uint64_t offset_of_length(std::size_t len) const;

    /// Position of `s` in length-lex order over this alphabet (epsilon has rank 0).
    [[nodiscard]] std::uint64_t rank(const Str& s) const;
    /// Inverse of rank().
    [[nodiscard]] Str unrank(std::uint64_t r) const;

    /// Length-lex comparison under the declared letter order.
    [[nodiscard]] bool less(const Str& a, const Str& b) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.letters_ == b.letters_; }

private:
    std::string letters_;
    std::array<int, 256> index_{};
};

/// Concatenation x·y; both operands must be strings over `alphabet`.
[[nodiscard]] Str concat(const Alphabet& alphabet, const Str& x, const Str& y);

/// n-fold concatenation of x; power(x, 0) is epsilon.
[[nodiscard]] Str power(const Str& x, std::size_t n);

/// Forward range over every string of length 0..max_len in length-lex order.
class StringEnumeration {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Str;
        using difference_type = std::ptrdiff_t;
        using pointer = const Str*;
        using reference = const Str&;

        iterator() = default;
        iterator(const Alphabet* alphabet, std::size_t max_len, bool at_end);

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
        }

    private:
        const Alphabet* alphabet_ = nullptr;
        std::size_t max_len_ = 0;
        std::vector<std::size_t> digits_;
        Str current_;
        bool done_ = true;
    };

    StringEnumeration(const Alphabet& alphabet, std::size_t max_len)
        : alphabet_(&alphabet), max_len_(max_len) {}

    [[nodiscard]] iterator begin() const { return {alphabet_, max_len_, false}; }
    [[nodiscard]] iterator end() const { return {alphabet_, max_len_, true}; }
    [[nodiscard]] std::uint64_t size() const { return alphabet_->count_up_to(max_len_); }

private:
    const Alphabet* alphabet_;
    std::size_t max_len_;
};

/// Strings of length 0..max_len, each exactly once, ordered by length then
/// lexicographically in the alphabet's order.
[[nodiscard]] inline StringEnumeration enumerate_strings(const Alphabet& alphabet,
                                                         std::size_t max_len) {
    return {alphabet, max_len};
}

/// Materialized enumerate_strings(); element i has rank i.
[[nodiscard]] std::vector<Str> all_strings(const Alphabet& alphabet, std::size_t max_len);

/// Strings of exactly `len` letters in lexicographic order.
[[nodiscard]] std::vector<Str> strings_of_length(const Alphabet& alphabet, std::size_t len);

}  // namespace strassoc
