#ifndef KZCBH_WORD_HPP
#define KZCBH_WORD_HPP

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace kzcbh {

/* A word over the alphabet {0, 1, ..., n-1}. Words are ordered graded-lex:
 * first by length, then lexicographically letter by letter. This is the
 * canonical term order used throughout: series terms, basis enumerations and
 * serialised documents all follow it. */
class Word {
  public:
    Word() = default;

    explicit Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {}

    Word(std::initializer_list<int> letters)
    {
        letters_.reserve(letters.size());
        for (int l : letters)
            letters_.push_back(checked_letter(l));
    }

    static Word empty() { return Word(); }

    static Word single(int letter) { return Word({letter}); }

    static Word from_ints(const std::vector<int> &letters)
    {
        std::vector<std::uint8_t> v;
        v.reserve(letters.size());
        for (int l : letters)
            v.push_back(checked_letter(l));
        return Word(std::move(v));
    }

    // Parses a string of decimal digits, e.g. "0110". Only suitable for
    // alphabets of size <= 10.
    static Word from_digits(const std::string &digits)
    {
        std::vector<std::uint8_t> v;
        v.reserve(digits.size());
        for (char c : digits) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("Word::from_digits: invalid character in \"" + digits + "\"");
            v.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return Word(std::move(v));
    }

    std::size_t size() const { return letters_.size(); }
    bool is_empty() const { return letters_.empty(); }
    int letter(std::size_t i) const { return letters_[i]; }
    const std::vector<std::uint8_t> &letters() const { return letters_; }

    int max_letter() const
    {
        int m = -1;
        for (auto l : letters_)
            m = std::max<int>(m, l);
        return m;
    }

    Word concat(const Word &rhs) const
    {
        std::vector<std::uint8_t> v = letters_;
        v.insert(v.end(), rhs.letters_.begin(), rhs.letters_.end());
        return Word(std::move(v));
    }

    // Order-preserving subword at the given positions (positions strictly
    // increasing).
    Word subword(const std::vector<std::size_t> &positions) const
    {
        std::vector<std::uint8_t> v;
        v.reserve(positions.size());
        for (std::size_t p : positions)
            v.push_back(letters_.at(p));
        return Word(std::move(v));
    }

    // Subword of positions selected by set bits of the mask; size() must not
    // exceed the mask width.
    Word subword_mask(std::uint64_t mask) const
    {
        std::vector<std::uint8_t> v;
        for (std::size_t i = 0; i < letters_.size(); ++i)
            if (mask & (std::uint64_t(1) << i))
                v.push_back(letters_[i]);
        return Word(std::move(v));
    }

    Word suffix(std::size_t from) const
    {
        return Word(std::vector<std::uint8_t>(letters_.begin() + from, letters_.end()));
    }

    Word prefix(std::size_t count) const
    {
        return Word(std::vector<std::uint8_t>(letters_.begin(), letters_.begin() + count));
    }

    Word reversed() const
    {
        return Word(std::vector<std::uint8_t>(letters_.rbegin(), letters_.rend()));
    }

    // Applies a letter relabelling: letter l becomes map[l].
    Word relabel(const std::vector<int> &map) const
    {
        std::vector<std::uint8_t> v;
        v.reserve(letters_.size());
        for (auto l : letters_)
            v.push_back(checked_letter(map.at(l)));
        return Word(std::move(v));
    }

    // Count of each letter 0..alphabet-1.
    std::vector<int> letter_counts(int alphabet) const
    {
        std::vector<int> counts(alphabet, 0);
        for (auto l : letters_) {
            if (l >= alphabet)
                throw std::domain_error("Word: letter " + std::to_string(int(l)) +
                                        " outside alphabet of size " + std::to_string(alphabet));
            ++counts[l];
        }
        return counts;
    }

    std::string str() const
    {
        if (letters_.empty())
            return "e";
        std::string s;
        bool wide = false;
        for (auto l : letters_)
            if (l > 9)
                wide = true;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (wide && i)
                s += '.';
            s += std::to_string(int(letters_[i]));
        }
        return s;
    }

    bool operator==(const Word &rhs) const { return letters_ == rhs.letters_; }
    bool operator!=(const Word &rhs) const { return letters_ != rhs.letters_; }

    bool operator<(const Word &rhs) const
    {
        if (letters_.size() != rhs.letters_.size())
            return letters_.size() < rhs.letters_.size();
        return letters_ < rhs.letters_;
    }

    bool operator>(const Word &rhs) const { return rhs < *this; }
    bool operator<=(const Word &rhs) const { return !(rhs < *this); }
    bool operator>=(const Word &rhs) const { return !(*this < rhs); }

    // Plain lexicographic comparison (prefix precedes extension), used by the
    // Lyndon-word machinery where the grading must not interfere.
    bool lex_less(const Word &rhs) const
    {
        return letters_ < rhs.letters_;
    }

  private:
    static std::uint8_t checked_letter(int l)
    {
        if (l < 0 || l > 255)
            throw std::invalid_argument("Word: letter out of range: " + std::to_string(l));
        return static_cast<std::uint8_t>(l);
    }

    std::vector<std::uint8_t> letters_;
};

} // namespace kzcbh

#endif
