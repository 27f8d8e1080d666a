#include "leafword/binary_word.hpp"

#include <algorithm>
#include <stdexcept>

namespace leafword {

BinaryWord::BinaryWord(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
    for (auto a : letters_)
        if (a > 1) throw std::invalid_argument("binary word letter must be 0 or 1");
}

BinaryWord BinaryWord::parse(std::string_view text) {
    std::vector<std::uint8_t> letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("binary word may only contain '0' and '1': " + std::string(text));
        letters.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    BinaryWord w;
    w.letters_ = std::move(letters);
    return w;
}

BinaryWord BinaryWord::from_bits(std::uint64_t bits, std::size_t n) {
    BinaryWord w;
    w.letters_.resize(n);
    for (std::size_t i = 0; i < n; ++i) w.letters_[i] = static_cast<std::uint8_t>((bits >> (n - 1 - i)) & 1u);
    return w;
}

std::size_t BinaryWord::ones() const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), std::uint8_t{1}));
}

BinaryWord BinaryWord::prefix(std::size_t length) const {
    return factor(0, length);
}

BinaryWord BinaryWord::suffix(std::size_t length) const {
    if (length > size()) throw std::out_of_range("suffix longer than word");
    return factor(size() - length, length);
}

BinaryWord BinaryWord::factor(std::size_t start, std::size_t length) const {
    if (start > size() || length > size() - start) throw std::out_of_range("factor out of range");
    BinaryWord w;
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(start),
                      letters_.begin() + static_cast<std::ptrdiff_t>(start + length));
    return w;
}

BinaryWord BinaryWord::reversed() const {
    BinaryWord w = *this;
    std::reverse(w.letters_.begin(), w.letters_.end());
    return w;
}

void BinaryWord::push_back(std::uint8_t letter) {
    if (letter > 1) throw std::invalid_argument("binary word letter must be 0 or 1");
    letters_.push_back(letter);
}

BinaryWord BinaryWord::operator+(const BinaryWord& rhs) const {
    BinaryWord w = *this;
    w.letters_.insert(w.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return w;
}

std::string BinaryWord::str() const {
    std::string s(letters_.size(), '0');
    for (std::size_t i = 0; i < letters_.size(); ++i) s[i] = static_cast<char>('0' + letters_[i]);
    return s;
}

std::vector<BinaryWord> all_words(std::size_t n) {
    if (n > 30) throw std::invalid_argument("all_words: length too large");
    std::vector<BinaryWord> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) out.push_back(BinaryWord::from_bits(bits, n));
    return out;
}

}  // namespace leafword
