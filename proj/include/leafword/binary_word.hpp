// binary_word.hpp - finite words over {0,1}.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace leafword {

class BinaryWord {
public:
    BinaryWord() = default;

    // Throws std::invalid_argument if a letter is not 0 or 1.
    explicit BinaryWord(std::vector<std::uint8_t> letters);

    // ASCII '0'/'1' string; the empty string is the empty word.
    static BinaryWord parse(std::string_view text);

    // The n low bits of `bits`, most significant first.
    static BinaryWord from_bits(std::uint64_t bits, std::size_t n);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<std::uint8_t>& letters() const { return letters_; }

    std::size_t ones() const;

    BinaryWord prefix(std::size_t length) const;
    BinaryWord suffix(std::size_t length) const;
    BinaryWord factor(std::size_t start, std::size_t length) const;
    BinaryWord reversed() const;

    void push_back(std::uint8_t letter);
    BinaryWord operator+(const BinaryWord& rhs) const;

    std::string str() const;

    // Lexicographic on the letters.
    auto operator<=>(const BinaryWord&) const = default;

private:
    std::vector<std::uint8_t> letters_;
};

// All 2^n words of length n in lexicographic order. n <= 30.
std::vector<BinaryWord> all_words(std::size_t n);

}  // namespace leafword
