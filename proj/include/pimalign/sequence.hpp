#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pimalign/errors.hpp"

namespace pimalign {

// DNA string packed two bits per character: A=00, C=01, G=10, T=11.
// The first character sits in the least-significant bits of the first word,
// so one 32-bit word holds 16 characters. Bits past `length` are zero.
struct Sequence {
    std::vector<uint32_t> words;
    std::size_t length = 0;

    static constexpr std::size_t kCharsPerWord = 16;
    // 2^26 characters: keeps 32-bit cells overflow-free for |scores| <= 16.
    static constexpr std::size_t kMaxLength = std::size_t{1} << 26;

    std::size_t word_count() const { return words.size(); }

    uint8_t code_at(std::size_t i) const {
        return static_cast<uint8_t>((words[i / kCharsPerWord] >> (2 * (i % kCharsPerWord))) & 3u);
    }

    bool operator==(const Sequence&) const = default;
};

Sequence encode_sequence(std::string_view text);
std::string decode_sequence(const Sequence& seq);

char code_to_char(uint8_t code);

} // namespace pimalign
