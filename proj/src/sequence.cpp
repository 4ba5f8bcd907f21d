#include "pimalign/sequence.hpp"

namespace pimalign {

namespace {

int char_to_code(char c) {
    switch (c) {
        case 'A': case 'a': return 0;
        case 'C': case 'c': return 1;
        case 'G': case 'g': return 2;
        case 'T': case 't': return 3;
        default: return -1;
    }
}

} // namespace

Sequence encode_sequence(std::string_view text) {
    if (text.size() > Sequence::kMaxLength)
        throw InputError("sequence length " + std::to_string(text.size()) +
                         " exceeds the " + std::to_string(Sequence::kMaxLength) +
                         "-character cap");
    Sequence s;
    s.length = text.size();
    s.words.assign((text.size() + Sequence::kCharsPerWord - 1) / Sequence::kCharsPerWord, 0u);
    for (std::size_t i = 0; i < text.size(); ++i) {
        int code = char_to_code(text[i]);
        if (code < 0) throw InvalidCharacterError(i, text[i]);
        s.words[i / Sequence::kCharsPerWord] |=
            static_cast<uint32_t>(code) << (2 * (i % Sequence::kCharsPerWord));
    }
    return s;
}

std::string decode_sequence(const Sequence& seq) {
    std::string out;
    out.reserve(seq.length);
    for (std::size_t i = 0; i < seq.length; ++i) out.push_back(code_to_char(seq.code_at(i)));
    return out;
}

char code_to_char(uint8_t code) {
    static constexpr char table[4] = {'A', 'C', 'G', 'T'};
    return table[code & 3u];
}

} // namespace pimalign
