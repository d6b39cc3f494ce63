#pragma once

#include <string>

#include "ghkit/field.hpp"

namespace ghkit {

// Canonical byte encoding of a word, for hashed membership sets.
inline std::string word_key(const Word& w) {
    std::string s;
    s.resize(w.size() * 2);
    for (size_t i = 0; i < w.size(); ++i) {
        s[2 * i] = char(w[i] & 0xff);
        s[2 * i + 1] = char(w[i] >> 8);
    }
    return s;
}

} // namespace ghkit
