// Generated from Unicode character data: letters in U+0080..U+024F folded to
// lowercase base letters; nullptr marks non-letters (token separators).
#pragma once

namespace atlas::detail {

inline constexpr char32_t kFoldTableFirst = 0x80;
inline constexpr char32_t kFoldTableLast = 0x24F;

inline constexpr const char* kLatinFold[] = {
    nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr,
    nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr,
    nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr,
    nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr,
    nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr,
    nullptr, nullptr, "a", nullptr, nullptr, nullptr, nullptr, nullptr,
    nullptr, nullptr, nullptr, nullptr, nullptr, "\xc2\xb5", nullptr, nullptr,
    nullptr, nullptr, "o", nullptr, nullptr, nullptr, nullptr, nullptr,
    "a", "a", "a", "a", "a", "a", "ae", "c",
    "e", "e", "e", "e", "i", "i", "i", "i",
    "d", "n", "o", "o", "o", "o", "o", nullptr,
    "o", "u", "u", "u", "u", "y", "th", "ss",
    "a", "a", "a", "a", "a", "a", "ae", "c",
    "e", "e", "e", "e", "i", "i", "i", "i",
    "d", "n", "o", "o", "o", "o", "o", nullptr,
    "o", "u", "u", "u", "u", "y", "th", "y",
    "a", "a", "a", "a", "a", "a", "c", "c",
    "c", "c", "c", "c", "c", "c", "d", "d",
    "d", "d", "e", "e", "e", "e", "e", "e",
    "e", "e", "e", "e", "g", "g", "g", "g",
    "g", "g", "g", "g", "h", "h", "h", "h",
    "i", "i", "i", "i", "i", "i", "i", "i",
    "i", "i", "ij", "ij", "j", "j", "k", "k",
    "k", "l", "l", "l", "l", "l", "l", "l",
    "l", "l", "l", "n", "n", "n", "n", "n",
    "n", "n", "n", "n", "o", "o", "o", "o",
    "o", "o", "oe", "oe", "r", "r", "r", "r",
    "r", "r", "s", "s", "s", "s", "s", "s",
    "s", "s", "t", "t", "t", "t", "t", "t",
    "u", "u", "u", "u", "u", "u", "u", "u",
    "u", "u", "u", "u", "w", "w", "y", "y",
    "y", "z", "z", "z", "z", "z", "z", "s",
    "b", "b", "\xc6\x83", "\xc6\x83", "\xc6\x85", "\xc6\x85", "\xc9\x94", "c",
    "c", "d", "d", "d", "d", "\xc6\x8d", "\xc7\x9d", "\xc9\x99",
    "\xc9\x9b", "f", "f", "g", "\xc9\xa3", "\xc6\x95", "\xc9\xa9", "i",
    "k", "k", "l", "\xc6\x9b", "\xc9\xaf", "n", "n", "o",
    "o", "o", "\xc6\xa3", "\xc6\xa3", "p", "p", "\xca\x80", "\xc6\xa8",
    "\xc6\xa8", "\xca\x83", "\xc6\xaa", "t", "t", "t", "t", "u",
    "u", "u", "v", "y", "y", "z", "z", "\xca\x92",
    "\xc6\xb9", "\xc6\xb9", "\xc6\xba", "\xc6\xbb", "\xc6\xbd", "\xc6\xbd", "\xc6\xbe", "\xc6\xbf",
    "\xc7\x80", "\xc7\x81", "\xc7\x82", "\xc7\x83", "dz", "dz", "dz", "lj",
    "lj", "lj", "nj", "nj", "nj", "a", "a", "i",
    "i", "o", "o", "u", "u", "u", "u", "u",
    "u", "u", "u", "u", "u", "\xc7\x9d", "a", "a",
    "a", "a", "\xc7\xa3", "\xc7\xa3", "g", "g", "g", "g",
    "k", "k", "o", "o", "o", "o", "\xc7\xaf", "\xc7\xaf",
    "j", "dz", "dz", "dz", "g", "g", "\xc6\x95", "\xc6\xbf",
    "n", "n", "a", "a", "\xc7\xbd", "\xc7\xbd", "\xc7\xbf", "\xc7\xbf",
    "a", "a", "a", "a", "e", "e", "e", "e",
    "i", "i", "i", "i", "o", "o", "o", "o",
    "r", "r", "r", "r", "u", "u", "u", "u",
    "s", "s", "t", "t", "\xc8\x9d", "\xc8\x9d", "h", "h",
    "\xc6\x9e", "d", "ou", "ou", "z", "z", "a", "a",
    "e", "e", "o", "o", "o", "o", "o", "o",
    "o", "o", "y", "y", "l", "n", "t", "j",
    "db", "qp", "a", "c", "c", "l", "t", "s",
    "z", "\xc9\x82", "\xc9\x82", "b", "u", "v", "e", "e",
    "j", "j", "\xc9\x8b", "\xc9\x8b", "r", "r", "y", "y",
};

}  // namespace atlas::detail
