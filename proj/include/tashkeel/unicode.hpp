#pragma once

#include <string>
#include <string_view>

namespace tashkeel {

// Strict UTF-8 decoding: overlong forms, surrogates and codepoints past
// U+10FFFF are rejected with Error(InvalidUtf8) naming the byte offset.
std::u32string utf8_decode(std::string_view bytes);

std::string utf8_encode(std::u32string_view codepoints);

void utf8_append(std::string& out, char32_t cp);

}  // namespace tashkeel
