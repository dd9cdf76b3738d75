#ifndef FLATLEX_UTF8_HPP
#define FLATLEX_UTF8_HPP

#include <cstddef>
#include <string>
#include <string_view>

namespace flatlex::utf8 {

struct Decoded {
  char32_t scalar;     // valid only when ok
  std::size_t length;  // bytes consumed; 1 on failure so callers can resync
  bool ok;
};

// Decodes the scalar value starting at bytes[pos]. Rejects overlong forms,
// surrogates and values above U+10FFFF.
Decoded decode(std::string_view bytes, std::size_t pos);

void encode(char32_t scalar, std::string& out);
std::string encode(char32_t scalar);

}  // namespace flatlex::utf8

#endif  // FLATLEX_UTF8_HPP
