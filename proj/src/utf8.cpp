#include "flatlex/utf8.hpp"

namespace flatlex::utf8 {

Decoded decode(std::string_view bytes, std::size_t pos) {
  const auto fail = Decoded{0, 1, false};
  if (pos >= bytes.size()) return fail;

  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(bytes[pos + i]);
  };
  const unsigned char b0 = byte(0);

  if (b0 < 0x80) return Decoded{b0, 1, true};

  std::size_t len;
  char32_t scalar;
  char32_t min_scalar;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    scalar = b0 & 0x1F;
    min_scalar = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    scalar = b0 & 0x0F;
    min_scalar = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    scalar = b0 & 0x07;
    min_scalar = 0x10000;
  } else {
    return fail;
  }

  if (pos + len > bytes.size()) return fail;
  for (std::size_t i = 1; i < len; ++i) {
    if ((byte(i) & 0xC0) != 0x80) return fail;
    scalar = (scalar << 6) | (byte(i) & 0x3F);
  }
  if (scalar < min_scalar) return fail;                    // overlong
  if (scalar >= 0xD800 && scalar <= 0xDFFF) return fail;   // surrogate
  if (scalar > 0x10FFFF) return fail;
  return Decoded{scalar, len, true};
}

void encode(char32_t scalar, std::string& out) {
  if (scalar < 0x80) {
    out.push_back(static_cast<char>(scalar));
  } else if (scalar < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (scalar >> 6)));
    out.push_back(static_cast<char>(0x80 | (scalar & 0x3F)));
  } else if (scalar < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (scalar >> 12)));
    out.push_back(static_cast<char>(0x80 | ((scalar >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (scalar & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (scalar >> 18)));
    out.push_back(static_cast<char>(0x80 | ((scalar >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((scalar >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (scalar & 0x3F)));
  }
}

std::string encode(char32_t scalar) {
  std::string out;
  encode(scalar, out);
  return out;
}

}  // namespace flatlex::utf8
