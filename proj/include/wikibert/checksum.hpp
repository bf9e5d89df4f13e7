#pragma once

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wikibert {

// FNV-1a 64. Manifests use it for change detection, not integrity against
// an adversary.
inline uint64_t fnv1a64(std::string_view data, uint64_t h = 0xCBF29CE484222325ULL) {
  for (unsigned char c : std::string_view(data)) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

inline std::string to_hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

inline std::string checksum_bytes(std::string_view data) {
  return "fnv64:" + to_hex64(fnv1a64(data));
}

inline std::string checksum_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file for checksum: " + path);
  uint64_t h = 0xCBF29CE484222325ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    h = fnv1a64(std::string_view(buf, static_cast<size_t>(in.gcount())), h);
  }
  return "fnv64:" + to_hex64(h);
}

}  // namespace wikibert
