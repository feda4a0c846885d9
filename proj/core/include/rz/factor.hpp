#pragma once

#include <cstdint>
#include <vector>

namespace rz {

// One parse unit: either a fresh byte or a copy of `len` bytes whose
// rightmost previous occurrence starts `dist` positions back (start-to-start,
// which equals the end-to-end offset).
struct Factor {
  enum class Kind : std::uint8_t { kLiteral, kCopy };
  Kind kind = Kind::kLiteral;
  std::uint8_t lit = 0;
  std::uint64_t len = 0;
  std::uint64_t dist = 0;

  static Factor literal(std::uint8_t b) { return {Kind::kLiteral, b, 1, 0}; }
  static Factor copy(std::uint64_t len, std::uint64_t dist) {
    return {Kind::kCopy, 0, len, dist};
  }
  bool operator==(const Factor&) const = default;
};

// Reconstructs the text a factor sequence encodes. Overlapping copies are
// resolved byte-by-byte, matching the streaming producer.
inline std::vector<std::uint8_t> decode_factors(const std::vector<Factor>& fs) {
  std::vector<std::uint8_t> out;
  for (const Factor& f : fs) {
    if (f.kind == Factor::Kind::kLiteral) {
      out.push_back(f.lit);
    } else {
      std::size_t src = out.size() - static_cast<std::size_t>(f.dist);
      for (std::uint64_t k = 0; k < f.len; ++k) out.push_back(out[src + k]);
    }
  }
  return out;
}

}  // namespace rz
