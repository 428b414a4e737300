#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qonion {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline Bytes to_bytes(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

inline ByteView view(const Bytes& b) {
  return ByteView(b.data(), b.size());
}

std::string to_hex(ByteView data);

// First 8 bytes of a digest, hex-encoded; used for compact transcript lines.
std::string short_hex(ByteView data);

void put_be32(Bytes& out, std::uint32_t v);
void put_be64(Bytes& out, std::uint64_t v);
std::uint32_t get_be32(ByteView data, std::size_t offset);

void append(Bytes& out, ByteView data);

// 4-byte big-endian length followed by the bytes. All variable-length fields
// in canonical messages use this framing so concatenations cannot be spliced.
void append_lp(Bytes& out, ByteView data);

bool all_zero(ByteView data);

}  // namespace qonion
