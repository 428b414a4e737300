#include "qonion/bytes.hpp"

#include <stdexcept>

namespace qonion {

std::string to_hex(ByteView data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

std::string short_hex(ByteView data) {
  return to_hex(data.subspan(0, data.size() < 8 ? data.size() : 8));
}

void put_be32(Bytes& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_be64(Bytes& out, std::uint64_t v) {
  put_be32(out, static_cast<std::uint32_t>(v >> 32));
  put_be32(out, static_cast<std::uint32_t>(v));
}

std::uint32_t get_be32(ByteView data, std::size_t offset) {
  if (offset + 4 > data.size()) {
    throw std::out_of_range("get_be32 past end of buffer");
  }
  return (static_cast<std::uint32_t>(data[offset]) << 24) |
         (static_cast<std::uint32_t>(data[offset + 1]) << 16) |
         (static_cast<std::uint32_t>(data[offset + 2]) << 8) |
         static_cast<std::uint32_t>(data[offset + 3]);
}

void append(Bytes& out, ByteView data) {
  out.insert(out.end(), data.begin(), data.end());
}

void append_lp(Bytes& out, ByteView data) {
  put_be32(out, static_cast<std::uint32_t>(data.size()));
  append(out, data);
}

bool all_zero(ByteView data) {
  for (std::uint8_t b : data) {
    if (b != 0) return false;
  }
  return true;
}

}  // namespace qonion
