#pragma once

#include <array>
#include <cstdint>

#include "qonion/bytes.hpp"

namespace qonion::crypto {

using Digest = std::array<std::uint8_t, 32>;

// FIPS 180-4 SHA-256. Self-contained so the deterministic provider has no
// crypto-library dependency; the production provider goes through OpenSSL.
class Sha256 {
 public:
  Sha256();

  Sha256& update(ByteView data);
  Digest finalize();

 private:
  void process_block(const std::uint8_t* block);

  std::array<std::uint32_t, 8> state_;
  std::array<std::uint8_t, 64> buffer_;
  std::size_t buffer_len_;
  std::uint64_t total_len_;
};

Digest sha256(ByteView data);

// HMAC-SHA-256 (RFC 2104).
Digest hmac_sha256(ByteView key, ByteView message);

}  // namespace qonion::crypto
