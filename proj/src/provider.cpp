#include "qonion/crypto/provider.hpp"

#include <cstring>

#include "qonion/errors.hpp"

namespace qonion::crypto {

SymKey SymKey::from(ByteView data) {
  if (data.size() != 32) {
    fail(ErrorKind::LengthMismatch, "symmetric key must be 32 bytes");
  }
  SymKey k;
  std::memcpy(k.bytes.data(), data.data(), 32);
  return k;
}

Seed Seed::from(ByteView data) {
  if (data.size() != 32) {
    fail(ErrorKind::LengthMismatch, "seed must be 32 bytes");
  }
  Seed s;
  std::memcpy(s.bytes.data(), data.data(), 32);
  return s;
}

Seed Seed::from_u64(std::uint64_t v) {
  Bytes material = to_bytes("qonion.seed.u64");
  put_be64(material, v);
  Seed s;
  Digest d = sha256(view(material));
  std::memcpy(s.bytes.data(), d.data(), 32);
  return s;
}

Bytes SymCiphertext::serialize() const {
  Bytes out;
  out.reserve(iv.size() + body.size());
  append(out, view(iv));
  append(out, view(body));
  return out;
}

Rng::Rng(Seed seed) : seed_(seed), counter_(0), buffer_pos_(0) {}

void Rng::refill() {
  Bytes material;
  append(material, seed_.view());
  append(material, view(to_bytes("qonion.qrng")));
  put_be64(material, counter_++);
  Digest d = sha256(view(material));
  buffer_.assign(d.begin(), d.end());
  buffer_pos_ = 0;
}

Bytes Rng::draw(std::size_t len) {
  Bytes out;
  out.reserve(len);
  while (out.size() < len) {
    if (buffer_pos_ >= buffer_.size()) refill();
    std::size_t take = std::min(len - out.size(), buffer_.size() - buffer_pos_);
    out.insert(out.end(), buffer_.begin() + buffer_pos_,
               buffer_.begin() + buffer_pos_ + take);
    buffer_pos_ += take;
  }
  return out;
}

SymKey Rng::draw_key() { return SymKey::from(view(draw(32))); }

Seed Rng::draw_seed() { return Seed::from(view(draw(32))); }

Seed Provider::kdf(ByteView context, const SymKey& key) const {
  // hash(len(context) || context || key): the length prefix keeps distinct
  // (context, key) splits from colliding.
  Bytes material;
  append_lp(material, context);
  append(material, key.view());
  Digest d = hash(view(material));
  return Seed::from(ByteView(d.data(), d.size()));
}

Bytes Provider::prg(const Seed& seed, std::size_t len) const {
  // Counter-mode expansion; block i depends only on (seed, i), which gives
  // the stream prefix property.
  Bytes out;
  out.reserve(len);
  std::uint64_t counter = 0;
  while (out.size() < len) {
    Bytes material;
    append(material, seed.view());
    append(material, view(to_bytes("qonion.prg")));
    put_be64(material, counter++);
    Digest d = hash(view(material));
    std::size_t take = std::min(len - out.size(), d.size());
    out.insert(out.end(), d.begin(), d.begin() + take);
  }
  return out;
}

}  // namespace qonion::crypto
