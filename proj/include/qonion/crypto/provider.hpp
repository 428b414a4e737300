#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include "qonion/bytes.hpp"
#include "qonion/crypto/sha256.hpp"

namespace qonion::crypto {

// 256-bit symmetric key. Link keys, session keys and one-time keys all use
// this width so OTP-style XOR combining over 32-byte secrets stays length
// compatible.
struct SymKey {
  std::array<std::uint8_t, 32> bytes{};

  static SymKey from(ByteView data);
  ByteView view() const { return ByteView(bytes.data(), bytes.size()); }
  bool operator==(const SymKey&) const = default;
  auto operator<=>(const SymKey&) const = default;
};

struct Seed {
  std::array<std::uint8_t, 32> bytes{};

  static Seed from(ByteView data);
  static Seed from_u64(std::uint64_t v);
  ByteView view() const { return ByteView(bytes.data(), bytes.size()); }
};

// iv || body, body a positive multiple of the cipher block size.
struct SymCiphertext {
  Bytes iv;
  Bytes body;

  Bytes serialize() const;
};

struct KemKeyPair {
  Bytes public_key;
  Bytes secret_key;
};

struct KemCiphertext {
  Bytes bytes;
};

using SharedSecret = SymKey;

struct SigKeyPair {
  Bytes verification_key;
  Bytes signing_key;
};

struct Signature {
  Bytes bytes;
};

// Deterministic random stream: a hash counter over a 32-byte seed. Stands in
// for the quantum RNG so seeded runs replay byte-identically; draws never
// repeat within a stream.
class Rng {
 public:
  explicit Rng(Seed seed);

  Bytes draw(std::size_t len);
  SymKey draw_key();
  Seed draw_seed();

 private:
  void refill();

  Seed seed_;
  std::uint64_t counter_;
  Bytes buffer_;
  std::size_t buffer_pos_;
};

// Algorithm suite behind the protocol. Two implementations: a fully
// deterministic test suite with no external dependency, and an OpenSSL-backed
// production suite (AES-256-CBC / SHA-256; KEM and signatures are contracted
// to Kyber-class / Dilithium-class algorithms and report unavailability when
// the linked runtime cannot provide them).
class Provider {
 public:
  virtual ~Provider() = default;

  virtual std::string name() const = 0;
  virtual std::size_t block_size() const = 0;

  // Padded mode: fresh IV from iv_source, PKCS#7 padding. For payloads of
  // arbitrary positive length.
  virtual SymCiphertext sym_encrypt(const SymKey& key, ByteView plaintext,
                                    Rng& iv_source) const = 0;
  virtual Bytes sym_decrypt(const SymKey& key, const SymCiphertext& ct) const = 0;

  // Raw mode: zero IV, no padding; a permutation on block-aligned strings.
  // Extension blocks pass through this repeatedly under keys that are not
  // theirs, so decryption must be total.
  virtual Bytes sym_encrypt_raw(const SymKey& key, ByteView blocks) const = 0;
  virtual Bytes sym_decrypt_raw(const SymKey& key, ByteView blocks) const = 0;

  virtual KemKeyPair kem_keygen(const Seed& seed) const = 0;
  virtual std::pair<KemCiphertext, SharedSecret> kem_encapsulate(
      ByteView public_key, Rng& rng) const = 0;
  virtual SharedSecret kem_decapsulate(ByteView secret_key,
                                       const KemCiphertext& ct) const = 0;

  virtual SigKeyPair sig_keygen(const Seed& seed) const = 0;
  virtual Signature sign(ByteView signing_key, ByteView message) const = 0;
  virtual bool verify(ByteView verification_key, ByteView message,
                      const Signature& sig) const = 0;
  virtual std::size_t signature_size() const = 0;
  virtual std::size_t verification_key_size() const = 0;

  virtual Digest hash(ByteView data) const = 0;

  // Derivation and expansion are fixed constructions over the provider hash,
  // shared by both suites: initiator and node must compute identical padding
  // streams from (identity, key).
  Seed kdf(ByteView context, const SymKey& key) const;
  Bytes prg(const Seed& seed, std::size_t len) const;
};

std::unique_ptr<Provider> make_provider(const std::string& name);

}  // namespace qonion::crypto
