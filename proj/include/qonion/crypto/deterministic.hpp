#pragma once

#include "qonion/crypto/provider.hpp"

namespace qonion::crypto {

// Self-contained test suite. The block cipher is a keyed 4-round Feistel
// permutation over 16-byte blocks (hash-based round functions); KEM and
// signatures are keyed-hash stand-ins with honest round-trip semantics.
// Algorithm identity is a contract of the production suite, not of this one:
// this suite exists so every test and simulation runs deterministically with
// no crypto-library dependency, and it offers no security against a computing
// adversary.
class DeterministicProvider : public Provider {
 public:
  std::string name() const override { return "test-deterministic"; }
  std::size_t block_size() const override { return 16; }

  SymCiphertext sym_encrypt(const SymKey& key, ByteView plaintext,
                            Rng& iv_source) const override;
  Bytes sym_decrypt(const SymKey& key, const SymCiphertext& ct) const override;
  Bytes sym_encrypt_raw(const SymKey& key, ByteView blocks) const override;
  Bytes sym_decrypt_raw(const SymKey& key, ByteView blocks) const override;

  KemKeyPair kem_keygen(const Seed& seed) const override;
  std::pair<KemCiphertext, SharedSecret> kem_encapsulate(ByteView public_key,
                                                         Rng& rng) const override;
  SharedSecret kem_decapsulate(ByteView secret_key,
                               const KemCiphertext& ct) const override;

  SigKeyPair sig_keygen(const Seed& seed) const override;
  Signature sign(ByteView signing_key, ByteView message) const override;
  bool verify(ByteView verification_key, ByteView message,
              const Signature& sig) const override;
  std::size_t signature_size() const override { return 64; }
  std::size_t verification_key_size() const override { return 32; }

  Digest hash(ByteView data) const override;
};

}  // namespace qonion::crypto
