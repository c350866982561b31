#pragma once

#include <functional>
#include <memory>
#include <string>

#include "deletia/pvd/pke.hpp"

namespace deletia::pvd {

/// Keyed classical encryptor that carries the trapdoor alongside the
/// ciphertext (ABE, witness encryption, timed release... plug in here).
class AuxEncryptor {
 public:
  virtual ~AuxEncryptor() = default;
  virtual std::string name() const = 0;
  virtual std::string encrypt(const hash::Trapdoor& td, Rng& rng) const = 0;
  /// Throws Error(aux-failure) when the ciphertext cannot be opened.
  virtual hash::Trapdoor decrypt(const std::string& ciphertext) const = 0;
};

/// Toy symmetric instantiation: keystream from a seeded generator, XORed
/// over the serialized trapdoor, with a keyed tag.
class StreamCipherAux final : public AuxEncryptor {
 public:
  explicit StreamCipherAux(std::uint64_t key) : key_(key) {}

  std::string name() const override { return "stream-cipher"; }
  std::string encrypt(const hash::Trapdoor& td, Rng& rng) const override;
  hash::Trapdoor decrypt(const std::string& ciphertext) const override;

 private:
  std::uint64_t key_;
};

/// Adapts a pair of callbacks to the interface.
class CallbackAux final : public AuxEncryptor {
 public:
  using EncryptFn = std::function<std::string(const hash::Trapdoor&, Rng&)>;
  using DecryptFn = std::function<hash::Trapdoor(const std::string&)>;

  CallbackAux(std::string name, EncryptFn enc, DecryptFn dec)
      : name_(std::move(name)), enc_(std::move(enc)), dec_(std::move(dec)) {}

  std::string name() const override { return name_; }
  std::string encrypt(const hash::Trapdoor& td, Rng& rng) const override { return enc_(td, rng); }
  hash::Trapdoor decrypt(const std::string& ciphertext) const override;

 private:
  std::string name_;
  EncryptFn enc_;
  DecryptFn dec_;
};

struct HybridCiphertext {
  PvdCiphertext base;
  std::string aux;
};

/// PKE with PVD whose ciphertexts also carry aux(td). Decryption opens the
/// aux component to obtain td; deletion and verification ignore it.
class HybridScheme {
 public:
  HybridScheme(PvdKeys base, std::shared_ptr<const AuxEncryptor> aux);

  const PvdKeys& base() const noexcept { return base_; }
  const AuxEncryptor& aux() const noexcept { return *aux_; }

  HybridCiphertext encrypt(int bit, Rng& rng) const;
  int decrypt(const HybridCiphertext& ct, Rng& rng) const;
  std::vector<std::uint64_t> erase(HybridCiphertext ct, Rng& rng) const;
  bool verify(const PvdVerificationKey& vk, const std::vector<std::uint64_t>& cert) const;

 private:
  PvdKeys base_;
  std::shared_ptr<const AuxEncryptor> aux_;
};

HybridScheme hybrid_compile(PvdKeys base, std::shared_ptr<const AuxEncryptor> aux);

}  // namespace deletia::pvd
