#include "deletia/pvd/compiler.hpp"

#include <cstdio>
#include <sstream>

#include "deletia/error.hpp"

namespace deletia::pvd {

namespace {

std::uint64_t tag_of(std::uint64_t key, std::uint64_t nonce, const std::string& plain) {
  std::uint64_t h = key ^ (nonce * 0x9E3779B97F4A7C15ULL);
  for (unsigned char c : plain) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return splitmix64(h);
}

std::string keystream_xor(std::uint64_t key, std::uint64_t nonce, const std::string& in) {
  Rng stream = Rng(key).split(nonce);
  std::string out = in;
  for (auto& c : out) c = static_cast<char>(static_cast<unsigned char>(c) ^ static_cast<unsigned char>(stream.next()));
  return out;
}

std::string to_hex(const std::string& bytes) {
  std::string out;
  char buf[3];
  for (unsigned char c : bytes) {
    std::snprintf(buf, sizeof buf, "%02x", c);
    out += buf;
  }
  return out;
}

std::string from_hex(const std::string& hex) {
  require(hex.size() % 2 == 0, Errc::aux_failure, "odd-length hex payload");
  std::string out;
  for (std::size_t i = 0; i < hex.size(); i += 2) out += static_cast<char>(std::stoi(hex.substr(i, 2), nullptr, 16));
  return out;
}

}  // namespace

std::string StreamCipherAux::encrypt(const hash::Trapdoor& td, Rng& rng) const {
  const auto nonce = rng.next();
  const auto plain = td.serialize();
  std::ostringstream os;
  os << nonce << ':' << tag_of(key_, nonce, plain) << ':' << to_hex(keystream_xor(key_, nonce, plain));
  return os.str();
}

hash::Trapdoor StreamCipherAux::decrypt(const std::string& ciphertext) const {
  try {
    const auto a = ciphertext.find(':');
    const auto b = ciphertext.find(':', a + 1);
    require(a != std::string::npos && b != std::string::npos, Errc::aux_failure, "malformed aux ciphertext");
    const auto nonce = std::stoull(ciphertext.substr(0, a));
    const auto tag = std::stoull(ciphertext.substr(a + 1, b - a - 1));
    const auto plain = keystream_xor(key_, nonce, from_hex(ciphertext.substr(b + 1)));
    require(tag_of(key_, nonce, plain) == tag, Errc::aux_failure, "aux tag mismatch");
    return hash::Trapdoor::parse(plain);
  } catch (const Error& e) {
    if (e.code() == Errc::aux_failure) throw;
    throw Error(Errc::aux_failure, e.what());
  } catch (const std::exception& e) {
    throw Error(Errc::aux_failure, e.what());
  }
}

hash::Trapdoor CallbackAux::decrypt(const std::string& ciphertext) const {
  try {
    return dec_(ciphertext);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(Errc::aux_failure, e.what());
  }
}

HybridScheme::HybridScheme(PvdKeys base, std::shared_ptr<const AuxEncryptor> aux)
    : base_(std::move(base)), aux_(std::move(aux)) {
  require(aux_ != nullptr, Errc::invalid_argument, "hybrid scheme needs an aux encryptor");
}

HybridCiphertext HybridScheme::encrypt(int bit, Rng& rng) const {
  auto base = pvd_encrypt(base_, bit, rng);
  return {std::move(base), aux_->encrypt(base_.sk, rng)};
}

int HybridScheme::decrypt(const HybridCiphertext& ct, Rng& rng) const {
  const auto td = aux_->decrypt(ct.aux);
  return pvd_decrypt(base_, td, ct.base, rng);
}

std::vector<std::uint64_t> HybridScheme::erase(HybridCiphertext ct, Rng& rng) const {
  return pvd_delete(std::move(ct.base), rng);
}

bool HybridScheme::verify(const PvdVerificationKey& vk, const std::vector<std::uint64_t>& cert) const {
  return pvd_verify(vk, cert);
}

HybridScheme hybrid_compile(PvdKeys base, std::shared_ptr<const AuxEncryptor> aux) {
  return HybridScheme(std::move(base), std::move(aux));
}

}  // namespace deletia::pvd
