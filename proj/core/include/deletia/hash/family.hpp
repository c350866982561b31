#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "deletia/qsim/state.hpp"
#include "deletia/rng.hpp"

namespace deletia::hash {

/// Finite set of mixed-radix indices (slot 0 most significant). Bit strings
/// use all-2 slots, so numeric order on indices is big-endian
/// lexicographic order on the strings.
struct Space {
  std::vector<std::size_t> dims;

  static Space bits(std::size_t count) { return Space{std::vector<std::size_t>(count, 2)}; }
  static Space zq(std::int64_t q, std::size_t count) {
    return Space{std::vector<std::size_t>(count, static_cast<std::size_t>(q))};
  }

  std::uint64_t size() const;
  bool is_binary() const;
  std::size_t bit_length() const;  ///< slot count for binary spaces
  qsim::Segment segment(std::string name) const { return qsim::Segment{std::move(name), dims}; }
  bool operator==(const Space&) const = default;
};

/// Opaque secret material produced alongside a sampled key.
struct Trapdoor {
  std::vector<std::uint64_t> words;

  std::string serialize() const;
  static Trapdoor parse(const std::string& text);
  bool operator==(const Trapdoor&) const = default;
};

/// One sampled member h of a family.
class HashFunction {
 public:
  virtual ~HashFunction() = default;

  virtual std::string family() const = 0;
  virtual const Space& domain() const = 0;
  virtual const Space& range() const = 0;
  /// Domain restriction beyond the index box (e.g. a norm ball).
  virtual bool in_domain(std::uint64_t x) const { return x < domain().size(); }
  virtual std::uint64_t eval(std::uint64_t x) const = 0;

  /// Binary-measurement predicate M[h] with `predicate_bits()` output bits.
  virtual bool has_predicate() const { return false; }
  virtual unsigned predicate_bits() const { return 0; }
  virtual std::uint64_t predicate(std::uint64_t x) const;

  /// Sorted preimage set of y computed with the trapdoor (or by public
  /// root-finding where the family allows it).
  virtual bool supports_inversion() const { return false; }
  virtual std::vector<std::uint64_t> invert(const Trapdoor& td, std::uint64_t y) const;

  /// Key material (matrix, table, coefficients...) for transcripts.
  virtual nlohmann::json describe() const = 0;
};

using HashPtr = std::shared_ptr<const HashFunction>;

struct SampledHash {
  HashPtr h;
  std::optional<Trapdoor> trapdoor;
};

class HashFamily {
 public:
  virtual ~HashFamily() = default;

  virtual std::string name() const = 0;
  virtual SampledHash sample(Rng& rng) const = 0;
  virtual bool has_predicate() const { return false; }
  virtual bool has_trapdoor() const { return false; }
  /// {"name": ..., "params": {...}}; rebuilt by make_family.
  virtual nlohmann::json descriptor() const = 0;
};

using FamilyPtr = std::shared_ptr<const HashFamily>;

// ---- measurement maps used by the experiments

/// M[h](x) when a predicate exists; otherwise the identity on x.
std::uint64_t measurement_value(const HashFunction& h, std::uint64_t x);
/// Number of distinct measurement outcomes.
std::uint64_t measurement_outcomes(const HashFunction& h);
/// Bit width of measurement values (identity: ceil(log2 |domain|)).
unsigned measurement_bits(const HashFunction& h);

// ---- exhaustive fiber tables

struct Fiber {
  std::vector<std::uint64_t> points;  ///< sorted preimages (in-domain)
  std::uint64_t count0 = 0;           ///< preimages with M = 0 (binary M only)
  std::uint64_t count1 = 0;
};

/// All non-empty fibers of h over its domain, keyed by image.
class FiberTable {
 public:
  explicit FiberTable(const HashFunction& h);

  const Fiber* find(std::uint64_t y) const;
  const std::map<std::uint64_t, Fiber>& fibers() const noexcept { return fibers_; }
  std::uint64_t domain_count() const noexcept { return domain_count_; }

 private:
  std::map<std::uint64_t, Fiber> fibers_;
  std::uint64_t domain_count_ = 0;
};

/// Uniform superposition over h^{-1}(y) on a register named `name`, built
/// from the trapdoor inversion. Throws empty-preimage.
qsim::QState superposition_invert(const HashFunction& h, const Trapdoor& td, std::uint64_t y,
                                  const std::string& name = "X");

/// Reproduces the "sample from a fixed seed" contract.
std::vector<SampledHash> sample_pool(const HashFamily& family, std::uint64_t seed, std::size_t count);

}  // namespace deletia::hash
