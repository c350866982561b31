#include "deletia/hash/family.hpp"

#include <algorithm>
#include <sstream>

#include "deletia/error.hpp"

namespace deletia::hash {

std::uint64_t Space::size() const {
  std::uint64_t s = 1;
  for (auto d : dims) s *= d;
  return s;
}

bool Space::is_binary() const {
  return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 2; });
}

std::size_t Space::bit_length() const {
  require(is_binary(), Errc::invalid_argument, "space is not a bit-string space");
  return dims.size();
}

std::string Trapdoor::serialize() const {
  std::ostringstream os;
  os << "td " << words.size();
  for (auto w : words) os << ' ' << w;
  return os.str();
}

Trapdoor Trapdoor::parse(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  std::size_t n = 0;
  if (!(is >> tag >> n) || tag != "td") throw Error(Errc::invalid_argument, "malformed trapdoor text");
  Trapdoor td;
  td.words.resize(n);
  for (auto& w : td.words)
    if (!(is >> w)) throw Error(Errc::invalid_argument, "truncated trapdoor text");
  return td;
}

std::uint64_t HashFunction::predicate(std::uint64_t) const {
  throw Error(Errc::missing_predicate, family() + " has no measurement predicate");
}

std::vector<std::uint64_t> HashFunction::invert(const Trapdoor&, std::uint64_t) const {
  throw Error(Errc::missing_trapdoor, family() + " does not support trapdoor inversion");
}

std::uint64_t measurement_value(const HashFunction& h, std::uint64_t x) {
  return h.has_predicate() ? h.predicate(x) : x;
}

std::uint64_t measurement_outcomes(const HashFunction& h) {
  return h.has_predicate() ? (std::uint64_t{1} << h.predicate_bits()) : h.domain().size();
}

unsigned measurement_bits(const HashFunction& h) {
  if (h.has_predicate()) return h.predicate_bits();
  unsigned bits = 0;
  while ((std::uint64_t{1} << bits) < h.domain().size()) ++bits;
  return bits;
}

FiberTable::FiberTable(const HashFunction& h) {
  const auto n = h.domain().size();
  require(n <= (std::uint64_t{1} << 22), Errc::enumeration_too_large, "domain too large to enumerate");
  const bool binary = h.has_predicate() && h.predicate_bits() == 1;
  for (std::uint64_t x = 0; x < n; ++x) {
    if (!h.in_domain(x)) continue;
    ++domain_count_;
    auto& fiber = fibers_[h.eval(x)];
    fiber.points.push_back(x);
    if (binary) (h.predicate(x) ? fiber.count1 : fiber.count0)++;
  }
}

const Fiber* FiberTable::find(std::uint64_t y) const {
  auto it = fibers_.find(y);
  return it == fibers_.end() ? nullptr : &it->second;
}

qsim::QState superposition_invert(const HashFunction& h, const Trapdoor& td, std::uint64_t y,
                                  const std::string& name) {
  const auto pre = h.invert(td, y);
  require(!pre.empty(), Errc::empty_preimage, "no preimage for the requested image");
  qsim::RegisterLayout layout{h.domain().segment(name)};
  std::map<std::uint64_t, double> weights;
  for (auto x : pre) weights[x] = 1.0;
  return qsim::prepare_weighted(layout, name, weights);
}

std::vector<SampledHash> sample_pool(const HashFamily& family, std::uint64_t seed, std::size_t count) {
  std::vector<SampledHash> pool;
  Rng base(seed);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = base.split(i);
    pool.push_back(family.sample(rng));
  }
  return pool;
}

}  // namespace deletia::hash
