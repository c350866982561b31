#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "deletia/error.hpp"
#include "deletia/hash/ajtai.hpp"
#include "deletia/hash/balance.hpp"
#include "deletia/hash/chor_goldreich.hpp"
#include "deletia/hash/compose.hpp"
#include "deletia/hash/descriptor.hpp"
#include "deletia/hash/fdelta.hpp"
#include "deletia/hash/gf2k.hpp"
#include "deletia/hash/regular_owf.hpp"
#include "deletia/hash/tcr.hpp"

using namespace deletia;
using namespace deletia::hash;

namespace {

// Shift-and-add multiplication with reduction after every shift.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, unsigned k, std::uint32_t poly) {
  std::uint32_t r = 0;
  for (unsigned i = 0; i < k; ++i) {
    if (b & (1u << i)) r ^= a;
    a <<= 1;
    if (a & (1u << k)) a ^= poly;
  }
  return r;
}

std::map<std::uint64_t, std::vector<std::uint64_t>> brute_fibers(const HashFunction& h) {
  std::map<std::uint64_t, std::vector<std::uint64_t>> out;
  for (std::uint64_t x = 0; x < h.domain().size(); ++x)
    if (h.in_domain(x)) out[h.eval(x)].push_back(x);
  return out;
}

}  // namespace

TEST(GF2k, MultiplicationMatchesShiftAndAdd) {
  for (unsigned k : {1u, 3u, 4u, 8u, 11u}) {
    const GF2k f(k);
    EXPECT_TRUE(is_irreducible(f.modulus()));
    Rng rng(k);
    for (int i = 0; i < 200; ++i) {
      const auto a = static_cast<std::uint32_t>(rng.uniform(f.size()));
      const auto b = static_cast<std::uint32_t>(rng.uniform(f.size()));
      EXPECT_EQ(f.mul(a, b), slow_mul(a, b, k, f.modulus()));
      if (a != 0) {
        EXPECT_EQ(f.mul(a, f.inverse(a)), 1u);
      }
    }
    EXPECT_THROW((void)f.inverse(0), Error);
  }
}

TEST(GF2k, IrreducibilityAndRoots) {
  EXPECT_TRUE(is_irreducible(0b111));     // x^2+x+1
  EXPECT_FALSE(is_irreducible(0b101));    // (x+1)^2
  EXPECT_TRUE(is_irreducible(0b10011));   // x^4+x+1
  for (unsigned k = 1; k <= 16; ++k) EXPECT_TRUE(is_irreducible(default_irreducible(k)));
  const GF2k f(4);
  const std::vector<std::uint32_t> poly{3, 0, 1};  // x^2 + 3
  const auto roots = f.roots(poly, 5);
  for (auto r : roots) EXPECT_EQ(f.eval(poly, r), 5u);
  std::size_t count = 0;
  for (std::uint32_t x = 0; x < 16; ++x) count += f.eval(poly, x) == 5;
  EXPECT_EQ(roots.size(), count);
}

TEST(RegularOwf, EveryImageHasTwoToTheRPreimages) {
  Rng rng(2);
  const ToyRegularOWFFamily fam(5, 2);
  auto key = fam.sample(rng);
  const auto fibers = brute_fibers(*key.h);
  EXPECT_EQ(fibers.size(), 8u);
  for (const auto& [y, pts] : fibers) {
    EXPECT_EQ(pts.size(), 4u);
    EXPECT_EQ(key.h->invert(*key.trapdoor, y), pts);
  }
  EXPECT_THROW(key.h->invert(Trapdoor{}, 0), Error);
  EXPECT_THROW(ToyRegularOWF(3, 0, {0, 0, 1, 2, 3, 4, 5, 6}, 3), Error);
}

TEST(FDelta, TwoToOneWithBalancedPredicate) {
  Rng rng(4);
  const FDeltaFamily fam(std::make_shared<ToyRegularOWFFamily>(4, 0));
  for (int rep = 0; rep < 10; ++rep) {
    auto key = fam.sample(rng);
    const auto& fd = dynamic_cast<const FDeltaFunction&>(*key.h);
    const FiberTable table(fd);
    EXPECT_EQ(table.domain_count(), 16u);
    for (const auto& [y, fiber] : table.fibers()) {
      EXPECT_EQ(fiber.points.size(), 2u);
      EXPECT_EQ(fiber.count0, 1u);
      EXPECT_EQ(fiber.count1, 1u);
      EXPECT_LT(y, y ^ fd.delta());
      EXPECT_EQ(fd.invert(*key.trapdoor, y), fiber.points);
    }
  }
}

TEST(FiberTable, MatchesBruteForce) {
  Rng rng(5);
  const FDeltaFamily fam(std::make_shared<ToyRegularOWFFamily>(5, 1));
  auto key = fam.sample(rng);
  const FiberTable table(*key.h);
  const auto ref = brute_fibers(*key.h);
  ASSERT_EQ(table.fibers().size(), ref.size());
  for (const auto& [y, pts] : ref) {
    const auto* f = table.find(y);
    ASSERT_NE(f, nullptr);
    EXPECT_EQ(f->points, pts);
    std::uint64_t ones = 0;
    for (auto x : pts) ones += key.h->predicate(x);
    EXPECT_EQ(f->count1, ones);
    EXPECT_EQ(f->count0, pts.size() - ones);
  }
  EXPECT_EQ(table.find(1u << 20), nullptr);
}

TEST(ChorGoldreich, PublicInversionMatchesEnumeration) {
  Rng rng(6);
  const ChorGoldreichFamily fam(6, 8, 3);
  for (int rep = 0; rep < 5; ++rep) {
    auto key = fam.sample(rng);
    const auto fibers = brute_fibers(*key.h);
    for (const auto& [y, pts] : fibers) EXPECT_EQ(key.h->invert(Trapdoor{}, y), pts);
  }
}

TEST(ChorGoldreich, PairwiseCollisionRateNearUniform) {
  // Over the family, Pr[h(x1) = h(x2)] for fixed x1 != x2 is 2^-n.
  Rng rng(7);
  const ChorGoldreichFamily fam(6, 8, 3);
  int hits = 0;
  const int n = 4000;
  for (int i = 0; i < n; ++i) {
    auto key = fam.sample(rng);
    hits += key.h->eval(17) == key.h->eval(200);
  }
  EXPECT_NEAR(hits / static_cast<double>(n), 1.0 / 8, 0.02);
}

TEST(Ajtai, EvaluatesMatrixProductOnTheBall) {
  const zq::ZqMatrix a(1, 2, {3, 5}, 13);
  const AjtaiFunction h(a, 2.0);
  for (std::uint64_t x = 0; x < 169; ++x) {
    const auto v = h.vector_at(x);
    EXPECT_EQ(h.eval(x), static_cast<std::uint64_t>((3 * v[0] + 5 * v[1]) % 13));
    EXPECT_EQ(h.in_domain(x), v.norm_sq() <= 4);
  }
}

TEST(Ajtai, StructuredKeyHasShortKernel) {
  Rng rng(8);
  for (int rep = 0; rep < 20; ++rep) {
    const auto k = structured_ajtai_keygen(2, 4, 31, rng);
    EXPECT_EQ(k.a * k.kernel, zq::ZqVector::zeros(2, 31));
    for (auto b : k.x_bar.entries()) EXPECT_TRUE(b == 0 || b == 1);
    EXPECT_EQ(k.kernel[3], 1);
  }
}

TEST(Composed, FibersAreUnionsOfInnerFibers) {
  Rng rng(9);
  auto fam = compose_balanced(std::make_shared<ToyRegularOWFFamily>(6, 1),
                              std::make_shared<ChorGoldreichFamily>(6, 5, 3));
  auto key = fam->sample(rng);
  const auto fibers = brute_fibers(*key.h);
  std::size_t total = 0;
  for (const auto& [y, pts] : fibers) {
    EXPECT_EQ(pts.size() % 2, 0u);
    total += pts.size();
  }
  EXPECT_EQ(total, 64u);
  EXPECT_FALSE(key.h->has_predicate());
}

TEST(Balance, ExactlyBalancedFamily) {
  Rng rng(10);
  const FDeltaFamily fam(std::make_shared<ToyRegularOWFFamily>(4, 0));
  const auto rep = balance_estimate(fam, std::nullopt, 200, rng);
  EXPECT_EQ(rep.max_ratio, 0.0);
  EXPECT_EQ(rep.fraction_ok, 1.0);
  EXPECT_NEAR(rep.delta_hat, 1.0, 1e-12);
  EXPECT_THROW(balance_estimate(ToyRegularOWFFamily(4, 0), std::nullopt, 1, rng), Error);
}

TEST(Balance, RatioAndPercentile) {
  EXPECT_DOUBLE_EQ(fiber_ratio(3, 1), 0.5);
  EXPECT_DOUBLE_EQ(fiber_ratio(0, 0), 0.0);
  std::vector<double> r(200, 0.1);
  r.back() = 0.9;
  EXPECT_NEAR(estimate_delta(r), 0.9, 1e-12);
}

TEST(Descriptor, RoundTripsThroughJson) {
  const nlohmann::json d = {
      {"name", "fdelta"},
      {"params", {{"base", {{"name", "composed"},
                            {"params", {{"owf", {{"name", "toy-regular-owf"}, {"params", {{"m", 6}, {"r", 1}}}}},
                                        {"uhash", {{"name", "chor-goldreich"},
                                                   {"params", {{"t", 6}, {"k", 5}, {"n", 3}}}}}}}}}}}};
  const auto fam = make_family(d);
  EXPECT_EQ(make_family(fam->descriptor())->descriptor(), fam->descriptor());
  EXPECT_THROW(make_family({{"name", "nope"}}), Error);
  EXPECT_THROW(make_family({{"name", "ajtai"}}), Error);
}

TEST(Pool, SeededPoolIsReproducible) {
  const FDeltaFamily fam(std::make_shared<ToyRegularOWFFamily>(4, 0));
  const auto a = sample_pool(fam, 77, 3), b = sample_pool(fam, 77, 3);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(a[i].h->describe(), b[i].h->describe());
  const Trapdoor td{{1, 2, 3}};
  EXPECT_EQ(Trapdoor::parse(td.serialize()), td);
  EXPECT_THROW(Trapdoor::parse("td 3 1"), Error);
}

TEST(SuperpositionInvert, UniformOverFiber) {
  Rng rng(11);
  const FDeltaFamily fam(std::make_shared<ToyRegularOWFFamily>(4, 1));
  auto key = fam.sample(rng);
  const FiberTable table(*key.h);
  const auto& [y, fiber] = *table.fibers().begin();
  const auto s = superposition_invert(*key.h, *key.trapdoor, y);
  for (auto x : fiber.points) EXPECT_NEAR(std::norm(s.amplitude(x)), 1.0 / fiber.points.size(), 1e-14);
  EXPECT_THROW(superposition_invert(*key.h, *key.trapdoor, y ^ dynamic_cast<const FDeltaFunction&>(*key.h).delta()),
               Error);
}

TEST(Tcr, ReferenceAdversaries) {
  Rng rng(12);
  const FDeltaFamily fam(std::make_shared<ToyRegularOWFFamily>(4, 0));
  const auto honest = make_honest_tcr_adversary();
  const auto brute = make_brute_force_tcr_adversary();
  const auto garbage = make_non_preimage_tcr_adversary();
  const auto trap = make_trapdoor_tcr_adversary();
  const AuxLeak leak = [](const SampledHash& k) { return k.trapdoor; };
  int brute_wins = 0;
  const int n = 400;
  for (int i = 0; i < n; ++i) {
    const auto t0 = tcr_game(fam, *honest, rng);
    EXPECT_TRUE(t0.preimage);
    EXPECT_FALSE(t0.win);
    const auto t1 = tcr_game(fam, *brute, rng);
    EXPECT_TRUE(t1.preimage);
    brute_wins += t1.win;
    EXPECT_FALSE(tcr_game(fam, *garbage, rng).preimage);
    const auto t3 = tcr_game(fam, *trap, rng, {}, &leak);
    EXPECT_TRUE(t3.win);
    EXPECT_EQ(t3.aux_calls, 1);
  }
  // Two-point fibers split one per side: a random preimage flips half the time.
  EXPECT_NEAR(brute_wins / static_cast<double>(n), 0.5, 0.08);
}
