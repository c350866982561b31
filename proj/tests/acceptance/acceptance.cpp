// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   deletia_acceptance [--cli path/to/deletia --golden tests/golden]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "deletia/dualfhe.hpp"
#include "deletia/dualregev.hpp"
#include "deletia/games/fact35.hpp"
#include "deletia/games/runner.hpp"
#include "deletia/hash/balance.hpp"
#include "deletia/hash/descriptor.hpp"
#include "deletia/params.hpp"
#include "deletia/pvd/commitment.hpp"
#include "deletia/pvd/pke.hpp"
#include "deletia/qsim/density.hpp"
#include "oracles.hpp"

using namespace deletia;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

oracle::imat to_imat(const zq::ZqMatrix& a) {
  oracle::imat out(a.rows(), std::vector<std::int64_t>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r][c] = a.at(r, c);
  return out;
}

std::vector<std::int64_t> to_ivec(const zq::ZqVector& v) { return {v.entries().begin(), v.entries().end()}; }

oracle::cvec to_cvec(const qsim::QState& s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

// ---------------------------------------------------------------- 1

Outcome twirl_identity() {
  Rng rng(101);
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t qubits = 2 + static_cast<std::size_t>(i % 2);
    const std::size_t twirled = 1 + rng.uniform(qubits);
    qsim::RegisterLayout layout{qsim::qudits("S", twirled, 2)};
    if (twirled < qubits) layout.add(qsim::qudits("E", qubits - twirled, 2));
    const std::size_t dim = std::size_t{1} << qubits;
    qsim::CMatrix g(dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) g(r, c) = {rng.uniform_real() - 0.5, rng.uniform_real() - 0.5};
    auto m = g * g.adjoint();
    m = m.scaled(1.0 / m.trace().real());
    const qsim::DensityOp rho(layout, m);
    const auto out = qsim::pauli_twirl_channel(rho, "S");
    // Reference: keep entries whose S bits agree (S is the most significant part).
    const std::size_t shift = qubits - twirled;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        const auto want = (r >> shift) == (c >> shift) ? m(r, c) : qsim::Amplitude{};
        worst = std::max(worst, std::abs(out.matrix()(r, c) - want));
      }
    worst = std::max(worst, qsim::max_abs_diff(out.matrix(), qsim::dephase(rho, "S").matrix()));
  }
  return {worst < 1e-12, fmt::format("max entry error {:.2e} over 50 states", worst)};
}

// ---------------------------------------------------------------- 2

Outcome duality() {
  const std::int64_t q = 13;
  const double sigma = 3.0;
  Rng rng(202);
  double worst = 0;
  for (int rep = 0; rep < 5; ++rep) {
    zq::ZqMatrix a = zq::ZqMatrix::uniform(1, 2, q, rng);
    if (a.at(0, 0) == 0 && a.at(0, 1) == 0) a.set(0, 0, 1);
    auto coset = dualregev::gen_gauss(a, sigma, rng);
    const auto transformed = qsim::iqft(std::move(coset.state), "X");
    const auto direct = oracle::dual_sum(to_imat(a), q, sigma, to_ivec(coset.image), {0, 0});
    worst = std::max(worst, oracle::pure_trace_distance(to_cvec(transformed), direct));
  }
  return {worst <= 0.05, fmt::format("max TD {:.4f} over 5 keys (n=1, m=2, q=13, sigma=3)", worst)};
}

// ---------------------------------------------------------------- 3

Outcome dual_regev() {
  const RunConfig cfg;
  const auto p = cfg.dr_params();
  Rng rng(303);
  const auto keys = dualregev::keygen(p, rng);
  int correct = 0, verified = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const int bit = t % 2;
    Rng trng(1000 + static_cast<std::uint64_t>(t));
    correct += dualregev::decrypt(keys, dualregev::encrypt(keys, bit, trng), trng) == bit;
    auto ct = dualregev::encrypt(keys, bit, trng);
    const auto vk = ct.vk;
    verified += dualregev::verify(vk, dualregev::delete_ciphertext(std::move(ct), trng), p);
  }
  double tv = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng r0(5000 + s), r1(5000 + s);
    const auto c0 = dualregev::encrypt(keys, 0, r0), c1 = dualregev::encrypt(keys, 1, r1);
    if (!(c0.vk.y == c1.vk.y)) return {false, "b=0 and b=1 runs drew different images"};
    const auto d0 = dualregev::certificate_distribution(c0), d1 = dualregev::certificate_distribution(c1);
    double d = 0;
    for (std::size_t i = 0; i < d0.size(); ++i) d += std::abs(d0[i] - d1[i]);
    tv = std::max(tv, d / 2);
  }
  const double c = correct / static_cast<double>(trials), v = verified / static_cast<double>(trials);
  return {c >= 0.95 && v >= 0.99 && tv <= 1e-10,
          fmt::format("correctness {:.3f}, deletion {:.3f}, certificate TV {:.1e}", c, v, tv)};
}

// ---------------------------------------------------------------- 4

double tensor_slice_distance(int bit) {
  fhe::Params p;
  p.n = 1;
  p.m = 1;
  p.q = 5;
  p.sigma = 2.2;
  const std::int64_t q = p.q;
  Rng rng(404 + static_cast<std::uint64_t>(bit));
  const auto keys = fhe::keygen(p, rng);
  const auto ct = fhe::encrypt_quantum(keys, bit, rng);
  const auto g = zq::gadget_matrix(q, p.rows());
  const std::size_t rows = p.rows();
  const std::size_t cell = oracle::ipow(5, rows);
  // Library: product of the first two column states.
  oracle::cvec product(cell * cell);
  for (std::size_t i = 0; i < cell; ++i)
    for (std::size_t j = 0; j < cell; ++j) product[i * cell + j] = ct.columns[0].amplitude(i) * ct.columns[1].amplitude(j);
  // Direct: sum over S (n x 2) and E (rows x 2) of rho(E) w^{-Tr(S^T Y)} |A S + E + bit G>.
  const double width = static_cast<double>(q) / p.sigma;
  oracle::cvec direct(cell * cell);
  for (std::int64_t s0 = 0; s0 < q; ++s0)
    for (std::int64_t s1 = 0; s1 < q; ++s1) {
      const std::int64_t phase_k = s0 * ct.vk.ys[0][0] + s1 * ct.vk.ys[1][0];
      const auto phase = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(oracle::mod(phase_k, q)) / q);
      for (std::uint64_t ei = 0; ei < cell * cell; ++ei) {
        const auto e = oracle::digits(ei, q, 2 * rows);  // column 0 digits, then column 1
        std::vector<std::int64_t> out(2 * rows);
        for (std::size_t r = 0; r < rows; ++r) {
          out[r] = keys.pk.at(r, 0) * s0 + e[r] + bit * g.at(r, 0);
          out[rows + r] = keys.pk.at(r, 0) * s1 + e[rows + r] + bit * g.at(r, 1);
        }
        direct[oracle::index_of(out, q)] += oracle::rho(e, q, width) * phase;
      }
    }
  return oracle::pure_trace_distance(product, direct);
}

Outcome dual_fhe() {
  RunConfig cfg;
  cfg.scheme = "fhe";
  bool validator_ok = true;
  for (const auto& c : validate(cfg).checks) validator_ok = validator_ok && c.status != CheckStatus::fail;
  const auto p = cfg.fhe_params();
  Rng rng(4040);
  const auto keys = fhe::keygen(p, rng);
  int trees = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<int> bits;
    std::vector<fhe::Ciphertext> leaves;
    for (std::size_t i = 0; i < (std::size_t{1} << p.depth); ++i) {
      bits.push_back(static_cast<int>(rng.uniform(2)));
      leaves.push_back(fhe::encrypt_classical(keys, bits.back(), rng));
    }
    trees += fhe::decrypt(keys, fhe::nand_tree(leaves)) == fhe::nand_tree_plain(bits);
  }

  const auto qp = cfg.fhe_quantum_params();
  Rng qrng(4041);
  const auto qkeys = fhe::keygen(qp, qrng);
  const auto bound = qp.certificate_bound();
  std::size_t columns = 0, column_ok = 0, whole_ok = 0;
  for (int t = 0; t < 100; ++t) {
    auto ct = fhe::encrypt_quantum(qkeys, t % 2, qrng);
    const auto vk = ct.vk;
    const auto certs = fhe::delete_ciphertext(std::move(ct), qrng);
    const auto at = vk.a.transpose();
    for (std::size_t j = 0; j < certs.size(); ++j) {
      ++columns;
      column_ok += zq::isis_verify(at, vk.ys[j], certs[j], bound);
    }
    whole_ok += fhe::verify(vk, certs, qp);
  }
  const double col_rate = static_cast<double>(column_ok) / static_cast<double>(columns);
  const double td = std::max(tensor_slice_distance(0), tensor_slice_distance(1));
  return {validator_ok && trees == 100 && col_rate >= 0.98 && td <= 0.05,
          fmt::format("NAND {}/100 at L={} (validator {}), per-column deletion {:.4f} (whole {}/100), "
                      "tensor TD {:.4f}",
                      trees, p.depth, validator_ok ? "pass" : "fail", col_rate, whole_ok, td)};
}

// ---------------------------------------------------------------- 5

Outcome ladder() {
  games::RunOptions o;
  o.exp = "ladder";
  o.adv = "overlap-projector";
  o.pool = 3;
  const auto s = games::run_game(o).summary;
  const double a0 = s["adv0"], a1 = s["adv1"], a2 = s["adv2"];
  return {std::abs(a2) <= 1e-10 && std::abs(a1 - a0 / 2) <= 1e-9 && a0 > 0,
          fmt::format("Adv0 {:.6f}, Adv1 {:.6f}, Adv2 {:.1e}", a0, a1, a2)};
}

// ---------------------------------------------------------------- 6

Outcome everlasting() {
  games::RunOptions o;
  o.adv = "honest-deleter";
  o.exact = true;
  o.pool = 3;
  o.exp = "evtc";
  const auto ev = games::run_game(o).summary;
  o.exp = "sgc";
  o.pool = 2;
  const auto sg = games::run_game(o).summary;
  const double ev_td = ev["output_distance"], ev_adv = ev["advantage"];
  const double sg_td = sg["output_distance"], sg_adv = sg["advantage"];
  const double sg_valid = sg["valid_rate"][0];
  return {ev_td <= 1e-10 && ev_adv <= 1e-10 && sg_td <= 1e-10 && sg_adv <= 1e-10 && sg_valid >= 0.99,
          fmt::format("evtc TD {:.1e} adv {:.1e}; gaussian TD {:.1e} adv {:.1e}, witness validity {:.4f}", ev_td,
                      ev_adv, sg_td, sg_adv, sg_valid)};
}

// ---------------------------------------------------------------- 7

Outcome fact35() {
  Rng rng(707);
  double min_slack = 1e300;
  bool all = true;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t parts = 2 + static_cast<std::size_t>(i % 3);
    const std::size_t dim = parts + rng.uniform(4);
    const auto inst = games::random_fact35_instance(dim, parts, rng);
    const auto r = games::fact35_check(inst.d, inst.projectors, inst.psi);
    min_slack = std::min(min_slack, r.slack());
    all = all && r.holds && r.slack() >= -games::kFactTolerance;
  }
  using qsim::Amplitude;
  qsim::CMatrix p0(2), p1(2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  const std::vector<Amplitude> zero{1.0, 0.0};
  const auto commuting = games::fact35_check(p0, {p0, p1}, zero);
  const double h = 1 / std::sqrt(2.0);
  const std::vector<Amplitude> plus{h, h};
  const auto hand = games::fact35_check(qsim::CMatrix::projector(plus), {p0, p1}, zero);
  const bool analytic = std::abs(commuting.lhs) < 1e-12 && std::abs(commuting.rhs) < 1e-12 &&
                        std::abs(hand.lhs - 0.25) < 1e-12 && std::abs(hand.rhs) < 1e-12 && hand.holds;
  return {all && analytic, fmt::format("1000 random instances, min slack {:.3e}; analytic cases {} "
                                       "(commuting {:.1e}/{:.1e}, |+> {:.4f}/{:.4f})",
                                       min_slack, analytic ? "ok" : "wrong", commuting.lhs, commuting.rhs, hand.lhs,
                                       hand.rhs)};
}

// ---------------------------------------------------------------- 8

// Brute-force (A0, A1) for image y.
std::pair<double, double> halves(const hash::HashFunction& h, std::uint64_t y) {
  double a0 = 0, a1 = 0;
  for (std::uint64_t x = 0; x < h.domain().size(); ++x)
    if (h.in_domain(x) && h.eval(x) == y) (h.predicate(x) ? a1 : a0) += 1;
  return {a0, a1};
}

Outcome commitment() {
  const std::size_t lambda = 6;
  const std::vector<nlohmann::json> families = {
      RunConfig{}.family_descriptor(),
      {{"name", "fdelta"},
       {"params", {{"base", {{"name", "toy-regular-owf"}, {"params", {{"m", 4}, {"r", 1}, {"l", 4}}}}}}}}};
  double worst_exact = 0, worst_honest = 1;
  bool bounded = true;
  std::string deltas;
  Rng rng(808);
  for (const auto& d : families) {
    const auto fam = hash::make_family(d);
    const auto delta = hash::balance_estimate(*fam, std::nullopt, 2000, rng).delta_hat;
    deltas += fmt::format(" {:.3f}", delta);
    const double bound = std::pow(1.0 - delta, 2.0 * static_cast<double>(lambda));
    for (int t = 0; t < 40; ++t) {
      const int bit = t % 2;
      const auto pair = pvd::commit(*fam, bit, lambda, rng);
      double expect = 1.0;
      for (auto y : pair.vk.ys) {
        const auto [a0, a1] = halves(*pair.vk.h, y);
        expect *= std::pow((a0 - a1) / (a0 + a1), 2);
      }
      const double cross = pvd::open_probability(pair, 1 - bit);
      worst_exact = std::max(worst_exact, std::abs(cross - expect));
      bounded = bounded && cross <= bound + 1e-12;
      worst_honest = std::min(worst_honest, pvd::open_probability(pair, bit));
    }
  }
  return {worst_exact < 1e-9 && bounded && worst_honest >= 1 - 1e-9,
          fmt::format("cross-open error {:.1e}, bound {}, honest open min {:.12f}, delta_hat{}", worst_exact,
                      bounded ? "holds" : "violated", worst_honest, deltas)};
}

// ---------------------------------------------------------------- 9

Outcome balance() {
  const nlohmann::json d = {
      {"name", "fdelta"},
      {"params",
       {{"base",
         {{"name", "composed"},
          {"params",
           {{"owf", {{"name", "toy-regular-owf"}, {"params", {{"m", 10}, {"r", 2}}}}},
            {"uhash", {{"name", "chor-goldreich"}, {"params", {{"t", 6}, {"k", 8}, {"n", 4}}}}}}}}}}}};
  const auto fam = hash::make_family(d);
  Rng rng(909);
  const auto domain = fam->sample(rng).h->domain().size();
  const auto rep = hash::balance_estimate(*fam, std::nullopt, 1000, rng);
  return {rep.fraction_ok >= 0.99 && domain <= (1u << 12),
          fmt::format("fraction_ok {:.3f} at delta_hat {:.3f} (max ratio {:.3f}, domain {})", rep.fraction_ok,
                      rep.delta_hat, rep.max_ratio, domain)};
}

// ---------------------------------------------------------------- 10

Outcome phase_pke() {
  const nlohmann::json d = {
      {"name", "fdelta"}, {"params", {{"base", {{"name", "toy-regular-owf"}, {"params", {{"m", 4}, {"r", 0}}}}}}}};
  const auto fam = hash::make_family(d);
  Rng rng(1010);
  const auto keys = pvd::pvd_keygen(*fam, 8, rng);
  double min_zero = 1.0;
  int ones = 0, verified = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const auto c0 = pvd::pvd_encrypt(keys, 0, rng);
    min_zero = std::min(min_zero, pvd::pvd_decrypt_zero_probability(keys, c0));
    verified += pvd::pvd_verify(c0.vk, pvd::pvd_delete(c0, rng));
    const auto c1 = pvd::pvd_encrypt(keys, 1, rng);
    ones += pvd::pvd_decrypt(keys, c1, rng) == 1;
    verified += pvd::pvd_verify(c1.vk, pvd::pvd_delete(c1, rng));
  }
  const double f1 = ones / static_cast<double>(trials);
  return {min_zero >= 1 - 1e-12 && f1 >= 0.99 && verified == 2 * trials,
          fmt::format("b=0 exact min {:.12f}, b=1 frequency {:.3f}, deletion {}/{}", min_zero, f1, verified,
                      2 * trials)};
}

// ---------------------------------------------------------------- 11

std::string run_capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Outcome determinism(const std::string& cli, const std::string& golden) {
  if (cli.empty() || golden.empty()) return {false, "needs --cli and --golden"};
  std::ifstream list(golden + "/commands.txt");
  if (!list) return {false, "cannot read " + golden + "/commands.txt"};
  std::vector<std::string> problems;
  int count = 0;
  std::string line;
  while (std::getline(list, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find('|');
    if (bar == std::string::npos) continue;
    const auto name = trim(line.substr(0, bar));
    const auto args = trim(line.substr(bar + 1));
    const auto cmd = "env -u DELETIA_SEED '" + cli + "' " + args + " 2>/dev/null";
    const auto first = run_capture(cmd), second = run_capture(cmd);
    ++count;
    if (first != second) problems.push_back(name + ": reruns differ");
    std::ifstream gf(golden + "/" + name + ".out", std::ios::binary);
    std::stringstream expected;
    expected << gf.rdbuf();
    if (!gf) problems.push_back(name + ": golden file missing");
    else if (expected.str() != first) problems.push_back(name + ": differs from golden");
  }
  std::string detail = fmt::format("{} commands", count);
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty() && count > 0, detail};
}

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::string cli, golden;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli") cli = argv[i + 1];
    else if (flag == "--golden") golden = argv[i + 1];
  }

  const std::vector<Criterion> criteria = {
      {1, "pauli-twirl", 5, twirl_identity},
      {2, "coset-duality", 30, duality},
      {3, "dual-regev", 120, dual_regev},
      {4, "dual-regev-fhe", 180, dual_fhe},
      {5, "hybrid-ladder", 60, ladder},
      {6, "everlasting-honest", 60, everlasting},
      {7, "distinguish-to-map", 30, fact35},
      {8, "commitment-binding", 0, commitment},
      {9, "balance", 0, balance},
      {10, "phase-recovery-pke", 0, phase_pke},
      {11, "determinism", 0, [&] { return determinism(cli, golden); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = fmt::format("{:.2f} s", secs);
    if (c.budget_s > 0) {
      timing += fmt::format(" of {:.0f} s", c.budget_s);
      if (secs > c.budget_s) {
        out.pass = false;
        out.detail += "; over time budget";
      }
    }
    failures += !out.pass;
    fmt::print("{} {:>2} {:<20} {} ({})\n", out.pass ? "PASS" : "FAIL", c.id, c.name, out.detail, timing);
    std::fflush(stdout);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
