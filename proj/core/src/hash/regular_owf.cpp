#include "deletia/hash/regular_owf.hpp"

#include <algorithm>
#include <unordered_set>

#include "deletia/error.hpp"

namespace deletia::hash {

ToyRegularOWF::ToyRegularOWF(std::size_t input_bits, std::size_t regularity, std::vector<std::uint64_t> table,
                             std::size_t output_bits)
    : input_bits_(input_bits),
      regularity_(regularity),
      output_bits_(output_bits),
      table_(std::move(table)),
      domain_(Space::bits(input_bits)),
      range_(Space::bits(output_bits)) {
  require(regularity < input_bits, Errc::invalid_argument, "regularity must be below the input length");
  require(table_.size() == (std::uint64_t{1} << (input_bits - regularity)), Errc::dimension_mismatch,
          "table size != 2^(m-r)");
  std::unordered_set<std::uint64_t> seen;
  for (auto v : table_) {
    require(v < (std::uint64_t{1} << output_bits), Errc::invalid_argument, "table value exceeds output length");
    require(seen.insert(v).second, Errc::invalid_argument, "table is not injective");
  }
}

std::vector<std::uint64_t> ToyRegularOWF::invert(const Trapdoor& td, std::uint64_t y) const {
  require(td.words.size() == table_.size(), Errc::missing_trapdoor, "trapdoor does not match this key");
  std::vector<std::uint64_t> out;
  for (std::uint64_t j = 0; j < td.words.size(); ++j)
    if (td.words[j] == y)
      for (std::uint64_t low = 0; low < (std::uint64_t{1} << regularity_); ++low)
        out.push_back((j << regularity_) | low);
  return out;
}

nlohmann::json ToyRegularOWF::describe() const {
  return {{"family", "toy-regular-owf"}, {"m", input_bits_}, {"r", regularity_}, {"l", output_bits_},
          {"table", table_}};
}

ToyRegularOWFFamily::ToyRegularOWFFamily(std::size_t input_bits, std::size_t regularity, std::size_t output_bits)
    : input_bits_(input_bits),
      regularity_(regularity),
      output_bits_(output_bits == 0 ? input_bits - regularity : output_bits) {
  require(input_bits >= 1 && input_bits <= 22, Errc::invalid_argument, "input length must lie in [1, 22]");
  require(regularity < input_bits, Errc::invalid_argument, "regularity must be below the input length");
  require(output_bits_ >= input_bits - regularity && output_bits_ <= 40, Errc::invalid_argument,
          "output length too short for an injective table");
}

SampledHash ToyRegularOWFFamily::sample(Rng& rng) const {
  const std::uint64_t count = std::uint64_t{1} << (input_bits_ - regularity_);
  const std::uint64_t space = std::uint64_t{1} << output_bits_;
  std::vector<std::uint64_t> table;
  table.reserve(count);
  if (space == count) {
    table.resize(count);
    for (std::uint64_t i = 0; i < count; ++i) table[i] = i;
    for (std::uint64_t i = count; i-- > 1;) std::swap(table[i], table[rng.uniform(i + 1)]);
  } else {
    std::unordered_set<std::uint64_t> used;
    while (table.size() < count) {
      const auto v = rng.uniform(space);
      if (used.insert(v).second) table.push_back(v);
    }
  }
  Trapdoor td{table};
  return {std::make_shared<ToyRegularOWF>(input_bits_, regularity_, std::move(table), output_bits_), std::move(td)};
}

nlohmann::json ToyRegularOWFFamily::descriptor() const {
  return {{"name", "toy-regular-owf"}, {"params", {{"m", input_bits_}, {"r", regularity_}, {"l", output_bits_}}}};
}

}  // namespace deletia::hash
