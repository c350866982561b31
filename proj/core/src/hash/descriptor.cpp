#include "deletia/hash/descriptor.hpp"

#include "deletia/error.hpp"
#include "deletia/hash/ajtai.hpp"
#include "deletia/hash/chor_goldreich.hpp"
#include "deletia/hash/compose.hpp"
#include "deletia/hash/fdelta.hpp"
#include "deletia/hash/regular_owf.hpp"

namespace deletia::hash {

FamilyPtr make_family(const nlohmann::json& d) {
  try {
    const auto name = d.at("name").get<std::string>();
    const auto& p = d.contains("params") ? d.at("params") : nlohmann::json::object();
    if (name == "ajtai")
      return std::make_shared<AjtaiFamily>(p.at("n").get<std::size_t>(), p.at("m").get<std::size_t>(),
                                           p.at("q").get<std::int64_t>(), p.at("sigma").get<double>());
    if (name == "toy-regular-owf")
      return std::make_shared<ToyRegularOWFFamily>(p.at("m").get<std::size_t>(), p.value("r", std::size_t{0}),
                                                   p.value("l", std::size_t{0}));
    if (name == "fdelta") return std::make_shared<FDeltaFamily>(make_family(p.at("base")));
    if (name == "chor-goldreich")
      return std::make_shared<ChorGoldreichFamily>(p.value("t", 6u), p.at("k").get<unsigned>(),
                                                   p.at("n").get<unsigned>());
    if (name == "composed") return compose_balanced(make_family(p.at("owf")), make_family(p.at("uhash")));
    if (name == "constant")
      return std::make_shared<ConstantFamily>(p.at("in_bits").get<std::size_t>(), p.at("out_bits").get<std::size_t>());
    throw Error(Errc::config, "unknown hash family '" + name + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::config, std::string("malformed family descriptor: ") + e.what());
  }
}

nlohmann::json FamilySpec::to_json() const {
  auto j = family->descriptor();
  j["seed"] = seed;
  return j;
}

FamilySpec FamilySpec::from_json(const nlohmann::json& j) {
  return {make_family(j), j.value("seed", std::uint64_t{0})};
}

}  // namespace deletia::hash
