#include "mobius/catalog.hpp"

#include "mobius/random.hpp"

namespace mobius {

PosetPtr chain_poset(std::size_t n) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return share(Poset::from_index_relations(element_names(n), pairs));
}

PosetPtr antichain_poset(std::size_t n) { return share(Poset::from_index_relations(element_names(n), {})); }

PosetPtr diamond_poset() {
  return share(Poset::from_relations({"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}}));
}

PosetPtr boolean_lattice(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names;
  for (std::size_t s = 0; s < n; ++s) {
    std::string name;
    for (std::size_t i = 0; i < k; ++i)
      if ((s >> i) & 1U) name += std::to_string(i + 1);
    names.push_back(name.empty() ? "0" : name);
  }
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < k; ++i)
      if (!((s >> i) & 1U)) pairs.emplace_back(s, s | (std::size_t{1} << i));
  return share(Poset::from_index_relations(std::move(names), pairs));
}

PosetPtr zigzag_poset(std::size_t n) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 0; i + 1 < n; ++i) {
    if (i % 2 == 0)
      pairs.emplace_back(i, i + 1);
    else
      pairs.emplace_back(i + 1, i);
  }
  return share(Poset::from_index_relations(element_names(n), pairs));
}

std::vector<std::pair<std::string, PosetPtr>> poset_catalog() {
  return {
      {"chain1", chain_poset(1)},     {"chain2", chain_poset(2)},       {"chain3", chain_poset(3)},
      {"chain4", chain_poset(4)},     {"antichain3", antichain_poset(3)}, {"diamond", diamond_poset()},
      {"B2", boolean_lattice(2)},     {"zigzag4", zigzag_poset(4)},
  };
}

}  // namespace mobius
