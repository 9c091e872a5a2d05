#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mobius/poset.hpp"

namespace mobius {

PosetPtr chain_poset(std::size_t n);
PosetPtr antichain_poset(std::size_t n);
// 0 < x, y < 1.
PosetPtr diamond_poset();
// Subsets of {1..k} under inclusion, named by their members ("0" for the empty set).
PosetPtr boolean_lattice(std::size_t k);
// a < b > c < d > ... on n elements.
PosetPtr zigzag_poset(std::size_t n);

// chains of 1-4, antichain of 3, diamond, B2, zigzag of 4.
std::vector<std::pair<std::string, PosetPtr>> poset_catalog();

}  // namespace mobius
