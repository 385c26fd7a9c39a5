#ifndef EMERGY_FIXTURES_HPP
#define EMERGY_FIXTURES_HPP

#include <string_view>

#include "emergy/graph.hpp"

namespace emergy::fixtures {

/// The twelve-node reference instance with two sources (1: 100, 5: 250)
/// and co-products 7 and 9. Identical to data/fig1.emg.
std::string_view fig1_text();

EmergyGraph fig1();

/// Optimum the published worked example reports for arc (4,7); it treats
/// the two source-1 paths that diverge at split node 8 as incompatible.
inline constexpr std::string_view kFig1PublishedValue = "303.75";

}  // namespace emergy::fixtures

#endif  // EMERGY_FIXTURES_HPP
