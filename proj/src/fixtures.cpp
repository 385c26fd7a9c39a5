#include "emergy/fixtures.hpp"

namespace emergy::fixtures {

std::string_view fig1_text() {
  static constexpr std::string_view kText = R"(# Two sources, six splits, two co-products (7 and 9), two outputs.
node 1 source 100
node 2 split
node 3 split
node 4 split
node 5 source 250
node 6 split
node 7 coproduct
node 8 split
node 9 coproduct
node 10 split
node 11 output
node 12 output
arc 1 2 1
arc 2 3 3/10
arc 2 4 7/10
arc 3 7 1
arc 4 7 1
arc 5 6 1
arc 6 3 1/4
arc 6 4 3/4
arc 7 8 1
arc 7 11 1
arc 8 6 1/2
arc 8 9 1/2
arc 9 4 1
arc 9 10 1
arc 10 6 1/2
arc 10 12 1/2
)";
  return kText;
}

EmergyGraph fig1() { return parse_graph(fig1_text()); }

}  // namespace emergy::fixtures
