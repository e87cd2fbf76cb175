#include <gtest/gtest.h>

#include "rsub_tools/acceptance.hpp"

namespace {

TEST(NonisomorphicGraphs, CountsMatchKnownSequence) {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(rsub::tools::nonisomorphic_graphs(n).size(), expected[n - 1]) << n;
}

TEST(NonisomorphicGraphs, EdgesStayInRange) {
  for (const auto& edges : rsub::tools::nonisomorphic_graphs(5))
    for (const auto& e : edges) {
      EXPECT_LT(e.first, e.second);
      EXPECT_LT(e.second, 5u);
    }
}

}  // namespace
