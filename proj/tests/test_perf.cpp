#include <gtest/gtest.h>

#include <random>

#include "insrobust/bench.hpp"
#include "insrobust/primitivity.hpp"

namespace {

using namespace insrobust;

TEST(Perf, BorderArrayIsLinear) {
  std::mt19937_64 rng(42);
  std::vector<double> sizes, times;
  for (std::size_t n = std::size_t{1} << 12; n <= std::size_t{1} << 20; n *= 2) {
    const Word w = random_word(n, 2, rng);
    // Roughly equal total work per size keeps small sizes above timer noise.
    const std::size_t reps = std::max<std::size_t>(1, (std::size_t{1} << 22) / n);
    volatile std::size_t sink = 0;
    const auto t = time_trials([&] {
      for (std::size_t r = 0; r < reps; ++r) sink = sink + border_array(w).back();
    }, 5);
    sizes.push_back(static_cast<double>(n));
    times.push_back(t.median / static_cast<double>(reps));
  }
  const double slope = loglog_slope(sizes, times);
  RecordProperty("slope", std::to_string(slope));
  EXPECT_LE(slope, 1.2);
}

TEST(Perf, SlopeOfSyntheticData) {
  const std::vector<double> x{1, 2, 4, 8}, y{3, 6, 12, 24}, y2{1, 4, 16, 64};
  EXPECT_NEAR(loglog_slope(x, y), 1.0, 1e-12);
  EXPECT_NEAR(loglog_slope(x, y2), 2.0, 1e-12);
  EXPECT_EQ(parse_sizes("4..32"), (std::vector<std::size_t>{4, 8, 16, 32}));
  EXPECT_EQ(parse_sizes("1024"), (std::vector<std::size_t>{1024}));
  EXPECT_EQ(parse_sizes("3,5"), (std::vector<std::size_t>{3, 5}));
  EXPECT_THROW(parse_sizes("3,,5"), std::invalid_argument);
}

}  // namespace
