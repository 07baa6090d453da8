// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#include "fpgasched/task_model.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace fpgasched {
namespace {

using testing::example1;
using testing::example3;

TEST(ExecutionTime, Example1T1SingleCu) {
  const TaskSet ts = example1();
  EXPECT_DOUBLE_EQ(execution_time(ts.tasks[0], 0), 48.0);
}

TEST(ExecutionTime, DataEqualToThroughputIsOneMs) {
  TaskSpec t{"X", 10.0, 0.0, 3.7, {{1, 3.7, 1.0}}};
  EXPECT_DOUBLE_EQ(execution_time(t, 0), 1.0);
}

TEST(ExecutionTime, Lz4ThreeCuNearReference) {
  const TaskSet ts = example3();
  // 107375 / 198.84, reference value 540.
  EXPECT_NEAR(execution_time(ts.tasks[0], 2), 540.01, 0.01);
  EXPECT_NEAR(execution_time(ts.tasks[0], 2), 540.0, 1.0);
}

TEST(ExecutionTime, OutOfRangeVariantIsDomainError) {
  const TaskSet ts = example1();
  EXPECT_THROW(execution_time(ts.tasks[0], 2), DomainError);
}

TEST(Share, Example1T4ThreeCu) {
  const TaskSet ts = example1();
  EXPECT_DOUBLE_EQ(share(ts.tasks[3], 2, 60.0), 32.0);
}

TEST(Share, SliceEqualToPeriodGivesExecutionTime) {
  const TaskSet ts = example1();
  for (const TaskSpec& t : ts.tasks) {
    for (std::size_t j = 0; j < t.variants.size(); ++j) {
      EXPECT_DOUBLE_EQ(share(t, j, t.period_ms), execution_time(t, j));
    }
  }
}

TEST(Share, VaddTwoCu) {
  const TaskSet ts = example3();
  EXPECT_DOUBLE_EQ(share(ts.tasks[2], 1, 600.0), 118.75);
}

TEST(ShareColumn, Example1) {
  const TaskSet ts = example1();
  const std::vector<std::vector<double>> expected{
      {48, 24}, {36, 18, 12, 9}, {48, 24, 16, 12}, {96, 48, 32, 24}, {48, 24, 16, 12}, {48, 24}};
  const auto table = share_table(ts.tasks, 60.0);
  ASSERT_EQ(table.size(), expected.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    ASSERT_EQ(table[i].size(), expected[i].size());
    for (std::size_t j = 0; j < table[i].size(); ++j) EXPECT_NEAR(table[i][j], expected[i][j], 1e-12);
  }
}

// Reference shares are whole ms. VAdd's first variant is 158.33 against a
// reference of 159; everything else rounds to nearest.
TEST(Share, Example3ShareColumnWithinOneMs) {
  const TaskSet ts = example3();
  const std::vector<std::vector<double>> printed{{830, 650, 540}, {440, 420}, {159, 119, 106, 95}};
  const auto table = share_table(ts.tasks, 600.0);
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table[i].size(); ++j) {
      EXPECT_LE(std::abs(table[i][j] - printed[i][j]), 1.0) << i << "," << j;
    }
  }
  EXPECT_NEAR(table[2][0], 158.333333, 1e-5);
}

TEST(ShareProperty, ShareTimesPeriodEqualsExecTimesSlice) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.1, 1000.0);
  for (int n = 0; n < 2000; ++n) {
    TaskSpec t{"P", u(rng), 0.0, u(rng), {}};
    double th = u(rng) * 0.01;
    for (int j = 0; j < 3; ++j) {
      t.variants.push_back({j + 1, th, 1.0});
      th *= 1.0 + u(rng) / 1000.0;
    }
    const double slice = u(rng);
    for (std::size_t j = 0; j < 3; ++j) {
      const double lhs = share(t, j, slice) * t.period_ms;
      const double rhs = execution_time(t, j) * slice;
      EXPECT_LE(std::abs(lhs - rhs), 1e-9 * std::abs(rhs));
      if (j > 0) {
        EXPECT_LE(share(t, j, slice), share(t, j - 1, slice));
      }
    }
  }
}

TEST(Validation, RejectsNonIncreasingThroughput) {
  TaskSpec t{"Bad", 60, 2, 24, {{1, 1.0, 5}, {2, 1.0, 6}}};
  try {
    validate_task(t);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("Bad"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("variants[1]"), std::string::npos);
  }
}

TEST(Validation, RejectsBadScalars) {
  EXPECT_THROW(validate_task({"A", 0.0, 0, 1, {{1, 1, 1}}}), InputError);
  EXPECT_THROW(validate_task({"A", 1.0, -1, 1, {{1, 1, 1}}}), InputError);
  EXPECT_THROW(validate_task({"A", 1.0, 0, 0, {{1, 1, 1}}}), InputError);
  EXPECT_THROW(validate_task({"A", 1.0, 0, 1, {}}), InputError);
  EXPECT_THROW(validate_task({"A", 1.0, 0, 1, {{1, 1, 0}}}), InputError);
  EXPECT_THROW(validate_task({"", 1.0, 0, 1, {{1, 1, 1}}}), InputError);
  EXPECT_NO_THROW(validate_task({"A", 1.0, 0, 1, {{1, 1, 1}}}));
}

TEST(Validation, ConfigInvariants) {
  EXPECT_THROW(validate_config({0, 60, 6}), InputError);
  EXPECT_THROW(validate_config({1, 0, 0}), InputError);
  EXPECT_THROW(validate_config({1, 60, -1}), InputError);
  EXPECT_THROW(validate_config({1, 60, 60}), InputError);
  EXPECT_NO_THROW(validate_config({1, 60, 0}));
}

TEST(MakeSelection, DerivedFieldsAgree) {
  const TaskSet ts = example1();
  const VariantSelection s = make_selection(ts.tasks, testing::kExample1Winner, 60.0);
  EXPECT_EQ(s.shares, (std::vector<double>{48, 36, 24, 32, 24, 24}));
  EXPECT_DOUBLE_EQ(s.total_share, 188.0);
  EXPECT_DOUBLE_EQ(s.total_power, 31.5);
  EXPECT_THROW(make_selection(ts.tasks, {0, 0}, 60.0), DomainError);
}

}  // namespace
}  // namespace fpgasched
