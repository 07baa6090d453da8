// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#include "fpgasched/enumeration.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "test_support.hpp"

namespace fpgasched {
namespace {

TEST(Enumeration, Example1Counts) {
  const TaskSet ts = testing::example1();
  const EnumerationResult r = enumerate(ts.tasks, ts.config);
  EXPECT_EQ(r.total_combinations, 1024u);
  EXPECT_EQ(r.feasible.size(), 620u);
  EXPECT_EQ(r.infeasible_count, 404u);
  EXPECT_DOUBLE_EQ(r.capacity_budget, 198.0);
}

TEST(Enumeration, Example3Counts) {
  const TaskSet ts = testing::example3();
  const EnumerationResult r = enumerate(ts.tasks, ts.config);
  EXPECT_EQ(r.total_combinations, 24u);
  EXPECT_EQ(r.feasible.size(), 6u);
  EXPECT_EQ(r.infeasible_count, 18u);
  EXPECT_DOUBLE_EQ(r.capacity_budget, 1116.0);
}

TEST(Enumeration, PerTaskBudgetOnExample1) {
  const TaskSet ts = testing::example1();
  EXPECT_DOUBLE_EQ(capacity_budget(ts.config, 6, WorkabilityBudget::kTaskConfigs), 204.0);
  EnumerationOptions opts;
  opts.budget = WorkabilityBudget::kTaskConfigs;
  EXPECT_EQ(enumerate(ts.tasks, ts.config, opts).feasible.size(), 686u);
}

TEST(Workability, WinnerRowsAndBoundary) {
  const TaskSet e1 = testing::example1();
  VariantSelection s = make_selection(e1.tasks, testing::kExample1Winner, 60.0);
  EXPECT_DOUBLE_EQ(s.total_share, 188.0);
  EXPECT_TRUE(check_workability(s, e1.config, 6, WorkabilityBudget::kTaskConfigs));
  EXPECT_TRUE(check_workability(s, e1.config, 6));

  const TaskSet e3 = testing::example3();
  VariantSelection w = make_selection(e3.tasks, testing::kExample3Winner, 600.0);
  EXPECT_NEAR(w.total_share, 107375 / 198.84 + 107375 / 244.03 + 19 / 0.16, 1e-9);
  EXPECT_NEAR(w.total_share, 1099.0, 0.5);
  EXPECT_DOUBLE_EQ(capacity_budget(e3.config, 3, WorkabilityBudget::kTaskConfigs), 1137.0);
  EXPECT_TRUE(check_workability(w, e3.config, 3, WorkabilityBudget::kTaskConfigs));

  VariantSelection edge;
  edge.total_share = 204.0;
  EXPECT_TRUE(check_workability(edge, e1.config, 6, WorkabilityBudget::kTaskConfigs));
  edge.total_share = 204.001;
  EXPECT_FALSE(check_workability(edge, e1.config, 6, WorkabilityBudget::kTaskConfigs));
  edge.total_share = 198.0;
  EXPECT_TRUE(check_workability(edge, e1.config, 6));
  edge.total_share = 198.5;
  EXPECT_FALSE(check_workability(edge, e1.config, 6));
}

TEST(Enumeration, SingleTaskSingleVariant) {
  std::vector<TaskSpec> tasks{{"A", 60, 2, 24, {{1, 1.0, 3.0}}}};
  const FleetConfig cfg{1, 60, 6};
  const EnumerationResult r = enumerate(tasks, cfg);
  EXPECT_EQ(r.total_combinations, 1u);
  ASSERT_EQ(r.feasible.size(), 1u);
  EXPECT_DOUBLE_EQ(r.feasible[0].total_share, 24.0);
}

TEST(Enumeration, LexicographicOrderWithLastTaskFastest) {
  const TaskSet ts = testing::example3();
  std::vector<std::vector<std::size_t>> seen;
  EnumerationOptions opts;
  opts.budget = WorkabilityBudget::kTaskConfigs;
  opts.on_infeasible = [&seen](const VariantSelection& s) { seen.push_back(s.choice); };
  const EnumerationResult r = enumerate(ts.tasks, ts.config, opts);
  for (const VariantSelection& s : r.feasible) seen.push_back(s.choice);
  std::sort(seen.begin(), seen.end());
  ASSERT_EQ(seen.size(), 24u);
  EXPECT_EQ(seen.front(), (std::vector<std::size_t>{0, 0, 0}));
  EXPECT_EQ(seen[1], (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_TRUE(std::is_sorted(r.feasible.begin(), r.feasible.end(),
                             [](const auto& a, const auto& b) { return a.choice < b.choice; }));
}

TEST(Enumeration, InfeasibleCallbackSeesEveryRejectedRow) {
  const TaskSet ts = testing::example1();
  std::uint64_t calls = 0;
  EnumerationOptions opts;
  opts.on_infeasible = [&](const VariantSelection& s) {
    ++calls;
    EXPECT_FALSE(check_workability(s, ts.config, ts.tasks.size()));
  };
  const EnumerationResult r = enumerate(ts.tasks, ts.config, opts);
  EXPECT_EQ(calls, r.infeasible_count);
}

TEST(Enumeration, LimitBreachIsCapacityError) {
  const TaskSet ts = testing::example1();
  EnumerationOptions opts;
  opts.limit = 1023;
  try {
    enumerate(ts.tasks, ts.config, opts);
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("1024"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("1023"), std::string::npos);
  }
  opts.limit = 1024;
  EXPECT_NO_THROW(enumerate(ts.tasks, ts.config, opts));
}

TEST(Enumeration, CombinationCountSaturates) {
  std::vector<TaskSpec> tasks;
  for (int i = 0; i < 80; ++i) {
    tasks.push_back({"T" + std::to_string(i), 60, 0, 1,
                     {{1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {4, 4, 1}}});
  }
  EXPECT_EQ(combination_count(tasks), std::numeric_limits<std::uint64_t>::max());
  EXPECT_THROW(enumerate(tasks, {1, 60, 0}), CapacityError);
}

// Brute force over random instances: TFS and TNFS partition the product
// space, and membership follows the budget test.
TEST(EnumerationProperty, PartitionMatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 300; ++n) {
    const testing::RandomInstance inst = testing::random_instance(rng, 4, 3, 3);
    const double budget = capacity_budget(inst.config, inst.tasks.size());
    std::uint64_t infeasible_seen = 0;
    EnumerationOptions opts;
    opts.on_infeasible = [&](const VariantSelection&) { ++infeasible_seen; };
    const EnumerationResult r = enumerate(inst.tasks, inst.config, opts);

    std::uint64_t expected_total = 1;
    for (const TaskSpec& t : inst.tasks) expected_total *= t.variants.size();
    EXPECT_EQ(r.total_combinations, expected_total);
    EXPECT_EQ(r.feasible.size() + r.infeasible_count, expected_total);
    EXPECT_EQ(infeasible_seen, r.infeasible_count);

    std::uint64_t brute_feasible = 0;
    std::vector<std::size_t> idx(inst.tasks.size(), 0);
    for (std::uint64_t c = 0; c < expected_total; ++c) {
      double sum = 0.0;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        sum += share(inst.tasks[i], idx[i], inst.config.time_slice_ms);
      }
      if (sum <= budget + 1e-9) ++brute_feasible;
      for (std::size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < inst.tasks[i].variants.size()) break;
        idx[i] = 0;
      }
    }
    EXPECT_EQ(r.feasible.size(), brute_feasible);
  }
}

TEST(EnumerationProperty, Deterministic) {
  const TaskSet ts = testing::example1();
  const EnumerationResult a = enumerate(ts.tasks, ts.config);
  const EnumerationResult b = enumerate(ts.tasks, ts.config);
  EXPECT_EQ(a.feasible, b.feasible);
}

TEST(EnumerationProperty, FeasibleCountMonotone) {
  const TaskSet ts = testing::example1();
  std::size_t previous = std::numeric_limits<std::size_t>::max();
  for (double cfg : {0.0, 2.0, 4.0, 6.0, 8.0, 10.0}) {
    FleetConfig c = ts.config;
    c.reconfig_time_ms = cfg;
    const std::size_t n = enumerate(ts.tasks, c).feasible.size();
    EXPECT_LE(n, previous) << "t_cfg " << cfg;
    previous = n;
  }
  previous = 0;
  for (int nf = 1; nf <= 8; ++nf) {
    FleetConfig c = ts.config;
    c.n_fpgas = nf;
    const std::size_t n = enumerate(ts.tasks, c).feasible.size();
    EXPECT_GE(n, previous) << "n_f " << nf;
    previous = n;
  }
}

}  // namespace
}  // namespace fpgasched
