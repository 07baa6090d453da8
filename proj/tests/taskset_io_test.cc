// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#include "fpgasched/taskset_io.hpp"

#include <gtest/gtest.h>

#include <string>

#include "test_support.hpp"

namespace fpgasched {
namespace {

std::vector<std::size_t> variant_counts(const TaskSet& ts) {
  std::vector<std::size_t> out;
  for (const TaskSpec& t : ts.tasks) out.push_back(t.variant_count());
  return out;
}

std::string error_of(std::string_view doc) {
  try {
    parse_taskset(doc);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

TEST(TasksetIo, Example1Shape) {
  const TaskSet ts = testing::example1();
  EXPECT_EQ(ts.config.n_fpgas, 4);
  EXPECT_DOUBLE_EQ(ts.config.time_slice_ms, 60.0);
  EXPECT_DOUBLE_EQ(ts.config.reconfig_time_ms, 6.0);
  EXPECT_EQ(variant_counts(ts), (std::vector<std::size_t>{2, 4, 4, 4, 4, 2}));
  EXPECT_EQ(combination_count(ts.tasks), 1024u);
}

TEST(TasksetIo, Example3Shape) {
  const TaskSet ts = testing::example3();
  EXPECT_EQ(variant_counts(ts), (std::vector<std::size_t>{3, 2, 4}));
  EXPECT_EQ(combination_count(ts.tasks), 24u);
  EXPECT_EQ(ts.tasks[0].name, "LZ-4");
}

TEST(TasksetIo, RoundTripIsExact) {
  for (const TaskSet& ts : {testing::example1(), testing::example2(), testing::example3()}) {
    const std::string doc = serialize_taskset(ts);
    const TaskSet back = parse_taskset(doc);
    EXPECT_EQ(serialize_taskset(back), doc);
    ASSERT_EQ(back.tasks.size(), ts.tasks.size());
    for (std::size_t i = 0; i < ts.tasks.size(); ++i) {
      EXPECT_EQ(back.tasks[i].name, ts.tasks[i].name);
      EXPECT_EQ(back.tasks[i].data_size, ts.tasks[i].data_size);
      for (std::size_t j = 0; j < ts.tasks[i].variants.size(); ++j) {
        EXPECT_EQ(back.tasks[i].variants[j].throughput, ts.tasks[i].variants[j].throughput);
        EXPECT_EQ(back.tasks[i].variants[j].power_mw, ts.tasks[i].variants[j].power_mw);
      }
    }
  }
}

constexpr const char* kConfig =
    R"("config": {"n_fpgas": 2, "time_slice_ms": 60, "reconfig_time_ms": 6})";

TEST(TasksetIo, EmptyTaskListRejected) {
  const std::string doc = std::string("{") + kConfig + R"(, "tasks": []})";
  EXPECT_NE(error_of(doc).find("tasks"), std::string::npos);
}

TEST(TasksetIo, EmptyVariantListRejected) {
  const std::string doc = std::string("{") + kConfig +
                          R"(, "tasks": [{"name": "A", "period_ms": 60, "init_interval_ms": 2,
                              "data_size": 4, "variants": []}]})";
  const std::string msg = error_of(doc);
  EXPECT_NE(msg.find("A"), std::string::npos) << msg;
  EXPECT_NE(msg.find("variants"), std::string::npos) << msg;
}

TEST(TasksetIo, NonIncreasingThroughputNamesTaskAndField) {
  const std::string doc = std::string("{") + kConfig + R"(, "tasks": [
      {"name": "T1", "period_ms": 60, "init_interval_ms": 2, "data_size": 4,
       "variants": [{"cu_count": 1, "throughput_per_ms": 1, "power_mw": 1}]},
      {"name": "T2", "period_ms": 60, "init_interval_ms": 2, "data_size": 4,
       "variants": [{"cu_count": 1, "throughput_per_ms": 1, "power_mw": 1}]},
      {"name": "T3", "period_ms": 60, "init_interval_ms": 2, "data_size": 4,
       "variants": [{"cu_count": 1, "throughput_per_ms": 2, "power_mw": 1},
                    {"cu_count": 2, "throughput_per_ms": 2, "power_mw": 2}]}]})";
  const std::string msg = error_of(doc);
  EXPECT_NE(msg.find("T3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("variants[1]"), std::string::npos) << msg;
  EXPECT_NE(msg.find("throughput"), std::string::npos) << msg;
}

TEST(TasksetIo, MalformedAndMistypedInput) {
  EXPECT_FALSE(error_of("{").empty());
  EXPECT_FALSE(error_of("[]").empty());
  EXPECT_NE(error_of(R"({"tasks": []})").find("config"), std::string::npos);
  const std::string wrong_type = std::string("{") + kConfig + R"(, "tasks": [
      {"name": "A", "period_ms": "sixty", "init_interval_ms": 2, "data_size": 4,
       "variants": [{"cu_count": 1, "throughput_per_ms": 1, "power_mw": 1}]}]})";
  EXPECT_NE(error_of(wrong_type).find("tasks[0]"), std::string::npos);
  EXPECT_NE(error_of(wrong_type).find("period_ms"), std::string::npos);
}

TEST(TasksetIo, ReconfigNotBelowSliceRejected) {
  const std::string doc = R"({"config": {"n_fpgas": 2, "time_slice_ms": 6, "reconfig_time_ms": 6},
      "tasks": [{"name": "A", "period_ms": 60, "init_interval_ms": 2, "data_size": 4,
       "variants": [{"cu_count": 1, "throughput_per_ms": 1, "power_mw": 1}]}]})";
  EXPECT_FALSE(error_of(doc).empty());
}

TEST(TasksetIo, MissingFileIsInputError) {
  EXPECT_THROW(load_taskset("/nonexistent/taskset.json"), InputError);
}

}  // namespace
}  // namespace fpgasched
