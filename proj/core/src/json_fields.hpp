// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#pragma once

// Field accessors that turn JSON shape errors into InputErrors with a path.

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "fpgasched/task_model.hpp"

namespace fpgasched::detail {

inline void require_object(const nlohmann::json& node, const std::string& path) {
  if (!node.is_object()) throw InputError(path + ": expected an object");
}

inline const nlohmann::json& require_field(const nlohmann::json& node, const char* key,
                                           const std::string& path) {
  auto it = node.find(key);
  if (it == node.end()) throw InputError(path + "." + key + ": missing field");
  return *it;
}

inline double require_number(const nlohmann::json& node, const char* key,
                             const std::string& path) {
  const nlohmann::json& v = require_field(node, key, path);
  if (!v.is_number()) throw InputError(path + "." + key + ": expected a number");
  return v.get<double>();
}

inline int require_int(const nlohmann::json& node, const char* key, const std::string& path) {
  const nlohmann::json& v = require_field(node, key, path);
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::floor(d) == d) return static_cast<int>(d);
  }
  throw InputError(path + "." + key + ": expected an integer");
}

inline std::string require_string(const nlohmann::json& node, const char* key,
                                  const std::string& path) {
  const nlohmann::json& v = require_field(node, key, path);
  if (!v.is_string()) throw InputError(path + "." + key + ": expected a string");
  return v.get<std::string>();
}

inline bool require_bool(const nlohmann::json& node, const char* key, const std::string& path) {
  const nlohmann::json& v = require_field(node, key, path);
  if (!v.is_boolean()) throw InputError(path + "." + key + ": expected a boolean");
  return v.get<bool>();
}

}  // namespace fpgasched::detail
