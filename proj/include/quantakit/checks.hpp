// Copyright 2026 The quantakit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace quantakit {

struct SuiteReport {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Names of failing checks, at most a few per property.
  std::vector<std::string> failures;
  double seconds = 0.0;

  bool ok() const { return failed == 0; }
};

/// relalg, vecmonad, gates, quanta, circuitgen.
std::vector<std::string> suite_names();
/// Runs one property suite with fixed seeds. Throws UnknownLabel for an
/// unknown name.
SuiteReport run_suite(const std::string& name);
/// Every suite in suite_names() order.
std::vector<SuiteReport> run_all_suites();

}  // namespace quantakit
