// Copyright 2026 The kpx Authors.
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

#include <gtest/gtest.h>

#include "properties.hpp"

namespace kpx {
namespace {

TEST(Properties, TenThousandRandomDocuments) {
  const auto rep = testing::sweep_properties(10000, 2718);
  EXPECT_EQ(rep.documents, 10000u);
  EXPECT_GT(rep.chunks, 10000u);
  EXPECT_GT(rep.emitted, 1000u);
  for (const auto& [property, n] : rep.violations) EXPECT_EQ(n, 0u) << property;
  EXPECT_GE(rep.violations.size(), 14u);
}

}  // namespace
}  // namespace kpx
