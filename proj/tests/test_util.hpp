// Copyright 2026 The cayspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <string>
#include <vector>

#include "cayspec/cayley.hpp"
#include "cayspec/group.hpp"
#include "cayspec/verify.hpp"

namespace testing_util {

inline cayspec::CayleyGraph make_graph(const std::string& group, const std::string& gens) {
  const auto spec = cayspec::GroupSpec::parse(group);
  auto g = spec.build();
  auto s = cayspec::parse_generators(g, spec, gens);
  return cayspec::CayleyGraph::build(std::move(g), cayspec::GeneratingSet(std::move(s)));
}

inline std::vector<cayspec::Element> gens_of(const cayspec::CayleyGraph& g) {
  return {g.gens().elements().begin(), g.gens().elements().end()};
}

/// Every (group, gens) pair of the acceptance family suite.
inline std::vector<cayspec::SweepItem> family_suite() {
  return cayspec::parse_sweep_items(cayspec::acceptance_suite_specs());
}

inline std::string item_name(const cayspec::SweepItem& item) {
  return item.group + " gens=" + item.gens;
}

}  // namespace testing_util
