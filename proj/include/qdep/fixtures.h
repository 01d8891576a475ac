// Copyright 2026 The qdep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDEP_FIXTURES_H
#define QDEP_FIXTURES_H

#include <string>
#include <string_view>
#include <vector>

#include "qdep/circuit.h"

namespace qdep {

struct FixtureInfo {
    std::string name;
    std::string description;
};

/// The reference circuits, in a fixed order.
const std::vector<FixtureInfo> &fixture_catalog();

/// Throws std::invalid_argument for an unknown name.
Circuit build_fixture(std::string_view name);

}  // namespace qdep

#endif
