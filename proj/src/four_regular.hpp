// Copyright 2026 The antimagic Authors
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

#include "antimagic/constructions.hpp"

namespace antimagic::detail {

// The 4-regular construction with the bad-path phase optional, so the later
// phases can be exercised on instances that still have bad vertices.
Labeling label_4_regular_phases(const BipartiteGraph& graph,
                                ConstructionReport* report, bool swap_paths);

}  // namespace antimagic::detail
