/*
 * Copyright 2026 The VPCME Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <filesystem>
#include <iosfwd>

#include "vpcme/ensemble.hpp"

namespace vpcme {

/// Model files are JSON documents tagged "vpcme.model/1" holding the config,
/// every projection matrix and eigenvalue list, the MLKNN tables with their
/// training points, and the training log. Doubles are written in shortest
/// round-trip form, so a reloaded model predicts bit-identically.
void write_model(const VpcmeModel& model, std::ostream& out);
VpcmeModel read_model(std::istream& in);

void save_model(const VpcmeModel& model, const std::filesystem::path& path);
VpcmeModel load_model(const std::filesystem::path& path);

}  // namespace vpcme
