/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The seqfh Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#pragma once

#include "seqfh/experiment.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace seqfh {

inline constexpr const char* kCsvHeader =
    "sweep,path_mode,allocation,compression,mean_sum_se,stderr,trials,seed";

// One row per result, LF line endings, doubles at 17 significant digits.
void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);
void emit_csv(const std::string& path, const std::vector<ResultRow>& rows);

std::vector<ResultRow> parse_csv(std::istream& in);

}  // namespace seqfh
