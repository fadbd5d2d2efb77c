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


#include "seqfh/csv.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace seqfh {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kCsvHeader << '\n';
  for (const ResultRow& r : rows) {
    out << format_double(r.sweep) << ',' << to_string(r.strategy.path) << ','
        << to_string(r.strategy.allocation) << ',' << to_string(r.strategy.compression) << ','
        << format_double(r.mean_sum_se) << ',' << format_double(r.stderr_sum_se) << ','
        << r.trials << ',' << r.seed << '\n';
  }
}

void emit_csv(const std::string& path, const std::vector<ResultRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_csv(out, rows);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::vector<ResultRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw std::runtime_error("CSV header mismatch");
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string f[8];
    for (int i = 0; i < 8; ++i)
      if (!std::getline(fields, f[i], ',')) throw std::runtime_error("short CSV row: " + line);
    ResultRow r;
    r.sweep = std::stod(f[0]);
    r.strategy = {parse_path_mode(f[1]), parse_allocation(f[2]), parse_compression(f[3])};
    r.mean_sum_se = std::stod(f[4]);
    r.stderr_sum_se = std::stod(f[5]);
    r.trials = std::stoi(f[6]);
    r.seed = std::stoull(f[7]);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace seqfh
