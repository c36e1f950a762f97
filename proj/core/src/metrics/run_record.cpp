// Copyright 2026 The QCAE Authors
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

#include "qcae/metrics/run_record.hpp"

#include <cstdio>
#include <fstream>

#include "qcae/errors.hpp"

namespace qcae::metrics {

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::string format_csv(std::span<const RunRecord> records) {
  std::string out = std::string(kRunCsvHeader) + "\n";
  for (const auto& r : records) {
    out += r.config_id + "," + std::to_string(r.epoch) + "," + fixed6(r.train_loss) + "," +
           fixed6(r.val_ssim) + "\n";
  }
  return out;
}

void write_csv(std::span<const RunRecord> records, const std::string& path) {
  if (records.empty()) throw UsageError("write_csv needs at least one record");
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path + " for writing");
  const auto text = format_csv(records);
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) throw IoError("failed writing " + path);
}

}  // namespace qcae::metrics
