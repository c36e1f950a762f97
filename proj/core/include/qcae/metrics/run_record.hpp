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

#pragma once

#include <span>
#include <string>

namespace qcae::metrics {

struct RunRecord {
  std::string config_id;
  std::size_t epoch = 0;
  double train_loss = 0.0;
  double val_ssim = 0.0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

inline constexpr const char* kRunCsvHeader = "config_id,epoch,train_loss,val_ssim";

/// Header plus one row per record, values with 6 decimal places.
std::string format_csv(std::span<const RunRecord> records);

/// Throws UsageError for an empty list, IoError when the file cannot be written.
void write_csv(std::span<const RunRecord> records, const std::string& path);

/// Fixed 6-place decimal formatting shared by every CSV writer.
std::string fixed6(double value);

}  // namespace qcae::metrics
