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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcae/nn/tensor.hpp"

namespace qcae::data {

inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;

/// Images kept as the raw IDX bytes; image(i) yields the [1, rows, cols]
/// tensor scaled by 1/255, so pixels are always in [0, 1].
class MnistSet {
 public:
  MnistSet() = default;
  MnistSet(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> pixels,
           std::vector<std::uint8_t> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  nn::Tensor image(std::size_t i) const;
  std::vector<nn::Tensor> images() const;
  std::span<const std::uint8_t> raw_image(std::size_t i) const;
  std::uint8_t label(std::size_t i) const { return labels_.at(i); }
  std::span<const std::uint8_t> labels() const noexcept { return labels_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> pixels_;
  std::vector<std::uint8_t> labels_;
};

/// Parses an IDX image/label pair. Throws IoError if a file cannot be read
/// and ParseError (naming the byte offset) on bad magic, truncation or a
/// count mismatch; no partial set is returned.
MnistSet load_idx(const std::string& images_path, const std::string& labels_path);

/// In-memory variant of load_idx.
MnistSet parse_idx(std::span<const std::uint8_t> image_bytes,
                   std::span<const std::uint8_t> label_bytes);

/// Serializes back to IDX bytes (big-endian header).
std::vector<std::uint8_t> encode_idx_images(const MnistSet& set);
std::vector<std::uint8_t> encode_idx_labels(const MnistSet& set);
void write_idx(const MnistSet& set, const std::string& images_path,
               const std::string& labels_path);

struct FilterResult {
  MnistSet set;
  /// Set when fewer than `limit` samples matched; `set` then holds all matches.
  bool short_of_limit = false;
};

/// First `limit` samples whose label is in `classes`, original order kept.
/// Throws UsageError when `classes` is empty.
FilterResult filter_classes(const MnistSet& set, std::span<const int> classes,
                            std::size_t limit);

/// Standard file names inside an MNIST directory.
struct MnistFiles {
  std::string train_images;
  std::string train_labels;
  std::string test_images;
  std::string test_labels;

  static MnistFiles in_directory(const std::string& root);
};

}  // namespace qcae::data
