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

#include "qcae/data/mnist.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "qcae/errors.hpp"

namespace qcae::data {

MnistSet::MnistSet(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> pixels,
                   std::vector<std::uint8_t> labels)
    : rows_(rows), cols_(cols), pixels_(std::move(pixels)), labels_(std::move(labels)) {
  if (pixels_.size() != rows_ * cols_ * labels_.size()) {
    throw UsageError("MNIST pixel buffer size " + std::to_string(pixels_.size()) +
                     " does not match " + std::to_string(labels_.size()) + " images of " +
                     std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

std::span<const std::uint8_t> MnistSet::raw_image(std::size_t i) const {
  if (i >= size()) throw UsageError("image index " + std::to_string(i) + " out of range");
  return std::span<const std::uint8_t>(pixels_).subspan(i * rows_ * cols_, rows_ * cols_);
}

nn::Tensor MnistSet::image(std::size_t i) const {
  const auto raw = raw_image(i);
  std::vector<double> px(raw.size());
  std::transform(raw.begin(), raw.end(), px.begin(),
                 [](std::uint8_t b) { return static_cast<double>(b) / 255.0; });
  return nn::Tensor({1, rows_, cols_}, std::move(px));
}

std::vector<nn::Tensor> MnistSet::images() const {
  std::vector<nn::Tensor> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(image(i));
  return out;
}

namespace {

std::uint32_t read_be32(std::span<const std::uint8_t> bytes, std::size_t offset,
                        const char* what) {
  if (offset + 4 > bytes.size()) {
    throw ParseError(std::string("truncated IDX header reading ") + what, offset);
  }
  return (std::uint32_t{bytes[offset]} << 24) | (std::uint32_t{bytes[offset + 1]} << 16) |
         (std::uint32_t{bytes[offset + 2]} << 8) | std::uint32_t{bytes[offset + 3]};
}

void put_be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path);
  return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(file)),
                                   std::istreambuf_iterator<char>());
}

}  // namespace

MnistSet parse_idx(std::span<const std::uint8_t> image_bytes,
                   std::span<const std::uint8_t> label_bytes) {
  const auto image_magic = read_be32(image_bytes, 0, "image magic");
  if (image_magic != kIdxImageMagic) throw ParseError("bad IDX image magic", 0);
  const std::size_t count = read_be32(image_bytes, 4, "image count");
  const std::size_t rows = read_be32(image_bytes, 8, "row count");
  const std::size_t cols = read_be32(image_bytes, 12, "column count");
  const std::size_t payload = count * rows * cols;
  if (image_bytes.size() < 16 + payload) {
    throw ParseError("truncated IDX image payload: expected " + std::to_string(payload) +
                         " pixel bytes",
                     image_bytes.size());
  }

  const auto label_magic = read_be32(label_bytes, 0, "label magic");
  if (label_magic != kIdxLabelMagic) throw ParseError("bad IDX label magic", 0);
  const std::size_t label_count = read_be32(label_bytes, 4, "label count");
  if (label_count != count) {
    throw ParseError("IDX count mismatch: " + std::to_string(count) + " images vs " +
                         std::to_string(label_count) + " labels",
                     4);
  }
  if (label_bytes.size() < 8 + label_count) {
    throw ParseError("truncated IDX label payload: expected " + std::to_string(label_count) +
                         " label bytes",
                     label_bytes.size());
  }

  std::vector<std::uint8_t> pixels(image_bytes.begin() + 16,
                                   image_bytes.begin() + 16 + static_cast<long>(payload));
  std::vector<std::uint8_t> labels(label_bytes.begin() + 8,
                                   label_bytes.begin() + 8 + static_cast<long>(label_count));
  return MnistSet(rows, cols, std::move(pixels), std::move(labels));
}

MnistSet load_idx(const std::string& images_path, const std::string& labels_path) {
  const auto images = read_file(images_path);
  const auto labels = read_file(labels_path);
  return parse_idx(images, labels);
}

std::vector<std::uint8_t> encode_idx_images(const MnistSet& set) {
  std::vector<std::uint8_t> out;
  put_be32(out, kIdxImageMagic);
  put_be32(out, static_cast<std::uint32_t>(set.size()));
  put_be32(out, static_cast<std::uint32_t>(set.rows()));
  put_be32(out, static_cast<std::uint32_t>(set.cols()));
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto raw = set.raw_image(i);
    out.insert(out.end(), raw.begin(), raw.end());
  }
  return out;
}

std::vector<std::uint8_t> encode_idx_labels(const MnistSet& set) {
  std::vector<std::uint8_t> out;
  put_be32(out, kIdxLabelMagic);
  put_be32(out, static_cast<std::uint32_t>(set.size()));
  out.insert(out.end(), set.labels().begin(), set.labels().end());
  return out;
}

void write_idx(const MnistSet& set, const std::string& images_path,
               const std::string& labels_path) {
  auto write = [](const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + path + " for writing");
    file.write(reinterpret_cast<const char*>(bytes.data()),
               static_cast<std::streamsize>(bytes.size()));
    if (!file) throw IoError("failed writing " + path);
  };
  write(images_path, encode_idx_images(set));
  write(labels_path, encode_idx_labels(set));
}

FilterResult filter_classes(const MnistSet& set, std::span<const int> classes,
                            std::size_t limit) {
  if (classes.empty()) throw UsageError("filter_classes needs at least one class");
  std::vector<std::uint8_t> pixels;
  std::vector<std::uint8_t> labels;
  for (std::size_t i = 0; i < set.size() && labels.size() < limit; ++i) {
    const int label = set.label(i);
    if (std::find(classes.begin(), classes.end(), label) == classes.end()) continue;
    const auto raw = set.raw_image(i);
    pixels.insert(pixels.end(), raw.begin(), raw.end());
    labels.push_back(set.label(i));
  }
  FilterResult out;
  out.short_of_limit = labels.size() < limit;
  out.set = MnistSet(set.rows(), set.cols(), std::move(pixels), std::move(labels));
  return out;
}

MnistFiles MnistFiles::in_directory(const std::string& root) {
  const std::string base = root.empty() || root.back() == '/' ? root : root + "/";
  return {base + "train-images-idx3-ubyte", base + "train-labels-idx1-ubyte",
          base + "t10k-images-idx3-ubyte", base + "t10k-labels-idx1-ubyte"};
}

}  // namespace qcae::data
