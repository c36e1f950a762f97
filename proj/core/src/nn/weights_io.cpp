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

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>

#include "qcae/errors.hpp"
#include "qcae/nn/optim.hpp"

namespace qcae::nn {

namespace {

constexpr std::array<char, 8> kMagic = {'Q', 'C', 'A', 'E', 'W', 'T', 'S', '1'};

template <typename T>
void put_le(std::string& out, T value) {
  std::uint64_t bits = 0;
  if constexpr (std::is_same_v<T, double>) {
    bits = std::bit_cast<std::uint64_t>(value);
  } else {
    bits = static_cast<std::uint64_t>(value);
  }
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<char>((bits >> (8 * i)) & 0xFFU));
  }
}

class Reader {
 public:
  explicit Reader(const std::string& bytes) : bytes_(bytes) {}

  template <typename T>
  T get(const char* what) {
    if (pos_ + sizeof(T) > bytes_.size()) throw ParseError(std::string("truncated ") + what, pos_);
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_ + i])) << (8 * i);
    }
    pos_ += sizeof(T);
    if constexpr (std::is_same_v<T, double>) {
      return std::bit_cast<double>(bits);
    } else {
      return static_cast<T>(bits);
    }
  }

  std::size_t pos() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }
  void skip(std::size_t n) { pos_ += n; }

 private:
  const std::string& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

void save_weights(const std::string& path, std::span<const Tensor* const> tensors) {
  std::string out(kMagic.begin(), kMagic.end());
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(tensors.size()));
  for (const Tensor* t : tensors) {
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(t->rank()));
    for (std::size_t d : t->shape()) put_le<std::uint64_t>(out, d);
  }
  for (const Tensor* t : tensors) {
    for (double v : t->data()) put_le<double>(out, v);
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open weight file for writing: " + path);
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file) throw IoError("failed writing weight file: " + path);
}

std::vector<Tensor> load_weights(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open weight file: " + path);
  const std::string bytes((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());

  if (bytes.size() < kMagic.size() ||
      std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0) {
    throw ParseError("bad weight-file magic in " + path, 0);
  }
  Reader r(bytes);
  r.skip(kMagic.size());
  const auto count = r.get<std::uint32_t>("tensor count");
  std::vector<Shape> shapes(count);
  for (auto& shape : shapes) {
    const auto rank = r.get<std::uint32_t>("tensor rank");
    if (rank > 8) throw ParseError("implausible tensor rank " + std::to_string(rank), r.pos());
    for (std::uint32_t d = 0; d < rank; ++d) shape.push_back(r.get<std::uint64_t>("tensor dim"));
  }
  std::vector<Tensor> out;
  for (auto& shape : shapes) {
    const std::size_t n = shape_size(shape);
    if (n > r.remaining() / 8) throw ParseError("truncated tensor payload", r.pos());
    std::vector<double> data(n);
    for (auto& v : data) v = r.get<double>("tensor value");
    out.emplace_back(std::move(shape), std::move(data));
  }
  if (r.remaining() != 0) throw ParseError("trailing bytes after tensor payload", r.pos());
  return out;
}

void assign_weights(std::span<Tensor* const> targets, const std::vector<Tensor>& loaded) {
  if (targets.size() != loaded.size()) {
    throw UsageError("weight file holds " + std::to_string(loaded.size()) +
                     " tensors but the model has " + std::to_string(targets.size()));
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i]->shape() != loaded[i].shape()) {
      throw UsageError("weight tensor " + std::to_string(i) + " has shape " +
                       shape_to_string(loaded[i].shape()) + ", model expects " +
                       shape_to_string(targets[i]->shape()));
    }
    *targets[i] = loaded[i];
  }
}

}  // namespace qcae::nn
