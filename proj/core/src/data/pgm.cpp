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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>

#include "qcae/data/images.hpp"
#include "qcae/errors.hpp"

namespace qcae::data {

namespace {

std::pair<std::size_t, std::size_t> image_dims(const nn::Tensor& image) {
  const auto& s = image.shape();
  if (s.size() == 3 && s[0] == 1) return {s[1], s[2]};
  if (s.size() == 2) return {s[0], s[1]};
  throw UsageError("expected a [1, H, W] or [H, W] image, got " + nn::shape_to_string(s));
}

}  // namespace

std::vector<std::uint8_t> encode_pgm(const nn::Tensor& image) {
  const auto [h, w] = image_dims(image);
  const std::string header = "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + h * w);
  for (double v : image.data()) {
    out.push_back(static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0)));
  }
  return out;
}

void export_image(const nn::Tensor& image, const std::string& path) {
  const auto bytes = encode_pgm(image);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
  if (!file) throw IoError("failed writing " + path);
}

nn::Tensor decode_pgm(std::span<const std::uint8_t> bytes) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(bytes[pos])) {
        ++pos;
      } else {
        break;
      }
    }
  };
  auto read_uint = [&](const char* what) {
    skip_space();
    const std::size_t start = pos;
    std::size_t v = 0;
    while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
      v = v * 10 + (bytes[pos] - '0');
      ++pos;
    }
    if (pos == start) throw ParseError(std::string("expected PGM ") + what, start);
    return v;
  };

  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw ParseError("not a binary PGM (P5) file", 0);
  }
  pos = 2;
  const std::size_t w = read_uint("width");
  const std::size_t h = read_uint("height");
  const std::size_t maxval = read_uint("maxval");
  if (maxval != 255) throw ParseError("only maxval 255 is supported", pos);
  ++pos;  // single whitespace before raster
  if (pos + w * h > bytes.size()) throw ParseError("truncated PGM raster", bytes.size());
  std::vector<double> px(w * h);
  for (std::size_t i = 0; i < px.size(); ++i) px[i] = bytes[pos + i] / 255.0;
  return nn::Tensor({1, h, w}, std::move(px));
}

nn::Tensor import_image(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path);
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(file)),
                                        std::istreambuf_iterator<char>());
  return decode_pgm(bytes);
}

nn::Tensor montage(std::span<const nn::Tensor> images, std::size_t gap) {
  if (images.empty()) throw UsageError("montage needs at least one image");
  const auto [h, w] = image_dims(images[0]);
  const std::size_t total_w = images.size() * w + (images.size() - 1) * gap;
  nn::Tensor out({1, h, total_w});
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (image_dims(images[k]) != std::pair{h, w}) {
      throw UsageError("montage images must share one size");
    }
    const std::size_t x0 = k * (w + gap);
    for (std::size_t y = 0; y < h; ++y) {
      for (std::size_t x = 0; x < w; ++x) out[y * total_w + x0 + x] = images[k][y * w + x];
    }
  }
  return out;
}

}  // namespace qcae::data
