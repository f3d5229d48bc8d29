// Copyright 2026 The sigmakit Authors.
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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sigmakit {

using Bytes = std::vector<uint8_t>;

std::string to_hex(std::span<const uint8_t> data);
Bytes from_hex(std::string_view hex);

std::array<uint8_t, 32> sha256(std::span<const uint8_t> data);

/// Append-only encoder for the library's wire formats. Counts are unsigned
/// LEB128 varints; variable-size blobs are varint-length-prefixed.
class ByteWriter {
 public:
  void put_u8(uint8_t v) { out_.push_back(v); }
  void put_varint(uint64_t v);
  void put_raw(std::span<const uint8_t> data);
  void put_prefixed(std::span<const uint8_t> data);
  void put_string(std::string_view s);

  const Bytes& bytes() const& { return out_; }
  Bytes bytes() && { return std::move(out_); }

 private:
  Bytes out_;
};

/// Bounds-checked decoder. Every read throws DecodeError on truncation.
class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

  uint8_t get_u8();
  uint64_t get_varint();
  std::span<const uint8_t> get_raw(size_t n);
  std::span<const uint8_t> get_prefixed();
  std::string get_string();

  /// Reads a varint count and rejects values larger than the remaining input
  /// could possibly hold, given each item takes at least `min_item_size` bytes.
  size_t get_count(size_t min_item_size = 1);

  size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return pos_ == data_.size(); }
  void expect_done() const;

 private:
  std::span<const uint8_t> data_;
  size_t pos_ = 0;
};

}  // namespace sigmakit
