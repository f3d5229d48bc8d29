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

#include "sigmakit/bytes.hpp"

#include <openssl/sha.h>

#include "sigmakit/errors.hpp"

namespace sigmakit {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string to_hex(std::span<const uint8_t> data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (uint8_t b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  Bytes out;
  int pending = -1;
  for (char c : hex) {
    if (c == ' ' || c == '\n' || c == '\r' || c == '\t') continue;
    int v = hex_value(c);
    if (v < 0) throw DecodeError("invalid hex digit");
    if (pending < 0) {
      pending = v;
    } else {
      out.push_back(static_cast<uint8_t>(pending << 4 | v));
      pending = -1;
    }
  }
  if (pending >= 0) throw DecodeError("odd number of hex digits");
  return out;
}

std::array<uint8_t, 32> sha256(std::span<const uint8_t> data) {
  std::array<uint8_t, 32> digest{};
  SHA256(data.data(), data.size(), digest.data());
  return digest;
}

void ByteWriter::put_varint(uint64_t v) {
  while (v >= 0x80) {
    out_.push_back(static_cast<uint8_t>(v | 0x80));
    v >>= 7;
  }
  out_.push_back(static_cast<uint8_t>(v));
}

void ByteWriter::put_raw(std::span<const uint8_t> data) {
  out_.insert(out_.end(), data.begin(), data.end());
}

void ByteWriter::put_prefixed(std::span<const uint8_t> data) {
  put_varint(data.size());
  put_raw(data);
}

void ByteWriter::put_string(std::string_view s) {
  put_varint(s.size());
  out_.insert(out_.end(), s.begin(), s.end());
}

uint8_t ByteReader::get_u8() {
  if (pos_ >= data_.size()) throw DecodeError("unexpected end of input");
  return data_[pos_++];
}

uint64_t ByteReader::get_varint() {
  uint64_t v = 0;
  for (int shift = 0; shift < 64; shift += 7) {
    uint8_t b = get_u8();
    if (shift == 63 && (b & 0x7e) != 0) throw DecodeError("varint overflow");
    v |= static_cast<uint64_t>(b & 0x7f) << shift;
    if ((b & 0x80) == 0) {
      // Reject non-minimal encodings so every value has exactly one encoding.
      if (b == 0 && shift != 0) throw DecodeError("non-canonical varint");
      return v;
    }
  }
  throw DecodeError("varint too long");
}

std::span<const uint8_t> ByteReader::get_raw(size_t n) {
  if (n > remaining()) throw DecodeError("unexpected end of input");
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::span<const uint8_t> ByteReader::get_prefixed() {
  uint64_t n = get_varint();
  if (n > remaining()) throw DecodeError("length prefix exceeds input");
  return get_raw(static_cast<size_t>(n));
}

std::string ByteReader::get_string() {
  auto raw = get_prefixed();
  return std::string(raw.begin(), raw.end());
}

size_t ByteReader::get_count(size_t min_item_size) {
  uint64_t n = get_varint();
  if (min_item_size > 0 && n > remaining() / min_item_size) {
    throw DecodeError("count exceeds input size");
  }
  return static_cast<size_t>(n);
}

void ByteReader::expect_done() const {
  if (!done()) throw DecodeError("trailing bytes");
}

}  // namespace sigmakit
