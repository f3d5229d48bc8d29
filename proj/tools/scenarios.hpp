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

#include <string>
#include <string_view>
#include <vector>

#include "sigmakit/bytes.hpp"
#include "sigmakit/errors.hpp"
#include "sigmakit/group.hpp"
#include "sigmakit/random.hpp"
#include "sigmakit/statement.hpp"

// Demo statements shared by the command-line tool, its tests and the
// acceptance suite. Every scenario is described by a list of public elements;
// the verifier rebuilds the statement template from them alone.

namespace sigmakit::scenarios {

/// Bad command-line or file configuration (exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames = {
      "schnorr", "equal-dl", "enc-bit-or", "dlne", "range", "vote5"};
  return kNames;
}

/// "curve" or "toy:p,q,g". Throws ConfigError for unknown selectors and
/// GroupError for invalid toy parameters.
GroupPtr parse_backend(std::string_view selector);

/// Second base h used by every scenario: hash_to_element("sigmakit.h").
GroupElement second_base(const GroupPtr& group);

struct Instance {
  Statement statement;
  std::vector<GroupElement> publics;
};

/// Draws a witness, computes the public elements and returns the prover's
/// statement. `dangerous_or` swaps enc-bit-or for the variant that shares the
/// encryption randomness between an OR and its sibling.
Instance make_prover(std::string_view scenario, const GroupPtr& group,
                     RandomSource& rng, bool dangerous_or = false);

/// Statement template from public elements. Throws ConfigError for unknown
/// scenarios and DecodeError when the element count is wrong.
Statement make_verifier(std::string_view scenario, const GroupPtr& group,
                        const std::vector<GroupElement>& publics);

/// OR of k Schnorr statements with one honest branch; used by the bench sweep.
Instance make_or_k(const GroupPtr& group, int k, RandomSource& rng);

inline constexpr uint8_t kPublicFormatVersion = 0x01;

struct PublicFile {
  std::string scenario;
  std::string backend;
  std::vector<GroupElement> publics;
};

/// Magic string, version byte, scenario, backend, varint element count and
/// length-prefixed element encodings.
Bytes encode_public(const PublicFile& file);
/// Throws DecodeError, ConfigError or GroupError.
PublicFile decode_public(std::span<const uint8_t> bytes);

}  // namespace sigmakit::scenarios
