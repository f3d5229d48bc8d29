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

#include <span>

#include "sigmakit/bytes.hpp"
#include "sigmakit/engine.hpp"
#include "sigmakit/extended.hpp"
#include "sigmakit/random.hpp"
#include "sigmakit/statement.hpp"

// Non-interactive proofs. The challenge hashes the statement identifier
// together with the precommitments and commitments, so a proof is bound to the
// exact statement it was produced for. Commitments are not transmitted; the
// verifier recomputes them from the challenge and the responses.

namespace sigmakit {

inline constexpr uint8_t kProofFormatVersion = 0x01;
inline constexpr uint8_t kChallengeHashVersion = 0x01;

struct NIProof {
  Precommitments precommitments;
  Scalar challenge;
  ResponseTree response;

  friend bool operator==(const NIProof& a, const NIProof& b);
};

/// Throws DangerousOrError, ProvingError and ShapeError.
NIProof prove(const Statement& stmt, RandomSource& rng);

/// Reason a proof was rejected.
enum class Verdict {
  kAccepted,
  /// Recomputed challenge differs, or the responses are internally
  /// inconsistent.
  kRejected,
  /// An extended primitive's validate hook refused its precommitments.
  kInvalidPrecommitment,
};

/// Throws ShapeError when the proof does not have the statement's shape.
Verdict check(const Statement& stmt, const NIProof& proof);

/// True iff check() returns kAccepted. A refused precommitment surfaces as
/// ValidationError rather than `false`.
bool verify(const Statement& stmt, const NIProof& proof);

/// SHA-256(version || statement id || precommitments || commitments) mod q.
/// Precommitments are encoded as a count of groups, then per group a count and
/// the length-prefixed elements; commitments as a count and the
/// length-prefixed leaf elements in depth-first order.
Scalar challenge_hash(const StatementId& id,
                      const Precommitments& precommitments,
                      const CommitmentTree& commitment, const OrderPtr& order);

/// Wire format:
///   u8 version (0x01)
///   varint group count; per group: varint count, per element varint length
///   and encoding
///   fixed-width challenge
///   response tree in depth-first order: leaf = varint count then fixed-width
///   scalars; AND = varint count then children; OR = varint count then per
///   child the fixed-width sub-challenge followed by the child.
Bytes serialize(const NIProof& proof);

/// Parses against the statement template (secrets need no values). Throws
/// DecodeError for malformed bytes and ShapeError when the proof cannot belong
/// to the statement.
NIProof deserialize(std::span<const uint8_t> bytes, const Statement& stmt);

}  // namespace sigmakit
