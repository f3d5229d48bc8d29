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
#include <string>
#include <vector>

#include "sigmakit/group.hpp"
#include "sigmakit/random.hpp"
#include "sigmakit/statement.hpp"

namespace sigmakit {

/// A user-defined primitive. Before the sigma protocol runs, the prover
/// publishes precommitments; both sides then turn them into an ordinary
/// statement with construct_stmt, and the verifier additionally runs validate.
///
/// The statement returned by construct_stmt must not itself contain Extended
/// nodes.
class ExtendedHooks {
 public:
  virtual ~ExtendedHooks() = default;

  /// Stable primitive name; part of the statement identifier.
  virtual std::string name() const = 0;
  /// Group every precommitment element belongs to.
  virtual GroupPtr group() const = 0;
  /// Number of precommitment elements. Fixed by the public parameters.
  virtual size_t precommitment_count() const = 0;
  /// Encoded public parameters; part of the statement identifier of an
  /// unresolved statement.
  virtual Bytes descriptor() const = 0;

  /// Prover side. May assign values to the primitive's internal secrets.
  virtual std::vector<GroupElement> precommit(RandomSource& rng) const = 0;
  /// Precommitments for a primitive that sits in a simulated OR branch. The
  /// output must pass validate.
  virtual std::vector<GroupElement> simulate_precommit(
      RandomSource& rng) const = 0;
  virtual Statement construct_stmt(
      std::span<const GroupElement> precommitments) const = 0;
  /// Verifier side; throws ValidationError.
  virtual void validate(std::span<const GroupElement> precommitments) const = 0;
};

/// Precommitments grouped per extended node, in depth-first statement order.
using Precommitments = std::vector<std::vector<GroupElement>>;

struct ResolvedStatement {
  Statement statement;
  Precommitments precommitments;
};

/// Runs precommit (or simulate_precommit below simulated OR branches) on every
/// extended node and substitutes the constructed statements.
ResolvedStatement resolve_for_prover(const Statement& stmt, RandomSource& rng);

/// Substitutes constructed statements built from the given precommitments.
/// When `run_validation` is set each node's validate hook runs first.
/// Throws ShapeError if the precommitment layout does not fit the statement.
Statement resolve_for_verifier(const Statement& stmt,
                               const Precommitments& precommitments,
                               bool run_validation);

/// Number of extended nodes and their hooks, depth-first.
std::vector<std::shared_ptr<const ExtendedHooks>> extended_nodes(
    const Statement& stmt);

}  // namespace sigmakit
