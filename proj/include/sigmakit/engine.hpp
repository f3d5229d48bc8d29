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

#include <memory>
#include <variant>
#include <vector>

#include "sigmakit/group.hpp"
#include "sigmakit/random.hpp"
#include "sigmakit/statement.hpp"

// Interactive sigma-protocol execution over resolved statements (no Extended
// nodes). Conventions: response s = r - c * x (mod q); a leaf verifies iff
// R = lhs^c * prod base_i^{s_i}.

namespace sigmakit {

/// Commitments, shaped like the statement: one element per DLRep leaf.
struct CommitmentTree {
  std::variant<GroupElement, std::vector<CommitmentTree>> node;

  bool is_leaf() const { return node.index() == 0; }
  const GroupElement& leaf() const { return std::get<0>(node); }
  const std::vector<CommitmentTree>& children() const {
    return std::get<1>(node);
  }
  /// Leaf elements in depth-first order.
  std::vector<GroupElement> leaves() const;

  friend bool operator==(const CommitmentTree& a, const CommitmentTree& b);
};

struct ResponseTree {
  /// One response per term of the leaf expression.
  struct Leaf {
    std::vector<Scalar> responses;
  };
  struct And {
    std::vector<ResponseTree> children;
  };
  /// Per-child sub-challenges; they sum to the node's challenge.
  struct Or {
    std::vector<Scalar> challenges;
    std::vector<ResponseTree> children;
  };

  std::variant<Leaf, And, Or> node;

  friend bool operator==(const ResponseTree& a, const ResponseTree& b);
};

struct Transcript {
  CommitmentTree commitment;
  Scalar challenge;
  ResponseTree response;
};

struct ProverCommitment;

/// Prover memory between the commitment and the response. Single use.
class ProverState {
 public:
  ProverState(ProverState&&) noexcept;
  ProverState& operator=(ProverState&&) noexcept;
  ~ProverState();

  const Statement& statement() const { return statement_; }
  bool consumed() const { return consumed_; }

  struct Plan;

 private:
  ProverState(Statement stmt, std::unique_ptr<Plan> plan);

  friend ProverCommitment prover_commit(const Statement&, RandomSource&);
  friend ResponseTree prover_respond(ProverState&, const Scalar&);

  Statement statement_;
  std::unique_ptr<Plan> plan_;
  bool consumed_ = false;
};

struct ProverCommitment {
  ProverState state;
  CommitmentTree commitment;
};

/// First move. One randomizer per unique secret per honest scope, shared
/// across conjuncts; simulated OR children are simulated in full here.
/// Throws DangerousOrError, ProvingError (missing value, all-simulated OR) and
/// ShapeError (unresolved extended node).
ProverCommitment prover_commit(const Statement& stmt, RandomSource& rng);

/// Uniform challenge in Z_q.
Scalar verifier_challenge(const Group& group, RandomSource& rng);

/// Third move. Consumes the state; throws ProvingError on reuse or when an
/// honest leaf's relation does not actually hold.
ResponseTree prover_respond(ProverState& state, const Scalar& challenge);

/// Rebuilds the commitment tree implied by a challenge and responses.
/// Throws ShapeError when the response tree does not fit the statement and
/// TranscriptError when OR sub-challenges do not sum to their parent challenge
/// or one secret receives different responses within a scope.
CommitmentTree recompute_commitment(const Statement& stmt,
                                    const Scalar& challenge,
                                    const ResponseTree& response);

/// Throws ShapeError when shapes differ; false for any other failure.
bool verify_transcript(const Statement& stmt, const Transcript& transcript);

/// Accepting transcript for `challenge` produced without any witness.
Transcript simulate(const Statement& stmt, const Scalar& challenge,
                    RandomSource& rng);

/// Special-soundness extractor for a leaf with one unique secret:
/// (s1 - s2) / (c2 - c1) mod q.
Scalar extract_secret(const Transcript& t1, const Transcript& t2,
                      const Statement& leaf);

}  // namespace sigmakit
