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

#include "sigmakit/nizk.hpp"

#include <optional>

#include "sigmakit/errors.hpp"

namespace sigmakit {

bool operator==(const NIProof& a, const NIProof& b) {
  return a.precommitments == b.precommitments && a.challenge == b.challenge &&
         a.response == b.response;
}

Scalar challenge_hash(const StatementId& id,
                      const Precommitments& precommitments,
                      const CommitmentTree& commitment, const OrderPtr& order) {
  ByteWriter w;
  w.put_u8(kChallengeHashVersion);
  w.put_raw(id.bytes);
  w.put_varint(precommitments.size());
  for (const auto& group : precommitments) {
    w.put_varint(group.size());
    for (const GroupElement& e : group) w.put_prefixed(e.encode());
  }
  std::vector<GroupElement> leaves = commitment.leaves();
  w.put_varint(leaves.size());
  for (const GroupElement& e : leaves) w.put_prefixed(e.encode());
  auto digest = sha256(w.bytes());
  return Scalar(order, BigNum::from_bytes(digest));
}

NIProof prove(const Statement& stmt, RandomSource& rng) {
  // Precommit on extended nodes and build their concrete statements.
  ResolvedStatement resolved = resolve_for_prover(stmt, rng);
  const Statement& concrete = resolved.statement;
  validate_composition(concrete);
  // Commit with one randomizer per unique secret and scope.
  ProverCommitment commitment = prover_commit(concrete, rng);
  Scalar challenge =
      challenge_hash(statement_id(concrete), resolved.precommitments,
                     commitment.commitment, concrete.group()->order_ptr());
  ResponseTree response = prover_respond(commitment.state, challenge);
  return NIProof{std::move(resolved.precommitments), std::move(challenge),
                 std::move(response)};
}

namespace {

/// Validation failures propagate as ValidationError.
bool accepts(const Statement& stmt, const NIProof& proof) {
  Statement concrete =
      resolve_for_verifier(stmt, proof.precommitments, /*run_validation=*/true);
  validate_composition(concrete);
  if (!(proof.challenge.order() == concrete.group()->order())) {
    throw ShapeError("challenge order does not match the statement's group");
  }
  std::optional<CommitmentTree> commitment;
  try {
    commitment =
        recompute_commitment(concrete, proof.challenge, proof.response);
  } catch (const TranscriptError&) {
    return false;
  }
  Scalar expected = challenge_hash(statement_id(concrete), proof.precommitments,
                                   *commitment, concrete.group()->order_ptr());
  return expected == proof.challenge;
}

}  // namespace

Verdict check(const Statement& stmt, const NIProof& proof) {
  try {
    return accepts(stmt, proof) ? Verdict::kAccepted : Verdict::kRejected;
  } catch (const ValidationError&) {
    return Verdict::kInvalidPrecommitment;
  }
}

bool verify(const Statement& stmt, const NIProof& proof) {
  return accepts(stmt, proof);
}

// ---------------------------------------------------------------------------
// Wire format

namespace {

void write_response(const ResponseTree& r, ByteWriter& w) {
  if (const auto* leaf = std::get_if<ResponseTree::Leaf>(&r.node)) {
    w.put_varint(leaf->responses.size());
    for (const Scalar& s : leaf->responses) w.put_raw(s.encode());
  } else if (const auto* conj = std::get_if<ResponseTree::And>(&r.node)) {
    w.put_varint(conj->children.size());
    for (const ResponseTree& c : conj->children) write_response(c, w);
  } else {
    const auto& disj = std::get<ResponseTree::Or>(r.node);
    w.put_varint(disj.children.size());
    for (size_t i = 0; i < disj.children.size(); ++i) {
      w.put_raw(disj.challenges[i].encode());
      write_response(disj.children[i], w);
    }
  }
}

Scalar read_scalar(ByteReader& r, const OrderPtr& order) {
  return Scalar::decode(order, r.get_raw(Scalar::encoded_size(*order)));
}

ResponseTree read_response(ByteReader& r, const Statement& s,
                           const OrderPtr& order) {
  switch (s.kind()) {
    case NodeKind::kDLRep: {
      size_t n = r.get_count();
      if (n != s.expression().terms().size()) {
        throw ShapeError("response count does not match DLRep leaf");
      }
      ResponseTree::Leaf leaf;
      for (size_t i = 0; i < n; ++i) {
        leaf.responses.push_back(read_scalar(r, order));
      }
      return ResponseTree{std::move(leaf)};
    }
    case NodeKind::kAnd: {
      size_t n = r.get_count();
      if (n != s.children().size()) {
        throw ShapeError("child count does not match AND node");
      }
      ResponseTree::And node;
      for (const Statement& c : s.children()) {
        node.children.push_back(read_response(r, c, order));
      }
      return ResponseTree{std::move(node)};
    }
    case NodeKind::kOr: {
      size_t n = r.get_count();
      if (n != s.children().size()) {
        throw ShapeError("child count does not match OR node");
      }
      ResponseTree::Or node;
      for (const Statement& c : s.children()) {
        node.challenges.push_back(read_scalar(r, order));
        node.children.push_back(read_response(r, c, order));
      }
      return ResponseTree{std::move(node)};
    }
    case NodeKind::kExtended:
      break;
  }
  throw ShapeError("unresolved extended node in response parsing");
}

}  // namespace

Bytes serialize(const NIProof& proof) {
  ByteWriter w;
  w.put_u8(kProofFormatVersion);
  w.put_varint(proof.precommitments.size());
  for (const auto& group : proof.precommitments) {
    w.put_varint(group.size());
    for (const GroupElement& e : group) w.put_prefixed(e.encode());
  }
  w.put_raw(proof.challenge.encode());
  write_response(proof.response, w);
  return std::move(w).bytes();
}

NIProof deserialize(std::span<const uint8_t> bytes, const Statement& stmt) {
  ByteReader r(bytes);
  uint8_t version = r.get_u8();
  if (version != kProofFormatVersion) {
    throw DecodeError("unsupported proof format version " +
                      std::to_string(version));
  }
  auto hooks = extended_nodes(stmt);
  size_t groups = r.get_count();
  if (groups != hooks.size()) {
    throw ShapeError("precommitment groups do not match extended nodes");
  }
  Precommitments precommitments;
  for (const auto& h : hooks) {
    size_t n = r.get_count();
    if (n != h->precommitment_count()) {
      throw ShapeError("wrong number of precommitments for " + h->name());
    }
    std::vector<GroupElement> group;
    for (size_t i = 0; i < n; ++i) {
      group.push_back(h->group()->decode(r.get_prefixed()));
    }
    precommitments.push_back(std::move(group));
  }
  Statement concrete = resolve_for_verifier(stmt, precommitments, false);
  const OrderPtr& order = concrete.group()->order_ptr();
  Scalar challenge = read_scalar(r, order);
  ResponseTree response = read_response(r, concrete, order);
  r.expect_done();
  return NIProof{std::move(precommitments), std::move(challenge),
                 std::move(response)};
}

}  // namespace sigmakit
