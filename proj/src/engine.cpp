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

#include "sigmakit/engine.hpp"

#include <optional>
#include <unordered_map>

#include "sigmakit/errors.hpp"
#include "sigmakit/extended.hpp"

namespace sigmakit {

namespace {

/// Secret identity -> scalar, for one randomizer/response sharing scope. A
/// scope is the whole tree outside any OR, or a single child of an OR.
using Scope = std::unordered_map<const void*, Scalar>;

Scalar scope_get(Scope& scope, const Secret& secret, const OrderPtr& order,
                 RandomSource& rng) {
  auto it = scope.find(secret.identity());
  if (it == scope.end()) {
    it = scope.emplace(secret.identity(), Scalar::random(order, rng)).first;
  }
  return it->second;
}

void require_resolved(const Statement& s) {
  if (s.kind() == NodeKind::kExtended) {
    throw ShapeError("statement contains an unresolved extended node (" +
                     s.hooks()->name() + ")");
  }
}

std::vector<GroupElement> bases_of(const Statement& leaf) {
  std::vector<GroupElement> out;
  for (const Term& t : leaf.expression().terms()) out.push_back(t.base);
  return out;
}

GroupElement leaf_commitment(const Statement& leaf, const Scalar& challenge,
                             std::span<const Scalar> responses) {
  return leaf.lhs().pow(challenge) * multi_exp(bases_of(leaf), responses);
}

// ---------------------------------------------------------------------------
// Simulation

CommitmentTree simulate_node(const Statement& s, const Scalar& c, Scope& scope,
                             RandomSource& rng, ResponseTree& out) {
  require_resolved(s);
  const OrderPtr& order = c.order_ptr();
  switch (s.kind()) {
    case NodeKind::kDLRep: {
      ResponseTree::Leaf leaf;
      for (const Term& t : s.expression().terms()) {
        leaf.responses.push_back(scope_get(scope, t.secret, order, rng));
      }
      GroupElement r = leaf_commitment(s, c, leaf.responses);
      out.node = std::move(leaf);
      return CommitmentTree{std::move(r)};
    }
    case NodeKind::kAnd: {
      ResponseTree::And node;
      std::vector<CommitmentTree> commitments;
      for (const Statement& child : s.children()) {
        ResponseTree r;
        commitments.push_back(simulate_node(child, c, scope, rng, r));
        node.children.push_back(std::move(r));
      }
      out.node = std::move(node);
      return CommitmentTree{std::move(commitments)};
    }
    case NodeKind::kOr: {
      const auto& children = s.children();
      ResponseTree::Or node;
      Scalar remainder = c;
      for (size_t i = 0; i + 1 < children.size(); ++i) {
        Scalar ci = Scalar::random(order, rng);
        remainder -= ci;
        node.challenges.push_back(ci);
      }
      node.challenges.push_back(remainder);
      std::vector<CommitmentTree> commitments;
      for (size_t i = 0; i < children.size(); ++i) {
        Scope child_scope;
        ResponseTree r;
        commitments.push_back(simulate_node(children[i], node.challenges[i],
                                            child_scope, rng, r));
        node.children.push_back(std::move(r));
      }
      out.node = std::move(node);
      return CommitmentTree{std::move(commitments)};
    }
    case NodeKind::kExtended:
      break;
  }
  throw ShapeError("unknown node kind");
}

// ---------------------------------------------------------------------------
// Recomputation

CommitmentTree recompute_node(const Statement& s, const Scalar& c,
                              const ResponseTree& r, Scope& scope) {
  require_resolved(s);
  switch (s.kind()) {
    case NodeKind::kDLRep: {
      const auto* leaf = std::get_if<ResponseTree::Leaf>(&r.node);
      const auto& terms = s.expression().terms();
      if (leaf == nullptr || leaf->responses.size() != terms.size()) {
        throw ShapeError("response does not match DLRep leaf");
      }
      for (size_t i = 0; i < terms.size(); ++i) {
        auto [it, inserted] =
            scope.emplace(terms[i].secret.identity(), leaf->responses[i]);
        if (!inserted && !(it->second == leaf->responses[i])) {
          throw TranscriptError("one secret received different responses");
        }
      }
      return CommitmentTree{leaf_commitment(s, c, leaf->responses)};
    }
    case NodeKind::kAnd: {
      const auto* node = std::get_if<ResponseTree::And>(&r.node);
      if (node == nullptr || node->children.size() != s.children().size()) {
        throw ShapeError("response does not match AND node");
      }
      std::vector<CommitmentTree> out;
      for (size_t i = 0; i < node->children.size(); ++i) {
        out.push_back(
            recompute_node(s.children()[i], c, node->children[i], scope));
      }
      return CommitmentTree{std::move(out)};
    }
    case NodeKind::kOr: {
      const auto* node = std::get_if<ResponseTree::Or>(&r.node);
      const size_t n = s.children().size();
      if (node == nullptr || node->children.size() != n ||
          node->challenges.size() != n) {
        throw ShapeError("response does not match OR node");
      }
      Scalar sum = c - c;
      for (const Scalar& ci : node->challenges) sum += ci;
      if (!(sum == c)) {
        throw TranscriptError("OR sub-challenges do not sum to the challenge");
      }
      std::vector<CommitmentTree> out;
      for (size_t i = 0; i < n; ++i) {
        Scope child_scope;
        out.push_back(recompute_node(s.children()[i], node->challenges[i],
                                     node->children[i], child_scope));
      }
      return CommitmentTree{std::move(out)};
    }
    case NodeKind::kExtended:
      break;
  }
  throw ShapeError("unknown node kind");
}

bool same_commitments(const CommitmentTree& expected,
                      const CommitmentTree& got) {
  if (expected.is_leaf() != got.is_leaf()) {
    throw ShapeError("commitment tree does not match statement");
  }
  if (expected.is_leaf()) return expected.leaf() == got.leaf();
  if (expected.children().size() != got.children().size()) {
    throw ShapeError("commitment tree does not match statement");
  }
  bool ok = true;
  for (size_t i = 0; i < expected.children().size(); ++i) {
    ok = same_commitments(expected.children()[i], got.children()[i]) && ok;
  }
  return ok;
}

}  // namespace

// ---------------------------------------------------------------------------
// Prover

struct LeafPlan {
  Statement leaf;
  std::vector<Scalar> randomizers;
  std::vector<Scalar> witnesses;
  GroupElement commitment;
};

struct OrChildPlan {
  std::optional<Scalar> challenge;  // fixed before the verifier's challenge
  std::unique_ptr<ProverState::Plan> honest;
  std::optional<ResponseTree> simulated;
};

struct ProverState::Plan {
  std::variant<LeafPlan, std::vector<Plan>, std::vector<OrChildPlan>> node;
};

namespace {

using Plan = ProverState::Plan;

Plan commit_node(const Statement& s, Scope& scope, RandomSource& rng,
                 const OrderPtr& order, CommitmentTree& out) {
  require_resolved(s);
  switch (s.kind()) {
    case NodeKind::kDLRep: {
      std::vector<Scalar> randomizers;
      std::vector<Scalar> witnesses;
      for (const Term& t : s.expression().terms()) {
        if (!t.secret.value()) {
          throw ProvingError("secret " + t.secret.display_name() +
                             " has no value");
        }
        witnesses.push_back(*t.secret.value());
        randomizers.push_back(scope_get(scope, t.secret, order, rng));
      }
      GroupElement r = multi_exp(bases_of(s), randomizers);
      out = CommitmentTree{r};
      return Plan{LeafPlan{s, std::move(randomizers), std::move(witnesses),
                           std::move(r)}};
    }
    case NodeKind::kAnd: {
      std::vector<Plan> plans;
      std::vector<CommitmentTree> commitments;
      for (const Statement& child : s.children()) {
        CommitmentTree ct{child.group()->identity()};
        plans.push_back(commit_node(child, scope, rng, order, ct));
        commitments.push_back(std::move(ct));
      }
      out = CommitmentTree{std::move(commitments)};
      return Plan{std::move(plans)};
    }
    case NodeKind::kOr: {
      const auto& children = s.children();
      const auto& flags = s.simulated();
      size_t last_honest = children.size();
      for (size_t i = 0; i < children.size(); ++i) {
        if (!flags[i]) last_honest = i;
      }
      if (last_honest == children.size()) {
        throw ProvingError("OR has no honest branch (all children simulated)");
      }
      std::vector<OrChildPlan> plans;
      std::vector<CommitmentTree> commitments;
      for (size_t i = 0; i < children.size(); ++i) {
        OrChildPlan plan;
        if (flags[i]) {
          Scalar ci = Scalar::random(order, rng);
          Transcript t = simulate(children[i], ci, rng);
          commitments.push_back(std::move(t.commitment));
          plan.challenge = ci;
          plan.simulated = std::move(t.response);
        } else {
          Scope child_scope;
          CommitmentTree ct{children[i].group()->identity()};
          plan.honest = std::make_unique<Plan>(
              commit_node(children[i], child_scope, rng, order, ct));
          commitments.push_back(std::move(ct));
          // Extra honest branches take a pre-drawn share of the challenge.
          if (i != last_honest) plan.challenge = Scalar::random(order, rng);
        }
        plans.push_back(std::move(plan));
      }
      out = CommitmentTree{std::move(commitments)};
      return Plan{std::move(plans)};
    }
    case NodeKind::kExtended:
      break;
  }
  throw ShapeError("unknown node kind");
}

ResponseTree respond_node(const Plan& plan, const Scalar& c) {
  if (const auto* leaf = std::get_if<LeafPlan>(&plan.node)) {
    ResponseTree::Leaf out;
    for (size_t i = 0; i < leaf->randomizers.size(); ++i) {
      out.responses.push_back(leaf->randomizers[i] - c * leaf->witnesses[i]);
    }
    if (!(leaf_commitment(leaf->leaf, c, out.responses) == leaf->commitment)) {
      throw ProvingError("relation does not hold for a branch declared honest");
    }
    return ResponseTree{std::move(out)};
  }
  if (const auto* conj = std::get_if<std::vector<Plan>>(&plan.node)) {
    ResponseTree::And out;
    for (const Plan& child : *conj)
      out.children.push_back(respond_node(child, c));
    return ResponseTree{std::move(out)};
  }
  const auto& disj = std::get<std::vector<OrChildPlan>>(plan.node);
  Scalar remainder = c;
  for (const OrChildPlan& child : disj) {
    if (child.challenge) remainder -= *child.challenge;
  }
  ResponseTree::Or out;
  for (const OrChildPlan& child : disj) {
    Scalar ci = child.challenge ? *child.challenge : remainder;
    out.challenges.push_back(ci);
    out.children.push_back(child.simulated ? *child.simulated
                                           : respond_node(*child.honest, ci));
  }
  return ResponseTree{std::move(out)};
}

}  // namespace

ProverState::ProverState(Statement stmt, std::unique_ptr<Plan> plan)
    : statement_(std::move(stmt)), plan_(std::move(plan)) {}
ProverState::ProverState(ProverState&&) noexcept = default;
ProverState& ProverState::operator=(ProverState&&) noexcept = default;
ProverState::~ProverState() = default;

ProverCommitment prover_commit(const Statement& stmt, RandomSource& rng) {
  validate_composition(stmt);
  Scope scope;
  CommitmentTree commitment{stmt.group()->identity()};
  auto plan = std::make_unique<ProverState::Plan>(
      commit_node(stmt, scope, rng, stmt.group()->order_ptr(), commitment));
  return ProverCommitment{ProverState(stmt, std::move(plan)),
                          std::move(commitment)};
}

Scalar verifier_challenge(const Group& group, RandomSource& rng) {
  return group.random_scalar(rng);
}

ResponseTree prover_respond(ProverState& state, const Scalar& challenge) {
  if (state.consumed_ || !state.plan_) {
    throw ProvingError("prover state already used");
  }
  if (!(challenge.order() == state.statement_.group()->order())) {
    throw GroupError("challenge order does not match the statement's group");
  }
  state.consumed_ = true;
  auto plan = std::move(state.plan_);
  return respond_node(*plan, challenge);
}

// ---------------------------------------------------------------------------
// Verifier

std::vector<GroupElement> CommitmentTree::leaves() const {
  std::vector<GroupElement> out;
  auto walk = [&out](const CommitmentTree& t, auto& self) -> void {
    if (t.is_leaf()) {
      out.push_back(t.leaf());
    } else {
      for (const auto& c : t.children()) self(c, self);
    }
  };
  walk(*this, walk);
  return out;
}

bool operator==(const CommitmentTree& a, const CommitmentTree& b) {
  return a.node == b.node;
}

namespace {

bool same_scalars(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  return a == b;
}

}  // namespace

bool operator==(const ResponseTree& a, const ResponseTree& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* la = std::get_if<ResponseTree::Leaf>(&a.node)) {
    return same_scalars(la->responses,
                        std::get<ResponseTree::Leaf>(b.node).responses);
  }
  if (const auto* ca = std::get_if<ResponseTree::And>(&a.node)) {
    return ca->children == std::get<ResponseTree::And>(b.node).children;
  }
  const auto& oa = std::get<ResponseTree::Or>(a.node);
  const auto& ob = std::get<ResponseTree::Or>(b.node);
  return same_scalars(oa.challenges, ob.challenges) &&
         oa.children == ob.children;
}

CommitmentTree recompute_commitment(const Statement& stmt,
                                    const Scalar& challenge,
                                    const ResponseTree& response) {
  Scope scope;
  return recompute_node(stmt, challenge, response, scope);
}

bool verify_transcript(const Statement& stmt, const Transcript& transcript) {
  std::optional<CommitmentTree> expected;
  try {
    expected =
        recompute_commitment(stmt, transcript.challenge, transcript.response);
  } catch (const TranscriptError&) {
    return false;
  }
  return same_commitments(*expected, transcript.commitment);
}

Transcript simulate(const Statement& stmt, const Scalar& challenge,
                    RandomSource& rng) {
  Scope scope;
  ResponseTree response;
  CommitmentTree commitment =
      simulate_node(stmt, challenge, scope, rng, response);
  return Transcript{std::move(commitment), challenge, std::move(response)};
}

Scalar extract_secret(const Transcript& t1, const Transcript& t2,
                      const Statement& leaf) {
  if (leaf.kind() != NodeKind::kDLRep) {
    throw ShapeError("extraction needs a DLRep leaf");
  }
  if (collect_secrets(leaf).size() != 1) {
    throw ShapeError("extraction needs a leaf with exactly one secret");
  }
  if (!(t1.commitment == t2.commitment)) {
    throw TranscriptError("transcripts have different commitments");
  }
  if (t1.challenge == t2.challenge) {
    throw TranscriptError("transcripts share the same challenge");
  }
  const auto* r1 = std::get_if<ResponseTree::Leaf>(&t1.response.node);
  const auto* r2 = std::get_if<ResponseTree::Leaf>(&t2.response.node);
  if (r1 == nullptr || r2 == nullptr || r1->responses.empty() ||
      r2->responses.empty()) {
    throw ShapeError("transcripts are not leaf transcripts");
  }
  return (r1->responses[0] - r2->responses[0]) *
         (t2.challenge - t1.challenge).inverse();
}

}  // namespace sigmakit
