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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigmakit/bytes.hpp"
#include "sigmakit/group.hpp"

namespace sigmakit {

class ExtendedHooks;

/// A proof variable. Copies are handles to the same variable: two Secrets are
/// the same variable iff they were copied from one another. The label is for
/// diagnostics only and never affects proofs.
class Secret {
 public:
  Secret();
  explicit Secret(std::string label);
  Secret(std::string label, Scalar value);

  const std::string& label() const { return state_->label; }
  /// The label, or "secret#<n>" for unlabeled secrets.
  std::string display_name() const;

  const std::optional<Scalar>& value() const { return state_->value; }
  void set_value(Scalar v) const { state_->value = std::move(v); }
  void clear_value() const { state_->value.reset(); }

  const void* identity() const { return state_.get(); }

  friend bool operator==(const Secret& a, const Secret& b) {
    return a.state_ == b.state_;
  }

 private:
  struct State {
    std::string label;
    std::optional<Scalar> value;
    uint64_t serial;
  };
  std::shared_ptr<State> state_;
};

struct Term {
  Secret secret;
  GroupElement base;
};

/// Right-hand side of a discrete-log representation: base_1^x_1 * ... *
/// base_n^x_n. Written `x * g + r * h`.
class Expression {
 public:
  explicit Expression(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  const GroupPtr& group() const { return terms_.front().base.group(); }

  /// multi_exp(bases, values); throws ProvingError if a secret has no value.
  GroupElement evaluate() const;

  friend Expression operator+(Expression a, const Expression& b);

 private:
  std::vector<Term> terms_;
};

Expression operator*(const Secret& secret, const GroupElement& base);

enum class NodeKind : uint8_t {
  kDLRep = 0x01,
  kAnd = 0x02,
  kOr = 0x03,
  kExtended = 0x04,
};

/// Immutable proof-statement tree. Copies share structure.
class Statement {
 public:
  NodeKind kind() const { return node_->kind; }

  // kDLRep
  const GroupElement& lhs() const;
  const Expression& expression() const;

  // kAnd, kOr
  const std::vector<Statement>& children() const;
  // kOr: prover-side flags, one per child. Verifiers ignore them.
  const std::vector<bool>& simulated() const;

  // kExtended
  const std::shared_ptr<const ExtendedHooks>& hooks() const;

  /// Group of the first leaf (or of the extended primitive).
  GroupPtr group() const;

 private:
  struct Node {
    NodeKind kind;
    std::optional<GroupElement> lhs;
    std::optional<Expression> expression;
    std::vector<Statement> children;
    std::vector<bool> simulated;
    std::shared_ptr<const ExtendedHooks> hooks;
  };
  explicit Statement(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  friend Statement dlrep(GroupElement, Expression);
  friend Statement and_(std::vector<Statement>);
  friend Statement or_(std::vector<Statement>, std::vector<bool>);
  friend Statement extended(std::shared_ptr<const ExtendedHooks>);

  std::shared_ptr<const Node> node_;
};

/// Leaf asserting lhs = prod base_i^{secret_i}. Throws StatementError when the
/// lhs and the bases do not share one group order.
Statement dlrep(GroupElement lhs, Expression expr);

/// Conjunction. Secrets shared between conjuncts are proven equal.
/// Throws StatementError for fewer than two children.
Statement and_(std::vector<Statement> children);

/// Disjunction. `simulated[i]` marks children the prover does not know a
/// witness for; at least one must be false when proving.
Statement or_(std::vector<Statement> children, std::vector<bool> simulated);
/// Verifier-side disjunction (all flags false).
Statement or_(std::vector<Statement> children);

/// Node backed by a user-defined primitive.
Statement extended(std::shared_ptr<const ExtendedHooks> hooks);

inline Statement operator&(const Statement& a, const Statement& b) {
  return and_({a, b});
}
inline Statement operator|(const Statement& a, const Statement& b) {
  return or_({a, b});
}

/// Unique secrets in order of first occurrence, depth-first left to right.
/// Extended nodes are opaque here.
std::vector<Secret> collect_secrets(const Statement& stmt);

/// Canonical, machine-independent byte representation of a statement.
struct StatementId {
  Bytes bytes;
  friend bool operator==(const StatementId&, const StatementId&) = default;
};

inline constexpr uint8_t kStatementIdVersion = 0x01;

/// Version byte, then a depth-first emission of each node: a kind byte; for
/// DLRep the length-prefixed lhs encoding, the term count, and per term the
/// length-prefixed base encoding and the varint ordinal of its secret (ordinals
/// follow collect_secrets); for And/Or the child count followed by the
/// children; for Extended the primitive's name and descriptor. Labels, values
/// and OR flags are not part of the identifier.
StatementId statement_id(const Statement& stmt);

/// Throws DangerousOrError if some secret occurring under an Or node also
/// occurs outside that Or node.
void validate_composition(const Statement& stmt);

/// True iff the tree contains no Extended nodes.
bool is_resolved(const Statement& stmt);

}  // namespace sigmakit
