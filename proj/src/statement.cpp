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

#include "sigmakit/statement.hpp"

#include <atomic>
#include <unordered_map>
#include <unordered_set>

#include "sigmakit/errors.hpp"
#include "sigmakit/extended.hpp"

namespace sigmakit {

namespace {

uint64_t next_serial() {
  static std::atomic<uint64_t> counter{0};
  return ++counter;
}

}  // namespace

Secret::Secret() : Secret(std::string()) {}

Secret::Secret(std::string label)
    : state_(std::make_shared<State>(
          State{std::move(label), std::nullopt, next_serial()})) {}

Secret::Secret(std::string label, Scalar value) : Secret(std::move(label)) {
  state_->value = std::move(value);
}

std::string Secret::display_name() const {
  if (!state_->label.empty()) return state_->label;
  return "secret#" + std::to_string(state_->serial);
}

Expression::Expression(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty())
    throw StatementError("expression needs at least one term");
  const BigNum& q = terms_.front().base.group()->order();
  for (const Term& t : terms_) {
    if (!(t.base.group()->order() == q)) {
      throw StatementError("expression mixes groups of different order");
    }
  }
}

GroupElement Expression::evaluate() const {
  GroupElement acc = terms_.front().base.group()->identity();
  for (const Term& t : terms_) {
    if (!t.secret.value()) {
      throw ProvingError("secret " + t.secret.display_name() + " has no value");
    }
    acc = acc * t.base.pow(*t.secret.value());
  }
  return acc;
}

Expression operator+(Expression a, const Expression& b) {
  std::vector<Term> terms = std::move(a.terms_);
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Expression(std::move(terms));
}

Expression operator*(const Secret& secret, const GroupElement& base) {
  return Expression({Term{secret, base}});
}

const GroupElement& Statement::lhs() const {
  if (kind() != NodeKind::kDLRep) throw StatementError("not a DLRep node");
  return *node_->lhs;
}

const Expression& Statement::expression() const {
  if (kind() != NodeKind::kDLRep) throw StatementError("not a DLRep node");
  return *node_->expression;
}

const std::vector<Statement>& Statement::children() const {
  if (kind() != NodeKind::kAnd && kind() != NodeKind::kOr) {
    throw StatementError("node has no children");
  }
  return node_->children;
}

const std::vector<bool>& Statement::simulated() const {
  if (kind() != NodeKind::kOr) throw StatementError("not an Or node");
  return node_->simulated;
}

const std::shared_ptr<const ExtendedHooks>& Statement::hooks() const {
  if (kind() != NodeKind::kExtended)
    throw StatementError("not an Extended node");
  return node_->hooks;
}

GroupPtr Statement::group() const {
  switch (kind()) {
    case NodeKind::kDLRep:
      return node_->lhs->group();
    case NodeKind::kAnd:
    case NodeKind::kOr:
      return node_->children.front().group();
    case NodeKind::kExtended:
      return node_->hooks->group();
  }
  throw StatementError("unknown node kind");
}

Statement dlrep(GroupElement lhs, Expression expr) {
  if (!(lhs.group()->order() == expr.group()->order())) {
    throw StatementError("lhs and bases belong to groups of different order");
  }
  auto node = std::make_shared<Statement::Node>();
  node->kind = NodeKind::kDLRep;
  node->lhs = std::move(lhs);
  node->expression = std::move(expr);
  return Statement(std::move(node));
}

namespace {

void check_children(const std::vector<Statement>& children, const char* what) {
  if (children.size() < 2) {
    throw StatementError(std::string(what) + " needs at least two children");
  }
  const BigNum& q = children.front().group()->order();
  for (const Statement& c : children) {
    if (!(c.group()->order() == q)) {
      throw StatementError(std::string(what) +
                           " combines groups of different order");
    }
  }
}

}  // namespace

Statement and_(std::vector<Statement> children) {
  check_children(children, "AND");
  auto node = std::make_shared<Statement::Node>();
  node->kind = NodeKind::kAnd;
  node->children = std::move(children);
  return Statement(std::move(node));
}

Statement or_(std::vector<Statement> children, std::vector<bool> simulated) {
  check_children(children, "OR");
  if (simulated.size() != children.size()) {
    throw StatementError("OR: one simulation flag per child required");
  }
  auto node = std::make_shared<Statement::Node>();
  node->kind = NodeKind::kOr;
  node->children = std::move(children);
  node->simulated = std::move(simulated);
  return Statement(std::move(node));
}

Statement or_(std::vector<Statement> children) {
  std::vector<bool> flags(children.size(), false);
  return or_(std::move(children), std::move(flags));
}

Statement extended(std::shared_ptr<const ExtendedHooks> hooks) {
  if (!hooks) throw StatementError("extended node without hooks");
  auto node = std::make_shared<Statement::Node>();
  node->kind = NodeKind::kExtended;
  node->hooks = std::move(hooks);
  return Statement(std::move(node));
}

namespace {

template <typename Visit>
void for_each_leaf(const Statement& s, Visit&& visit) {
  switch (s.kind()) {
    case NodeKind::kDLRep:
      visit(s);
      break;
    case NodeKind::kAnd:
    case NodeKind::kOr:
      for (const Statement& c : s.children()) for_each_leaf(c, visit);
      break;
    case NodeKind::kExtended:
      break;
  }
}

class Ordinals {
 public:
  explicit Ordinals(const Statement& stmt) {
    for (const Secret& s : collect_secrets(stmt)) {
      ids_.emplace(s.identity(), ids_.size());
    }
  }
  uint64_t of(const Secret& s) const { return ids_.at(s.identity()); }

 private:
  std::unordered_map<const void*, uint64_t> ids_;
};

void emit_id(const Statement& s, const Ordinals& ordinals, ByteWriter& w) {
  w.put_u8(static_cast<uint8_t>(s.kind()));
  switch (s.kind()) {
    case NodeKind::kDLRep: {
      w.put_prefixed(s.lhs().encode());
      const auto& terms = s.expression().terms();
      w.put_varint(terms.size());
      for (const Term& t : terms) {
        w.put_prefixed(t.base.encode());
        w.put_varint(ordinals.of(t.secret));
      }
      break;
    }
    case NodeKind::kAnd:
    case NodeKind::kOr:
      w.put_varint(s.children().size());
      for (const Statement& c : s.children()) emit_id(c, ordinals, w);
      break;
    case NodeKind::kExtended:
      w.put_string(s.hooks()->name());
      w.put_prefixed(s.hooks()->descriptor());
      break;
  }
}

using Counts = std::unordered_map<const void*, size_t>;

void count_occurrences(const Statement& s, Counts& counts) {
  for_each_leaf(s, [&](const Statement& leaf) {
    for (const Term& t : leaf.expression().terms()) {
      ++counts[t.secret.identity()];
    }
  });
}

void check_or_nodes(const Statement& s, const Counts& totals) {
  if (s.kind() != NodeKind::kAnd && s.kind() != NodeKind::kOr) return;
  if (s.kind() == NodeKind::kOr) {
    Counts inside;
    count_occurrences(s, inside);
    // Report the first offender in traversal order for a stable message.
    for (const Secret& secret : collect_secrets(s)) {
      if (inside.at(secret.identity()) != totals.at(secret.identity())) {
        throw DangerousOrError(secret.display_name());
      }
    }
  }
  for (const Statement& c : s.children()) check_or_nodes(c, totals);
}

}  // namespace

std::vector<Secret> collect_secrets(const Statement& stmt) {
  std::vector<Secret> out;
  std::unordered_set<const void*> seen;
  for_each_leaf(stmt, [&](const Statement& leaf) {
    for (const Term& t : leaf.expression().terms()) {
      if (seen.insert(t.secret.identity()).second) out.push_back(t.secret);
    }
  });
  return out;
}

StatementId statement_id(const Statement& stmt) {
  Ordinals ordinals(stmt);
  ByteWriter w;
  w.put_u8(kStatementIdVersion);
  emit_id(stmt, ordinals, w);
  return StatementId{std::move(w).bytes()};
}

void validate_composition(const Statement& stmt) {
  Counts totals;
  count_occurrences(stmt, totals);
  check_or_nodes(stmt, totals);
}

bool is_resolved(const Statement& stmt) {
  switch (stmt.kind()) {
    case NodeKind::kDLRep:
      return true;
    case NodeKind::kAnd:
    case NodeKind::kOr:
      for (const Statement& c : stmt.children()) {
        if (!is_resolved(c)) return false;
      }
      return true;
    case NodeKind::kExtended:
      return false;
  }
  return false;
}

}  // namespace sigmakit
