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

#include "sigmakit/extended.hpp"

#include "sigmakit/errors.hpp"

namespace sigmakit {

namespace {

Statement checked_construct(const ExtendedHooks& hooks,
                            std::span<const GroupElement> precommitments) {
  Statement constructed = hooks.construct_stmt(precommitments);
  if (!is_resolved(constructed)) {
    throw StatementError("extended primitive " + hooks.name() +
                         " constructs a statement with extended nodes");
  }
  return constructed;
}

template <typename OnExtended>
Statement substitute(const Statement& s, bool simulated,
                     OnExtended& on_extended) {
  switch (s.kind()) {
    case NodeKind::kDLRep:
      return s;
    case NodeKind::kAnd: {
      std::vector<Statement> children;
      for (const Statement& c : s.children()) {
        children.push_back(substitute(c, simulated, on_extended));
      }
      return and_(std::move(children));
    }
    case NodeKind::kOr: {
      std::vector<Statement> children;
      const auto& flags = s.simulated();
      for (size_t i = 0; i < s.children().size(); ++i) {
        children.push_back(
            substitute(s.children()[i], simulated || flags[i], on_extended));
      }
      return or_(std::move(children), flags);
    }
    case NodeKind::kExtended:
      return on_extended(*s.hooks(), simulated);
  }
  throw StatementError("unknown node kind");
}

}  // namespace

ResolvedStatement resolve_for_prover(const Statement& stmt, RandomSource& rng) {
  Precommitments all;
  auto on_extended = [&](const ExtendedHooks& hooks, bool simulated) {
    std::vector<GroupElement> pre =
        simulated ? hooks.simulate_precommit(rng) : hooks.precommit(rng);
    if (pre.size() != hooks.precommitment_count()) {
      throw ProvingError("primitive " + hooks.name() +
                         " produced the wrong number of precommitments");
    }
    Statement constructed = checked_construct(hooks, pre);
    all.push_back(std::move(pre));
    return constructed;
  };
  Statement resolved = substitute(stmt, false, on_extended);
  return ResolvedStatement{std::move(resolved), std::move(all)};
}

Statement resolve_for_verifier(const Statement& stmt,
                               const Precommitments& precommitments,
                               bool run_validation) {
  size_t next = 0;
  auto on_extended = [&](const ExtendedHooks& hooks, bool) {
    if (next >= precommitments.size()) {
      throw ShapeError("missing precommitments for " + hooks.name());
    }
    const auto& pre = precommitments[next++];
    if (pre.size() != hooks.precommitment_count()) {
      throw ShapeError("wrong number of precommitments for " + hooks.name());
    }
    for (const GroupElement& e : pre) {
      if (!e.group()->same_as(*hooks.group())) {
        throw ShapeError("precommitment in the wrong group for " +
                         hooks.name());
      }
    }
    if (run_validation) hooks.validate(pre);
    return checked_construct(hooks, pre);
  };
  Statement resolved = substitute(stmt, false, on_extended);
  if (next != precommitments.size()) {
    throw ShapeError("more precommitments than extended nodes");
  }
  return resolved;
}

std::vector<std::shared_ptr<const ExtendedHooks>> extended_nodes(
    const Statement& stmt) {
  std::vector<std::shared_ptr<const ExtendedHooks>> out;
  auto walk = [&out](const Statement& s, auto& self) -> void {
    switch (s.kind()) {
      case NodeKind::kDLRep:
        break;
      case NodeKind::kAnd:
      case NodeKind::kOr:
        for (const Statement& c : s.children()) self(c, self);
        break;
      case NodeKind::kExtended:
        out.push_back(s.hooks());
        break;
    }
  };
  walk(stmt, walk);
  return out;
}

}  // namespace sigmakit
