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

#include "sigmakit/errors.hpp"
#include "sigmakit/primitives.hpp"

namespace sigmakit {

DLNotEqual::DLNotEqual(DLPair valid, DLPair invalid, Secret x)
    : valid_(std::move(valid)), invalid_(std::move(invalid)), x_(std::move(x)) {
  const BigNum& q = valid_.second.group()->order();
  for (const GroupElement* e :
       {&valid_.first, &valid_.second, &invalid_.first, &invalid_.second}) {
    if (!(e->group()->order() == q)) {
      throw StatementError("DLNotEqual: groups of different order");
    }
  }
  if (!valid_.first.group()->same_as(*valid_.second.group()) ||
      !invalid_.first.group()->same_as(*invalid_.second.group())) {
    throw StatementError("DLNotEqual: lhs and base of a pair differ in group");
  }
}

Bytes DLNotEqual::descriptor() const {
  ByteWriter w;
  w.put_prefixed(valid_.first.encode());
  w.put_prefixed(valid_.second.encode());
  w.put_prefixed(invalid_.first.encode());
  w.put_prefixed(invalid_.second.encode());
  return std::move(w).bytes();
}

GroupElement DLNotEqual::precommit_with_blinder(const Scalar& blinder) const {
  if (!x_.value()) {
    throw ProvingError("secret " + x_.display_name() + " has no value");
  }
  const Scalar& x = *x_.value();
  if (!(valid_.second.pow(x) == valid_.first)) {
    throw ProvingError("DLNotEqual: x is not the discrete log of H0");
  }
  alpha_.set_value(x * blinder);
  beta_.set_value(-blinder);
  const auto& [lhs1, base1] = invalid_;
  return (base1.pow(x) / lhs1).pow(blinder);
}

std::vector<GroupElement> DLNotEqual::precommit(RandomSource& rng) const {
  return {precommit_with_blinder(
      Scalar::random_nonzero(group()->order_ptr(), rng))};
}

std::vector<GroupElement> DLNotEqual::simulate_precommit(
    RandomSource& rng) const {
  const GroupPtr& g = invalid_.second.group();
  return {g->generator().pow(Scalar::random_nonzero(g->order_ptr(), rng))};
}

Statement DLNotEqual::construct_stmt(
    std::span<const GroupElement> precommitments) const {
  if (precommitments.size() != 1) {
    throw ShapeError("DLNotEqual expects exactly one precommitment");
  }
  const auto& [lhs0, base0] = valid_;
  const auto& [lhs1, base1] = invalid_;
  Statement first =
      dlrep(base0.group()->identity(), alpha_ * base0 + beta_ * lhs0);
  Statement second = dlrep(precommitments[0], alpha_ * base1 + beta_ * lhs1);
  return first & second;
}

void DLNotEqual::validate(std::span<const GroupElement> precommitments) const {
  if (precommitments.size() != 1) {
    throw ValidationError("DLNotEqual expects exactly one precommitment");
  }
  if (precommitments[0].is_identity()) {
    throw ValidationError("Invalid precommitment");
  }
}

Statement dl_not_equal(DLPair valid, DLPair invalid, const Secret& x) {
  return extended(
      std::make_shared<DLNotEqual>(std::move(valid), std::move(invalid), x));
}

}  // namespace sigmakit
