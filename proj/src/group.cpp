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

#include "sigmakit/group.hpp"

#include <utility>

#include "sigmakit/errors.hpp"

namespace sigmakit {

namespace {

void require_same_group(const GroupElement& a, const GroupElement& b) {
  if (!a.group()->same_as(*b.group())) {
    throw GroupError("elements of different groups combined: " +
                     a.group()->name() + " vs " + b.group()->name());
  }
}

}  // namespace

Group::Group(std::string name, BigNum order)
    : name_(std::move(name)),
      order_(std::make_shared<const BigNum>(std::move(order))) {}

GroupElement Group::generator() const { return wrap(generator_rep()); }

GroupElement Group::identity() const { return wrap(identity_rep()); }

GroupElement Group::random_element(RandomSource& rng) const {
  return generator().pow(random_scalar(rng));
}

GroupElement::GroupElement(GroupPtr group,
                           std::shared_ptr<const detail::ElementRep> rep)
    : group_(std::move(group)), rep_(std::move(rep)) {}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  require_same_group(*this, o);
  return GroupElement(group_, group_->op(*rep_, *o.rep_));
}

GroupElement GroupElement::operator/(const GroupElement& o) const {
  return *this * o.inverse();
}

GroupElement GroupElement::inverse() const {
  return GroupElement(group_, group_->invert(*rep_));
}

GroupElement GroupElement::pow(const Scalar& e) const {
  if (!(e.order() == group_->order())) {
    throw GroupError("exponent order does not match group " + group_->name());
  }
  return GroupElement(group_, group_->exp(*rep_, e.value()));
}

bool GroupElement::is_identity() const { return group_->is_identity(*rep_); }

Bytes GroupElement::encode() const { return group_->encode(*rep_); }

bool operator==(const GroupElement& a, const GroupElement& b) {
  return a.group_->same_as(*b.group_) && a.group_->equal(*a.rep_, *b.rep_);
}

GroupElement multi_exp(std::span<const GroupElement> bases,
                       std::span<const Scalar> exponents) {
  if (bases.empty()) throw GroupError("multi_exp needs at least one base");
  if (bases.size() != exponents.size()) {
    throw GroupError("multi_exp: bases and exponents differ in length");
  }
  GroupElement acc = bases[0].pow(exponents[0]);
  for (size_t i = 1; i < bases.size(); ++i) {
    acc = acc * bases[i].pow(exponents[i]);
  }
  return acc;
}

}  // namespace sigmakit
