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

GroupElement pedersen_commit(const GroupElement& g, const GroupElement& h,
                             const Scalar& x, const Scalar& r) {
  if (!g.group()->same_as(*h.group())) {
    throw GroupError("pedersen_commit: g and h belong to different groups");
  }
  return g.pow(x) * h.pow(r);
}

}  // namespace sigmakit
