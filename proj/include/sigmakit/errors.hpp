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

#include <stdexcept>
#include <string>

namespace sigmakit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid group parameters, mixed groups or mixed scalar orders.
class GroupError : public Error {
 public:
  using Error::Error;
};

/// Bytes that do not decode to a valid object.
class DecodeError : public Error {
 public:
  using Error::Error;
};

/// Malformed statement construction (arity, group mismatch, empty expression).
class StatementError : public Error {
 public:
  using Error::Error;
};

/// A secret occurs both inside an OR clause and somewhere outside it.
class DangerousOrError : public StatementError {
 public:
  DangerousOrError(const std::string& secret_name)
      : StatementError("secret appears outside OR: " + secret_name),
        secret_name_(secret_name) {}

  const std::string& secret_name() const { return secret_name_; }

 private:
  std::string secret_name_;
};

/// The prover cannot produce a proof (missing witness, nothing honest to prove,
/// relation does not hold, reused state).
class ProvingError : public Error {
 public:
  using Error::Error;
};

/// A transcript, commitment tree or response tree does not have the shape of
/// the statement it is checked against. Distinct from a rejected proof.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A well-shaped transcript whose internal consistency checks fail: OR
/// sub-challenges not summing to the parent challenge, or diverging responses
/// for one secret within a scope.
class TranscriptError : public Error {
 public:
  using Error::Error;
};

/// Verifier-side post-validation of an extended primitive's precommitment.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace sigmakit
