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

#include "scenarios.hpp"

#include <map>

#include "sigmakit/primitives.hpp"

namespace sigmakit::scenarios {

namespace {

BigNum parse_decimal(std::string_view s) {
  if (s.empty() ||
      s.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ConfigError("toy backend: expected decimal integers, got '" +
                      std::string(s) + "'");
  }
  return BigNum::from_decimal(std::string(s));
}

struct Witness {
  std::map<std::string, Scalar> values;
  int bit = 0;
};

Secret secret(const char* name, const Witness* w) {
  if (w == nullptr) return Secret(name);
  return Secret(name, w->values.at(name));
}

size_t public_count(std::string_view scenario) {
  if (scenario == "schnorr" || scenario == "range") return 1;
  if (scenario == "equal-dl" || scenario == "enc-bit-or" ||
      scenario == "dlne" || scenario == "vote5") {
    return 2;
  }
  throw ConfigError("unknown scenario '" + std::string(scenario) + "'");
}

Statement build(std::string_view scenario, const GroupPtr& group,
                const std::vector<GroupElement>& pub, const Witness* w,
                bool dangerous_or) {
  if (pub.size() != public_count(scenario)) {
    throw DecodeError("scenario " + std::string(scenario) + " expects " +
                      std::to_string(public_count(scenario)) +
                      " public elements, got " + std::to_string(pub.size()));
  }
  const GroupElement g = group->generator();
  const GroupElement h = second_base(group);

  if (scenario == "schnorr") {
    return dlrep(pub[0], secret("x", w) * g);
  }
  if (scenario == "equal-dl") {
    Secret x = secret("x", w);
    return dlrep(pub[0], x * g) & dlrep(pub[1], x * h);
  }
  if (scenario == "enc-bit-or") {
    // (c1, c2) = (g^r, g^m h^r) with m in {0, 1}.
    const GroupElement& c1 = pub[0];
    const GroupElement& c2 = pub[1];
    std::vector<bool> flags = {w != nullptr && w->bit != 0,
                               w != nullptr && w->bit != 1};
    if (dangerous_or) {
      Secret r = secret("r", w);
      return dlrep(c1, r * g) &
             or_({dlrep(c2, r * h), dlrep(c2 / g, r * h)}, flags);
    }
    Secret r0 = secret("r", w);
    Secret r1 = secret("r", w);
    return or_({dlrep(c1, r0 * g) & dlrep(c2, r0 * h),
                dlrep(c1, r1 * g) & dlrep(c2 / g, r1 * h)},
               flags);
  }
  if (scenario == "dlne") {
    return dl_not_equal({pub[0], g}, {pub[1], h}, secret("x", w));
  }
  if (scenario == "range") {
    return range_stmt(pub[0], g, h, 0, 8, secret("x", w), secret("r", w));
  }
  // vote5: (c1, c2) = (g^r, g^m h^r) with 0 <= m < 5.
  Secret r = secret("r", w);
  return dlrep(pub[0], r * g) &
         range_stmt(pub[1], g, h, 0, 5, secret("m", w), r);
}

Scalar small_scalar(const GroupPtr& group, RandomSource& rng, uint64_t bound) {
  Scalar s = group->random_scalar(rng);
  return group->scalar(
      static_cast<uint64_t>(BigNum::rem(s.value(), BigNum(bound)).to_u64()));
}

}  // namespace

GroupPtr parse_backend(std::string_view selector) {
  if (selector == "curve") return p256_group();
  constexpr std::string_view kToy = "toy:";
  if (selector.substr(0, kToy.size()) != kToy) {
    throw ConfigError("unknown backend '" + std::string(selector) +
                      "' (expected curve or toy:p,q,g)");
  }
  std::string_view rest = selector.substr(kToy.size());
  std::vector<std::string_view> parts;
  size_t start = 0;
  for (size_t comma; (comma = rest.find(',', start)) != std::string_view::npos;
       start = comma + 1) {
    parts.push_back(rest.substr(start, comma - start));
  }
  parts.push_back(rest.substr(start));
  if (parts.size() != 3) {
    throw ConfigError("toy backend needs three parameters: toy:p,q,g");
  }
  return toy_group(parse_decimal(parts[0]), parse_decimal(parts[1]),
                   parse_decimal(parts[2]));
}

GroupElement second_base(const GroupPtr& group) {
  return group->hash_to_element("sigmakit.h");
}

Instance make_prover(std::string_view scenario, const GroupPtr& group,
                     RandomSource& rng, bool dangerous_or) {
  public_count(scenario);
  const GroupElement g = group->generator();
  const GroupElement h = second_base(group);
  Witness w;
  std::vector<GroupElement> pub;

  if (scenario == "schnorr") {
    Scalar x = group->random_scalar(rng);
    pub = {g.pow(x)};
    w.values.emplace("x", x);
  } else if (scenario == "equal-dl") {
    Scalar x = group->random_scalar(rng);
    pub = {g.pow(x), h.pow(x)};
    w.values.emplace("x", x);
  } else if (scenario == "enc-bit-or" || scenario == "vote5") {
    const bool bit = scenario == "enc-bit-or";
    Scalar m = small_scalar(group, rng, bit ? 2 : 5);
    Scalar r = group->random_scalar(rng);
    pub = {g.pow(r), pedersen_commit(g, h, m, r)};
    w.values.emplace("m", m);
    w.values.emplace("r", r);
    w.bit = static_cast<int>(m.to_u64());
  } else if (scenario == "dlne") {
    Scalar x = group->random_scalar(rng);
    Scalar y = group->random_scalar(rng);
    while (h.pow(y) == h.pow(x)) y += group->scalar(1);
    pub = {g.pow(x), h.pow(y)};
    w.values.emplace("x", x);
  } else if (scenario == "range") {
    Scalar x = small_scalar(group, rng, 8);
    Scalar r = group->random_scalar(rng);
    pub = {pedersen_commit(g, h, x, r)};
    w.values.emplace("x", x);
    w.values.emplace("r", r);
  }
  Statement stmt = build(scenario, group, pub, &w, dangerous_or);
  return Instance{std::move(stmt), std::move(pub)};
}

Statement make_verifier(std::string_view scenario, const GroupPtr& group,
                        const std::vector<GroupElement>& publics) {
  return build(scenario, group, publics, nullptr, false);
}

Instance make_or_k(const GroupPtr& group, int k, RandomSource& rng) {
  const GroupElement g = group->generator();
  std::vector<Statement> children;
  std::vector<GroupElement> pub;
  std::vector<bool> flags;
  for (int i = 0; i < k; ++i) {
    Secret x("x" + std::to_string(i), group->random_scalar(rng));
    pub.push_back(g.pow(*x.value()));
    children.push_back(dlrep(pub.back(), x * g));
    flags.push_back(i != 0);
  }
  return Instance{or_(std::move(children), std::move(flags)), std::move(pub)};
}

namespace {
constexpr std::string_view kMagic = "sigmakit.public";
}  // namespace

Bytes encode_public(const PublicFile& file) {
  ByteWriter w;
  w.put_string(kMagic);
  w.put_u8(kPublicFormatVersion);
  w.put_string(file.scenario);
  w.put_string(file.backend);
  w.put_varint(file.publics.size());
  for (const GroupElement& e : file.publics) w.put_prefixed(e.encode());
  return std::move(w).bytes();
}

PublicFile decode_public(std::span<const uint8_t> bytes) {
  ByteReader r(bytes);
  if (r.get_string() != kMagic) throw DecodeError("not a public-inputs file");
  uint8_t version = r.get_u8();
  if (version != kPublicFormatVersion) {
    throw DecodeError("unsupported public-inputs version " +
                      std::to_string(version));
  }
  PublicFile file;
  file.scenario = r.get_string();
  file.backend = r.get_string();
  GroupPtr group = parse_backend(file.backend);
  size_t n = r.get_count();
  for (size_t i = 0; i < n; ++i) {
    file.publics.push_back(group->decode(r.get_prefixed()));
  }
  r.expect_done();
  public_count(file.scenario);
  return file;
}

}  // namespace sigmakit::scenarios
