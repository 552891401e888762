// Copyright 2026 The traopt authors
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

#include "traopt/env.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace traopt {
namespace {

constexpr std::uint32_t kSnapshotMagic = 0x54534E45u;  // "ENST"

std::uint64_t fnv1a(const char* data, std::size_t size) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= 0x100000001b3ULL;
  }
  return h;
}

template <typename T>
void append(std::string& out, const T& value) {
  const char* p = reinterpret_cast<const char*>(&value);
  out.append(p, sizeof(T));
}

template <typename T>
T read(std::string_view blob, std::size_t& offset) {
  if (offset + sizeof(T) > blob.size()) {
    throw std::runtime_error("snapshot blob truncated");
  }
  T value;
  std::memcpy(&value, blob.data() + offset, sizeof(T));
  offset += sizeof(T);
  return value;
}

}  // namespace

bool EnvState::equals(const EnvState& other) const {
  if (k != other.k || rng != other.rng || x.size() != other.x.size()) {
    return false;
  }
  return std::memcmp(x.data(), other.x.data(),
                     sizeof(double) * static_cast<std::size_t>(x.size())) == 0;
}

double total_cost(const Vector& rewards, double alpha, double dt,
                  double terminal) {
  if (alpha < 0.0) {
    throw std::invalid_argument("total_cost: alpha must be >= 0");
  }
  const Eigen::Index steps = rewards.size();
  double cost = std::exp(-alpha * static_cast<double>(steps) * dt) * terminal;
  for (Eigen::Index k = 0; k < steps; ++k) {
    cost += std::exp(-alpha * dt * static_cast<double>(k)) * (-rewards[k]) * dt;
  }
  return cost;
}

std::string snapshot(const EnvState& state) {
  std::string payload;
  payload.reserve(24 + sizeof(double) * static_cast<std::size_t>(state.x.size()));
  append(payload, static_cast<std::uint32_t>(state.x.size()));
  append(payload, state.k);
  append(payload, state.rng);
  for (Eigen::Index i = 0; i < state.x.size(); ++i) {
    append(payload, state.x[i]);
  }

  std::string blob;
  append(blob, kSnapshotMagic);
  append(blob, fnv1a(payload.data(), payload.size()));
  blob += payload;
  return blob;
}

EnvState restore(std::string_view blob) {
  std::size_t offset = 0;
  if (read<std::uint32_t>(blob, offset) != kSnapshotMagic) {
    throw std::runtime_error("snapshot blob has wrong magic");
  }
  const std::uint64_t checksum = read<std::uint64_t>(blob, offset);
  if (checksum != fnv1a(blob.data() + offset, blob.size() - offset)) {
    throw std::runtime_error("snapshot blob checksum mismatch");
  }

  EnvState state;
  const auto n = read<std::uint32_t>(blob, offset);
  state.k = read<std::int64_t>(blob, offset);
  state.rng = read<std::uint64_t>(blob, offset);
  state.x.resize(static_cast<Eigen::Index>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    state.x[static_cast<Eigen::Index>(i)] = read<double>(blob, offset);
  }
  if (offset != blob.size()) {
    throw std::runtime_error("snapshot blob has trailing bytes");
  }
  return state;
}

}  // namespace traopt
