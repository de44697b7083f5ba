// Copyright 2026 The rkg Authors
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

#ifndef RKG_THETA_HPP
#define RKG_THETA_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rkg {

/// Thrown when a model precondition is violated (bad parameters, bad
/// arguments to a formula). The CLI maps this to exit code 3.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Model parameters of a random key graph: each node draws a uniform
/// random subset of `key_ring_size` distinct keys from a pool of
/// `pool_size` keys. Requires 1 <= key_ring_size <= pool_size.
class Theta {
 public:
  Theta(std::uint64_t key_ring_size, std::uint64_t pool_size)
      : k_(key_ring_size), p_(pool_size) {
    if (k_ < 1 || p_ < 1) {
      throw ModelError("Theta: key ring size and pool size must be >= 1");
    }
    if (k_ > p_) {
      throw ModelError("Theta: key ring size " + std::to_string(k_) +
                       " exceeds pool size " + std::to_string(p_));
    }
  }

  std::uint64_t ring_size() const { return k_; }
  std::uint64_t pool_size() const { return p_; }

  friend bool operator==(const Theta& a, const Theta& b) {
    return a.k_ == b.k_ && a.p_ == b.p_;
  }

 private:
  std::uint64_t k_;
  std::uint64_t p_;
};

/// A real number constrained to [0, 1]. The constructor tolerates a few
/// ulps of floating-point spill past either endpoint and clamps; anything
/// further out is rejected.
class Probability {
 public:
  Probability() = default;

  explicit Probability(double value) : v_(value) {
    constexpr double kSlack = 1e-12;
    if (v_ < 0.0 && v_ >= -kSlack) v_ = 0.0;
    if (v_ > 1.0 && v_ <= 1.0 + kSlack) v_ = 1.0;
    if (v_ < 0.0 || v_ > 1.0 || v_ != v_) {
      throw ModelError("Probability: value " + std::to_string(value) +
                       " outside [0, 1]");
    }
  }

  double value() const { return v_; }
  operator double() const { return v_; }

 private:
  double v_ = 0.0;
};

}  // namespace rkg

#endif  // RKG_THETA_HPP
