// discounts.hpp
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
//
// Modified Kneser-Ney discount estimation from counts of counts.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "humorlm/counts.hpp"

namespace humorlm {

// The three discounts of one order: d1 applies to count 1, d2 to count 2,
// d3plus to counts of 3 and more.
struct OrderDiscounts {
  double d1 = 0.0;
  double d2 = 0.0;
  double d3plus = 0.0;

  bool operator==(const OrderDiscounts&) const = default;
};

// Closed-form estimates from counts of counts:
//
//   Y      = n1 / (n1 + 2 n2)
//   D1     = 1 - 2 Y n2 / n1
//   D2     = 2 - 3 Y n3 / n2
//   D3plus = 3 - 4 Y n4 / n3
//
// If n1 or n2 is zero the estimator is undefined and the conventional
// defaults (0.5, 1.0, 1.5) are used. If only n3 is zero, D3plus falls back
// to D2 + 0.5. Each discount Dk is clamped into [0, k].
OrderDiscounts estimate_discounts(const CountsOfCounts& coc);

// Discount applied to an n-gram with the given adjusted count.
double discount_for(const OrderDiscounts& d, std::uint64_t count);

// Per-order discounts for a full model, orders 1..N.
class Discounts {
 public:
  static Discounts estimate(const CountTable& counts);

  explicit Discounts(std::vector<OrderDiscounts> per_order);

  std::size_t order() const { return per_order_.size(); }
  const OrderDiscounts& at(std::size_t k) const;

 private:
  std::vector<OrderDiscounts> per_order_;  // per_order_[k-1] is order k
};

}  // namespace humorlm
