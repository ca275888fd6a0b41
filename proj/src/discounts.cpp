// discounts.cpp
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

#include "humorlm/discounts.hpp"

#include <algorithm>
#include <stdexcept>

namespace humorlm {

OrderDiscounts estimate_discounts(const CountsOfCounts& coc) {
  OrderDiscounts d;
  if (coc.n1 == 0 || coc.n2 == 0) {
    d.d1 = 0.5;
    d.d2 = 1.0;
    d.d3plus = 1.5;
  } else {
    const double n1 = static_cast<double>(coc.n1);
    const double n2 = static_cast<double>(coc.n2);
    const double n3 = static_cast<double>(coc.n3);
    const double n4 = static_cast<double>(coc.n4);
    const double y = n1 / (n1 + 2.0 * n2);
    d.d1 = 1.0 - 2.0 * y * n2 / n1;
    d.d2 = 2.0 - 3.0 * y * n3 / n2;
    d.d3plus = (coc.n3 == 0) ? d.d2 + 0.5 : 3.0 - 4.0 * y * n4 / n3;
  }
  d.d1 = std::clamp(d.d1, 0.0, 1.0);
  d.d2 = std::clamp(d.d2, 0.0, 2.0);
  d.d3plus = std::clamp(d.d3plus, 0.0, 3.0);
  return d;
}

double discount_for(const OrderDiscounts& d, std::uint64_t count) {
  if (count == 0) return 0.0;
  if (count == 1) return d.d1;
  if (count == 2) return d.d2;
  return d.d3plus;
}

Discounts::Discounts(std::vector<OrderDiscounts> per_order)
    : per_order_(std::move(per_order)) {
  if (per_order_.empty())
    throw std::invalid_argument("discounts need at least one order");
}

const OrderDiscounts& Discounts::at(std::size_t k) const {
  if (k < 1 || k > per_order_.size())
    throw std::invalid_argument("discount order out of range");
  return per_order_[k - 1];
}

Discounts Discounts::estimate(const CountTable& counts) {
  std::vector<OrderDiscounts> per_order;
  per_order.reserve(counts.order());
  for (std::size_t k = 1; k <= counts.order(); ++k)
    per_order.push_back(estimate_discounts(counts.counts_of_counts(k)));
  return Discounts(std::move(per_order));
}

}  // namespace humorlm
