#pragma once

// Continuous double auction order book for one-unit limit orders on an
// integer price grid. Price priority with FIFO inside a price level; an
// incoming order that crosses trades exactly one unit against the best
// opposing order, at the resting order's price.

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace swarmlob {

using Price = std::int64_t;
using OrderId = std::uint64_t;

enum class Side { Bid, Ask };

inline const char* to_string(Side side) { return side == Side::Bid ? "bid" : "ask"; }

struct Order {
  OrderId id = 0;
  Side side = Side::Bid;
  Price price = 0;
  // volume is always one unit
};

struct MatchOutcome {
  enum class Kind { Rested, Traded };
  Kind kind = Kind::Rested;
  std::optional<Price> trade_price;
  std::optional<OrderId> removed_resting_id;

  bool traded() const { return kind == Kind::Traded; }
};

class OrderBook {
 public:
  // Inserts a one-unit limit order. Crossing orders (bid price >= best ask,
  // or ask price <= best bid) trade immediately against the best opposing
  // order at the resting price; otherwise the order rests. Ids must strictly
  // increase across calls.
  MatchOutcome insert_limit(Side side, Price price, OrderId id) {
    if (seen_any_id_ && id <= max_id_) {
      throw std::invalid_argument("insert_limit: order id must exceed all prior ids");
    }
    seen_any_id_ = true;
    max_id_ = id;

    MatchOutcome outcome;
    if (side == Side::Bid) {
      auto best = asks_.begin();
      if (best != asks_.end() && best->first <= price) {
        outcome.kind = MatchOutcome::Kind::Traded;
        outcome.trade_price = best->first;
        outcome.removed_resting_id = best->second.front();
        best->second.pop_front();
        if (best->second.empty()) asks_.erase(best);
        --count_;
        return outcome;
      }
      bids_[price].push_back(id);
    } else {
      auto best = bids_.begin();
      if (best != bids_.end() && best->first >= price) {
        outcome.kind = MatchOutcome::Kind::Traded;
        outcome.trade_price = best->first;
        outcome.removed_resting_id = best->second.front();
        best->second.pop_front();
        if (best->second.empty()) bids_.erase(best);
        --count_;
        return outcome;
      }
      asks_[price].push_back(id);
    }
    ++count_;
    return outcome;
  }

  std::optional<Price> best_bid() const {
    if (bids_.empty()) return std::nullopt;
    return bids_.begin()->first;
  }

  std::optional<Price> best_ask() const {
    if (asks_.empty()) return std::nullopt;
    return asks_.begin()->first;
  }

  // True if some resting order lies outside base_price +/- half_width.
  // Only the price extremes of each side need checking.
  bool any_out_of_range(Price base_price, Price half_width) const {
    const auto outside = [&](Price p) {
      const Price d = p >= base_price ? p - base_price : base_price - p;
      return d > half_width;
    };
    if (!bids_.empty() && (outside(bids_.begin()->first) || outside(bids_.rbegin()->first))) return true;
    if (!asks_.empty() && (outside(asks_.begin()->first) || outside(asks_.rbegin()->first))) return true;
    return false;
  }

  // Removes every order with |price - base_price| > half_width (the boundary
  // itself is kept). Survivors keep their relative order. Returns the number
  // of removed orders.
  std::size_t expire_out_of_range(Price base_price, Price half_width) {
    std::size_t removed = 0;
    const auto sweep = [&](auto& side_book) {
      for (auto it = side_book.begin(); it != side_book.end();) {
        const Price d = it->first >= base_price ? it->first - base_price : base_price - it->first;
        if (d > half_width) {
          removed += it->second.size();
          it = side_book.erase(it);
        } else {
          ++it;
        }
      }
    };
    sweep(bids_);
    sweep(asks_);
    count_ -= removed;
    return removed;
  }

  // Removes at most one out-of-range order: the one farthest from the base
  // price, oldest first on distance ties. Returns the number removed (0 or 1).
  std::size_t expire_one_out_of_range(Price base_price, Price half_width) {
    struct Candidate {
      Price distance;
      OrderId id;
      Side side;
      Price price;
    };
    std::optional<Candidate> pick;
    const auto consider = [&](auto& side_book, Side side) {
      for (auto& [price, queue] : side_book) {
        const Price d = price >= base_price ? price - base_price : base_price - price;
        if (d <= half_width) continue;
        const OrderId front = queue.front();
        if (!pick || d > pick->distance || (d == pick->distance && front < pick->id)) {
          pick = Candidate{d, front, side, price};
        }
      }
    };
    consider(bids_, Side::Bid);
    consider(asks_, Side::Ask);
    if (!pick) return 0;
    if (pick->side == Side::Bid) {
      auto it = bids_.find(pick->price);
      it->second.pop_front();
      if (it->second.empty()) bids_.erase(it);
    } else {
      auto it = asks_.find(pick->price);
      it->second.pop_front();
      if (it->second.empty()) asks_.erase(it);
    }
    --count_;
    return 1;
  }

  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  // Resting orders, bids first (price descending) then asks (ascending),
  // FIFO within each level. Used by tests and the reference matcher.
  std::vector<Order> snapshot() const {
    std::vector<Order> orders;
    orders.reserve(count_);
    for (const auto& [price, queue] : bids_) {
      for (OrderId id : queue) orders.push_back({id, Side::Bid, price});
    }
    for (const auto& [price, queue] : asks_) {
      for (OrderId id : queue) orders.push_back({id, Side::Ask, price});
    }
    return orders;
  }

 private:
  std::map<Price, std::deque<OrderId>, std::greater<Price>> bids_;
  std::map<Price, std::deque<OrderId>> asks_;
  std::size_t count_ = 0;
  OrderId max_id_ = 0;
  bool seen_any_id_ = false;
};

}  // namespace swarmlob
