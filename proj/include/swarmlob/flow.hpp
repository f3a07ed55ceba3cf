#pragma once

// Investor order-flow models. The plain model places orders uniformly within
// half_width ticks of the base price. The following and contrary models keep
// a window of recent execution-price movements; while that window shows a
// trend, placement is biased toward one of three price bands.

#include <stdexcept>
#include <string>
#include <vector>

#include "swarmlob/book.hpp"
#include "swarmlob/rng.hpp"

namespace swarmlob {

enum class ModelKind { Plain, Following, Contrary };

inline std::string to_string(ModelKind model) {
  switch (model) {
    case ModelKind::Plain: return "plain";
    case ModelKind::Following: return "following";
    case ModelKind::Contrary: return "contrary";
  }
  throw std::logic_error("unreachable");
}

inline ModelKind parse_model_kind(const std::string& name) {
  if (name == "plain") return ModelKind::Plain;
  if (name == "following") return ModelKind::Following;
  if (name == "contrary") return ModelKind::Contrary;
  throw std::invalid_argument("unknown model: " + name);
}

enum class Trend { Up, Down, None };
enum class MoveSign { Up, Down, Flat };

// How the trend count is compared against the threshold. AtLeast treats a
// count equal to the threshold as a trend; Above requires strictly more.
enum class TrendComparator { AtLeast, Above };

inline std::string to_string(TrendComparator cmp) {
  return cmp == TrendComparator::AtLeast ? "ge7" : "ge8";
}

inline TrendComparator parse_trend_comparator(const std::string& name) {
  if (name == "ge7") return TrendComparator::AtLeast;
  if (name == "ge8") return TrendComparator::Above;
  throw std::invalid_argument("unknown trend comparator: " + name);
}

struct FlowParams {
  Price half_width = 15;             // placement range: base +/- half_width
  Price inner_band_half_width = 5;   // middle band: base +/- this
  int window_len = 10;               // execution-price movements considered
  int trend_threshold = 7;           // moves in one direction that make a trend
  double favored_band_prob = 0.8;    // band probabilities while trending
  double inner_band_prob = 0.1;
  double opposite_band_prob = 0.1;
  TrendComparator comparator = TrendComparator::AtLeast;

  void validate() const {
    if (half_width <= 0) throw std::invalid_argument("flow: half_width must be positive");
    if (inner_band_half_width <= 0 || inner_band_half_width >= half_width) {
      throw std::invalid_argument("flow: inner_band_half_width must lie in (0, half_width)");
    }
    if (window_len <= 0) throw std::invalid_argument("flow: window_len must be positive");
    if (trend_threshold <= 0 || trend_threshold > window_len) {
      throw std::invalid_argument("flow: trend_threshold must lie in (0, window_len]");
    }
    const double sum = favored_band_prob + inner_band_prob + opposite_band_prob;
    if (favored_band_prob < 0 || inner_band_prob < 0 || opposite_band_prob < 0 ||
        sum < 1.0 - 1e-12 || sum > 1.0 + 1e-12) {
      throw std::invalid_argument("flow: band probabilities must be nonnegative and sum to 1");
    }
  }
};

// Ring buffer of the last window_len execution-price change signs. Flat
// entries occupy a slot but count toward neither direction.
class TrendWindow {
 public:
  explicit TrendWindow(int capacity) : ring_(static_cast<std::size_t>(capacity), MoveSign::Flat) {
    if (capacity <= 0) throw std::invalid_argument("TrendWindow: capacity must be positive");
  }

  void push(MoveSign sign) {
    if (size_ == static_cast<int>(ring_.size())) {
      discount(ring_[static_cast<std::size_t>(head_)]);
    } else {
      ++size_;
    }
    ring_[static_cast<std::size_t>(head_)] = sign;
    head_ = (head_ + 1) % static_cast<int>(ring_.size());
    account(sign);
  }

  bool full() const { return size_ == static_cast<int>(ring_.size()); }
  int size() const { return size_; }
  int capacity() const { return static_cast<int>(ring_.size()); }
  int ups() const { return ups_; }
  int downs() const { return downs_; }

  int count(MoveSign sign) const {
    if (sign == MoveSign::Up) return ups_;
    if (sign == MoveSign::Down) return downs_;
    return size_ - ups_ - downs_;
  }

 private:
  void account(MoveSign sign) {
    if (sign == MoveSign::Up) ++ups_;
    else if (sign == MoveSign::Down) ++downs_;
  }
  void discount(MoveSign sign) {
    if (sign == MoveSign::Up) --ups_;
    else if (sign == MoveSign::Down) --downs_;
  }

  std::vector<MoveSign> ring_;
  int head_ = 0;
  int size_ = 0;
  int ups_ = 0;
  int downs_ = 0;
};

// Pure function of the window: a direction wins once the window is full and
// its count reaches the configured threshold.
inline Trend classify_trend(const TrendWindow& window, const FlowParams& params) {
  if (!window.full()) return Trend::None;
  const int needed = params.comparator == TrendComparator::AtLeast
                         ? params.trend_threshold
                         : params.trend_threshold + 1;
  if (window.ups() >= needed) return Trend::Up;
  if (window.downs() >= needed) return Trend::Down;
  return Trend::None;
}

// Inclusive offset range from the base price.
struct Band {
  Price lo = 0;
  Price hi = 0;

  Price tick_count() const { return hi - lo + 1; }
};

// Without a trend (or for the plain model) the whole placement range acts as
// one uniform band. While trending, the following model favors the band in
// the trend direction and the contrary model the opposite band.
inline Band select_band(ModelKind model, Trend trend, const FlowParams& params, Rng& rng) {
  if (model == ModelKind::Plain || trend == Trend::None) {
    return Band{-params.half_width, params.half_width};
  }
  const Band upper{params.inner_band_half_width + 1, params.half_width};
  const Band inner{-params.inner_band_half_width, params.inner_band_half_width};
  const Band lower{-params.half_width, -(params.inner_band_half_width + 1)};
  const bool favor_upper = (model == ModelKind::Following) == (trend == Trend::Up);
  const double u = rng.uniform_double();
  if (u < params.favored_band_prob) return favor_upper ? upper : lower;
  if (u < params.favored_band_prob + params.inner_band_prob) return inner;
  return favor_upper ? lower : upper;
}

struct OrderDraw {
  Side side = Side::Bid;
  Price price = 0;
};

// Draws the next order: side is a fair coin (independent of the band), the
// price is uniform over the integer ticks of the selected band.
inline OrderDraw draw_order(ModelKind model, Trend trend, Price base_price,
                            const FlowParams& params, Rng& rng) {
  const Side side = rng.bernoulli(0.5) ? Side::Bid : Side::Ask;
  const Band band = select_band(model, trend, params, rng);
  const Price offset = rng.uniform_int(band.lo, band.hi);
  return {side, base_price + offset};
}

}  // namespace swarmlob
