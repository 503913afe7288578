/**
 * Closed probability intervals [lo, hi] with 0 <= lo <= hi <= 1.
 */
#pragma once

#include "credal/errors.hpp"
#include "credal/rational.hpp"

namespace credal {

class Interval {
 public:
  Interval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ < 0 || hi_ > 1 || lo_ > hi_)
      throw DomainError("invalid probability interval [" + credal::to_string(lo_) + ", " +
                        credal::to_string(hi_) + "]");
  }

  static Interval point(const Rat& v) { return Interval(v, v); }

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rat& v) const { return lo_ <= v && v <= hi_; }

  /// Complement interval: the range of 1 - p for p in [lo, hi].
  Interval complement() const { return Interval(Rat(1) - hi_, Rat(1) - lo_); }

  bool operator==(const Interval& other) const = default;

  std::string str() const {
    return "[" + credal::to_string(lo_) + ", " + credal::to_string(hi_) + "]";
  }

 private:
  Rat lo_;
  Rat hi_;
};

}  // namespace credal
