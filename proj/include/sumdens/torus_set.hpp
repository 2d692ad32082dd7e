#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sumdens/rational.hpp"

namespace sumdens {

// Closed interval [lo, hi] of the fundamental domain [0, 1] of R/Z.
struct TorusInterval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool operator==(const TorusInterval&) const = default;
};

// Closed interval on the real line, before projection to the circle.
struct RawInterval {
  Rational lo;
  Rational hi;

  bool operator==(const RawInterval&) const = default;
};

using RawIntervalList = std::vector<RawInterval>;

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite union of closed intervals of R/Z, stored sorted, merged and split at 0.
// A component crossing 0 is stored as [0, a] and [b, 1]; the full circle is [0, 1].
class TorusSet {
 public:
  TorusSet() = default;

  // Reduces mod 1, splits at integers, sorts and merges touching intervals.
  // Throws InvalidInput when some interval has lo >= hi.
  static TorusSet normalize(const RawIntervalList& raw);
  static TorusSet full_circle();
  static TorusSet interval(const Rational& lo, const Rational& hi);

  const std::vector<TorusInterval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  bool is_full() const;

  Rational measure() const;
  // Connected components on the circle: the two pieces of a component crossing 0 count once.
  std::size_t component_count() const;
  bool contains(const Rational& point) const;
  RawIntervalList to_raw() const;

  bool operator==(const TorusSet&) const = default;

 private:
  explicit TorusSet(std::vector<TorusInterval> intervals) : intervals_(std::move(intervals)) {}

  std::vector<TorusInterval> intervals_;
};

TorusSet minkowski_sum(const TorusSet& a, const TorusSet& b);
// k-fold sumset, k >= 1.
TorusSet iterated_sumset(const TorusSet& a, int k);
// profile[j-1] = measure(j A) for j = 1..kmax.
std::vector<Rational> sumset_profile(const TorusSet& a, int kmax);

// (lo, hi) -> (q lo, q hi), q > 0.
RawIntervalList scale_raw(const RawIntervalList& raw, const Rational& q);
RawIntervalList translate_raw(const RawIntervalList& raw, const Rational& t);

}  // namespace sumdens
