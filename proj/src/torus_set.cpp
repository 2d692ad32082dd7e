#include "sumdens/torus_set.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

namespace sumdens {

namespace {

// Sorts closed intervals and merges overlapping or touching ones.
std::vector<TorusInterval> merge_sorted(std::vector<TorusInterval> v) {
  auto by_lo = [](const TorusInterval& x, const TorusInterval& y) { return x.lo < y.lo; };
  if (!std::is_sorted(v.begin(), v.end(), by_lo)) std::sort(v.begin(), v.end(), by_lo);
  std::vector<TorusInterval> out;
  out.reserve(v.size());
  for (auto& iv : v) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      if (iv.hi > out.back().hi) out.back().hi = iv.hi;
    } else {
      out.push_back(std::move(iv));
    }
  }
  return out;
}

template <class T>
struct Span {
  T lo;
  T hi;
};

// Appends [lo, hi] to the run of `out` starting at `run_start`, merging with its tail.
template <class T>
void push_run(std::vector<Span<T>>& out, std::size_t run_start, const T& lo, const T& hi) {
  if (out.size() > run_start && lo <= out.back().hi) {
    if (hi > out.back().hi) out.back().hi = hi;
  } else {
    out.push_back({lo, hi});
  }
}

// Merges two sorted runs onto the end of `out` as one coalesced run.
template <class T>
void merge_runs(const Span<T>* x, std::size_t nx, const Span<T>* y, std::size_t ny, std::vector<Span<T>>& out) {
  const std::size_t run_start = out.size();
  std::size_t i = 0, j = 0;
  while (i < nx || j < ny) {
    const Span<T>& next = (j == ny || (i < nx && x[i].lo <= y[j].lo)) ? x[i++] : y[j++];
    push_run(out, run_start, next.lo, next.hi);
  }
}

// Union of a_i + b over all i: one coalesced run per row, then bottom-up pairwise merging of
// runs between two flat buffers. Runs shrink as they merge, so the upper levels stay short.
// For a self-sum only the pairs j >= i are needed.
template <class T>
std::vector<Span<T>> sum_rows(const std::vector<Span<T>>& a, const std::vector<Span<T>>& b, bool self) {
  std::vector<Span<T>> cur, next;
  std::vector<std::size_t> bounds{0}, next_bounds;
  cur.reserve(a.size() * (self ? (b.size() + 1) / 2 + 1 : b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t row_start = cur.size();
    for (std::size_t j = self ? i : 0; j < b.size(); ++j) {
      push_run(cur, row_start, T(a[i].lo + b[j].lo), T(a[i].hi + b[j].hi));
    }
    bounds.push_back(cur.size());
  }
  while (bounds.size() > 2) {
    next.clear();
    next.reserve(cur.size());
    next_bounds.assign(1, 0);
    for (std::size_t r = 0; r + 1 < bounds.size(); r += 2) {
      const Span<T>* x = cur.data() + bounds[r];
      const std::size_t nx = bounds[r + 1] - bounds[r];
      if (r + 2 < bounds.size()) {
        merge_runs(x, nx, cur.data() + bounds[r + 1], bounds[r + 2] - bounds[r + 1], next);
      } else {
        next.insert(next.end(), x, x + nx);
      }
      next_bounds.push_back(next.size());
    }
    std::swap(cur, next);
    std::swap(bounds, next_bounds);
  }
  return cur;
}

// Union of all pairwise sums I + J, I in a, J in b, on the real line. Both inputs are
// sorted and disjoint.
template <class T>
std::vector<Span<T>> line_sum(const std::vector<Span<T>>& a, const std::vector<Span<T>>& b, bool self) {
  if (a.empty() || b.empty()) return {};
  if (a.size() > b.size()) return sum_rows(b, a, self);
  return sum_rows(a, b, self);
}

// Endpoints as numerators over the least common denominator, when that fits in 62 bits.
std::optional<BigInt> common_denominator(const std::vector<TorusInterval>& a, const std::vector<TorusInterval>& b) {
  BigInt l = 1;
  for (const auto* v : {&a, &b}) {
    for (const auto& iv : *v) {
      for (const auto* d : {iv.lo.get_den_mpz_t(), iv.hi.get_den_mpz_t()}) {
        if (mpz_divisible_p(l.get_mpz_t(), d) == 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d);
      }
      if (mpz_sizeinbase(l.get_mpz_t(), 2) > 61) return std::nullopt;
    }
  }
  return l;
}

std::vector<Span<std::int64_t>> to_scaled(const std::vector<TorusInterval>& v, const BigInt& l) {
  std::vector<Span<std::int64_t>> out;
  out.reserve(v.size());
  for (const auto& iv : v) {
    BigInt lo = iv.lo.get_num() * (l / iv.lo.get_den());
    BigInt hi = iv.hi.get_num() * (l / iv.hi.get_den());
    out.push_back({lo.get_si(), hi.get_si()});
  }
  return out;
}

RawIntervalList line_sum_raw(const std::vector<TorusInterval>& a, const std::vector<TorusInterval>& b) {
  const bool self = &a == &b || a == b;
  RawIntervalList raw;
  if (auto l = common_denominator(a, b)) {
    auto scaled_a = to_scaled(a, *l);
    auto sums = line_sum(scaled_a, self ? scaled_a : to_scaled(b, *l), self);
    raw.reserve(sums.size());
    for (const auto& s : sums) raw.push_back({make_rational(BigInt(s.lo), *l), make_rational(BigInt(s.hi), *l)});
    return raw;
  }
  std::vector<Span<Rational>> ra, rb;
  for (const auto& iv : a) ra.push_back({iv.lo, iv.hi});
  for (const auto& iv : b) rb.push_back({iv.lo, iv.hi});
  auto sums = line_sum(ra, rb, self);
  raw.reserve(sums.size());
  for (auto& s : sums) raw.push_back({std::move(s.lo), std::move(s.hi)});
  return raw;
}

}  // namespace

TorusSet TorusSet::full_circle() { return TorusSet({{Rational(0), Rational(1)}}); }

TorusSet TorusSet::interval(const Rational& lo, const Rational& hi) {
  return normalize({{lo, hi}});
}

TorusSet TorusSet::normalize(const RawIntervalList& raw) {
  std::vector<TorusInterval> pieces;
  pieces.reserve(raw.size() + 1);
  for (const auto& r : raw) {
    if (r.lo >= r.hi) {
      throw InvalidInput("malformed interval [" + to_string(r.lo) + ", " + to_string(r.hi) + "]");
    }
    if (sgn(r.lo) >= 0 && cmp(r.hi, 1) <= 0) {
      pieces.push_back({r.lo, r.hi});
      continue;
    }
    if (r.hi - r.lo >= 1) return full_circle();
    Rational shift(floor(r.lo));
    Rational lo = r.lo - shift;
    Rational hi = r.hi - shift;
    if (hi <= 1) {
      pieces.push_back({lo, hi});
    } else {
      pieces.push_back({lo, Rational(1)});
      pieces.push_back({Rational(0), hi - 1});
    }
  }
  auto merged = merge_sorted(std::move(pieces));
  if (merged.size() == 1 && merged[0].lo == 0 && merged[0].hi == 1) return full_circle();
  return TorusSet(std::move(merged));
}

bool TorusSet::is_full() const {
  return intervals_.size() == 1 && intervals_[0].lo == 0 && intervals_[0].hi == 1;
}

Rational TorusSet::measure() const {
  // sum numerators over the common denominator; one reduction at the end
  BigInt l = 1;
  for (const auto& iv : intervals_) {
    for (const auto* d : {iv.lo.get_den_mpz_t(), iv.hi.get_den_mpz_t()}) {
      if (mpz_divisible_p(l.get_mpz_t(), d) == 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d);
    }
  }
  BigInt total = 0, part;
  for (const auto& iv : intervals_) {
    mpz_divexact(part.get_mpz_t(), l.get_mpz_t(), iv.hi.get_den_mpz_t());
    mpz_addmul(total.get_mpz_t(), iv.hi.get_num_mpz_t(), part.get_mpz_t());
    mpz_divexact(part.get_mpz_t(), l.get_mpz_t(), iv.lo.get_den_mpz_t());
    mpz_submul(total.get_mpz_t(), iv.lo.get_num_mpz_t(), part.get_mpz_t());
  }
  return make_rational(total, l);
}

std::size_t TorusSet::component_count() const {
  std::size_t n = intervals_.size();
  if (n >= 2 && intervals_.front().lo == 0 && intervals_.back().hi == 1) --n;
  return n;
}

bool TorusSet::contains(const Rational& point) const {
  Rational x = point - Rational(floor(point));
  for (const auto& iv : intervals_) {
    if (x >= iv.lo && x <= iv.hi) return true;
    // the point 0 and the point 1 coincide on the circle
    if (x == 0 && iv.hi == 1) return true;
  }
  return false;
}

RawIntervalList TorusSet::to_raw() const {
  RawIntervalList raw;
  raw.reserve(intervals_.size());
  for (const auto& iv : intervals_) raw.push_back({iv.lo, iv.hi});
  return raw;
}

TorusSet minkowski_sum(const TorusSet& a, const TorusSet& b) {
  if (a.empty() || b.empty()) return {};
  if (a.is_full() || b.is_full()) return TorusSet::full_circle();
  return TorusSet::normalize(line_sum_raw(a.intervals(), b.intervals()));
}

TorusSet iterated_sumset(const TorusSet& a, int k) {
  if (k < 1) throw InvalidInput("iterated_sumset needs k >= 1");
  TorusSet acc = a;
  for (int j = 2; j <= k; ++j) {
    if (acc.is_full()) break;
    acc = minkowski_sum(acc, a);
  }
  return acc;
}

std::vector<Rational> sumset_profile(const TorusSet& a, int kmax) {
  if (kmax < 1) throw InvalidInput("sumset_profile needs kmax >= 1");
  std::vector<Rational> profile;
  profile.reserve(static_cast<std::size_t>(kmax));
  TorusSet acc = a;
  profile.push_back(acc.measure());
  for (int j = 2; j <= kmax; ++j) {
    if (!acc.is_full()) acc = minkowski_sum(acc, a);
    profile.push_back(acc.measure());
  }
  return profile;
}

RawIntervalList scale_raw(const RawIntervalList& raw, const Rational& q) {
  if (q <= 0) throw InvalidInput("scale factor must be positive");
  RawIntervalList out;
  out.reserve(raw.size());
  for (const auto& r : raw) out.push_back({r.lo * q, r.hi * q});
  return out;
}

RawIntervalList translate_raw(const RawIntervalList& raw, const Rational& t) {
  RawIntervalList out;
  out.reserve(raw.size());
  for (const auto& r : raw) out.push_back({r.lo + t, r.hi + t});
  return out;
}

}  // namespace sumdens
