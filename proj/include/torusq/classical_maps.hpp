#pragma once

#include <string>
#include <vector>

namespace torusq {

enum class MapKind { baker, cat };

/// Exact rational number. Always stored reduced with denominator > 0.
struct Fraction {
  long long num = 0;
  long long den = 1;

  Fraction() = default;
  Fraction(long long n, long long d);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// Reduce into [0, 1).
  Fraction mod1() const;
  long long floor_value() const;
  /// Exact division by a nonzero integer.
  Fraction over(long long d) const;
  std::string str() const;

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(long long s, const Fraction& a);
  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend bool operator<(const Fraction& a, const Fraction& b);
};

struct PhasePoint {
  double q = 0.0;
  double p = 0.0;
};

struct RationalPoint {
  Fraction q;
  Fraction p;

  PhasePoint value() const { return {q.value(), p.value()}; }
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
    if (a.q == b.q) return a.p < b.p;
    return a.q < b.q;
  }
};

struct MapDescriptor {
  MapKind kind;
  double lyapunov;

  static MapDescriptor baker();
  static MapDescriptor cat();
};

PhasePoint baker_step(const PhasePoint& x);
PhasePoint cat_step(const PhasePoint& x);
RationalPoint baker_step(const RationalPoint& x);
RationalPoint cat_step(const RationalPoint& x);

/// Periodic orbit given as exact rational points in map order:
/// one map step sends points[i] to points[(i+1) mod period].
struct PeriodicOrbit {
  std::vector<RationalPoint> points;
  int period = 0;
  std::string source;
  MapKind map = MapKind::baker;
};

/// Periodic orbit of the baker map from its binary itinerary. The first
/// point is q0 = v/(2^L - 1), p0 = v_rev/(2^L - 1) with v the value of the
/// code and v_rev the value of the reversed code; the rest follow by exact
/// iteration. Codes that repeat a shorter string are rejected.
PeriodicOrbit baker_orbit_from_bits(const std::string& code);

/// All primitive period-L orbits of the cat map. Orbits are sorted by their
/// lexicographically smallest point and each starts at that point.
std::vector<PeriodicOrbit> cat_orbits(int period);

}  // namespace torusq
