#include "torusq/classical_maps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace torusq {

namespace {

using Wide = __int128;

Wide wide_abs(Wide x) { return x < 0 ? -x : x; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(Wide x) {
  constexpr Wide kMax = 0x7fffffffffffffffLL;
  if (x > kMax || x < -kMax) {
    throw std::overflow_error("Fraction: value exceeds 64-bit range");
  }
  return static_cast<long long>(x);
}

Fraction make_fraction(Wide n, Wide d) {
  if (d == 0) throw std::invalid_argument("Fraction: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Fraction f;
  f.num = narrow(n);
  f.den = narrow(d);
  return f;
}

}  // namespace

Fraction::Fraction(long long n, long long d) { *this = make_fraction(n, d); }

Fraction Fraction::mod1() const {
  long long r = num % den;
  if (r < 0) r += den;
  return Fraction(r, den);
}

long long Fraction::floor_value() const {
  long long q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

Fraction Fraction::over(long long d) const {
  return make_fraction(num, Wide(den) * d);
}

std::string Fraction::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  return make_fraction(Wide(a.num) * b.den + Wide(b.num) * a.den,
                       Wide(a.den) * b.den);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  return make_fraction(Wide(a.num) * b.den - Wide(b.num) * a.den,
                       Wide(a.den) * b.den);
}

Fraction operator*(long long s, const Fraction& a) {
  return make_fraction(Wide(s) * a.num, Wide(a.den));
}

bool operator<(const Fraction& a, const Fraction& b) {
  return Wide(a.num) * b.den < Wide(b.num) * a.den;
}

MapDescriptor MapDescriptor::baker() {
  return {MapKind::baker, std::log(2.0)};
}

MapDescriptor MapDescriptor::cat() {
  return {MapKind::cat, std::log(2.0 + std::sqrt(3.0))};
}

PhasePoint baker_step(const PhasePoint& x) {
  const double q2 = 2.0 * x.q;
  const double cell = std::floor(q2);
  return {q2 - cell, (x.p + cell) / 2.0};
}

PhasePoint cat_step(const PhasePoint& x) {
  auto wrap = [](double v) {
    v = std::fmod(v, 1.0);
    return v < 0.0 ? v + 1.0 : v;
  };
  return {wrap(2.0 * x.q + x.p), wrap(3.0 * x.q + 2.0 * x.p)};
}

RationalPoint baker_step(const RationalPoint& x) {
  const Fraction q2 = 2 * x.q;
  const long long cell = q2.floor_value();
  return {q2 - Fraction(cell, 1), (x.p + Fraction(cell, 1)).over(2)};
}

RationalPoint cat_step(const RationalPoint& x) {
  return {(2 * x.q + x.p).mod1(), (3 * x.q + 2 * x.p).mod1()};
}

PeriodicOrbit baker_orbit_from_bits(const std::string& code) {
  const int length = static_cast<int>(code.size());
  if (length == 0) {
    throw std::invalid_argument("baker_orbit_from_bits: empty code");
  }
  if (length > 62) {
    throw std::invalid_argument("baker_orbit_from_bits: code longer than 62 bits");
  }
  for (char c : code) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("baker_orbit_from_bits: code must be binary, got '" +
                                  code + "'");
    }
  }
  for (int d = 1; d < length; ++d) {
    if (length % d != 0) continue;
    bool repeats = true;
    for (int i = d; i < length && repeats; ++i) {
      repeats = (code[i] == code[i % d]);
    }
    if (repeats) {
      throw std::invalid_argument(
          "baker_orbit_from_bits: code '" + code +
          "' is not primitive, its primitive period is '" + code.substr(0, d) + "'");
    }
  }

  long long value = 0;
  long long reversed = 0;
  for (int i = 0; i < length; ++i) {
    value = 2 * value + (code[i] - '0');
    reversed = 2 * reversed + (code[length - 1 - i] - '0');
  }
  const long long modulus = (1LL << length) - 1;

  PeriodicOrbit orbit;
  orbit.period = length;
  orbit.source = code;
  orbit.map = MapKind::baker;
  RationalPoint x{Fraction(value, modulus).mod1(), Fraction(reversed, modulus).mod1()};
  orbit.points.push_back(x);
  for (int i = 1; i < length; ++i) {
    x = baker_step(x);
    orbit.points.push_back(x);
  }
  return orbit;
}

namespace {

struct Mat2 {
  long long a, b, c, d;
};

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 mat_pow(Mat2 base, int e) {
  Mat2 out{1, 0, 0, 1};
  while (e > 0) {
    if (e & 1) out = mat_mul(out, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return out;
}

long long mod_pos(long long x, long long m) {
  x %= m;
  return x < 0 ? x + m : x;
}

struct LatticePoint {
  long long q;
  long long p;
};

LatticePoint cat_step_mod(const LatticePoint& x, long long modulus) {
  return {mod_pos(2 * x.q + x.p, modulus), mod_pos(3 * x.q + 2 * x.p, modulus)};
}

bool lattice_less(const LatticePoint& a, const LatticePoint& b) {
  if (a.q != b.q) return a.q < b.q;
  return a.p < b.p;
}

bool lattice_eq(const LatticePoint& a, const LatticePoint& b) {
  return a.q == b.q && a.p == b.p;
}

}  // namespace

std::vector<PeriodicOrbit> cat_orbits(int period) {
  if (period < 1 || period > 12) {
    throw std::invalid_argument("cat_orbits: period must be in [1, 12]");
  }
  const Mat2 powered = mat_pow({2, 1, 3, 2}, period);
  const Mat2 b{powered.a - 1, powered.b, powered.c, powered.d - 1};
  const long long modulus = std::llabs(b.a * b.d - b.b * b.c);

  // Fixed points of the L-fold map are u/modulus with u in the image of the
  // adjugate of (A^L - I) over Z/modulus; the image has exactly `modulus`
  // elements, generated by the two adjugate columns.
  const long long g1q = mod_pos(b.d, modulus);
  const long long g1p = mod_pos(-b.c, modulus);
  const long long g2q = mod_pos(-b.b, modulus);
  const long long g2p = mod_pos(b.a, modulus);
  const long long order1 =
      modulus / std::gcd(modulus, std::gcd(g1q, g1p));
  const long long cosets = modulus / order1;

  std::vector<PeriodicOrbit> orbits;
  std::vector<LatticePoint> trajectory(period);
  for (long long t = 0; t < cosets; ++t) {
    for (long long s = 0; s < order1; ++s) {
      LatticePoint u{mod_pos(s * g1q + t * g2q, modulus),
                     mod_pos(s * g1p + t * g2p, modulus)};
      // Walk the orbit; keep it only if the minimal period is exactly
      // `period` and u is the smallest point on it (each orbit is then
      // emitted exactly once).
      LatticePoint v = u;
      int minimal = 0;
      bool smallest = true;
      for (int step = 1; step <= period; ++step) {
        trajectory[step - 1] = v;
        v = cat_step_mod(v, modulus);
        if (lattice_less(v, u)) smallest = false;
        if (lattice_eq(v, u)) {
          minimal = step;
          break;
        }
      }
      if (minimal != period || !smallest) continue;

      PeriodicOrbit orbit;
      orbit.period = period;
      orbit.map = MapKind::cat;
      orbit.source = "lattice(" + std::to_string(u.q) + "," +
                     std::to_string(u.p) + ")/" + std::to_string(modulus);
      orbit.points.reserve(period);
      for (int i = 0; i < period; ++i) {
        orbit.points.push_back({Fraction(trajectory[i].q, modulus),
                                Fraction(trajectory[i].p, modulus)});
      }
      orbits.push_back(std::move(orbit));
    }
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const PeriodicOrbit& x, const PeriodicOrbit& y) {
              return x.points.front() < y.points.front();
            });
  return orbits;
}

}  // namespace torusq
