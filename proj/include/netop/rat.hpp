// Exact rational arithmetic for attribute coordinates, so distance-threshold
// predicates are deterministic (d <= L is decided as d^2 vs L^2 in Q).

#ifndef NETOP_RAT_HPP
#define NETOP_RAT_HPP

#include <cstdint>
#include <string>

namespace netop {

class Rat {
 public:
  Rat() = default;
  Rat(long long num, long long den = 1);  // den != 0; normalized, den > 0

  static Rat from_string(const std::string& s);  // "3", "-3/2", "1.5"
  static Rat from_double(double d);              // exact binary value

  long long num() const { return num_; }
  long long den() const { return den_; }

  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend bool operator==(const Rat& a, const Rat& b) = default;
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator<=(const Rat& a, const Rat& b);
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

 private:
  long long num_ = 0;
  long long den_ = 1;
};

struct Point {
  Rat x, y;

  friend bool operator==(const Point&, const Point&) = default;
};

Rat squared_distance(const Point& a, const Point& b);

}  // namespace netop

#endif
