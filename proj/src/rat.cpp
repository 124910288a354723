#include "netop/rat.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace netop {

namespace {

long long checked_ll(__int128 v, const char* what) {
  if (v > static_cast<__int128>(9223372036854775807LL) ||
      v < -static_cast<__int128>(9223372036854775807LL))
    throw std::overflow_error(std::string("rational overflow in ") + what);
  return static_cast<long long>(v);
}

}  // namespace

Rat::Rat(long long num, long long den) : num_(num), den_(den) {
  if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash != std::string::npos)
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if (frac.size() > 15) throw std::invalid_argument("decimal too precise: " + s);
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const bool neg = !whole.empty() && whole[0] == '-';
    const long long w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
    const long long f = frac.empty() ? 0 : std::stoll(frac);
    const long long mag = (w < 0 ? -w : w) * den + f;
    return Rat(neg || w < 0 ? -mag : mag, den);
  }
  return Rat(std::stoll(s));
}

Rat Rat::from_double(double d) {
  if (!std::isfinite(d)) throw std::invalid_argument("attribute coordinate is not finite");
  if (d == 0) return Rat(0);
  int exp = 0;
  const double frac = std::frexp(d, &exp);
  long long mant = static_cast<long long>(std::ldexp(frac, 53));  // exact, |mant| < 2^53
  int e2 = exp - 53;
  while (mant != 0 && mant % 2 == 0) {
    mant /= 2;
    ++e2;
  }
  if (e2 >= 0) {
    if (e2 > 10) throw std::overflow_error("coordinate too large for exact rationals");
    return Rat(mant << e2, 1);
  }
  if (-e2 > 62) throw std::overflow_error("coordinate too fine for exact rationals");
  return Rat(mant, 1LL << -e2);
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat operator+(const Rat& a, const Rat& b) {
  const __int128 num = static_cast<__int128>(a.num_) * b.den_ +
                       static_cast<__int128>(b.num_) * a.den_;
  const __int128 den = static_cast<__int128>(a.den_) * b.den_;
  return Rat(checked_ll(num, "+"), checked_ll(den, "+"));
}

Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num_, b.den_); }

Rat operator*(const Rat& a, const Rat& b) {
  const __int128 num = static_cast<__int128>(a.num_) * b.num_;
  const __int128 den = static_cast<__int128>(a.den_) * b.den_;
  return Rat(checked_ll(num, "*"), checked_ll(den, "*"));
}

bool operator<(const Rat& a, const Rat& b) {
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

bool operator<=(const Rat& a, const Rat& b) {
  return static_cast<__int128>(a.num_) * b.den_ <= static_cast<__int128>(b.num_) * a.den_;
}

Rat squared_distance(const Point& a, const Point& b) {
  const Rat dx = a.x - b.x;
  const Rat dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace netop
