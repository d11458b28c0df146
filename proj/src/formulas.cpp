#include "digsat/formulas.hpp"

#include <numeric>
#include <stdexcept>

#include "digsat/constructions.hpp"

namespace digsat {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw std::invalid_argument("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal_string(int max_frac_digits) const {
  if (num_ < 0) return "-" + Rational(-num_, den_).to_decimal_string(max_frac_digits);
  std::int64_t whole = floor();
  std::int64_t rem = num_ - whole * den_;  // 0 <= rem < den
  std::string out = std::to_string(whole);
  if (rem == 0) return out;
  std::string frac;
  for (int i = 0; i < max_frac_digits && rem != 0; ++i) {
    rem *= 10;
    frac += static_cast<char>('0' + rem / den_);
    rem %= den_;
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (frac.empty()) return out;
  return out + "." + frac;
}

std::int64_t binom2(std::int64_t m) {
  if (m < 2) return 0;
  return m * (m - 1) / 2;
}

std::int64_t sat_value(int n, int k) {
  if (k < 1) throw std::invalid_argument("sat_value requires k >= 1");
  if (n < k) throw std::invalid_argument("sat_value requires n >= k");
  std::int64_t nn = n, kk = k;
  return binom2(nn - kk + 1) + (kk - 1) * (2 * nn - kk);
}

std::int64_t du_arc_count(int n, int k) {
  DuSpec spec = DuSpec::make(n, k);
  std::int64_t total = binom2(k - 1);                                   // hub tournament
  total += 2 * static_cast<std::int64_t>(k - 1) * (n - k + 1);          // hub joins
  total += binom2(n - k + 1);                                           // inter-part tournament
  for (int i = 1; i < spec.part_count(); ++i) total += binom2(spec.part_size(i));
  return total;
}

Rational conjecture_value(int n, int k) {
  if (k < 1) throw std::invalid_argument("conjecture_value requires k >= 1");
  if (n < k) throw std::invalid_argument("conjecture_value requires n >= k");
  Rational coeff = Rational(3, 2) * (Rational(k) - Rational(4, 3));
  return coeff * Rational(n - k + 1) + Rational(binom2(n));
}

Rational lemma43_bound(int n, int k) {
  if (k < 2) throw std::invalid_argument("lemma43_bound requires k >= 2");
  if (n < k) throw std::invalid_argument("lemma43_bound requires n >= k");
  std::int64_t m = n - k + 1;
  return Rational(2 * binom2(n)) - Rational(m * m - 1, 3);
}

Rational thm44_bound(int n, int k) {
  if (k < 2) throw std::invalid_argument("thm44_bound requires k >= 2");
  if (n < 3 * (k - 1))
    throw std::invalid_argument("thm44_bound applies only for n >= 3(k-1)");
  std::int64_t m = n - k + 1;
  return Rational(binom2(m)) + Rational(17, 6) * Rational(k - 1) * Rational(m);
}

bool binom_identity_check(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("binom_identity_check requires a,b >= 1");
  return binom2(a + b) == binom2(a) + binom2(b) + a * b;
}

BoundsReport BoundsReport::make(int n, int k) {
  if (k < 1) throw std::invalid_argument("bounds require k >= 1");
  if (n < k) throw std::invalid_argument("bounds require n >= k");
  BoundsReport r;
  r.n = n;
  r.k = k;
  r.sat = sat_value(n, k);
  r.ktree_arcs = r.sat;
  if (k >= 2 && n >= 2 * (k - 1)) r.du_arcs = du_arc_count(n, k);
  r.conjecture = conjecture_value(n, k);
  if (k >= 2) r.lemma43 = lemma43_bound(n, k);
  r.thm44_applicable = k >= 2 && n >= 3 * (k - 1);
  if (r.thm44_applicable) r.thm44 = thm44_bound(n, k);
  return r;
}

}  // namespace digsat
