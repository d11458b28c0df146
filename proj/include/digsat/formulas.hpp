#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace digsat {

// Exact rational over int64, always reduced with positive denominator.
// Arithmetic here stays integral end to end; callers floor at comparison
// sites against arc counts.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::int64_t floor() const;
  bool is_integer() const { return den_ == 1; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  friend auto operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }
  friend bool operator==(const Rational& a, const Rational& b) = default;

  std::string to_string() const;  // "p/q", or "p" when integral
  // Decimal rendering by long division, up to max_frac_digits fractional
  // digits, trailing zeros trimmed. No floating point involved.
  std::string to_decimal_string(int max_frac_digits = 6) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// C(m,2) with the usual convention C(0,2) = C(1,2) = 0.
std::int64_t binom2(std::int64_t m);

// Minimum arc count over saturated digraphs: C(n-k+1,2) + (k-1)(2n-k).
// Requires k >= 1, n >= k.
std::int64_t sat_value(int n, int k);

// Exact arc count of the layered construction on parts of sizes
// k-1,...,k-1,r. Requires k >= 2, n >= 2(k-1).
std::int64_t du_arc_count(int n, int k);

// Conjectured extremal value (3/2)(k - 4/3)(n-k+1) + C(n,2); may be
// non-integral. Requires k >= 1, n >= k.
Rational conjecture_value(int n, int k);

// 2*C(n,2) - ((n-k+1)^2 - 1)/3, an arc bound for digraphs free of k-strong
// subdigraphs. Requires k >= 2, n >= k.
Rational lemma43_bound(int n, int k);

// C(n-k+1,2) + (17/6)(k-1)(n-k+1), the sharper bound; applicable only for
// n >= 3(k-1) (and k >= 2).
Rational thm44_bound(int n, int k);

// Executable identity C(a+b,2) = C(a,2) + C(b,2) + ab for a,b >= 1.
bool binom_identity_check(std::int64_t a, std::int64_t b);

struct BoundsReport {
  int n = 0;
  int k = 0;
  std::int64_t sat = 0;
  std::int64_t ktree_arcs = 0;  // equals sat by construction
  std::optional<std::int64_t> du_arcs;  // needs k >= 2, n >= 2(k-1)
  Rational conjecture;
  std::optional<Rational> lemma43;  // needs k >= 2
  std::optional<Rational> thm44;    // needs k >= 2, n >= 3(k-1)
  bool thm44_applicable = false;

  static BoundsReport make(int n, int k);  // requires k >= 1, n >= k
};

}  // namespace digsat
