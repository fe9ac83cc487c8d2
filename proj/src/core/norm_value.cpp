#include "core/norm_value.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "core/errors.hpp"

namespace f1an {
namespace {

double log2_rat(const Rat& q) {
  // log2 of a positive rational, accurate for huge numerators/denominators.
  signed long exp_num, exp_den;
  double dn = mpz_get_d_2exp(&exp_num, q.get_num().get_mpz_t());
  double dd = mpz_get_d_2exp(&exp_den, q.get_den().get_mpz_t());
  return std::log2(dn) - std::log2(dd) + static_cast<double>(exp_num - exp_den);
}

}  // namespace

NormValue NormValue::one() {
  NormValue v;
  v.zero_ = false;
  v.exact_ = true;
  v.log2_ = 0.0;
  return v;
}

NormValue NormValue::pow_rat(const Rat& base, const Rat& exp) {
  if (base <= 0) throw F1Error(Errc::InvalidNorm, "norm base must be positive");
  NormValue v = one();
  if (base != 1 && exp != 0) v.factors_.push_back({base, exp});
  v.recompute_log2();
  return v;
}

NormValue NormValue::from_rat(const Rat& q) {
  if (q < 0) throw F1Error(Errc::InvalidNorm, "negative norm");
  if (q == 0) return zero();
  return pow_rat(q, Rat(1));
}

NormValue NormValue::from_double(double d) {
  if (d < 0 || std::isnan(d)) throw F1Error(Errc::InvalidNorm, "negative norm");
  if (d == 0) return zero();
  NormValue v;
  v.zero_ = false;
  v.exact_ = false;
  v.log2_ = std::log2(d);
  return v;
}

void NormValue::recompute_log2() {
  double acc = 0.0;
  for (const auto& f : factors_) acc += rat_double(f.exp) * log2_rat(f.base);
  log2_ = acc;
}

NormValue NormValue::operator*(const NormValue& o) const {
  if (zero_ || o.zero_) return zero();
  NormValue v;
  v.zero_ = false;
  if (exact_ && o.exact_) {
    v.exact_ = true;
    v.factors_ = factors_;
    for (const auto& f : o.factors_) {
      auto it = std::find_if(v.factors_.begin(), v.factors_.end(),
                             [&](const Factor& g) { return g.base == f.base; });
      if (it != v.factors_.end()) {
        it->exp += f.exp;
        if (it->exp == 0) v.factors_.erase(it);
      } else {
        v.factors_.push_back(f);
      }
    }
    v.recompute_log2();
  } else {
    v.exact_ = false;
    v.log2_ = log2_ + o.log2_;
  }
  return v;
}

NormValue NormValue::pow(const Rat& e) const {
  if (zero_) {
    if (e <= 0) throw F1Error(Errc::DivisionByZero, "zero to nonpositive power");
    return zero();
  }
  NormValue v = *this;
  if (exact_) {
    if (e == 0) return one();
    for (auto& f : v.factors_) f.exp *= e;
    v.recompute_log2();
  } else {
    v.log2_ = log2_ * rat_double(e);
  }
  return v;
}

NormValue NormValue::inverse() const {
  if (zero_) throw F1Error(Errc::DivisionByZero, "inverse of zero norm");
  return pow(Rat(-1));
}

int NormValue::compare(const NormValue& o) const {
  if (zero_ && o.zero_) return 0;
  if (zero_) return -1;
  if (o.zero_) return 1;
  if (exact_ && o.exact_) {
    // Ratio this/o as a factor list; resolve exactly when the common-
    // denominator exponents stay within a bit-size budget.
    std::vector<Factor> ratio = factors_;
    for (const auto& f : o.factors_) {
      auto it = std::find_if(ratio.begin(), ratio.end(),
                             [&](const Factor& g) { return g.base == f.base; });
      if (it != ratio.end()) {
        it->exp -= f.exp;
        if (it->exp == 0) ratio.erase(it);
      } else {
        ratio.push_back({f.base, -f.exp});
      }
    }
    if (ratio.empty()) return 0;
    Int den(1);
    for (const auto& f : ratio) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), f.exp.get_den().get_mpz_t());
    if (den.fits_ulong_p()) {
      double bits = 0;
      bool ok = true;
      std::vector<std::pair<Rat, long>> ifac;
      for (const auto& f : ratio) {
        Rat e = f.exp * Rat(den);
        if (!fits_long(e)) { ok = false; break; }
        long ie = e.get_num().get_si();
        double b = std::abs(rat_double(e)) *
                   (mpz_sizeinbase(f.base.get_num().get_mpz_t(), 2) +
                    mpz_sizeinbase(f.base.get_den().get_mpz_t(), 2));
        bits += b;
        ifac.push_back({f.base, ie});
      }
      if (ok && bits < 200000.0) {
        Rat prod(1);
        for (const auto& [b, e] : ifac) prod *= rpow(b, e);
        if (prod == 1) return 0;
        return prod < 1 ? -1 : 1;
      }
    }
  }
  if (log2_ == o.log2_) return 0;
  return log2_ < o.log2_ ? -1 : 1;
}

bool NormValue::approx_eq(const NormValue& o, double tau) const {
  if (zero_ || o.zero_) return zero_ == o.zero_;
  if (compare(o) == 0) return true;
  // |a-b| <= tau * max(a,b)  <=>  min/max >= 1-tau
  double d = std::abs(log2_ - o.log2_);
  return d <= -std::log2(1.0 - tau);
}

bool NormValue::leq(const NormValue& o, double tau) const {
  if (zero_) return true;
  if (o.zero_) return false;
  int c = compare(o);
  if (c <= 0) return true;
  return log2_ - o.log2_ <= std::log2(1.0 + tau);
}

NormValue NormValue::sum(std::span<const NormValue> vals) {
  const NormValue* only = nullptr;
  int nonzero = 0;
  for (const auto& v : vals) {
    if (!v.is_zero()) {
      ++nonzero;
      only = &v;
    }
  }
  if (nonzero == 0) return zero();
  if (nonzero == 1) return *only;
  // Kahan accumulation in the linear domain, scaled by the max exponent to
  // dodge overflow for extreme log values.
  double mx = -std::numeric_limits<double>::infinity();
  for (const auto& v : vals)
    if (!v.is_zero()) mx = std::max(mx, v.log2_magnitude());
  double s = 0.0, c = 0.0;
  for (const auto& v : vals) {
    if (v.is_zero()) continue;
    double x = std::exp2(v.log2_magnitude() - mx);
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  NormValue out;
  out.zero_ = false;
  out.exact_ = false;
  out.log2_ = std::log2(s) + mx;
  return out;
}

NormValue nv_max(const NormValue& a, const NormValue& b) { return a.compare(b) >= 0 ? a : b; }
NormValue nv_min(const NormValue& a, const NormValue& b) { return a.compare(b) <= 0 ? a : b; }

std::optional<Rat> NormValue::exact_rational() const {
  if (zero_) return Rat(0);
  if (!exact_) return std::nullopt;
  Rat prod(1);
  double bits = 0;
  for (const auto& f : factors_) {
    if (f.exp.get_den() != 1 || !fits_long(f.exp)) return std::nullopt;
    long e = f.exp.get_num().get_si();
    bits += std::abs(static_cast<double>(e)) *
            (mpz_sizeinbase(f.base.get_num().get_mpz_t(), 2) +
             mpz_sizeinbase(f.base.get_den().get_mpz_t(), 2));
    if (bits > 100000.0) return std::nullopt;
    prod *= rpow(f.base, e);
  }
  return prod;
}

std::string NormValue::str() const {
  if (zero_) return "0";
  std::ostringstream os;
  os.precision(12);
  os << value();
  return os.str();
}

}  // namespace f1an
