#include "trop/polynomial.hpp"

#include <sstream>

namespace trop {

UnivarPoly& UnivarPoly::operator+=(const UnivarPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

UnivarPoly& UnivarPoly::operator-=(const UnivarPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = -c;
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

UnivarPoly UnivarPoly::operator+(const UnivarPoly& o) const {
  UnivarPoly r = *this;
  r += o;
  return r;
}

UnivarPoly UnivarPoly::operator-(const UnivarPoly& o) const {
  UnivarPoly r = *this;
  r -= o;
  return r;
}

UnivarPoly UnivarPoly::operator-() const {
  UnivarPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

UnivarPoly UnivarPoly::operator*(const UnivarPoly& o) const {
  UnivarPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      BigInt& slot = r.terms_[e1 + e2];
      slot += c1 * c2;
    }
  for (auto it = r.terms_.begin(); it != r.terms_.end();)
    it = it->second == 0 ? r.terms_.erase(it) : std::next(it);
  return r;
}

UnivarPoly UnivarPoly::operator*(const BigInt& c) const {
  UnivarPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

UnivarPoly UnivarPoly::pow(long n) const {
  if (n < 0) fail_invariant("NegativePower", "univariate pow with negative exponent");
  UnivarPoly acc(1);
  UnivarPoly base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

UnivarPoly UnivarPoly::derivative() const {
  UnivarPoly r;
  for (const auto& [e, c] : terms_)
    if (e != 0) r.terms_[e - 1] = c * BigInt(e);
  return r;
}

UnivarPoly UnivarPoly::truncate_below(long bound) const {
  UnivarPoly r;
  for (const auto& [e, c] : terms_)
    if (e < bound) r.terms_[e] = c;
  return r;
}

BigRat UnivarPoly::eval(const BigRat& x) const {
  BigRat acc(0);
  for (const auto& [e, c] : terms_) acc += BigRat(c) * pow_rat(x, e);
  return acc;
}

BigInt UnivarPoly::eval_int(const BigInt& x) const {
  /* Horner over the sparse support, highest exponent first. */
  BigInt acc(0);
  long prev = -1;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (it->first < 0)
      fail_invariant("NegativePower", "integer evaluation of a Laurent term");
    if (prev >= 0) acc *= pow_int(x, prev - it->first);
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0) acc *= pow_int(x, prev);
  return acc;
}

std::vector<BigInt> UnivarPoly::coeff_list() const {
  std::vector<BigInt> out;
  if (terms_.empty()) return out;
  if (low_degree() < 0)
    fail_invariant("NegativePower", "coefficient list of a Laurent polynomial");
  out.assign(static_cast<size_t>(degree()) + 1, BigInt(0));
  for (const auto& [e, c] : terms_) out[static_cast<size_t>(e)] = c;
  return out;
}

std::string UnivarPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    BigInt c = it->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << "-";
    first = false;
    BigInt a = abs(c);
    long e = it->first;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

UnivarPoly exact_divide(const UnivarPoly& num, const UnivarPoly& den) {
  if (den.is_zero())
    fail_invariant("NonExactDivision", "division by the zero polynomial");
  UnivarPoly rem = num;
  UnivarPoly quot;
  const long dd = den.degree();
  const BigInt dl = den.leading_coeff();
  while (!rem.is_zero()) {
    long rd = rem.degree();
    if (rd < dd)
      fail_invariant("NonExactDivision",
                     "remainder " + rem.str() + " after dividing by " + den.str());
    BigInt rl = rem.leading_coeff();
    if (!mpz_divisible_p(rl.get_mpz_t(), dl.get_mpz_t()))
      fail_invariant("NonExactDivision",
                     "leading coefficient " + to_string(rl) +
                         " not divisible by " + to_string(dl));
    BigInt q = rl / dl;
    UnivarPoly t = UnivarPoly::monomial(rd - dd, q);
    quot += t;
    rem -= t * den;
  }
  return quot;
}

LaurentBivarPoly LaurentBivarPoly::from_univar_uv(const UnivarPoly& p) {
  LaurentBivarPoly r;
  for (const auto& [e, c] : p.terms()) r.terms_[{e, e}] = c;
  return r;
}

LaurentBivarPoly LaurentBivarPoly::from_univar_u_inv_v(const UnivarPoly& p) {
  LaurentBivarPoly r;
  for (const auto& [e, c] : p.terms()) r.terms_[{-e, e}] = c;
  return r;
}

LaurentBivarPoly& LaurentBivarPoly::operator+=(const LaurentBivarPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentBivarPoly& LaurentBivarPoly::operator-=(const LaurentBivarPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = -c;
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentBivarPoly LaurentBivarPoly::operator+(const LaurentBivarPoly& o) const {
  LaurentBivarPoly r = *this;
  r += o;
  return r;
}

LaurentBivarPoly LaurentBivarPoly::operator-(const LaurentBivarPoly& o) const {
  LaurentBivarPoly r = *this;
  r -= o;
  return r;
}

LaurentBivarPoly LaurentBivarPoly::operator-() const {
  LaurentBivarPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentBivarPoly LaurentBivarPoly::operator*(const LaurentBivarPoly& o) const {
  LaurentBivarPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      BigInt& slot = r.terms_[{e1[0] + e2[0], e1[1] + e2[1]}];
      slot += c1 * c2;
    }
  for (auto it = r.terms_.begin(); it != r.terms_.end();)
    it = it->second == 0 ? r.terms_.erase(it) : std::next(it);
  return r;
}

LaurentBivarPoly LaurentBivarPoly::operator*(const BigInt& c) const {
  LaurentBivarPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

LaurentBivarPoly LaurentBivarPoly::pow(long n) const {
  if (n < 0) fail_invariant("NegativePower", "bivariate pow with negative exponent");
  LaurentBivarPoly acc(1);
  LaurentBivarPoly base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

LaurentBivarPoly LaurentBivarPoly::shift(long du, long dv) const {
  LaurentBivarPoly r;
  for (const auto& [e, c] : terms_) r.terms_[{e[0] + du, e[1] + dv}] = c;
  return r;
}

bool LaurentBivarPoly::laurent_free() const {
  for (const auto& [e, c] : terms_)
    if (e[0] < 0 || e[1] < 0) return false;
  return true;
}

bool LaurentBivarPoly::symmetric_uv() const {
  for (const auto& [e, c] : terms_)
    if (coeff(e[1], e[0]) != c) return false;
  return true;
}

long LaurentBivarPoly::min_u_exp() const {
  long m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_)
    if (first || e[0] < m) m = e[0], first = false;
  return m;
}

long LaurentBivarPoly::min_v_exp() const {
  long m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_)
    if (first || e[1] < m) m = e[1], first = false;
  return m;
}

long LaurentBivarPoly::max_u_exp() const {
  long m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_)
    if (first || e[0] > m) m = e[0], first = false;
  return m;
}

long LaurentBivarPoly::max_v_exp() const {
  long m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_)
    if (first || e[1] > m) m = e[1], first = false;
  return m;
}

BigRat LaurentBivarPoly::eval(const BigRat& u, const BigRat& v) const {
  BigRat acc(0);
  for (const auto& [e, c] : terms_)
    acc += BigRat(c) * pow_rat(u, e[0]) * pow_rat(v, e[1]);
  return acc;
}

UnivarPoly LaurentBivarPoly::specialize_v_to_1() const {
  UnivarPoly r;
  for (const auto& [e, c] : terms_) {
    UnivarPoly t = UnivarPoly::monomial(e[0], c);
    r += t;
  }
  return r;
}

std::string LaurentBivarPoly::str(const std::string& u, const std::string& v) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    BigInt c = it->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << "-";
    first = false;
    BigInt a = abs(c);
    auto [pu, pv] = it->first;
    bool havevar = pu != 0 || pv != 0;
    if (!havevar) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    if (pu != 0) {
      os << u;
      if (pu != 1) os << "^" << pu;
    }
    if (pv != 0) {
      if (pu != 0) os << "*";
      os << v;
      if (pv != 1) os << "^" << pv;
    }
  }
  return os.str();
}

LaurentBivarPoly exact_divide(const LaurentBivarPoly& num,
                              const LaurentBivarPoly& den) {
  if (den.is_zero())
    fail_invariant("NonExactDivision", "division by the zero polynomial");
  if (num.is_zero()) return LaurentBivarPoly();
  /* Lex-leading-term division.  For an exact quotient q, lt(num) =
   * lt(q)*lt(den) at every step; exponents of q cannot leave the box
   * [min(num)-max(den), max(num)-min(den)], so exiting it means the
   * division is not exact (in a Laurent ring monomials always divide,
   * hence the explicit bound). */
  const long qu_min = num.min_u_exp() - den.max_u_exp();
  const long qu_max = num.max_u_exp() - den.min_u_exp();
  const long qv_min = num.min_v_exp() - den.max_v_exp();
  const long qv_max = num.max_v_exp() - den.min_v_exp();
  auto lex_leading = [](const LaurentBivarPoly& p) {
    return std::prev(p.terms().end());
  };
  LaurentBivarPoly rem = num, quot;
  auto dl = lex_leading(den);
  while (!rem.is_zero()) {
    auto rl = lex_leading(rem);
    long eu = rl->first[0] - dl->first[0];
    long ev = rl->first[1] - dl->first[1];
    if (eu < qu_min || eu > qu_max || ev < qv_min || ev > qv_max)
      fail_invariant("NonExactDivision",
                     "no exact quotient of " + num.str() + " by " + den.str());
    if (!mpz_divisible_p(rl->second.get_mpz_t(), dl->second.get_mpz_t()))
      fail_invariant("NonExactDivision",
                     "coefficient " + to_string(rl->second) +
                         " not divisible by " + to_string(dl->second));
    LaurentBivarPoly t = LaurentBivarPoly::monomial(eu, ev, rl->second / dl->second);
    quot += t;
    rem -= t * den;
  }
  return quot;
}

}  // namespace trop
