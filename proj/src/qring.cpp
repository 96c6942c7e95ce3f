#include "klr/qring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace klr {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({0, Int(c)});
}

LaurentPoly::LaurentPoly(const Int& c) {
  if (c != 0) terms_.push_back({0, c});
}

LaurentPoly LaurentPoly::term(Int c, int e) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({e, std::move(c)});
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

Int LaurentPoly::coeff(int e) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const std::pair<int, Int>& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

int LaurentPoly::lowest_exp() const {
  if (terms_.empty()) throw error("lowest_exp of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::highest_exp() const {
  if (terms_.empty()) throw error("highest_exp of zero polynomial");
  return terms_.back().first;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void LaurentPoly::normalize() {
  std::erase_if(terms_, [](const std::pair<int, Int>& t) { return t.second == 0; });
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->first < b->first)
      r.terms_.push_back(*a++);
    else if (a->first > b->first)
      r.terms_.push_back(*b++);
    else {
      Int c = a->second + b->second;
      if (c != 0) r.terms_.push_back({a->first, std::move(c)});
      ++a;
      ++b;
    }
  }
  r.terms_.insert(r.terms_.end(), a, terms_.end());
  r.terms_.insert(r.terms_.end(), b, o.terms_.end());
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::map<int, Int> acc;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) acc[ea + eb] += ca * cb;
  LaurentPoly r;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.push_back({e, std::move(c)});
  return r;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += e;
  return r;
}

LaurentPoly LaurentPoly::divided_by_int(const Int& d) const {
  if (d == 0) throw error("division by zero integer");
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) {
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    if (rem != 0) throw error("inexact integer division of polynomial");
    c = std::move(q);
  }
  return r;
}

LaurentPoly LaurentPoly::barred() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.push_back({-it->first, it->second});
  return r;
}

bool LaurentPoly::nonneg_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

Int LaurentPoly::eval_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void LaurentPoly::add_term(const Int& c, int e) {
  *this += term(c, e);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (e == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += "q";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::parse(const std::string& s) {
  LaurentPoly r;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i == s.size()) throw error("empty polynomial string");
  bool first = true;
  while (true) {
    skip_ws();
    if (i == s.size()) {
      if (first) throw error("empty polynomial string");
      break;
    }
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw error("expected + or - in polynomial: " + s);
    }
    // optional integer part
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      digits += s[i++];
    Int c = digits.empty() ? Int(1) : Int(digits);
    skip_ws();
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip_ws();
    }
    int e = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && s[i] == '-') {
          esign = -1;
          ++i;
        }
        std::string ed;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          ed += s[i++];
        if (ed.empty()) throw error("bad exponent in polynomial: " + s);
        e = esign * std::stoi(ed);
      }
    } else if (digits.empty()) {
      throw error("bad term in polynomial: " + s);
    }
    r += term(sign * c, e);
    first = false;
  }
  return r;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw error("polynomial division by zero");
  if (a.is_zero()) return {};
  // Shift both to ordinary polynomials and do leading-term elimination.
  int sa = a.lowest_exp(), sb = b.lowest_exp();
  LaurentPoly rem = a.shifted(-sa);
  LaurentPoly div = b.shifted(-sb);
  LaurentPoly quot;
  int db = div.highest_exp();
  Int lb = div.leading_coeff();
  while (!rem.is_zero()) {
    int dr = rem.highest_exp();
    if (dr < db) throw error("inexact polynomial division");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.leading_coeff().get_mpz_t(),
                lb.get_mpz_t());
    if (r != 0) throw error("inexact polynomial division");
    LaurentPoly t = LaurentPoly::term(q, dr - db);
    quot += t;
    rem -= t * div;
  }
  return quot.shifted(sa - sb);
}

namespace {

// Primitive part (ordinary polynomial, content divided out, sign fixed so
// the leading coefficient is positive).
LaurentPoly primitive_part(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Int c = p.content();
  if (p.leading_coeff() < 0) c = -c;
  return p.divided_by_int(c);
}

// Gcd of ordinary polynomials over Z via primitive PRS.
LaurentPoly poly_gcd_ordinary(LaurentPoly a, LaurentPoly b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  Int cont;
  mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.highest_exp() < b.highest_exp()) std::swap(a, b);
  while (!b.is_zero()) {
    // pseudo-remainder of a by b
    int d = a.highest_exp() - b.highest_exp();
    Int lb = b.leading_coeff();
    LaurentPoly r = a;
    for (int k = 0; k <= d; ++k) r *= LaurentPoly(lb);
    // now divide r by b keeping only the remainder
    while (!r.is_zero() && r.highest_exp() >= b.highest_exp()) {
      Int q, rr;
      mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), r.leading_coeff().get_mpz_t(),
                  b.leading_coeff().get_mpz_t());
      if (rr != 0) throw error("pseudo-division invariant violated");
      r -= LaurentPoly::term(q, r.highest_exp() - b.highest_exp()) * b;
    }
    a = b;
    b = primitive_part(r);
  }
  return LaurentPoly(cont) * a;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly a0 = a.is_zero() ? a : a.shifted(-a.lowest_exp());
  LaurentPoly b0 = b.is_zero() ? b : b.shifted(-b.lowest_exp());
  return poly_gcd_ordinary(a0, b0);
}

RatFn::RatFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw error("zero denominator");
  reduce();
}

void RatFn::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  LaurentPoly g = laurent_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  // unit normalization: den ordinary with lowest exponent 0
  int ld = den_.lowest_exp();
  if (ld != 0) {
    den_ = den_.shifted(-ld);
    num_ = num_.shifted(-ld);
  }
  if (den_.leading_coeff() < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  Int c;
  mpz_gcd(c.get_mpz_t(), num_.content().get_mpz_t(),
          den_.content().get_mpz_t());
  if (c > 1) {
    num_ = num_.divided_by_int(c);
    den_ = den_.divided_by_int(c);
  }
}

LaurentPoly RatFn::to_laurent() const {
  if (!is_laurent()) throw error("value not in Z[q,q^-1]: " + to_string());
  return num_;
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn RatFn::operator+(const RatFn& o) const {
  return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const {
  return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator*(const RatFn& o) const {
  return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator/(const RatFn& o) const {
  if (o.is_zero()) throw error("division by zero rational function");
  return RatFn(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::barred() const { return RatFn(num_.barred(), den_.barred()); }

std::string RatFn::to_string() const {
  if (is_laurent()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFn RatFn::parse(const std::string& s) {
  // Either a bare polynomial or "(num) / (den)".
  size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i == s.size() || s[i] != '(') return RatFn(LaurentPoly::parse(s));
  auto close = [&](size_t open) {
    int depth = 0;
    for (size_t j = open; j < s.size(); ++j) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')' && --depth == 0) return j;
    }
    throw error("unbalanced parentheses: " + s);
  };
  size_t c1 = close(i);
  LaurentPoly num = LaurentPoly::parse(s.substr(i + 1, c1 - i - 1));
  size_t j = c1 + 1;
  while (j < s.size() && (std::isspace(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
  if (j >= s.size() || s[j] != '(') throw error("bad rational function: " + s);
  size_t c2 = close(j);
  LaurentPoly den = LaurentPoly::parse(s.substr(j + 1, c2 - j - 1));
  return RatFn(num, den);
}

LaurentPoly qint(int n) {
  if (n < 0) return -qint(-n);
  LaurentPoly r;
  for (int e = n - 1; e >= -(n - 1); e -= 2) r += LaurentPoly::q(e);
  return r;
}

LaurentPoly qfact(int n) {
  if (n < 0) throw error("qfact of negative integer");
  LaurentPoly r(1);
  for (int k = 2; k <= n; ++k) r *= qint(k);
  return r;
}

LaurentPoly poincare(int n) {
  if (n < 0) throw error("poincare of negative integer");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly r;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    r += LaurentPoly::q(2 * inv);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

}  // namespace klr
