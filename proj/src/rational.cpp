#include "guarding/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace guarding {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& input) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw parse_error("empty number");

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s.erase(0, 1);
  }

  // "p/q" form.
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw parse_error("bad fraction: " + input);
    // Base must be explicit: mpz's base-0 autodetect reads leading zeros
    // as octal.
    Int n(num, 10), d(den, 10);
    if (sgn(d) == 0) throw parse_error("zero denominator: " + input);
    Rat q(n, d);
    q.canonicalize();
    return neg ? Rat(-q) : q;
  }

  // Decimal with optional exponent.
  std::string mant = s;
  long expo = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    mant = s.substr(0, e);
    std::string es = s.substr(e + 1);
    if (es.empty()) throw parse_error("bad exponent: " + input);
    bool eneg = false;
    if (es[0] == '+' || es[0] == '-') {
      eneg = es[0] == '-';
      es.erase(0, 1);
    }
    if (!all_digits(es) || es.size() > 6) throw parse_error("bad exponent: " + input);
    expo = std::atol(es.c_str());
    if (eneg) expo = -expo;
  }

  std::string digits = mant;
  long frac_len = 0;
  if (auto dot = mant.find('.'); dot != std::string::npos) {
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
    frac_len = static_cast<long>(mant.size() - dot - 1);
  }
  if (!all_digits(digits)) throw parse_error("bad number: " + input);

  Int mantissa(digits, 10);
  Rat q(mantissa);
  long shift = expo - frac_len;
  if (shift != 0) {
    Int p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
    if (shift > 0)
      q *= Rat(p10);
    else
      q /= Rat(p10);
  }
  q.canonicalize();
  return neg ? Rat(-q) : q;
}

std::string to_string(const Rat& q) {
  Rat c = q;  // mpq does not canonicalize on construction
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

double to_double(const Rat& q) { return q.get_d(); }

Int pow2(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

long ceil_log2(const Rat& q) {
  if (sgn(q) <= 0) throw std::invalid_argument("ceil_log2: nonpositive");
  long k = 0;
  Rat p(1);
  while (p < q) {
    p *= 2;
    ++k;
  }
  while (k > 0 && p / 2 >= q) {
    p /= 2;
    --k;
  }
  return k;
}

bool is_pow2(const Int& z) {
  if (sgn(z) <= 0) return false;
  return mpz_popcount(z.get_mpz_t()) == 1;
}

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace guarding
