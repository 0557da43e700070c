#include "hetero/ratpoly/rat.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace hetero {

Rat make_rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Int parse_int(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  Int v(std::string(s), 10);
  return neg ? Int(-v) : v;
}

Rat parse_decimal(std::string_view s) {
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exp10 = parse_int(s.substr(e + 1)).get_si();
    s = s.substr(0, e);
  }
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  auto dot = s.find('.');
  if (dot == std::string_view::npos) {
    digits = std::string(s);
  } else {
    digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
    exp10 -= static_cast<long>(s.size() - dot - 1);
  }
  if (!all_digits(digits)) throw std::invalid_argument("not a decimal: '" + std::string(s) + "'");
  Rat v(Int(digits, 10));
  if (exp10 >= 0)
    v *= pow(Rat(10), static_cast<unsigned>(exp10));
  else
    v /= pow(Rat(10), static_cast<unsigned>(-exp10));
  if (neg) v = -v;
  return v;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos)
    return make_rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
  return Rat(parse_int(text));
}

std::string to_string(const Int& v) { return v.get_str(10); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

Rat pow(const Rat& base, unsigned exponent) {
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
  Rat q(n, d);  // already coprime
  return q;
}

Int pow(const Int& base, unsigned exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::optional<Rat> exact_sqrt(const Rat& v) {
  if (sgn(v) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(v.get_num().get_mpz_t()) || !mpz_perfect_square_p(v.get_den().get_mpz_t()))
    return std::nullopt;
  Int n, d;
  mpz_sqrt(n.get_mpz_t(), v.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v.get_den().get_mpz_t());
  return Rat(n, d);
}

std::pair<Rat, Rat> sqrt_enclosure(const Rat& v, unsigned bits) {
  if (sgn(v) < 0) throw std::domain_error("sqrt of negative rational");
  if (auto e = exact_sqrt(v)) return {*e, *e};
  // sqrt(n/d) = sqrt(n d) / d; scale by 4^bits so the integer root carries `bits` fractional bits.
  Int scaled = v.get_num() * v.get_den();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Int denom = v.get_den();
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), bits);
  Rat lo = make_rat(root, denom);
  Rat hi = make_rat(root + 1, denom);
  return {lo, hi};
}

Int lcm(const Int& a, const Int& b) {
  Int out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

long floor_log10(const Rat& v) {
  if (sgn(v) == 0) throw std::domain_error("log10 of zero");
  Rat a = abs(v);
  // Start from the size estimate and correct by exact comparison.
  long guess = static_cast<long>(mpz_sizeinbase(a.get_num().get_mpz_t(), 10)) -
               static_cast<long>(mpz_sizeinbase(a.get_den().get_mpz_t(), 10));
  auto p10 = [](long e) { return e >= 0 ? pow(Rat(10), static_cast<unsigned>(e)) : Rat(1) / pow(Rat(10), static_cast<unsigned>(-e)); };
  while (p10(guess) > a) --guess;
  while (p10(guess + 1) <= a) ++guess;
  return guess;
}

std::string to_scientific(const Rat& v, int digits) {
  if (digits < 1) digits = 1;
  if (sgn(v) == 0) {
    std::string s = "0";
    if (digits > 1) s += "." + std::string(static_cast<size_t>(digits - 1), '0');
    return s + "e+00";
  }
  Rat a = abs(v);
  long e = floor_log10(a);
  long shift = digits - 1 - e;
  Rat scaled = a;
  if (shift >= 0) scaled *= pow(Rat(10), static_cast<unsigned>(shift));
  else scaled /= pow(Rat(10), static_cast<unsigned>(-shift));
  // Round half away from zero.
  Int twice = (2 * scaled.get_num() + scaled.get_den()) / (2 * scaled.get_den());
  Int limit = pow(Int(10), static_cast<unsigned>(digits));
  if (twice >= limit) {
    twice /= 10;
    ++e;
  }
  std::string mant = twice.get_str(10);
  std::string out = sgn(v) < 0 ? "-" : "";
  out += mant.substr(0, 1);
  if (digits > 1) out += "." + mant.substr(1);
  out += e < 0 ? "e-" : "e+";
  std::string ex = std::to_string(e < 0 ? -e : e);
  if (ex.size() < 2) ex = "0" + ex;
  return out + ex;
}

double to_double(const Rat& v) { return v.get_d(); }

}  // namespace hetero
