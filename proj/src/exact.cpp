#include "dualg/exact.hpp"

#include <cctype>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace dualg {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t first = 0;
  while (first < s.size() && std::isspace(static_cast<unsigned char>(s[first]))) ++first;
  s = s.substr(first);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto parse_int = [&](const std::string& part) {
    BigInt v;
    if (part.empty() || v.set_str(part, 10) != 0) {
      throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
    return v;
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    return make_rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (negative || (!whole.empty() && whole[0] == '+')) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt num = parse_int(whole) * scale + parse_int(frac);
    if (negative) num = -num;
    return make_rational(num, scale);
  }
  return Rational(parse_int(s));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_decimal(const Rational& value, int digits) {
  if (digits < 0) digits = 0;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round half away from zero
  BigInt scaled_num = abs(value.get_num()) * scale * 2 + value.get_den();
  BigInt q = scaled_num / (value.get_den() * 2);
  std::string body = q.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (value < 0 && q != 0) body.insert(0, "-");
  return body;
}

double to_double(const Rational& value) { return value.get_d(); }

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial with negative n");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

class FactorialTable {
 public:
  BigInt get(long n) {
    std::lock_guard lock(mutex_);
    while (static_cast<long>(table_.size()) <= n) {
      long next = static_cast<long>(table_.size());
      table_.push_back(table_.back() * next);
    }
    return table_[static_cast<std::size_t>(n)];
  }

 private:
  std::mutex mutex_;
  std::vector<BigInt> table_{BigInt(1)};
};

FactorialTable& factorial_table() {
  static FactorialTable table;
  return table;
}

}  // namespace

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  return factorial_table().get(n);
}

double log_factorial(long n) {
  if (n < 0) throw std::invalid_argument("log_factorial of a negative number");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  r.canonicalize();
  return r;
}

}  // namespace dualg
