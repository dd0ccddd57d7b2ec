#include "lieorb/rational.hpp"

#include <cctype>
#include <ostream>

#include "lieorb/errors.hpp"

namespace lieorb {

Rat::Rat(long num, long den) : v_(num, den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  v_.canonicalize();
}

namespace {
bool valid_integer_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}
}  // namespace

Rat Rat::parse(const std::string& text) {
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer_literal(num) || !valid_integer_literal(den))
    throw ParseError("invalid rational literal: '" + text + "'");
  if (num.front() == '+') num.erase(0, 1);  // mpq rejects an explicit plus
  if (den.front() == '+') den.erase(0, 1);
  mpq_class v(num + "/" + den);
  if (v.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  v.canonicalize();
  return Rat(std::move(v));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::den_lcm(const Rat& a, const Rat& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.v_.get_den().get_mpz_t(), b.v_.get_den().get_mpz_t());
  return Rat(mpq_class(l));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator*(const Rat& c, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

}  // namespace lieorb
