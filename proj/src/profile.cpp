#include "wlnash/profile.hpp"

#include <stdexcept>

namespace wlnash {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  auto valid_int = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t k = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) k = 1;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') return false;
    return true;
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational: " + text);
  Rational q(mpz_class(num[0] == '+' ? num.substr(1) : num), mpz_class(den));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

MixedProfile MixedProfile::pure(std::size_t n, std::size_t row, std::size_t col) {
  MixedProfile m;
  m.p.assign(n, 0);
  m.q.assign(n, 0);
  m.p.at(row) = 1;
  m.q.at(col) = 1;
  return m;
}

MixedProfile MixedProfile::uniform(std::size_t n) {
  MixedProfile m;
  m.p.assign(n, Rational(1, n));
  m.q.assign(n, Rational(1, n));
  for (auto& v : m.p) v.canonicalize();
  for (auto& v : m.q) v.canonicalize();
  return m;
}

namespace {

std::vector<std::size_t> support_of(const std::vector<Rational>& v) {
  std::vector<std::size_t> s;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) s.push_back(k);
  return s;
}

bool distribution(const std::vector<Rational>& v) {
  if (v.empty()) return false;
  Rational total = 0;
  for (const auto& x : v) {
    if (sgn(x) < 0) return false;
    total += x;
  }
  return total == 1;
}

}  // namespace

std::vector<std::size_t> MixedProfile::support_p() const { return support_of(p); }
std::vector<std::size_t> MixedProfile::support_q() const { return support_of(q); }

bool MixedProfile::is_distribution() const { return distribution(p) && distribution(q); }

}  // namespace wlnash
