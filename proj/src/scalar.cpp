#include "binar/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace binar {

Scalar::Scalar(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
  v_.canonicalize();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  v_ /= o.v_;
  return *this;
}

Scalar Scalar::parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Scalar::parse: empty string");
  const std::string str(s);
  // mpq_class accepts "p/q" directly but does not validate trailing garbage
  // strictly enough for our CSV contract, so check the shape first.
  auto is_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  // mpz_class rejects an explicit leading '+'.
  auto to_mpz = [](std::string_view t) {
    if (!t.empty() && t[0] == '+') t.remove_prefix(1);
    return mpz_class(std::string(t));
  };
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(s)) throw std::invalid_argument("Scalar::parse: bad integer: " + str);
    return Scalar(to_mpz(s));
  }
  const auto p = s.substr(0, slash);
  const auto q = s.substr(slash + 1);
  if (!is_int(p) || !is_int(q))
    throw std::invalid_argument("Scalar::parse: bad rational: " + str);
  mpz_class den = to_mpz(q);
  if (den == 0) throw std::invalid_argument("Scalar::parse: zero denominator: " + str);
  return Scalar(to_mpz(p), den);
}

std::string Scalar::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

}  // namespace binar
