#include "chords/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace chords {

std::string to_string(const Rational& r) {
  return r.get_str();
}

Rational rational_from_string(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) fail();
  if (i < text.size()) {
    if (text[i] != '/') fail();
    ++i;
    digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0 || i != text.size()) fail();
  }
  if (text.front() == '+') text.remove_prefix(1);  // mpq_set_str has no '+'
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), std::string(text).c_str(), 10) != 0) fail();
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

mpz_class floor_of(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), mpq_numref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()));
  return q;
}

Rational rationalize(double x, long denominator) {
  if (denominator <= 0) throw std::invalid_argument("denominator must be positive");
  if (!std::isfinite(x)) throw std::invalid_argument("cannot rationalize a non-finite value");
  const double scaled = std::round(x * static_cast<double>(denominator));
  mpz_class p(scaled);
  Rational r(p, mpz_class(denominator));
  r.canonicalize();
  return r;
}

double to_double(const Rational& r) {
  return r.get_d();
}

}  // namespace chords
