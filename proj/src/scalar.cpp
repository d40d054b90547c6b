#include "ffzeta/scalar.hpp"

#include <cmath>

#include "ffzeta/error.hpp"

namespace ffzeta {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm();
  if (sgn(n) == 0) throw Error(ErrorCode::DivisionByZero, "division by zero in Q(i)");
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  if (sgn(im_) > 0 && !out.empty()) out += "+";
  out += im_.get_str() + "i";
  return out;
}

namespace {

Rational parse_rational(const std::string& s, const std::string& whole) {
  if (s.empty()) throw Error(ErrorCode::ParseError, "malformed Gaussian rational '" + whole + "'");
  std::string t = s[0] == '+' ? s.substr(1) : s;
  Rational r;
  if (r.set_str(t, 10) != 0) throw Error(ErrorCode::ParseError, "malformed Gaussian rational '" + whole + "'");
  if (sgn(r.get_den()) == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + whole + "'");
  r.canonicalize();
  return r;
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty Gaussian rational");
  if (text.back() != 'i') return GaussianRational(parse_rational(text, text));
  const std::string body = text.substr(0, text.size() - 1);
  // The imaginary part starts at the last sign that is not the first character.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    std::string im = body;
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {Rational(0), parse_rational(im, text)};
  }
  std::string im = body.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return {parse_rational(body.substr(0, split), text), parse_rational(im, text)};
}

std::vector<Rational> convergents(double x, const Integer& max_den) {
  std::vector<Rational> out;
  if (!std::isfinite(x)) return out;
  // p_{-1}/q_{-1} = 1/0, p_{-2}/q_{-2} = 0/1
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rest = x;
  for (int step = 0; step < 64; ++step) {
    const double a_d = std::floor(rest);
    if (std::fabs(a_d) > 1e18) break;
    const Integer a(a_d);
    Integer p2 = a * p1 + p0;
    Integer q2 = a * q1 + q0;
    if (q2 > max_den) break;
    out.emplace_back(p2, q2);
    out.back().canonicalize();
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = rest - a_d;
    if (frac < 1e-300) break;
    rest = 1.0 / frac;
  }
  return out;
}

}  // namespace ffzeta
