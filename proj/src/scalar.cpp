#include "rsf/scalar.hpp"

#include <cctype>
#include <ostream>

#include "rsf/error.hpp"

namespace rsf {

Scalar Scalar::rational(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  if (sgn(o.im_) == 0) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (sgn(im_) == 0) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::invalid_input, "division by zero");
  if (sgn(im_) == 0) return Scalar(1 / re_);
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorKind::invalid_input, "division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : e;
  Scalar acc(1);
  while (k) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  if (sgn(im_) != 0) {
    if (!out.empty() && sgn(im_) > 0) out += "+";
    out += im_.get_str();
    out += "*i";
  }
  return out;
}

namespace {

mpq_class parse_rational(const std::string& s, const std::string& whole) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  std::string t = s[0] == '+' ? s.substr(1) : s;
  for (char c : t)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
      throw Error(ErrorKind::invalid_input, "malformed scalar '" + whole + "'");
  mpq_class q;
  if (q.set_str(t, 10) != 0 || sgn(q.get_den()) == 0)
    throw Error(ErrorKind::invalid_input, "malformed scalar '" + whole + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(ErrorKind::invalid_input, "empty scalar");

  // split at the sign that starts the imaginary term, if any
  if (s.back() == 'i') {
    std::string body = s.substr(0, s.size() - 1);
    if (!body.empty() && body.back() == '*') body.pop_back();
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) return Scalar(0, parse_rational(body, text));
    return Scalar(parse_rational(body.substr(0, split), text),
                  parse_rational(body.substr(split), text));
  }
  if (s == "+" || s == "-") throw Error(ErrorKind::invalid_input, "malformed scalar '" + text + "'");
  return Scalar(parse_rational(s, text));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_input: return "invalid_input";
    case ErrorKind::invalid_word: return "invalid_word";
    case ErrorKind::stratum_failure: return "stratum_failure";
    case ErrorKind::exceptional_set: return "exceptional_set";
    case ErrorKind::budget_exceeded: return "budget_exceeded";
    case ErrorKind::branch_violation: return "branch_violation";
  }
  return "unknown";
}

}  // namespace rsf
