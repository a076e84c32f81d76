#include "ternac/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace ternac {

std::string field_name(Field field) {
  return field == Field::Rational ? "Q" : "Q(i)";
}

Field parse_field(std::string_view text) {
  if (text == "Q") return Field::Rational;
  if (text == "Q(i)" || text == "Qi") return Field::Gaussian;
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected Q or Q(i))");
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::fraction(long numerator, long denominator) {
  if (denominator == 0) throw ArithmeticError("division by zero");
  mpq_class q(numerator, denominator);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::i() { return Scalar(0, 1); }

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Signed rational token: [+-]?digits(/digits)?
mpq_class parse_rational(std::string_view token, std::string_view whole) {
  auto fail = [&] { throw ScalarParseError("malformed scalar '" + std::string(whole) + "'"); };
  bool negative = false;
  if (!token.empty() && (token.front() == '+' || token.front() == '-')) {
    negative = token.front() == '-';
    token.remove_prefix(1);
  }
  auto slash = token.find('/');
  std::string_view num = token.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : token.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) fail();
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ScalarParseError("zero denominator in scalar '" + std::string(whole) + "'");
  mpq_class q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string compact;
  for (std::size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      bool near_slash = (k > 0 && text[k - 1] == '/') || (k + 1 < text.size() && text[k + 1] == '/');
      if (near_slash) throw ScalarParseError("whitespace around '/' in scalar '" + std::string(text) + "'");
      continue;
    }
    compact.push_back(c);
  }
  if (compact.empty()) throw ScalarParseError("empty scalar");

  if (compact.back() != 'i') return Scalar(parse_rational(compact, text));

  std::string_view body(compact);
  body.remove_suffix(1);
  // Split "re(+|-)im" at the last sign that is not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view() : body.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);

  mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part, text);
  mpq_class im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_rational(im_part, text);
  }
  return Scalar(re, im);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (is_real()) return Scalar(1 / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& other) {
  re_ += other.re_;
  if (sgn(other.im_) != 0) im_ += other.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  re_ -= other.re_;
  if (sgn(other.im_) != 0) im_ -= other.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (is_real() && other.is_real()) {
    re_ *= other.re_;
    return *this;
  }
  mpq_class re = re_ * other.re_ - im_ * other.im_;
  mpq_class im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw ArithmeticError("division by zero");
  if (is_real() && other.is_real()) {
    re_ /= other.re_;
    return *this;
  }
  return *this *= other.inverse();
}

std::strong_ordering compare(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::str() const {
  if (is_real()) return re_.get_str();
  std::string out = re_.get_str();
  out += sgn(im_) > 0 ? "+" : "-";
  out += mpq_class(abs(im_)).get_str();
  out += "i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) { return os << value.str(); }

void add_product(Scalar& acc, const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.is_real() && b.is_real()) {
    acc.re_ += a.re_ * b.re_;
    return;
  }
  acc += a * b;
}

}  // namespace ternac
