#include "bdbar/symbol_parser.hpp"

#include <cctype>
#include <sstream>

#include "bdbar/domains.hpp"

namespace bdbar {

namespace {

[[noreturn]] void fail(const std::string& text, std::size_t pos, const std::string& what) {
  throw Error(ErrorCode::Parse, what + " at position " + std::to_string(pos) + " in '" + text + "'");
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\n\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\n\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

class Parser {
 public:
  Parser(const DomainSpec& domain, const std::string& text) : domain_(domain), text_(text) {}

  MixedPoly parse() {
    MixedPoly out = expr();
    skip_space();
    if (pos_ != text_.size()) fail(text_, pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  std::size_t dim() const { return domain_.dim(); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(text_, pos_, std::string("expected '") + c + "'");
  }

  MixedPoly constant(GaussianRational c) const { return to_mixed(HoloPoly::constant(dim(), std::move(c))); }

  MixedPoly expr() {
    MixedPoly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MixedPoly term() {
    MixedPoly acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        acc = divide(acc, unary(), at);
      } else {
        return acc;
      }
    }
  }

  MixedPoly divide(const MixedPoly& num, const MixedPoly& den, std::size_t at) const {
    if (den.is_zero()) fail(text_, at, "division by zero");
    if (den.size() != 1 || den.terms().begin()->first.degree() != 0) fail(text_, at, "division by a non-constant");
    const GaussianRational& c = den.terms().begin()->second;
    const Rational n = c.norm_sq();
    const GaussianRational inv(c.re / n, -c.im / n);
    return num.times_sqrt(ExactScalar(1) / den.scale_sq()) * inv;
  }

  MixedPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MixedPoly power() {
    MixedPoly base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      const unsigned k = integer();
      if (k > kMaxCompositionDegree) fail(text_, at, "exponent too large");
      MixedPoly out = constant(GaussianRational(1));
      for (unsigned i = 0; i < k; ++i) out = out * base;
      return out;
    }
    return base;
  }

  unsigned integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(text_, pos_, "expected an integer");
    const std::string digits = text_.substr(start, pos_ - start);
    if (digits.size() > 6) fail(text_, start, "integer too large");
    return static_cast<unsigned>(std::stoul(digits));
  }

  Rational number() {
    const std::size_t start = pos_;
    std::string mantissa;
    long frac_digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) mantissa += text_[pos_++];
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        mantissa += text_[pos_++];
        ++frac_digits;
      }
    }
    if (mantissa.empty()) fail(text_, start, "malformed number");
    long exponent = 0;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E') && pos_ + 1 < text_.size() &&
        (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '-' ||
         text_[pos_ + 1] == '+')) {
      ++pos_;
      bool negative = false;
      if (text_[pos_] == '-' || text_[pos_] == '+') negative = text_[pos_++] == '-';
      const std::size_t at = pos_;
      exponent = integer();
      if (exponent > 300) fail(text_, at, "exponent too large");
      if (negative) exponent = -exponent;
    }
    Rational q(Integer(mantissa, 10));
    const long shift = exponent - frac_digits;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift < 0) {
      q /= p;
    } else {
      q *= p;
    }
    q.canonicalize();
    return q;
  }

  std::string identifier() {
    std::string id;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) id += text_[pos_++];
    return id;
  }

  MixedPoly basis(char kind, std::size_t at) {
    expect('(');
    std::vector<unsigned> entries{integer()};
    while (accept(',')) entries.push_back(integer());
    expect(')');
    if (entries.size() != dim()) {
      fail(text_, at, "basis element needs " + std::to_string(dim()) + " indices on " + domain_.name());
    }
    if (kind == 'u' && domain_.kind() == DomainKind::Ball2) fail(text_, at, "use U(n1,n2) on the ball");
    if (kind == 'U' && domain_.kind() != DomainKind::Ball2) fail(text_, at, "U(n1,n2) is the ball basis");
    return to_mixed(orthonormal_basis_element(domain_, MultiIndex(entries)));
  }

  MixedPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail(text_, pos_, "unexpected end of input");
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MixedPoly inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      Rational q = number();
      if (pos_ < text_.size() && text_[pos_] == 'i' &&
          (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
        ++pos_;
        return constant(GaussianRational(Rational(0), q));
      }
      return constant(GaussianRational(q));
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(text_, at, "unexpected '" + std::string(1, c) + "'");
    const std::string id = identifier();
    if (id == "i") return constant(GaussianRational(Rational(0), Rational(1)));
    if (id == "conj") {
      expect('(');
      MixedPoly inner = expr();
      expect(')');
      return conj(inner);
    }
    if (id == "u" || id == "U" || id == "e") return basis(id[0], at);
    if (id == "z" && dim() == 1) return to_mixed(HoloPoly::monomial(MultiIndex::unit(1, 0)));
    if (id.size() == 2 && id[0] == 'z' && (id[1] == '1' || id[1] == '2')) {
      const std::size_t j = static_cast<std::size_t>(id[1] - '1');
      if (dim() != 2) fail(text_, at, "'" + id + "' is not a coordinate of " + domain_.name());
      return to_mixed(HoloPoly::monomial(MultiIndex::unit(dim(), j)));
    }
    fail(text_, at, "unknown identifier '" + id + "'");
  }

  const DomainSpec& domain_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

MixedPoly parse_mixed(const DomainSpec& domain, const std::string& text) {
  if (trim(text).empty()) throw Error(ErrorCode::Parse, "empty expression");
  return Parser(domain, text).parse();
}

HoloPoly parse_holo(const DomainSpec& domain, const std::string& text) {
  auto h = to_holo(parse_mixed(domain, text));
  if (!h) throw Error(ErrorCode::InvalidArgument, "'" + text + "' is not holomorphic");
  return *h;
}

Form01 parse_form(const DomainSpec& domain, const std::string& text) {
  const auto parts = split(text, ';');
  if (parts.size() != domain.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "form needs " + std::to_string(domain.dim()) +
                                                  " ';'-separated coefficients on " + domain.name());
  }
  std::vector<HoloPoly> coeffs;
  for (const auto& p : parts) coeffs.push_back(parse_holo(domain, p));
  return Form01(std::move(coeffs));
}

std::vector<HoloPoly> parse_map(const DomainSpec& domain, const std::string& text) {
  const auto parts = split(text, ';');
  if (parts.size() != domain.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "map needs " + std::to_string(domain.dim()) +
                                                  " ';'-separated components on " + domain.name());
  }
  std::vector<HoloPoly> out;
  for (const auto& p : parts) out.push_back(parse_holo(domain, p));
  return out;
}

Complex parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw Error(ErrorCode::Parse, "empty complex number");
  auto to_double = [&raw](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size()) throw Error(ErrorCode::Parse, "not a complex number: '" + raw + "'");
    return v;
  };
  if (s.back() != 'i') {
    if (s == "+" || s == "-") throw Error(ErrorCode::Parse, "not a complex number: '" + raw + "'");
    return {to_double(s), 0.0};
  }
  s.pop_back();
  std::size_t split_at = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  if (split_at == std::string::npos) return {0.0, to_double(s)};
  return {to_double(s.substr(0, split_at)), to_double(s.substr(split_at))};
}

std::vector<Complex> parse_point(const DomainSpec& domain, const std::string& text) {
  std::vector<Complex> z;
  for (const auto& p : split(text, ',')) z.push_back(parse_complex(p));
  if (z.size() != domain.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "point needs " + std::to_string(domain.dim()) + " coordinates on " +
                                                  domain.name());
  }
  return z;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& p : split(text, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(p, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (p.empty() || used != p.size()) throw Error(ErrorCode::Parse, "not a real number: '" + p + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace bdbar
