#include "schreier/ordinal.hpp"

#include <cctype>
#include <functional>
#include <utility>

#include "schreier/errors.hpp"

namespace schreier {

Ordinal Ordinal::natural(std::uint64_t n) { return natural(Integer(static_cast<unsigned long>(n))); }

Ordinal Ordinal::natural(const Integer& n) {
  Ordinal r;
  if (n > 0) r.terms_.push_back({Ordinal{}, n});
  return r;
}

Ordinal Ordinal::omega() {
  Ordinal r;
  r.terms_.push_back({natural(1), Integer(1)});
  return r;
}

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) throw DomainError("CNF coefficient must be >= 1");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw DomainError("CNF exponents must be strictly decreasing");
  }
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

bool Ordinal::is_finite() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_successor() const noexcept {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

bool Ordinal::is_limit() const noexcept {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

std::optional<Integer> Ordinal::as_natural() const {
  if (terms_.empty()) return Integer(0);
  if (is_finite()) return terms_[0].coefficient;
  return std::nullopt;
}

std::size_t Ordinal::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& t : terms_) {
    h ^= t.exponent.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(mpz_get_ui(t.coefficient.get_mpz_t())) + (h << 6) + (h >> 2);
  }
  return h;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
    if (!(a.terms_[i].exponent == b.terms_[i].exponent)) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ta = a.terms_[i];
    const auto& tb = b.terms_[i];
    if (auto c = ta.exponent <=> tb.exponent; c != 0) return c;
    if (ta.coefficient != tb.coefficient)
      return ta.coefficient < tb.coefficient ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const auto& lead = b.terms().front();
  std::vector<OrdinalTerm> out;
  for (const auto& t : a.terms()) {
    const auto c = t.exponent <=> lead.exponent;
    if (c > 0) {
      out.push_back(t);
    } else {
      if (c == 0) {
        out.push_back({lead.exponent, t.coefficient + lead.coefficient});
        out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
        return Ordinal::from_terms(std::move(out));
      }
      break;
    }
  }
  out.insert(out.end(), b.terms().begin(), b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Ordinal result;
  const auto& a_lead = a.terms().front();
  for (const auto& t : b.terms()) {
    std::vector<OrdinalTerm> piece;
    if (t.exponent.is_zero()) {
      // (w^e1*c1 + rest) * n = w^e1*(c1*n) + rest
      piece = a.terms();
      piece.front().coefficient = a_lead.coefficient * t.coefficient;
    } else {
      piece.push_back({add(a_lead.exponent, t.exponent), t.coefficient});
    }
    result = add(result, Ordinal::from_terms(std::move(piece)));
  }
  return result;
}

Ordinal omega_pow(const Ordinal& a) { return Ordinal::from_terms({{a, Integer(1)}}); }

Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  std::vector<OrdinalTerm> out;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end()) {
      out.push_back(*ia++);
    } else if (ia == a.terms().end()) {
      out.push_back(*ib++);
    } else {
      const auto c = ia->exponent <=> ib->exponent;
      if (c > 0) {
        out.push_back(*ia++);
      } else if (c < 0) {
        out.push_back(*ib++);
      } else {
        out.push_back({ia->exponent, ia->coefficient + ib->coefficient});
        ++ia;
        ++ib;
      }
    }
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal predecessor(const Ordinal& a) {
  if (!a.is_successor()) throw DomainError("predecessor of a non-successor ordinal");
  auto terms = a.terms();
  if (terms.back().coefficient == 1)
    terms.pop_back();
  else
    terms.back().coefficient -= 1;
  return Ordinal::from_terms(std::move(terms));
}

Ordinal fundamental_seq(const Ordinal& lambda, std::uint64_t n) {
  if (!lambda.is_limit()) throw DomainError("fundamental sequence requires a limit ordinal");
  if (n == 0) throw DomainError("fundamental sequence index starts at 1");
  auto terms = lambda.terms();
  const Ordinal gamma = terms.back().exponent;
  if (terms.back().coefficient == 1)
    terms.pop_back();
  else
    terms.back().coefficient -= 1;
  const Ordinal beta = Ordinal::from_terms(std::move(terms));
  if (gamma.is_successor()) {
    const Ordinal g = predecessor(gamma);
    return add(beta, Ordinal::from_terms({{g, Integer(static_cast<unsigned long>(n))}}));
  }
  return add(beta, omega_pow(fundamental_seq(gamma, n)));
}

Classification classify(const Ordinal& a) {
  if (a.is_zero()) return {OrdinalKind::zero, std::nullopt};
  if (a.is_successor()) return {OrdinalKind::successor, predecessor(a)};
  return {OrdinalKind::limit, std::nullopt};
}

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty ordinal expression", pos_);
    Ordinal r = expr();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return r;
  }

 private:
  Ordinal expr() {
    Ordinal r = term();
    while (accept('+')) r = add(r, term());
    return r;
  }

  Ordinal term() {
    Ordinal r = atom();
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept('*')) break;
      Ordinal factor = atom();
      if (factor.is_zero()) throw ParseError("coefficient 0 rejected", at + 1);
      r = mul(r, factor);
    }
    return r;
  }

  Ordinal atom() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of expression", pos_);
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) return Ordinal::natural(number());
    if (ch == '(') {
      ++pos_;
      Ordinal r = expr();
      expect(')');
      return r;
    }
    if (ch == 'w') {
      ++pos_;
      if (!accept('^')) return Ordinal::omega();
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        Ordinal e = expr();
        expect(')');
        return omega_pow(e);
      }
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        return omega_pow(Ordinal::natural(number()));
      if (pos_ < text_.size() && text_[pos_] == 'w') return omega_pow(atom());
      throw ParseError("expected exponent after '^'", pos_);
    }
    throw ParseError("unexpected '" + std::string(1, ch) + "'", pos_);
  }

  Integer number() {
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits.push_back(text_[pos_++]);
    return Integer(digits, 10);
  }

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
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse(); }

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += '+';
    const std::string coeff = t.coefficient.get_str();
    if (t.exponent.is_zero()) {
      out += coeff;
      continue;
    }
    if (t.exponent == Ordinal::natural(1))
      out += 'w';
    else
      out += "w^(" + to_string(t.exponent) + ")";
    if (t.coefficient != 1) out += "*" + coeff;
  }
  return out;
}

}  // namespace schreier
