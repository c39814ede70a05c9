#include "cyclofac/parse.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "cyclofac/error.hpp"

namespace cyclofac {

namespace {

// Non-whitespace characters with their offsets in the original text.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : end_offset_(text.size()) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        offsets_.push_back(i);
      }
    }
  }

  bool done() const { return pos_ == chars_.size(); }
  char peek() const { return done() ? '\0' : chars_[pos_]; }
  std::size_t offset() const { return done() ? end_offset_ : offsets_[pos_]; }
  bool empty() const { return chars_.empty(); }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out += chars_[pos_++];
    return out;
  }

 private:
  std::string chars_;
  std::vector<std::size_t> offsets_;
  std::size_t end_offset_;
  std::size_t pos_ = 0;
};

Exponent to_exponent(const std::string& digits, std::size_t offset) {
  const Integer e(digits);
  if (e > static_cast<unsigned long>(kMaxExponent)) {
    throw Error(ErrorCode::ExponentOverflow,
                "exponent " + digits + " above 2^32 at offset " + std::to_string(offset));
  }
  return static_cast<Exponent>(e.get_ui());
}

Term parse_term(Cursor& cur, int sign) {
  const std::size_t start = cur.offset();
  const std::string coeff = cur.digits();
  Term t{0, coeff.empty() ? Integer(1) : Integer(coeff)};
  if (cur.accept('*')) {
    if (coeff.empty()) throw ParseError(start, "'*' without a coefficient");
    if (cur.peek() != 'x') throw ParseError(cur.offset(), "expected 'x' after '*'");
  }
  if (cur.accept('x')) {
    t.exponent = 1;
    if (cur.accept('^')) {
      const std::size_t at = cur.offset();
      const std::string e = cur.digits();
      if (e.empty()) throw ParseError(at, "expected an exponent");
      t.exponent = to_exponent(e, at);
    }
  } else if (coeff.empty()) {
    throw ParseError(start, "expected a term");
  }
  t.coeff *= sign;
  return t;
}

}  // namespace

SparsePoly parse_poly(std::string_view text) {
  Cursor cur(text);
  if (cur.empty()) throw ParseError(0, "empty polynomial");
  std::vector<Term> terms;
  int sign = 1;
  if (cur.accept('-')) {
    sign = -1;
  } else {
    cur.accept('+');
  }
  terms.push_back(parse_term(cur, sign));
  while (!cur.done()) {
    if (cur.accept('+')) {
      sign = 1;
    } else if (cur.accept('-')) {
      sign = -1;
    } else {
      throw ParseError(cur.offset(), std::string("unexpected '") + cur.peek() + "'");
    }
    terms.push_back(parse_term(cur, sign));
  }
  return SparsePoly::from_terms(std::move(terms));
}

SparsePoly parse_terms(std::string_view text) {
  std::vector<Term> terms;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError(0, "empty term list");
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError(pos, "expected exponent:coefficient");
    auto trimmed = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return std::string(s);
    };
    const std::string e = trimmed(item.substr(0, colon));
    std::string c = trimmed(item.substr(colon + 1));
    if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(pos, "bad exponent '" + e + "'");
    }
    const std::size_t digits_from = (!c.empty() && (c[0] == '-' || c[0] == '+')) ? 1 : 0;
    if (c.size() == digits_from || c.find_first_not_of("0123456789", digits_from) != std::string::npos) {
      throw ParseError(pos + colon + 1, "bad coefficient '" + c + "'");
    }
    if (c[0] == '+') c.erase(0, 1);
    terms.push_back({to_exponent(e, pos), Integer(c)});
    pos = comma + 1;
  }
  return SparsePoly::from_terms(std::move(terms));
}

}  // namespace cyclofac
