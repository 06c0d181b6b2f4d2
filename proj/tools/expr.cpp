#include <cctype>

#include "cli.hpp"

namespace abc::cli {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Int parse() {
    Int v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    if (v < 0) fail("negative value");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("bad integer expression '" + s_ + "': " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Int expr() {
    Int v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  Int term() {
    Int v = power();
    while (eat('*')) v *= power();
    return v;
  }
  Int power() {
    Int base = atom();
    if (!eat('^')) return base;
    const Int e = power();
    if (e < 0 || !e.fits_ulong_p() || e > 1u << 24) fail("exponent out of range");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e.get_ui());
    return r;
  }
  Int atom() {
    if (eat('(')) {
      Int v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail(i_ < s_.size() ? "unexpected '" + std::string(1, s_[i_]) + "'" : "unexpected end");
    Int v(s_.substr(start, i_ - start));
    if (i_ < s_.size() && (s_[i_] == 'e' || s_[i_] == 'E')) {
      const std::size_t e0 = ++i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (e0 == i_ || i_ - e0 > 4) fail("bad decimal exponent");
      Int ten;
      mpz_ui_pow_ui(ten.get_mpz_t(), 10, std::stoul(s_.substr(e0, i_ - e0)));
      v *= ten;
    }
    return v;
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

Int parse_int_expr(const std::string& text) { return Parser(text).parse(); }

}  // namespace abc::cli
