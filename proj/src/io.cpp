#include "mbb/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace mbb {

std::vector<std::string> default_variable_names(std::size_t n) {
  if (n <= 3) {
    std::vector<std::string> v{"x", "y", "z"};
    v.resize(n);
    return v;
  }
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back("x" + std::to_string(i + 1));
  return v;
}

Names default_names(std::size_t nvars) {
  return {default_variable_names(nvars), "e"};
}

std::string format_rat(const Rat &q) { return q.get_str(); }

std::string format_term(const Term &t, const std::vector<std::string> &vars) {
  std::string s;
  for (std::size_t i = 0; i < t.nvars(); ++i) {
    if (t[i] == 0)
      continue;
    if (!s.empty())
      s += '*';
    s += vars.at(i);
    if (t[i] > 1)
      s += '^' + std::to_string(t[i]);
  }
  return s.empty() ? "1" : s;
}

std::string format_module_term(const ModuleTerm &m, const Names &names) {
  std::string e = names.comp + std::to_string(m.comp + 1);
  if (m.term.is_one())
    return e;
  return format_term(m.term, names.vars) + '*' + e;
}

// Joins (coefficient, monomial text) pairs; monomial "" means a constant.
static std::string join(const std::vector<std::pair<Rat, std::string>> &parts) {
  if (parts.empty())
    return "0";
  std::string s;
  bool first = true;
  for (const auto &[c, mono] : parts) {
    Rat a = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    if (mono.empty())
      s += format_rat(a);
    else if (a == 1)
      s += mono;
    else
      s += format_rat(a) + '*' + mono;
  }
  return s;
}

std::string format_poly(const Poly &p, const TermOrder &o,
                        const std::vector<std::string> &vars) {
  std::vector<std::pair<Rat, std::string>> parts;
  for (const auto &[t, c] : p.sorted(o))
    parts.emplace_back(c, t.is_one() ? "" : format_term(t, vars));
  return join(parts);
}

std::string format_vector(const VecP &v, const TermOrder &o,
                          const Names &names) {
  std::vector<std::pair<Rat, std::string>> parts;
  for (const auto &[m, c] : v.sorted(o))
    parts.emplace_back(c, format_module_term(m, names));
  return join(parts);
}

// ---- parsing ---------------------------------------------------------------

namespace {

struct Value {
  bool vec = false;
  Poly p;
  VecP v;
};

class Parser {
public:
  Parser(std::string_view src, const std::vector<std::string> &vars,
         std::size_t rank, const std::string &comp)
      : src_(src), vars_(vars), rank_(rank), comp_(comp) {}

  Value parse_all() {
    Value v = expr();
    skip();
    if (pos_ != src_.size())
      fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return v;
  }

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg, pos_ + 1);
  }

private:
  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::size_t nvars() const { return vars_.size(); }

  Value zero() const { return {false, Poly(nvars()), VecP(nvars(), rank_)}; }

  void add(Value &acc, Value rhs, bool negate, std::size_t at) {
    if (negate) {
      rhs.p *= Rat(-1);
      rhs.v *= Rat(-1);
    }
    if (acc.vec == rhs.vec) {
      acc.p += rhs.p;
      acc.v += rhs.v;
      return;
    }
    // a polynomial summand is only allowed next to vectors when it is 0
    const Poly &scalar = acc.vec ? rhs.p : acc.p;
    if (!scalar.is_zero()) {
      pos_ = at;
      fail("cannot add a polynomial and a vector");
    }
    if (!acc.vec) {
      acc.vec = true;
      acc.v = rhs.v;
    }
  }

  Value expr() {
    skip();
    Value acc = zero();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    std::size_t at = pos_;
    add(acc, product(), neg, at);
    for (;;) {
      skip();
      if (pos_ >= src_.size())
        break;
      char c = src_[pos_];
      if (c != '+' && c != '-')
        break;
      ++pos_;
      at = pos_;
      add(acc, product(), c == '-', at);
    }
    return acc;
  }

  Value product() {
    Value acc = factor();
    while (eat('*')) {
      std::size_t at = pos_;
      Value rhs = factor();
      if (acc.vec && rhs.vec) {
        pos_ = at;
        fail("product of two vectors");
      }
      if (acc.vec)
        acc.v = rhs.p * acc.v;
      else if (rhs.vec) {
        acc.vec = true;
        acc.v = acc.p * rhs.v;
      } else
        acc.p = acc.p * rhs.p;
    }
    return acc;
  }

  unsigned posint() {
    skip();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a positive integer");
    std::string digits(src_.substr(start, pos_ - start));
    if (digits.size() > 9) {
      pos_ = start;
      fail("exponent too large");
    }
    unsigned n = static_cast<unsigned>(std::stoul(digits));
    if (n == 0) {
      pos_ = start;
      fail("expected a positive integer");
    }
    return n;
  }

  Value factor() {
    Value base = atom();
    if (eat('^')) {
      std::size_t at = pos_;
      unsigned e = posint();
      if (base.vec) {
        pos_ = at;
        fail("power of a vector");
      }
      Poly r = Poly::constant(nvars(), Rat(1));
      for (unsigned i = 0; i < e; ++i)
        r = r * base.p;
      base.p = r;
    }
    return base;
  }

  Value atom() {
    skip();
    if (pos_ >= src_.size())
      fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!eat(')'))
        fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Value number() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    mpz_class num(std::string(src_.substr(start, pos_ - start)));
    mpz_class den = 1;
    std::size_t save = pos_;
    skip();
    if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      skip();
      std::size_t ds = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      if (ds == pos_)
        fail("bad rational: expected a denominator");
      den = mpz_class(std::string(src_.substr(ds, pos_ - ds)));
      if (den == 0) {
        pos_ = ds;
        fail("bad rational: zero denominator");
      }
    } else {
      pos_ = save;
    }
    Value v = zero();
    v.p = Poly::constant(nvars(), make_rat(num, den));
    return v;
  }

  Value identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    std::string name(src_.substr(start, pos_ - start));
    auto it = std::find(vars_.begin(), vars_.end(), name);
    Value v = zero();
    if (it != vars_.end()) {
      v.p = Poly::variable(nvars(), static_cast<std::size_t>(it - vars_.begin()));
      return v;
    }
    if (name.size() > comp_.size() && name.compare(0, comp_.size(), comp_) == 0 &&
        std::all_of(name.begin() + comp_.size(), name.end(),
                    [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      std::string digits = name.substr(comp_.size());
      unsigned long k = digits.size() > 9 ? 0 : std::stoul(digits);
      if (rank_ == 0 || k < 1 || k > rank_) {
        pos_ = start;
        fail("component " + name + " out of range (rank " +
             std::to_string(rank_) + ")");
      }
      v.vec = true;
      v.v = VecP::unit(nvars(), rank_, k - 1);
      return v;
    }
    pos_ = start;
    fail("unknown variable '" + name + "'");
  }

  std::string_view src_;
  const std::vector<std::string> &vars_;
  std::size_t rank_;
  std::string comp_;
  std::size_t pos_ = 0;
};

} // namespace

Rat parse_rat(std::string_view src) {
  std::vector<std::string> none;
  Parser p(src, none, 0, "e");
  Value v = p.parse_all();
  if (v.p.size() > 1 || v.vec)
    throw ParseError("bad rational", 1);
  return v.p.coeff(Term(0));
}

Poly parse_poly(std::string_view src, const std::vector<std::string> &vars) {
  Parser p(src, vars, 0, "e");
  Value v = p.parse_all();
  return v.p;
}

VecP parse_vector(std::string_view src, const std::vector<std::string> &vars,
                  std::size_t rank, const std::string &comp) {
  Parser p(src, vars, rank, comp);
  Value v = p.parse_all();
  if (!v.vec) {
    if (!v.p.is_zero())
      throw ParseError("missing component factor " + comp + "<k>", 1);
    return VecP(vars.size(), rank);
  }
  return v.v;
}

ModuleTerm parse_module_term(std::string_view src,
                             const std::vector<std::string> &vars,
                             std::size_t rank) {
  VecP v = parse_vector(src, vars, rank);
  if (v.size() != 1 || v.terms().begin()->second != 1)
    throw ParseError("expected a single module term such as x*e1", 1);
  return v.terms().begin()->first;
}

} // namespace mbb
