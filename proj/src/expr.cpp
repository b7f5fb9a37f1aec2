#include "loopcoprod/expr.hpp"

namespace loopcoprod {

std::string to_string(const Monomial& m) {
  std::string s = "g" + std::to_string(m.g);
  if (m.k == 1)
    s += "*x";
  else if (m.k != 0)
    s += "*x^" + std::to_string(m.k);
  return s;
}

namespace {

// Shared sum printer: emits "a + b - c" with |coeff| != 1 as "n*term".
template <typename Terms, typename MonoStr>
std::string sum_string(const Terms& terms, MonoStr&& mono_str) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool neg = c < 0;
    Int a = neg ? Int(-c) : c;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (a != 1) s += a.str() + "*";
    s += mono_str(m);
    first = false;
  }
  return s;
}

}  // namespace

std::string to_string(const LoopClass& c) {
  return sum_string(c.terms(), [](const Monomial& m) { return to_string(m); });
}

std::string to_string(const TensorClass& t) {
  return sum_string(t.terms(), [](const TensorTerm& tt) {
    return to_string(tt.first) + " ⊗ " + to_string(tt.second);
  });
}

std::string laurent_monomial_string(long long k) { return "x^" + std::to_string(k); }

std::string to_string(const LaurentClass& c) {
  return sum_string(c, [](long long k) { return laurent_monomial_string(k); });
}

std::string to_string(const LaurentTensor& t) {
  return sum_string(t, [](const std::pair<long long, long long>& kk) {
    return laurent_monomial_string(kk.first) + " ⊗ " + laurent_monomial_string(kk.second);
  });
}

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;
  // Group mode when space != nullptr, Laurent mode otherwise.
  const SpaceSpec* space;

  [[noreturn]] void err(const std::string& what) {
    fail(Errc::SyntaxError, what + " at byte " + std::to_string(pos));
  }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Int integer() {
    size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) err("expected digits");
    return Int(text.substr(start, pos - start));
  }

  long long exponent() {
    bool neg = eat('-');
    size_t at = pos;
    Int v = integer();
    if (neg) v = -v;
    if (v > 1000000 || v < -1000000) {
      pos = at;
      err("exponent out of range");
    }
    return v.convert_to<long long>();
  }

  struct Term {
    Int coeff = 1;
    int g = 0;
    bool has_g = false;
    long long k = 0;
    bool has_x = false;
  };

  void factor(Term& t) {
    if (pos >= text.size()) err("expected factor");
    char c = text[pos];
    if (c >= '0' && c <= '9') {
      t.coeff *= integer();
    } else if (c == 'g') {
      size_t at = pos;
      ++pos;
      if (!space) {
        pos = at;
        err("group classes are not allowed in circle expressions");
      }
      Int idx = integer();
      if (idx >= space->group->order() || idx < 0)
        fail(Errc::UnknownElement,
             "g" + idx.str() + " not in group of order " + std::to_string(space->group->order()));
      if (t.has_g) {
        pos = at;
        err("repeated group factor");
      }
      t.g = idx.convert_to<int>();
      t.has_g = true;
    } else if (c == 'x') {
      size_t at = pos;
      ++pos;
      if (t.has_x) {
        pos = at;
        err("repeated x factor");
      }
      t.has_x = true;
      size_t save = pos;
      skip_ws();
      if (eat('^')) {
        skip_ws();
        t.k = exponent();
        if (space && t.k < 0) {
          pos = at;
          err("negative exponents need the circle form");
        }
      } else {
        pos = save;
        t.k = 1;
      }
    } else {
      err(std::string("unexpected character '") + c + "'");
    }
  }

  Term term() {
    Term t;
    factor(t);
    skip_ws();
    while (eat('*')) {
      skip_ws();
      factor(t);
      skip_ws();
    }
    return t;
  }

  template <typename AddTerm>
  void parse_sum(AddTerm&& add_term) {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    skip_ws();
    while (true) {
      Term t = term();
      add_term(t, neg ? Int(-t.coeff) : t.coeff);
      skip_ws();
      if (pos >= text.size()) break;
      if (eat('-'))
        neg = true;
      else if (eat('+'))
        neg = false;
      else
        err("expected '+' or '-'");
      skip_ws();
    }
  }
};

}  // namespace

LoopClass parse_loop_class(const SpaceSpec& space, const std::string& text) {
  if (space.infinite()) fail(Errc::BadInput, "cannot parse classes over a declared-infinite group");
  Parser p{text, 0, &space};
  LoopClass out(space);
  p.parse_sum([&](const Parser::Term& t, Int c) { out.add_term(mono(t.g, t.k), std::move(c)); });
  return out;
}

LaurentClass parse_laurent_class(const std::string& text) {
  Parser p{text, 0, nullptr};
  LaurentClass out;
  p.parse_sum([&](const Parser::Term& t, Int c) { laurent_add_term(out, t.k, std::move(c)); });
  return out;
}

}  // namespace loopcoprod
