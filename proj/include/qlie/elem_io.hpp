#pragma once

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qlie/free_elem.hpp"

namespace qlie {

// Textual element grammar, used by the relation data files and the CLI:
//   element := ['-'] term (('+'|'-') term)*   |   '0'
//   term    := [rational '*'] gen ('*' gen)*
//   gen     := FAM '[' int [';' int (',' int)*] ']'
// Family names are alphanumeric (no sign characters), e.g. t[2;1,-1], h[0;1,3].

using ParityFn = std::function<int(const std::string&, const std::vector<int>&)>;

inline std::string gen_str(const Gen& g) {
  std::string s = g.fam + "[";
  for (size_t k = 0; k < g.idx.size(); ++k) {
    if (k == 1)
      s += ";";
    else if (k > 1)
      s += ",";
    s += std::to_string(g.idx[k]);
  }
  s += "]";
  return s;
}

inline std::string elem_str(const FreeElem& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : e.t) {
    std::string term;
    Rat a = c;
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    if (w.empty()) {
      term = rat_str(a);
    } else {
      if (a != 1) term = rat_str(a) + "*";
      for (size_t k = 0; k < w.size(); ++k) {
        if (k) term += "*";
        term += gen_str(w[k]);
      }
    }
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

namespace detail {

struct ElemParser {
  const std::string& s;
  size_t p = 0;
  const ParityFn& parity;

  explicit ElemParser(const std::string& str, const ParityFn& pf) : s(str), parity(pf) {}

  void skip() {
    while (p < s.size() && (s[p] == ' ' || s[p] == '\t')) ++p;
  }
  bool eat(char c) {
    skip();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("element parse error at offset " + std::to_string(p) + ": " + what +
                             " in '" + s + "'");
  }

  long integer() {
    skip();
    size_t start = p;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    size_t digits = p;
    while (p < s.size() && isdigit((unsigned char)s[p])) ++p;
    if (p == digits) fail("expected integer");
    return std::stol(s.substr(start, p - start));
  }

  Rat rational() {
    long num = integer();
    skip();
    if (p < s.size() && s[p] == '/') {
      ++p;
      long den = integer();
      return rat(num, den);
    }
    return rat(num);
  }

  bool at_gen() {
    skip();
    return p < s.size() && isalpha((unsigned char)s[p]);
  }

  Gen gen_tok() {
    skip();
    size_t start = p;
    while (p < s.size() && isalnum((unsigned char)s[p])) ++p;
    if (p == start) fail("expected generator family");
    std::string fam = s.substr(start, p - start);
    if (!eat('[')) fail("expected '['");
    std::vector<int> idx;
    idx.push_back((int)integer());
    if (eat(';')) {
      idx.push_back((int)integer());
      while (eat(',')) idx.push_back((int)integer());
    }
    if (!eat(']')) fail("expected ']'");
    return Gen{fam, idx, parity(fam, idx) & 1};
  }

  // term without the sign, which the caller has consumed
  FreeElem term() {
    FreeElem r = unit_elem<Rat>(rat(1));
    bool saw_any = false;
    skip();
    if (p < s.size() && (isdigit((unsigned char)s[p]) || s[p] == '-' || s[p] == '+')) {
      r = unit_elem<Rat>(rational());
      saw_any = true;
      skip();
      if (p < s.size() && s[p] == '*') ++p;
      else
        return r;  // bare scalar term
    }
    while (true) {
      if (!at_gen()) {
        if (!saw_any) fail("expected term");
        break;
      }
      r = r * fe(gen_tok());
      saw_any = true;
      skip();
      if (p < s.size() && s[p] == '*')
        ++p;
      else
        break;
    }
    return r;
  }

  FreeElem element() {
    FreeElem acc;
    skip();
    int sign = 1;
    if (eat('-')) sign = -1;
    else
      eat('+');
    acc = acc + rat(sign) * term();
    while (true) {
      skip();
      if (p >= s.size()) break;
      if (eat('+'))
        sign = 1;
      else if (eat('-'))
        sign = -1;
      else
        fail("expected '+' or '-'");
      acc = acc + rat(sign) * term();
    }
    return acc;
  }
};

}  // namespace detail

inline FreeElem elem_parse(const std::string& str, const ParityFn& parity) {
  detail::ElemParser p(str, parity);
  FreeElem e = p.element();
  return e;
}

}  // namespace qlie
