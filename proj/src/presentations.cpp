#include "qlie/presentation.hpp"

#include <set>
#include <stdexcept>

#include "qlie/linalg.hpp"

namespace qlie {

// ---- structured relations ---------------------------------------------------

static FreeElem term_value(const RelTerm& t) {
  auto g = [&](size_t k) { return fe(t.gs[k]); };
  switch (t.kind) {
    case RelTerm::Comm:
      return super_bracket(g(0), g(1));
    case RelTerm::SAnti:
      return super_anti_bracket(g(0), g(1));
    case RelTerm::Prod:
      return g(0) * g(1);
    case RelTerm::Lin:
      return g(0);
    case RelTerm::NestComm:
      return super_bracket(g(0), super_bracket(g(1), g(2)));
    case RelTerm::PairComm:
      return super_bracket(super_bracket(g(0), g(1)), super_bracket(g(2), g(3)));
  }
  throw std::logic_error("unhandled relation term kind");
}

FreeElem struct_to_free(const StructRel& r) {
  FreeElem acc;
  for (const auto& t : r.terms) acc = acc + t.c * term_value(t);
  return acc;
}

FreeElem struct_shadow(const StructRel& r) {
  FreeElem acc;
  for (const auto& t : r.terms) {
    if (t.kind == RelTerm::SAnti || t.kind == RelTerm::Prod) continue;
    acc = acc + t.c * term_value(t);
  }
  return acc;
}

// ---- serialization ----------------------------------------------------------

std::string presentation_serialize(const Presentation& p) {
  std::string out;
  for (const auto& r : p.rels) out += r.id + " | " + r.anchor + " | " + elem_str(r.lhs) + " = 0\n";
  return out;
}

Presentation presentation_parse(const std::string& name, const std::string& text,
                                const ParityFn& parity) {
  Presentation p;
  p.name = name;
  p.parity = parity;
  std::set<std::string> seen;
  size_t pos = 0, lineno = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    if (line[b] == '#') continue;
    auto bad = [&](const std::string& what) {
      throw std::runtime_error("relation file line " + std::to_string(lineno) + ": " + what);
    };
    size_t s1 = line.find(" | ");
    if (s1 == std::string::npos) bad("missing first ' | ' separator");
    size_t s2 = line.find(" | ", s1 + 3);
    if (s2 == std::string::npos) bad("missing second ' | ' separator");
    std::string id = line.substr(b, s1 - b);
    std::string anchor = line.substr(s1 + 3, s2 - s1 - 3);
    std::string expr = line.substr(s2 + 3);
    size_t e = expr.find_last_not_of(" \t\r");
    expr = expr.substr(0, e + 1);
    const std::string tail = " = 0";
    if (expr.size() < tail.size() || expr.compare(expr.size() - tail.size(), tail.size(), tail) != 0)
      bad("relation must end with ' = 0'");
    expr = expr.substr(0, expr.size() - tail.size());
    if (id.empty()) bad("empty relation id");
    if (!seen.insert(id).second) bad("duplicate relation id '" + id + "'");
    p.rels.push_back({id, anchor, elem_parse(expr, parity)});
  }
  return p;
}

static bool elem_inhomogeneous(const FreeElem& e) {
  int seen = -1;
  for (const auto& [w, c] : e.t) {
    int pw = word_parity(w) ? 1 : 0;
    if (seen < 0)
      seen = pw;
    else if (seen != pw)
      return true;
  }
  return false;
}

std::optional<std::string> parity_inhomogeneous(const Presentation& p) {
  for (const auto& r : p.rels)
    if (elem_inhomogeneous(r.lhs)) return r.id;
  return std::nullopt;
}

// ---- evaluation -------------------------------------------------------------

SuperMatrix MatAssign::image(const Gen& g) const {
  for (const auto& [k, v] : dict)
    if (k == g) return v;
  throw std::runtime_error("missing generator: " + gen_str(g));
}

LoopElem LoopAssign::image(const Gen& g) const {
  for (const auto& [k, v] : dict)
    if (k == g) return v;
  throw std::runtime_error("missing generator: " + gen_str(g));
}

std::string loop_str(const LoopElem& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [k, x] : e.c) {
    if (!out.empty()) out += "; ";
    out += "u^" + std::to_string(k) + ": " + sm_str(x);
  }
  return out;
}

namespace {

std::map<int, Rat> mat_vec(const SuperMatrix& m) {
  std::map<int, Rat> v;
  for (size_t k = 0; k < m.a.size(); ++k)
    if (sgn(m.a[k]) != 0) v[(int)k] = m.a[k];
  return v;
}

std::map<std::pair<int, int>, Rat> loop_vec(const LoopElem& e) {
  std::map<std::pair<int, int>, Rat> v;
  for (const auto& [d, m] : e.c)
    for (size_t k = 0; k < m.a.size(); ++k)
      if (sgn(m.a[k]) != 0) v[{d, (int)k}] = m.a[k];
  return v;
}

// Shared residual-expression core: row-reduce the dictionary images (skipping
// dependent entries) and write the residual over the independent ones.
template <class Key, class Assign, class VecFn>
std::optional<FreeElem> express_core(const Assign& a, VecFn vec,
                                     const std::map<Key, Rat>& resid) {
  RowSpaceCert<Key> rs;
  std::vector<size_t> slot_of;
  for (size_t s = 0; s < a.dict.size(); ++s)
    if (rs.add(vec(a.dict[s].second)) >= 0) slot_of.push_back(s);
  auto cert = rs.member_cert(resid);
  if (!cert) return std::nullopt;
  FreeElem out;
  for (const auto& [id, c] : *cert) out = out + c * fe(a.dict[slot_of[(size_t)id]].first);
  return out;
}

struct MatTgt {
  const MatAssign& a;
  SuperMatrix zero() const { return SuperMatrix(a.n); }
  SuperMatrix one() const { return SuperMatrix::identity(a.n); }
  SuperMatrix gen(const Gen& g) const { return a.image(g); }
  SuperMatrix mul(const SuperMatrix& x, const SuperMatrix& y) const { return x * y; }
  SuperMatrix add(const SuperMatrix& x, const SuperMatrix& y) const { return x + y; }
  SuperMatrix scal(const Rat& c, const SuperMatrix& x) const { return c * x; }
};

struct LoopTgt {
  const LoopAssign& a;
  LoopElem zero() const { return LoopElem(a.n); }
  LoopElem one() const { return LoopElem::one(a.n); }
  LoopElem gen(const Gen& g) const { return a.image(g); }
  LoopElem mul(const LoopElem& x, const LoopElem& y) const { return x * y; }
  LoopElem add(const LoopElem& x, const LoopElem& y) const { return x + y; }
  LoopElem scal(const Rat& c, const LoopElem& x) const { return c * x; }
};

// Emit one record: pass when the image vanishes, discrepancy when the residual
// can be rewritten over the generator dictionary (the corrected relation is
// reported), plain fail otherwise.
template <class Assign, class Val, class WitFn, class FixFn>
void record_residual(Report& rep, const Assign& a, const std::string& id,
                     const std::string& anchor, const FreeElem& lhs, const Val& v, WitFn wit,
                     FixFn fix_in_span, const std::string& base_note) {
  if (v.is_zero()) {
    rep.pass(id, anchor, base_note);
    return;
  }
  auto fix = fix_in_span(a, v);
  if (fix) {
    FreeElem corrected = lhs - *fix;
    rep.discrepancy(id, anchor, wit(v), elem_str(corrected) + " = 0", base_note);
  } else {
    rep.fail(id, anchor, wit(v), base_note);
  }
}

std::string inhom_note(const FreeElem& e) {
  return elem_inhomogeneous(e) ? "parity-inhomogeneous as stated" : "";
}

}  // namespace

std::optional<FreeElem> express_residual(const MatAssign& a, const SuperMatrix& resid) {
  return express_core<int>(a, [](const SuperMatrix& m) { return mat_vec(m); }, mat_vec(resid));
}

std::optional<FreeElem> express_residual(const LoopAssign& a, const LoopElem& resid) {
  return express_core<std::pair<int, int>>(
      a, [](const LoopElem& e) { return loop_vec(e); }, loop_vec(resid));
}

namespace {

// The higher-rank current system uses a Cartan pairing alpha_j(h_i) that we fix
// as the type-A matrix 2*d_ij - d_{|i-j|,1}; any report over relations built
// from it carries the choice so downstream readers can audit it.
void stamp_cartan_assumption(Report& rep, const std::string& pres_name) {
  if (pres_name.rfind("yd-sqn", 0) == 0)
    rep.config["assumption"] = "cartan pairing alpha_j(h_i) = 2*d(i,j) - d(|i-j|,1)";
}

}  // namespace

Report evaluate_presentation(const Presentation& p, const MatAssign& a) {
  Report rep;
  rep.config["presentation"] = p.name;
  stamp_cartan_assumption(rep, p.name);
  rep.config["target"] = "matrix";
  rep.config["n"] = std::to_string(a.n);
  rep.numbers["relations"] = (long)p.rels.size();
  for (const auto& r : p.rels) {
    SuperMatrix v = evaluate(r.lhs, MatTgt{a});
    record_residual(
        rep, a, r.id, r.anchor, r.lhs, v, [](const SuperMatrix& m) { return sm_str(m); },
        [](const MatAssign& aa, const SuperMatrix& m) { return express_residual(aa, m); },
        inhom_note(r.lhs));
  }
  return rep;
}

Report evaluate_presentation(const Presentation& p, const LoopAssign& a) {
  Report rep;
  rep.config["presentation"] = p.name;
  stamp_cartan_assumption(rep, p.name);
  rep.config["target"] = "loop";
  rep.config["n"] = std::to_string(a.n);
  rep.numbers["relations"] = (long)p.rels.size();
  for (const auto& r : p.rels) {
    LoopElem v = evaluate(r.lhs, LoopTgt{a});
    record_residual(
        rep, a, r.id, r.anchor, r.lhs, v, [](const LoopElem& e) { return loop_str(e); },
        [](const LoopAssign& aa, const LoopElem& e) { return express_residual(aa, e); },
        inhom_note(r.lhs));
  }
  return rep;
}

// ---- builders ---------------------------------------------------------------

namespace {

int del(int a, int b) { return a == b ? 1 : 0; }
int pm(int j) { return (j & 1) ? -1 : 1; }           // (-1)^j
int spow(int s, int e) { return s > 0 ? 1 : pm(e); }  // (+-1)^e

std::string istr(int v) { return std::to_string(v); }

std::string idx_str(std::initializer_list<int> xs) {
  std::string s;
  for (int v : xs) {
    if (!s.empty()) s += ",";
    s += istr(v);
  }
  return s;
}

// parity = second index entry (three-index families h/e/f[i;k,r] and friends)
ParityFn parity_second() {
  return [](const std::string&, const std::vector<int>& idx) {
    return idx.size() >= 2 ? (idx[1] & 1) : 0;
  };
}

// parity = first index entry (two-index rank-one families h[i;k])
ParityFn parity_first() {
  return [](const std::string&, const std::vector<int>& idx) {
    return idx.empty() ? 0 : (idx[0] & 1);
  };
}

void add_rel(Presentation& p, std::string id, std::string anchor, FreeElem e) {
  p.rels.push_back({std::move(id), std::move(anchor), std::move(e)});
}

// Degree filter for loop-graded alphabets whose last index entry is the degree:
// every generator degree and every word's total degree must stay within bound.
bool degrees_within(const FreeElem& e, int bound) {
  for (const auto& [w, c] : e.t) {
    int tot = 0;
    for (const auto& g : w) {
      int d = g.idx.back();
      if (d < 0 || d > bound) return false;
      tot += d;
    }
    if (tot > bound) return false;
  }
  return true;
}

void add_rel_bounded(Presentation& p, int bound, std::string id, std::string anchor, FreeElem e) {
  if (!degrees_within(e, bound)) return;
  add_rel(p, std::move(id), std::move(anchor), std::move(e));
}

// The four sign-split matrix families over the signed-index picture, middle
// index selecting even/odd, last index fixed/anti-fixed:
//   (k,r) = (0,0) -> E0(a,b), (0,1) -> F0(a,b), (1,0) -> E1(a,b), (1,1) -> -F1(a,b)
SuperMatrix mat4(int n, int k, int r, int a, int b) {
  k &= 1;
  r &= 1;
  if (k == 0) return r == 0 ? E0(n, a, b) : F0(n, a, b);
  return r == 0 ? E1(n, a, b) : Rat(-1) * F1(n, a, b);
}

}  // namespace

// ---- finite presentation of the derived fixed-point subalgebra --------------

Presentation pres_sqn(int n) {
  Presentation p;
  p.name = "sqn-n" + istr(n);
  p.parity = parity_second();
  auto h = [](int i, int j) {
    j &= 1;
    return fe(gen("h", {i, j}, j));
  };
  auto x = [](int s, int i, int j) {
    j &= 1;
    return fe(gen(s > 0 ? "xp" : "xm", {i, j}, j));
  };
  auto hrange = [&](int j) { return j == 0 ? n : n - 1; };

  // odd Cartan squares close on the even Cartan
  for (int i1 = 1; i1 <= n - 1; ++i1)
    for (int i2 = i1; i2 <= n - 1; ++i2)
      add_rel(p, "hh11:" + idx_str({i1, i2}), "12.1",
              super_bracket(h(i1, 1), h(i2, 1)) - Rat(2 * del(i1, i2)) * (h(i1, 0) + h(i1 + 1, 0)) +
                  Rat(2 * del(i1 + 1, i2)) * h(i2, 0));
  // remaining Cartan pairs commute
  for (int j1 = 0; j1 <= 1; ++j1)
    for (int j2 = 0; j2 <= 1; ++j2) {
      if (j1 == 1 && j2 == 1) continue;
      for (int i1 = 1; i1 <= hrange(j1); ++i1)
        for (int i2 = 1; i2 <= hrange(j2); ++i2)
          add_rel(p, "hh" + istr(j1) + istr(j2) + ":" + idx_str({i1, i2}), "12.1",
                  super_bracket(h(i1, j1), h(i2, j2)));
    }
  // even Cartan acts diagonally on the raising/lowering families
  for (int s : {+1, -1})
    for (int i1 = 1; i1 <= n; ++i1)
      for (int i2 = 1; i2 <= n - 1; ++i2)
        for (int j2 = 0; j2 <= 1; ++j2)
          add_rel(p, std::string("hx:") + (s > 0 ? "p" : "m") + ":" + idx_str({i1, i2, j2}), "12.3",
                  super_bracket(h(i1, 0), x(s, i2, j2)) -
                      Rat(s * (del(i1, i2) - del(i1, i2 + 1))) * x(s, i2, j2));
  // odd Cartan flips the parity label
  for (int s : {+1, -1})
    for (int i1 = 1; i1 <= n - 1; ++i1)
      for (int i2 = 1; i2 <= n - 1; ++i2)
        for (int j2 = 0; j2 <= 1; ++j2) {
          int c = spow(s, j2 + 1) *
                  (2 * del(i1, i2) * del(j2, 0) - pm(j2) * del(i1, i2 + 1) - del(i1 + 1, i2));
          add_rel(p, std::string("h1x:") + (s > 0 ? "p" : "m") + ":" + idx_str({i1, i2, j2}),
                  "12.4", super_bracket(h(i1, 1), x(s, i2, j2)) - Rat(c) * x(s, i2, j2 + 1));
        }
  // raising against lowering
  for (int i1 = 1; i1 <= n - 1; ++i1)
    for (int i2 = 1; i2 <= n - 1; ++i2)
      for (int j1 = 0; j1 <= 1; ++j1)
        for (int j2 = 0; j2 <= 1; ++j2) {
          FreeElem rhs;
          if (j1 != j2)
            rhs = Rat(del(i1, i2)) * h(i1, 1);
          else
            rhs = Rat(del(i1, i2)) * (h(i1, 0) - Rat(pm(j1)) * h(i1 + 1, 0));
          add_rel(p, "xpxm:" + idx_str({i1, j1, i2, j2}), "12.5",
                  super_bracket(x(+1, i1, j1), x(-1, i2, j2)) - rhs);
        }
  // same-sign brackets are invariant under shifting both parity labels
  for (int s : {+1, -1})
    for (int i1 = 1; i1 <= n - 1; ++i1)
      for (int i2 = i1; i2 <= n - 1; ++i2)
        for (int j1 = 0; j1 <= 1; ++j1)
          for (int j2 = 0; j2 <= 1; ++j2)
            add_rel(p, std::string("xx:") + (s > 0 ? "p" : "m") + ":" + idx_str({i1, j1, i2, j2}),
                    "12.6",
                    super_bracket(x(s, i1, j1), x(s, i2, j2)) -
                        Rat(spow(s, j1 + j2 + 1)) *
                            super_bracket(x(s, i1, j1 + 1), x(s, i2, j2 + 1)));
  // distant-pair adjoint squares vanish
  for (int s : {+1, -1})
    for (int i1 = 1; i1 <= n - 1; ++i1)
      for (int i2 = 1; i2 <= n - 1; ++i2) {
        if (i1 - i2 == 1 || i2 - i1 == 1) continue;
        for (int j1 = 0; j1 <= 1; ++j1)
          for (int j2 = 0; j2 <= 1; ++j2)
            add_rel(p, std::string("serre:") + (s > 0 ? "p" : "m") + ":" +
                           idx_str({i1, j1, i2, j2}),
                    "12.7",
                    super_bracket(x(s, i1, j1),
                                  super_bracket(x(s, i1, j1), x(s, i2, j2))));
      }
  return p;
}

MatAssign assign_sqn(int n) {
  MatAssign a;
  a.n = n;
  for (int i = 1; i <= n; ++i) a.dict.push_back({gen("h", {i, 0}, 0), E0(n, i, i)});
  for (int i = 1; i <= n - 1; ++i) a.dict.push_back({gen("h", {i, 1}, 1), H1(n, i)});
  for (int i = 1; i <= n - 1; ++i) {
    a.dict.push_back({gen("xp", {i, 0}, 0), E0(n, i, i + 1)});
    a.dict.push_back({gen("xm", {i, 0}, 0), E0(n, i + 1, i)});
    a.dict.push_back({gen("xp", {i, 1}, 1), E1(n, i, i + 1)});
    a.dict.push_back({gen("xm", {i, 1}, 1), E1(n, i + 1, i)});
  }
  return a;
}

// ---- sign-split matrix generator list and its stated relation system --------

namespace {

// Shared emitter for the finite matrix list (degree-free, deg = -1) and the
// twisted current list (degrees bounded by degmax).  The relation shapes are
// identical up to the degree decorations, but they are maintained separately
// below because the stated systems differ in exactly the places a shared
// emitter would paper over.

}  // namespace

Presentation pres_glnn(int n) {
  Presentation p;
  p.name = "glnn-n" + istr(n);
  p.parity = parity_second();
  auto h = [](int i, int k, int r) {
    k &= 1;
    r &= 1;
    return fe(gen("h", {i, k, r}, k));
  };
  auto e_ = [](int i, int k, int r) {
    k &= 1;
    r &= 1;
    return fe(gen("e", {i, k, r}, k));
  };
  auto f_ = [](int i, int k, int r) {
    k &= 1;
    r &= 1;
    return fe(gen("f", {i, k, r}, k));
  };
  auto br = [](const FreeElem& x, const FreeElem& y) { return super_bracket(x, y); };

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      for (int r = 0; r <= 1; ++r)
        for (int s = 0; s <= 1; ++s) {
          add_rel(p, "gA1:" + idx_str({i, j, r, s}), "glnn:A1", br(h(i, 0, r), h(j, 0, s)));
          add_rel(p, "gA2:" + idx_str({i, j, r, s}), "glnn:A2", br(h(i, 0, r), h(j, 1, s)));
        }
      add_rel(p, "gB1:" + idx_str({i, j}), "glnn:B1",
              br(h(i, 1, 0), h(j, 1, 0)) - Rat(2 * del(i, j)) * h(i, 0, 0));
      add_rel(p, "gB2:" + idx_str({i, j}), "glnn:B2", br(h(i, 0, 0), h(j, 1, 1)));
      add_rel(p, "gC1:" + idx_str({i, j}), "glnn:C1",
              br(h(i, 0, 1), h(j, 1, 1)) - Rat(2 * del(i, j)) * h(i, 1, 0));
      add_rel(p, "gC2:" + idx_str({i, j}), "glnn:C2", br(h(i, 1, 0), h(j, 1, 1)));
    }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      int dm = del(i, j) - del(i - 1, j);
      int dp = del(i, j) + del(i - 1, j);
      for (int k = 0; k <= 1; ++k)
        for (int r = 0; r <= 1; ++r) {
          add_rel(p, "gD1:" + idx_str({i, j, k, r}), "glnn:D1",
                  br(h(i, 0, 0), e_(j, k, r)) - Rat(dm) * e_(j, k, r));
          add_rel(p, "gD2:" + idx_str({i, j, k, r}), "glnn:D2",
                  br(h(i, 0, 0), f_(j, k, r)) + Rat(dm) * f_(j, k, r));
        }
      for (int r = 0; r <= 1; ++r) {
        add_rel(p, "gE1:" + idx_str({i, j, r}), "glnn:E1",
                br(h(i, 0, 1), e_(j, 1, r)) - Rat(dp) * e_(j, 1, r + 1));
        add_rel(p, "gE2:" + idx_str({i, j, r}), "glnn:E2",
                br(h(i, 0, 1), f_(j, 1, r)) - Rat(dp) * f_(j, 1, r + 1));
      }
      add_rel(p, "gF1:" + idx_str({i, j}), "glnn:F1",
              br(h(i, 1, 0), e_(j, 0, 0)) - Rat(dm) * e_(j, 1, 0));
      add_rel(p, "gF2:" + idx_str({i, j}), "glnn:F2",
              br(h(i, 1, 0), f_(j, 0, 0)) + Rat(dm) * f_(j, 1, 0));
      add_rel(p, "gG1:" + idx_str({i, j}), "glnn:G1",
              br(h(i, 1, 0), e_(j, 0, 1)) + Rat(dp) * e_(j, 1, 1));
      add_rel(p, "gG2:" + idx_str({i, j}), "glnn:G2",
              br(h(i, 1, 0), f_(j, 0, 1)) + Rat(dp) * f_(j, 1, 1));
      add_rel(p, "gH1:" + idx_str({i, j}), "glnn:H1",
              br(h(i, 1, 0), e_(j, 1, 0)) - Rat(dp) * e_(j, 0, 0));
      add_rel(p, "gH2:" + idx_str({i, j}), "glnn:H2",
              br(h(i, 1, 0), f_(j, 1, 0)) - Rat(dp) * f_(j, 0, 0));
      add_rel(p, "gI1:" + idx_str({i, j}), "glnn:I1",
              br(h(i, 1, 0), e_(j, 1, 1)) + Rat(dm) * e_(j, 0, 1));
      add_rel(p, "gI2:" + idx_str({i, j}), "glnn:I2",
              br(h(i, 1, 0), f_(j, 1, 1)) - Rat(dm) * f_(j, 0, 1));
      add_rel(p, "gJ1:" + idx_str({i, j}), "glnn:J1",
              br(h(i, 1, 1), e_(j, 1, 0)) - Rat(dp) * e_(j, 0, 1));
      add_rel(p, "gJ2:" + idx_str({i, j}), "glnn:J2",
              br(h(i, 1, 1), f_(j, 1, 1)) - Rat(dp) * f_(j, 0, 1));
      add_rel(p, "gK1:" + idx_str({i, j}), "glnn:K1",
              br(h(i, 1, 1), e_(j, 1, 1)) + Rat(dp) * e_(j, 0, 0));
      add_rel(p, "gK2:" + idx_str({i, j}), "glnn:K2",
              br(h(i, 1, 1), f_(j, 1, 1)) + Rat(dp) * f_(j, 0, 0));
    }

  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      Rat d(del(i, j));
      for (int r = 0; r <= 1; ++r)
        for (int s = 0; s <= 1; ++s)
          add_rel(p, "gL1:" + idx_str({i, j, r, s}), "glnn:L1",
                  br(e_(i, 0, r), f_(j, 0, s)) - d * (h(i, 0, r + s) - h(i + 1, 0, r + s)));
      add_rel(p, "gL2~fold:" + idx_str({i, j}), "glnn:L2",
              br(e_(i, i, 0), f_(j, i + 1, 0)) - d * (h(i, 1, 0) - h(i + 1, 1, 0)));
      add_rel(p, "gM1:" + idx_str({i, j}), "glnn:M1",
              br(e_(i, 1, 0), f_(j, 1, 0)) - d * (h(i, 0, 0) + h(i + 1, 0, 0)));
      for (int k = 0; k <= 1; ++k)
        add_rel(p, "gM2:" + idx_str({i, j, k}), "glnn:M2",
                br(e_(i, k, 0), f_(j, k + 1, 0)) - d * (h(i, 1, 0) - h(i + 1, 1, 0)));
      add_rel(p, "gN1:" + idx_str({i, j}), "glnn:N1",
              br(e_(i, 0, 1), f_(j, 1, 1)) - d * (h(i, 1, 0) + h(i + 1, 1, 0)));
      add_rel(p, "gN2:" + idx_str({i, j}), "glnn:N2",
              br(e_(i, 1, 1), f_(j, 1, 1)) + d * (h(i, 0, 0) + h(i + 1, 0, 0)));
      add_rel(p, "gO-a:" + idx_str({i, j}), "glnn:O",
              br(e_(i, 1, 1), f_(j, 1, 0)) - d * (h(i, 0, 1) - h(i + 1, 0, 1)));
      add_rel(p, "gO-b:" + idx_str({i, j}), "glnn:O",
              Rat(-1) * br(e_(i, 1, 0), f_(j, 1, 1)) - d * (h(i, 0, 1) - h(i + 1, 0, 1)));
    }
  return p;
}

MatAssign assign_glnn(int n) {
  MatAssign a;
  a.n = n;
  for (int k = 0; k <= 1; ++k)
    for (int r = 0; r <= 1; ++r) {
      for (int i = 1; i <= n; ++i) a.dict.push_back({gen("h", {i, k, r}, k), mat4(n, k, r, i, i)});
      for (int i = 1; i <= n - 1; ++i) {
        a.dict.push_back({gen("e", {i, k, r}, k), mat4(n, k, r, i, i + 1)});
        a.dict.push_back({gen("f", {i, k, r}, k), mat4(n, k, r, i + 1, i)});
      }
    }
  return a;
}

// ---- twisted current list ---------------------------------------------------

Presentation pres_twisted(int n, int degmax) {
  Presentation p;
  p.name = "twisted-n" + istr(n) + "-d" + istr(degmax);
  p.parity = parity_second();
  const int D = degmax;
  auto H = [](int i, int k, int r) {
    k &= 1;
    return fe(gen("H", {i, k, r}, k));
  };
  auto E = [](int i, int k, int r) {
    k &= 1;
    return fe(gen("E", {i, k, r}, k));
  };
  auto F = [](int i, int k, int r) {
    k &= 1;
    return fe(gen("F", {i, k, r}, k));
  };
  auto br = [](const FreeElem& x, const FreeElem& y) { return super_bracket(x, y); };
  auto add = [&](std::string id, std::string anchor, FreeElem e) {
    add_rel_bounded(p, D, std::move(id), std::move(anchor), std::move(e));
  };

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      for (int r = 0; r <= D; ++r)
        for (int s = 0; s <= D; ++s) {
          add("tA1:" + idx_str({i, j, r, s}), "tw:A1", br(H(i, 0, r), H(j, 0, s)));
          add("tA2:" + idx_str({i, j, r, s}), "tw:A2", br(H(i, 0, r), H(j, 1, s)));
        }
      for (int k = 0; 2 * k <= D; ++k)
        for (int s = 0; 2 * s <= D; ++s) {
          add("tB1:" + idx_str({i, j, k, s}), "tw:B1",
              br(H(i, 1, 2 * k), H(j, 1, 2 * s)) - Rat(2 * del(i, j)) * H(i, 0, 2 * (k + s)));
          add("tB2:" + idx_str({i, j, k, s}), "tw:B2", br(H(i, 0, 2 * k), H(j, 1, 2 * s + 1)));
          add("tC1~read:" + idx_str({i, j, k, s}), "tw:C1",
              br(H(i, 0, 2 * k + 1), H(j, 1, 2 * s + 1)) -
                  Rat(2 * del(i, j)) * H(i, 1, 2 * (k + s + 1)));
          add("tC2:" + idx_str({i, j, k, s}), "tw:C2", br(H(i, 1, 2 * k), H(j, 1, 2 * s + 1)));
        }
    }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      int dm = del(i, j) - del(i - 1, j);
      int dp = del(i, j) + del(i - 1, j);
      for (int s = 0; 2 * s <= D; ++s) {
        for (int k = 0; k <= 1; ++k)
          for (int r = 0; r <= D; ++r) {
            add("tD1:" + idx_str({i, j, k, s, r}), "tw:D1",
                br(H(i, 0, 2 * s), E(j, k, r)) - Rat(dm) * E(j, k, 2 * s + r));
            add("tD2:" + idx_str({i, j, k, s, r}), "tw:D2",
                br(H(i, 0, 2 * s), F(j, k, r)) + Rat(dm) * F(j, k, 2 * s + r));
          }
        for (int r = 0; r <= D; ++r) {
          add("tE1:" + idx_str({i, j, s, r}), "tw:E1",
              br(H(i, 0, 2 * s + 1), E(j, 1, r)) - Rat(dp) * E(j, 1, 2 * s + r + 1));
          add("tE2:" + idx_str({i, j, s, r}), "tw:E2",
              br(H(i, 0, 2 * s + 1), F(j, 1, r)) - Rat(dp) * F(j, 1, 2 * s + r + 1));
        }
        for (int r = 0; 2 * r <= D; ++r) {
          add("tF1:" + idx_str({i, j, s, r}), "tw:F1",
              br(H(i, 1, 2 * s), E(j, 0, 2 * r)) - Rat(dm) * E(j, 1, 2 * (s + r)));
          add("tF2:" + idx_str({i, j, s, r}), "tw:F2",
              br(H(i, 1, 2 * s), F(j, 0, 2 * r)) + Rat(dm) * F(j, 1, 2 * (s + r)));
          add("tG1:" + idx_str({i, j, s, r}), "tw:G1",
              br(H(i, 1, 2 * s), E(j, 0, 2 * r + 1)) + Rat(dp) * E(j, 1, 2 * (s + r) + 1));
          add("tG2:" + idx_str({i, j, s, r}), "tw:G2",
              br(H(i, 1, 2 * s), F(j, 0, 2 * r + 1)) + Rat(dp) * F(j, 1, 2 * (s + r) + 1));
          add("tH1:" + idx_str({i, j, s, r}), "tw:H1",
              br(H(i, 1, 2 * s), E(j, 1, 2 * r)) - Rat(dp) * E(j, 0, 2 * (s + r)));
          add("tH2:" + idx_str({i, j, s, r}), "tw:H2",
              br(H(i, 1, 2 * s), F(j, 1, 2 * r)) - Rat(dp) * F(j, 0, 2 * (s + r)));
          add("tI1:" + idx_str({i, j, s, r}), "tw:I1",
              br(H(i, 1, 2 * s), E(j, 1, 2 * r + 1)) + Rat(dm) * E(j, 0, 2 * (s + r) + 1));
          add("tI2:" + idx_str({i, j, s, r}), "tw:I2",
              br(H(i, 1, 2 * s), F(j, 1, 2 * r + 1)) - Rat(dm) * F(j, 0, 2 * (r + s) + 1));
          add("tJ1:" + idx_str({i, j, s, r}), "tw:J1",
              br(H(i, 1, 2 * s + 1), E(j, 1, 2 * r)) - Rat(dp) * E(j, 0, 2 * (r + s) + 1));
          add("tJ2:" + idx_str({i, j, s, r}), "tw:J2",
              br(H(i, 1, 2 * s + 1), F(j, 1, 2 * r)) - Rat(dp) * F(j, 0, 2 * (r + s) + 1));
          add("tK1:" + idx_str({i, j, s, r}), "tw:K1",
              br(H(i, 1, 2 * s + 1), E(j, 1, 2 * r + 1)) + Rat(dp) * E(j, 0, 2 * (r + s + 1)));
          add("tK2:" + idx_str({i, j, s, r}), "tw:K2",
              br(H(i, 1, 2 * s + 1), F(j, 1, 2 * r + 1)) + Rat(dp) * F(j, 0, 2 * (r + s + 1)));
        }
      }
    }

  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      Rat d(del(i, j));
      for (int r = 0; r <= D; ++r)
        for (int s = 0; s <= D; ++s)
          add("tL:" + idx_str({i, j, r, s}), "tw:L",
              br(E(i, 0, r), F(j, 0, s)) - d * (H(i, 0, r + s) - H(i + 1, 0, r + s)));
      for (int s = 0; 2 * s <= D; ++s)
        for (int r = 0; 2 * r <= D; ++r) {
          add("tM~fold:" + idx_str({i, j, s, r}), "tw:M",
              br(E(i, i, 2 * s), F(j, i + 1, 2 * r)) -
                  d * (H(i, 1, 2 * (s + r)) - H(i + 1, 1, 2 * (s + r))));
          add("tN~read:" + idx_str({i, j, s, r}), "tw:N",
              br(E(i, 1, 2 * s), F(j, 1, 2 * r)) -
                  d * (H(i, 0, 2 * (r + s)) + H(i + 1, 0, 2 * (r + s))));
          for (int k = 0; k <= 1; ++k)
            add("tO:" + idx_str({i, j, k, s, r}), "tw:O",
                br(E(i, k, 2 * s), F(j, k + 1, 2 * r)) -
                    d * (H(i, 1, 2 * (k + s)) - H(i + 1, 1, 2 * (k + s))));
          add("tP:" + idx_str({i, j, s, r}), "tw:P",
              br(E(i, 0, 2 * s + 1), F(j, 1, 2 * r + 1)) -
                  d * (H(i, 1, 2 * (s + r + 1)) + H(i + 1, 1, 2 * (s + r + 1))));
          add("tQ:" + idx_str({i, j, s, r}), "tw:Q",
              br(E(i, 1, 2 * s + 1), F(j, 1, 2 * r + 1)) +
                  d * (H(i, 0, 2 * (s + r + 1)) + H(i + 1, 0, 2 * (s + r + 1))));
          add("tR-a~read:" + idx_str({i, j, s, r}), "tw:R",
              br(E(i, 1, 2 * s + 1), F(j, 1, 2 * r)) -
                  d * (H(i, 0, 2 * (s + r) + 1) - H(i + 1, 0, 2 * (s + r) + 1)));
          add("tR-b~read:" + idx_str({i, j, s, r}), "tw:R",
              Rat(-1) * br(E(i, 1, 2 * s), F(j, 1, 2 * r + 1)) -
                  d * (H(i, 0, 2 * (s + r) + 1) - H(i + 1, 0, 2 * (s + r) + 1)));
        }
    }
  return p;
}

LoopAssign assign_twisted(int n, int degmax) {
  LoopAssign a;
  a.n = n;
  for (int k = 0; k <= 1; ++k)
    for (int r = 0; r <= degmax; ++r) {
      for (int i = 1; i <= n; ++i)
        a.dict.push_back({gen("H", {i, k, r}, k), LoopElem::mono(mat4(n, k, r, i, i), r)});
      for (int i = 1; i <= n - 1; ++i) {
        a.dict.push_back({gen("E", {i, k, r}, k), LoopElem::mono(mat4(n, k, r, i, i + 1), r)});
        a.dict.push_back({gen("F", {i, k, r}, k), LoopElem::mono(mat4(n, k, r, i + 1, i), r)});
      }
    }
  return a;
}

// ---- rank-one systems -------------------------------------------------------

Presentation pres_ysq1() {
  Presentation p;
  p.name = "ysq1";
  p.parity = parity_first();
  auto h = [](int i, int k) { return fe(gen("h", {i, k}, i & 1)); };
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j)
      add_rel(p, "y1:" + idx_str({i, j}), "ysq1:r1", super_bracket(h(0, i), h(0, j)));
  add_rel(p, "y2", "ysq1:r2", super_bracket(h(1, 0), h(1, 0)) - Rat(2) * h(0, 0));
  for (int i = 0; i <= 1; ++i)
    for (int k = 0; k <= 1; ++k)
      add_rel(p, "y3:" + idx_str({i, k}), "ysq1:r3", super_bracket(h(0, 0), h(i, k)));
  add_rel(p, "y4", "ysq1:r4", super_bracket(h(0, 1), h(1, 0)) - Rat(2) * h(1, 1));
  add_rel(p, "y5", "ysq1:r5", super_bracket(h(1, 0), h(1, 1)));
  return p;
}

LoopAssign assign_sq1_currents(int degmax) {
  LoopAssign a;
  a.n = 1;
  for (int i = 0; i <= 1; ++i)
    for (int m = 0; m <= degmax; ++m)
      a.dict.push_back({gen("h", {i, m}, i & 1), LoopElem::mono(mat4(1, i, m, 1, 1), m)});
  return a;
}

LoopAssign assign_ysq1_classical() { return assign_sq1_currents(1); }

Presentation pres_ybar_sq1(int kmax) {
  Presentation p;
  p.name = "ybar-sq1-k" + istr(kmax);
  p.parity = parity_first();
  const int K = kmax;
  auto h = [](int i, int k) { return fe(gen("hb", {i, k}, i & 1)); };
  auto add = [&](std::string id, std::string anchor, FreeElem e) {
    add_rel_bounded(p, K, std::move(id), std::move(anchor), std::move(e));
  };
  for (int k = 0; 2 * k <= K; ++k)
    for (int r = 0; 2 * r <= K; ++r) {
      add("b1a:" + idx_str({k, r}), "ybar:r1", super_bracket(h(0, 2 * k), h(0, 2 * r)));
      add("b1b~read:" + idx_str({k, r}), "ybar:r1",
          super_bracket(h(0, 2 * k + 1), h(0, 2 * r + 1)));
    }
  for (int k = 0; k <= K; ++k)
    add("b1c:" + idx_str({k}), "ybar:r1", super_bracket(h(0, 0), h(0, k)));
  for (int k = 0; k <= K; ++k)
    add("b2:" + idx_str({k}), "ybar:r2",
        super_bracket(h(0, 1), h(1, k)) - Rat(2) * h(1, k) -
            rat(1, 2) * (h(0, 0) * h(1, k) + h(1, k) * h(0, 0)));
  for (int k = 0; k <= K; ++k)
    add("b3:" + idx_str({k}), "ybar:r3", super_bracket(h(1, 0), h(1, k)) - h(0, k));
  for (int k = 0; k <= K; ++k)
    for (int r = 0; r <= K; ++r) {
      add("b4:" + idx_str({k, r}), "ybar:r4",
          super_bracket(h(0, k + 1), h(1, r)) - super_bracket(h(0, k), h(1, r + 1)) -
              super_anti_bracket(h(0, k), h(1, r)) - super_anti_bracket(h(1, k), h(0, r)));
      add("b5:" + idx_str({k, r}), "ybar:r5",
          super_bracket(h(1, k + 1), h(1, r)) - super_bracket(h(1, k), h(1, r + 1)) -
              super_anti_bracket(h(1, k), h(1, r)) - super_anti_bracket(h(0, k), h(0, r)));
    }
  return p;
}

std::vector<StructRel> yd_sq1_struct(int kmax) {
  std::vector<StructRel> out;
  const int K = kmax;
  auto g = [](int i, int m) { return gen("h", {i, m}, i & 1); };
  auto term = [](RelTerm::Kind kd, Rat c, std::vector<Gen> gs) {
    return RelTerm{kd, std::move(c), std::move(gs)};
  };
  auto in_range = [&](const StructRel& r) {
    return degrees_within(struct_to_free(r), K);
  };
  auto push = [&](StructRel r) {
    if (in_range(r)) out.push_back(std::move(r));
  };
  for (int k = 0; 2 * k <= K; ++k)
    for (int l = 0; 2 * l <= K; ++l)
      push({"yd1~read:" + idx_str({k, l}), "ydsq1:r1",
            {term(RelTerm::Comm, Rat(1), {g(0, 2 * k), g(0, 2 * l)})}});
  for (int k = 0; 2 * k <= K; ++k)
    for (int l = 0; l <= K; ++l)
      push({"yd2:" + idx_str({k, l}),
            "ydsq1:r2",
            {term(RelTerm::Comm, Rat(1), {g(0, 2 * k + 2), g(1, l)}),
             term(RelTerm::Comm, Rat(-1), {g(1, 2 * k + 1), g(0, l + 1)}),
             term(RelTerm::Comm, Rat(-1), {g(0, 2 * k), g(1, l + 2)}),
             term(RelTerm::SAnti, Rat(-1), {g(0, 2 * k), g(1, l + 1)}),
             term(RelTerm::SAnti, Rat(-pm(l)), {g(1, 2 * k), g(0, l)})}});
  for (int k = 0; k <= K; ++k)
    for (int l = 0; l <= K; ++l) {
      push({"yd3-a:" + idx_str({k, l}),
            "ydsq1:r3",
            {term(RelTerm::Comm, Rat(1), {g(1, k + 2), g(1, l)}),
             term(RelTerm::Comm, Rat(-1), {g(1, k), g(1, l + 2)})}});
      push({"yd3-b:" + idx_str({k, l}),
            "ydsq1:r3",
            {term(RelTerm::Comm, Rat(1), {g(1, k), g(1, l + 2)}),
             term(RelTerm::SAnti, Rat(-1), {g(1, k + 1), g(1, l)}),
             term(RelTerm::SAnti, Rat(-1), {g(0, k), g(0, l + 1)})}});
      push({"yd3~corrected:" + idx_str({k, l}),
            "ydsq1:r3",
            {term(RelTerm::Comm, Rat(1), {g(1, k + 2), g(1, l)}),
             term(RelTerm::Comm, Rat(-1), {g(1, k), g(1, l + 2)}),
             term(RelTerm::SAnti, Rat(-1), {g(1, k + 1), g(1, l)}),
             term(RelTerm::SAnti, Rat(-1), {g(0, k), g(0, l + 1)})}});
    }
  return out;
}

Presentation pres_yd_sq1(int kmax) {
  Presentation p;
  p.name = "yd-sq1-k" + istr(kmax);
  p.parity = parity_first();
  for (auto& r : yd_sq1_struct(kmax)) add_rel(p, r.id, r.anchor, struct_to_free(r));
  return p;
}

// ---- general-rank Drinfeld-style system -------------------------------------

namespace {

// type-A pairing coefficient written alpha_j(h_i) in the source list
int cartan_a(int i, int j) {
  if (i == j) return 2;
  if (i - j == 1 || j - i == 1) return -1;
  return 0;
}

}  // namespace

std::vector<StructRel> yd_sqn_struct(int n, int mmax) {
  std::vector<StructRel> out;
  const int M = mmax;
  auto hb = [](int i, int j, int m) { return gen("hb", {i, j, m}, j & 1); };
  auto xg = [](int s, int i, int j, int m) {
    return gen(s > 0 ? "xp" : "xm", {i, j, m}, j & 1);
  };
  auto term = [](RelTerm::Kind kd, Rat c, std::vector<Gen> gs) {
    return RelTerm{kd, std::move(c), std::move(gs)};
  };
  auto push = [&](StructRel r) {
    if (degrees_within(struct_to_free(r), M)) out.push_back(std::move(r));
  };
  // expand a difference-Cartan bracket [hb_i - hb_{i+1}, y] into Comm terms
  auto tilde_comm = [&](std::vector<RelTerm>& ts, Rat c, int i, int j, int m, const Gen& y) {
    ts.push_back(term(RelTerm::Comm, c, {hb(i, j, m), y}));
    ts.push_back(term(RelTerm::Comm, Rat(-1) * c, {hb(i + 1, j, m), y}));
  };
  // same for [x, hb_i - hb_{i+1}] on the right
  auto tilde_comm_r = [&](std::vector<RelTerm>& ts, Rat c, const Gen& y, int i, int j, int m) {
    ts.push_back(term(RelTerm::Comm, c, {y, hb(i, j, m)}));
    ts.push_back(term(RelTerm::Comm, Rat(-1) * c, {y, hb(i + 1, j, m)}));
  };
  // [hb_{i1} - hb_{i1+1}, hb_{i2} - hb_{i2+1}] with families/degrees fixed
  auto tilde_tilde = [&](std::vector<RelTerm>& ts, Rat c, int i1, int j1, int m1, int i2, int j2,
                         int m2) {
    for (int a = 0; a <= 1; ++a)
      for (int b = 0; b <= 1; ++b)
        ts.push_back(term(RelTerm::Comm, c * Rat(pm(a) * pm(b)),
                          {hb(i1 + a, j1, m1), hb(i2 + b, j2, m2)}));
  };
  // {h-tilde, x} products: h x + eps * x h, h expanded as hb_i - hb_{i+1}
  auto tilde_prod = [&](std::vector<RelTerm>& ts, Rat c, int i, int j, int m, const Gen& y,
                        int eps) {
    for (int a = 0; a <= 1; ++a) {
      ts.push_back(term(RelTerm::Prod, c * Rat(pm(a)), {hb(i + a, j, m), y}));
      ts.push_back(term(RelTerm::Prod, c * Rat(pm(a) * eps), {y, hb(i + a, j, m)}));
    }
  };

  for (int i1 = 1; i1 <= n - 1; ++i1)
    for (int i2 = 1; i2 <= n - 1; ++i2) {
      for (int m1 = 0; m1 <= M; ++m1)
        for (int m2 = 0; m2 <= M; ++m2) {
          StructRel r{"eq54296:" + idx_str({i1, i2, m1, m2}), "eq54296", {}};
          tilde_tilde(r.terms, Rat(1), i1, 0, m1, i2, 0, m2);
          push(std::move(r));
        }
      for (int s = 0; s <= 1; ++s)
        for (int m1 = 0; m1 <= M; ++m1)
          for (int m2 = 0; m2 <= M; ++m2) {
            StructRel r{"eq54299:" + idx_str({i1, i2, s, m1, m2}), "eq54299", {}};
            tilde_tilde(r.terms, Rat(1), i1, 1, 2 * m1 + s, i2, 0, 2 * m2 + s);
            push(std::move(r));
            StructRel q{"eq54300:" + idx_str({i1, i2, s, m1, m2}), "eq54300", {}};
            int Dg = 2 * (m1 + m2 + s);
            tilde_tilde(q.terms, Rat(1), i1, 1, 2 * m1 + s, i2, 1, 2 * m2 + s);
            q.terms.push_back(term(RelTerm::Lin, Rat(-pm(s) * 2 * del(i1, i2)), {hb(i1, 0, Dg)}));
            q.terms.push_back(
                term(RelTerm::Lin, Rat(-pm(s) * 2 * del(i1, i2)), {hb(i1 + 1, 0, Dg)}));
            q.terms.push_back(term(
                RelTerm::Lin, Rat(-pm(s) * 2 * (del(i1 + 1, i2) + del(i1 - 1, i2))),
                {hb(i2, 0, Dg)}));
            push(std::move(q));
          }
      for (int m1 = 0; m1 <= M; ++m1)
        for (int m2 = 0; m2 <= M; ++m2) {
          int Dg = 2 * (m1 + m2) + 1;
          for (int half = 0; half <= 1; ++half) {
            StructRel r{std::string("eq54301-") + (half ? "b" : "a") + ":" +
                            idx_str({i1, i2, m1, m2}),
                        "eq54301",
                        {}};
            if (half == 0)
              tilde_tilde(r.terms, Rat(1), i1, 1, 2 * m1 + 1, i2, 0, 2 * m2);
            else
              tilde_tilde(r.terms, Rat(1), i1, 1, 2 * m1, i2, 0, 2 * m2 + 1);
            r.terms.push_back(term(RelTerm::Lin, Rat(-2 * del(i1, i2)), {hb(i1, 1, Dg)}));
            r.terms.push_back(term(RelTerm::Lin, Rat(-2 * del(i1, i2)), {hb(i1 + 1, 1, Dg)}));
            r.terms.push_back(term(RelTerm::Lin,
                                   Rat(2 * (del(i1 + 1, i2) + del(i1 - 1, i2))),
                                   {hb(i2, 0, Dg)}));
            push(std::move(r));
          }
          push({"eq54302-a:" + idx_str({i1, i2, m1, m2}),
                "eq54302",
                {term(RelTerm::Comm, Rat(1), {hb(i1, 1, 2 * m1 + 1), hb(i2, 1, 2 * m2)})}});
          push({"eq54302-b:" + idx_str({i1, i2, m1, m2}),
                "eq54302",
                {term(RelTerm::Comm, Rat(1), {hb(i1, 1, 2 * m1), hb(i2, 1, 2 * m2 + 1)})}});
        }
    }

  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      for (int m = 0; m <= M; ++m)
        for (int r = 0; r <= M; ++r) {
          int Dg = 2 * m + r + 1;
          StructRel q{"eq54560~read:" + idx_str({i, j, m, r}), "eq54560", {}};
          tilde_comm(q.terms, Rat(1), i, 0, 2 * m + 1, hb(j, 1, r));
          q.terms.push_back(
              term(RelTerm::Lin, Rat(-2 * (del(i, j) - del(i, j + 1))), {hb(i, 1, Dg)}));
          q.terms.push_back(
              term(RelTerm::Lin, Rat(-2 * (del(i, j) - del(i, j - 1))), {hb(i + 1, 1, Dg)}));
          push(std::move(q));
        }
      for (int m = 0; m <= M; ++m)
        for (int r = 0; r <= M; ++r) {
          StructRel q{"eq54570:" + idx_str({i, j, m, r}), "eq54570", {}};
          tilde_tilde(q.terms, Rat(1), i, 0, 2 * m, j, 1, 2 * r + 1);
          push(std::move(q));
          StructRel w{"eq54590:" + idx_str({i, j, m, r}), "eq54590", {}};
          tilde_tilde(w.terms, Rat(1), i, 1, 2 * m + 1, j, 1, 2 * r);
          push(std::move(w));
        }
      for (int k = 0; k <= M; ++k)
        for (int l = 0; l <= M; ++l) {
          int Dg = 2 * (k + l);
          StructRel q{"eq54580:" + idx_str({i, j, k, l}), "eq54580", {}};
          tilde_tilde(q.terms, Rat(1), i, 1, 2 * k, j, 0, 2 * l);
          q.terms.push_back(
              term(RelTerm::Lin, Rat(-2 * (del(i, j) - del(i, j + 1))), {hb(i, 0, Dg)}));
          q.terms.push_back(
              term(RelTerm::Lin, Rat(-2 * (del(i, j) - del(i, j - 1))), {hb(i + 1, 0, Dg)}));
          push(std::move(q));
        }
      // raising against lowering
      for (int s = 0; s <= 1; ++s)
        for (int m = 0; m <= M; ++m) {
          StructRel q{"54297:" + idx_str({i, j, s, m}), "54297", {}};
          q.terms.push_back(term(RelTerm::Comm, Rat(1), {xg(+1, i, 0, m), xg(-1, j, s, 0)}));
          q.terms.push_back(term(RelTerm::Lin, Rat(-del(i, j)), {hb(i, s, m)}));
          q.terms.push_back(term(RelTerm::Lin, Rat(del(i, j)), {hb(i + 1, s, m)}));
          push(std::move(q));
        }
      for (int m = 0; m <= M; ++m)
        for (int k = 0; k <= M; ++k) {
          push({"eq5431-a~read:" + idx_str({i, j, m, k}),
                "eq5431",
                {term(RelTerm::Comm, Rat(1), {xg(+1, i, 1, m), xg(-1, j, 1, 2 * k)}),
                 term(RelTerm::Lin, Rat(-del(i, j)), {hb(i, 0, m + 2 * k)})}});
          push({"eq5431-b~read:" + idx_str({i, j, m, k}),
                "eq5431",
                {term(RelTerm::Comm, Rat(1), {xg(+1, i, 1, 2 * k), xg(-1, j, 1, m)}),
                 term(RelTerm::Lin, Rat(-del(i, j)), {hb(i, 0, m + 2 * k)})}});
          push({"eq5432-a:" + idx_str({i, j, m, k}),
                "eq5432",
                {term(RelTerm::Comm, Rat(-1), {xg(+1, i, 1, m), xg(-1, j, 1, 2 * k + 1)}),
                 term(RelTerm::Lin, Rat(-del(i, j)), {hb(i, 0, m + 2 * k + 1)}),
                 term(RelTerm::Lin, Rat(-del(i, j)), {hb(i + 1, 0, m + 2 * k + 1)})}});
          push({"eq5432-b:" + idx_str({i, j, m, k}),
                "eq5432",
                {term(RelTerm::Comm, Rat(1), {xg(+1, i, 1, 2 * k + 1), xg(-1, j, 1, m)}),
                 term(RelTerm::Lin, Rat(-del(i, j)), {hb(i, 0, m + 2 * k + 1)}),
                 term(RelTerm::Lin, Rat(-del(i, j)), {hb(i + 1, 0, m + 2 * k + 1)})}});
          push({"eq5434prime-a~read:" + idx_str({i, j, m, k}),
                "eq5434'",
                {term(RelTerm::Comm, Rat(pm(k)), {xg(+1, i, 1, m), xg(-1, j, 1, k)}),
                 term(RelTerm::Lin, Rat(-del(i, j)), {hb(i, 0, m + k)}),
                 term(RelTerm::Lin, Rat(del(i, j) * pm(k)), {hb(i + 1, 0, m + k)})}});
          push({"eq5434prime-b~read:" + idx_str({i, j, m, k}),
                "eq5434'",
                {term(RelTerm::Comm, Rat(1), {xg(+1, i, 1, k), xg(-1, j, 1, m)}),
                 term(RelTerm::Lin, Rat(-del(i, j)), {hb(i, 0, m + k)}),
                 term(RelTerm::Lin, Rat(del(i, j) * pm(k)), {hb(i + 1, 0, m + k)})}});
        }
      // Cartan actions on the raising/lowering families
      for (int sg : {+1, -1})
        for (int r = 0; r <= 1; ++r) {
          for (int l = 0; l <= M; ++l) {
            StructRel q{std::string("eq5433:") + (sg > 0 ? "p" : "m") + ":" +
                            idx_str({i, j, r, l}),
                        "eq5433",
                        {}};
            tilde_comm(q.terms, Rat(1), i, 0, 0, xg(sg, j, r, l));
            q.terms.push_back(
                term(RelTerm::Lin, Rat(-sg * cartan_a(i, j)), {xg(sg, j, r, l)}));
            push(std::move(q));
          }
          for (int m = 0; m <= M; ++m)
            for (int l = 0; l <= M; ++l) {
              {
                StructRel q{std::string("eq5450:") + (sg > 0 ? "p" : "m") + ":" +
                                idx_str({i, j, r, m, l}),
                            "eq5450",
                            {}};
                tilde_comm(q.terms, Rat(1), i, 0, m + 1, xg(sg, j, r, l));
                tilde_comm(q.terms, Rat(-1), i, 0, m, xg(sg, j, r, l + 1));
                Rat c = rat(-sg * cartan_a(i, j), 2);
                tilde_prod(q.terms, c, i, 0, m, xg(sg, j, r, l), +1);
                push(std::move(q));
              }
              {
                StructRel q{std::string("eq5451:") + (sg > 0 ? "p" : "m") + ":" +
                                idx_str({i, j, r, m, l}),
                            "eq5451",
                            {}};
                tilde_comm(q.terms, Rat(1), i, 1, m + 1, xg(sg, j, r, l));
                tilde_comm(q.terms, Rat(-1), i, 1, m, xg(sg, j, r, l + 1));
                Rat c = rat(-sg * (del(i + 1, j) - del(i - 1, j)), 2);
                tilde_prod(q.terms, c, i, 1, m, xg(sg, j, r, l), pm(r));
                push(std::move(q));
              }
            }
        }
      for (int sg : {+1, -1}) {
          for (int m = 0; m <= M; ++m)
            for (int l = 0; l <= M; ++l) {
              StructRel q{std::string("eq54550~read:") + (sg > 0 ? "p" : "m") + ":" +
                              idx_str({i, j, m, l}),
                          "eq54550",
                          {}};
              Gen y = xg(sg, j, 0, l), y1 = xg(sg, j, 0, l + 1);
              q.terms.push_back(term(RelTerm::Comm, Rat(1), {hb(i, 1, m + 1), y}));
              q.terms.push_back(term(RelTerm::Comm, Rat(-1), {hb(i, 1, m), y1}));
              Rat c = rat(-sg * cartan_a(i, j), 2);
              q.terms.push_back(term(RelTerm::Prod, c, {hb(i, 1, m), y}));
              q.terms.push_back(term(RelTerm::Prod, c, {y, hb(i, 1, m)}));
              Rat c2 = Rat(-(sg * del(i, j + 1) - del(i + 1, j)));
              Gen yo = xg(sg, j, 1, l);
              for (int aa = 0; aa <= 1; ++aa) {
                q.terms.push_back(term(RelTerm::Prod, c2, {hb(i + aa, 0, m), yo}));
                q.terms.push_back(term(RelTerm::Prod, c2, {yo, hb(i + aa, 0, m)}));
              }
              push(std::move(q));
            }
          for (int m = 0; m <= M; ++m)
            for (int rr = 0; rr <= M; ++rr) {
              {
                StructRel q{std::string("eq5453:") + (sg > 0 ? "p" : "m") + ":" +
                                idx_str({i, j, m, rr}),
                            "eq5453",
                            {}};
                q.terms.push_back(
                    term(RelTerm::Comm, Rat(1), {xg(sg, i, 1, m + 1), xg(sg, j, 0, rr)}));
                q.terms.push_back(
                    term(RelTerm::Comm, Rat(-1), {xg(sg, i, 1, m), xg(sg, j, 0, rr + 1)}));
                Rat c = rat(-sg * (del(i + 1, j) - del(i - 1, j)), 2);
                q.terms.push_back(term(RelTerm::Prod, c, {xg(sg, i, 1, m), xg(sg, j, 0, rr)}));
                q.terms.push_back(term(RelTerm::Prod, c, {xg(sg, j, 0, rr), xg(sg, i, 1, m)}));
                push(std::move(q));
              }
              {
                StructRel q{std::string("eq5454:") + (sg > 0 ? "p" : "m") + ":" +
                                idx_str({i, j, m, rr}),
                            "eq5454",
                            {}};
                q.terms.push_back(
                    term(RelTerm::Comm, Rat(1), {xg(sg, i, 1, m + 1), xg(sg, j, 1, rr)}));
                q.terms.push_back(
                    term(RelTerm::Comm, Rat(-1), {xg(sg, i, 1, m), xg(sg, j, 1, rr + 1)}));
                Rat c = rat(-sg * cartan_a(i, j), 2);
                q.terms.push_back(term(RelTerm::Prod, c, {xg(sg, i, 1, m), xg(sg, j, 1, rr)}));
                q.terms.push_back(
                    term(RelTerm::Prod, Rat(-1) * c, {xg(sg, j, 1, rr), xg(sg, i, 1, m)}));
                push(std::move(q));
              }
            }
        }
      // cubic Serre-type sums
      for (int sg : {+1, -1})
        for (int r = 0; r <= 1; ++r)
          for (int s1 = 0; s1 <= M; ++s1)
            for (int s2 = s1; s2 <= M; ++s2)
              for (int s3 = 0; s3 <= M; ++s3) {
                StructRel q{std::string("eq54581:") + (sg > 0 ? "p" : "m") + ":" +
                                idx_str({i, j, r, s1, s2, s3}),
                            "eq54581",
                            {}};
                q.terms.push_back(term(RelTerm::NestComm, Rat(1),
                                       {xg(sg, i, r, s1), xg(sg, i, r, s2), xg(sg, j, r, s3)}));
                q.terms.push_back(term(RelTerm::NestComm, Rat(1),
                                       {xg(sg, i, r, s2), xg(sg, i, r, s1), xg(sg, j, r, s3)}));
                push(std::move(q));
              }
    }
  // quartic cross terms need interior nodes on both sides
  for (int sg : {+1, -1})
    for (int i1 = 2; i1 <= n - 2; ++i1)
      for (int t1 = 0; t1 <= M; ++t1) {
        StructRel q{std::string("eq54582:") + (sg > 0 ? "p" : "m") + ":" + idx_str({i1, t1}),
                    "eq54582",
                    {}};
        q.terms.push_back(term(RelTerm::PairComm, Rat(1),
                               {xg(sg, i1 - 1, 0, t1), xg(sg, i1, 1, 0), xg(sg, i1, 1, 0),
                                xg(sg, i1 + 1, 0, t1)}));
        push(std::move(q));
      }
  return out;
}

Presentation pres_yd_sqn(int n, int mmax) {
  Presentation p;
  p.name = "yd-sqn-n" + istr(n) + "-m" + istr(mmax);
  p.parity = parity_second();
  for (auto& r : yd_sqn_struct(n, mmax)) add_rel(p, r.id, r.anchor, struct_to_free(r));
  return p;
}

LoopAssign assign_yd_classical(int n, int degmax) {
  LoopAssign a;
  a.n = n;
  for (int j = 0; j <= 1; ++j)
    for (int m = 0; m <= degmax; ++m) {
      for (int i = 1; i <= n; ++i)
        a.dict.push_back({gen("hb", {i, j, m}, j & 1), LoopElem::mono(mat4(n, j, m, i, i), m)});
      for (int i = 1; i <= n - 1; ++i) {
        a.dict.push_back(
            {gen("xp", {i, j, m}, j & 1), LoopElem::mono(mat4(n, j, m, i, i + 1), m)});
        a.dict.push_back(
            {gen("xm", {i, j, m}, j & 1), LoopElem::mono(mat4(n, j, m, i + 1, i), m)});
      }
    }
  return a;
}

Report classical_shadow_check(const std::vector<StructRel>& rels, const LoopAssign& a) {
  Report rep;
  rep.config["check"] = "classical-shadow";
  rep.config["n"] = std::to_string(a.n);
  rep.numbers["relations"] = (long)rels.size();
  for (const auto& r : rels)
    if (r.id.rfind("eq5433", 0) == 0 || r.id.rfind("eq5450", 0) == 0 ||
        r.id.rfind("eq5451", 0) == 0 || r.id.rfind("eq54550", 0) == 0) {
      stamp_cartan_assumption(rep, "yd-sqn");
      break;
    }
  long dropped_count = 0;
  for (const auto& r : rels) {
    FreeElem full = struct_to_free(r);
    FreeElem sh = struct_shadow(r);
    bool dropped = !(full - sh).is_zero();
    if (dropped) ++dropped_count;
    std::string note = dropped ? "correction terms dropped" : "";
    LoopElem v = evaluate(sh, LoopTgt{a});
    record_residual(
        rep, a, r.id, r.anchor, sh, v, [](const LoopElem& e) { return loop_str(e); },
        [](const LoopAssign& aa, const LoopElem& e) { return express_residual(aa, e); }, note);
  }
  rep.numbers["with-corrections"] = dropped_count;
  return rep;
}

}  // namespace qlie
