#include "qlie/engine.hpp"

#include "qlie/linalg.hpp"

#include <json.hpp>

#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qlie {

void YElem::add(const TWord& w, const Rat& c) {
  if (sgn(c) == 0) return;
  auto it = t.emplace(w, Rat(0)).first;
  it->second += c;
  if (sgn(it->second) == 0) t.erase(it);
}

YElem operator+(const YElem& a, const YElem& b) {
  YElem r = a;
  for (const auto& [w, c] : b.t) r.add(w, c);
  return r;
}

YElem operator-(const YElem& a, const YElem& b) {
  YElem r = a;
  for (const auto& [w, c] : b.t) r.add(w, -c);
  return r;
}

YElem operator*(const Rat& s, const YElem& a) {
  YElem r;
  if (sgn(s) == 0) return r;
  for (const auto& [w, c] : a.t) r.t.emplace(w, s * c);
  return r;
}

YElem operator*(const YElem& a, const YElem& b) {
  YElem r;
  for (const auto& [wa, ca] : a.t)
    for (const auto& [wb, cb] : b.t) {
      TWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add(w, ca * cb);
    }
  return r;
}

namespace {

int gen_level(TGen g) { return (int)(g >> 8); }

int word_level(const TWord& w) {
  int s = 0;
  for (TGen g : w) s += gen_level(g);
  return s;
}

int pm(int e) { return (e & 1) ? -1 : 1; }

int ip(int idx) { return idx < 0 ? 1 : 0; }  // parity of a signed index

}  // namespace

int YElem::total_level() const {
  int m = 0;
  for (const auto& [w, c] : t) m = std::max(m, word_level(w));
  return m;
}

YElem yzero() { return {}; }

YElem yone() {
  YElem r;
  r.t.emplace(TWord{}, Rat(1));
  return r;
}

Engine::Engine(int n, bool memoize) : n_(n), memo_(memoize) {
  if (n < 1 || n > 2)
    throw std::runtime_error("engine: rank " + std::to_string(n) +
                             " not supported (derived-commutator recursion is gated to n <= 2)");
}

TGen Engine::pack(int m, int i, int j) const {
  assert(m >= 1 && i >= 1 && i <= n_ && j != 0 && j >= -n_ && j <= n_);
  int cidx = j > 0 ? j - 1 : n_ + (-j) - 1;
  return ((TGen)m << 8) | ((TGen)(i - 1) << 4) | (TGen)cidx;
}

std::pair<TGen, int> Engine::canon(int m, int i, int j) const {
  int sg = 1;
  if (i < 0) {
    i = -i;
    j = -j;
    sg = pm(m);
  }
  return {pack(m, i, j), sg};
}

int Engine::col(TGen g) const {
  int cidx = (int)(g & 0xF);
  return cidx < n_ ? cidx + 1 : -(cidx - n_ + 1);
}

std::string Engine::gen_str(TGen g) const {
  return "t[" + std::to_string(level(g)) + ";" + std::to_string(row(g)) + "," +
         std::to_string(col(g)) + "]";
}

std::string Engine::str(const YElem& e) const {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : e.t) {
    Rat a = c;
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    std::string term;
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

YElem Engine::tmode(int m, int i, int j) const {
  if (m < 0) return {};
  if (m == 0) return i == j ? yone() : yzero();
  auto [g, sg] = canon(m, i, j);
  YElem r;
  r.t.emplace(TWord{g}, Rat(sg));
  return r;
}

// ([t^{m+1}_{i,j}, t^{r-1}_{k,l}] - [t^{m-1}_{i,j}, t^{r+1}_{k,l}]) * s equals
// this product block; levels below zero vanish, level zero is the delta scalar.
YElem Engine::rhs_products(int m, int r, int i, int j, int k, int l) const {
  YElem p = tmode(m, k, j) * tmode(r - 1, i, l) + tmode(m - 1, k, j) * tmode(r, i, l) -
            tmode(r - 1, k, j) * tmode(m, i, l) - tmode(r, k, j) * tmode(m - 1, i, l);
  YElem q = Rat(-1) * (tmode(m, -k, j) * tmode(r - 1, -i, l)) +
            tmode(m - 1, -k, j) * tmode(r, -i, l) + tmode(r - 1, k, -j) * tmode(m, i, -l) -
            tmode(r, k, -j) * tmode(m - 1, i, -l);
  return p + Rat(pm(ip(k) + ip(l))) * q;
}

// the extension of the product block to m = 0 (with t^{-1} := 0), which pins
// [t^1, t^b]; the series form reproduces exactly this instance at its boundary
// coefficients
YElem Engine::boundary_first(TGen a1, TGen b) const {
  assert(level(a1) == 1);
  int i = row(a1), j = col(a1), k = row(b), l = col(b), bl = level(b);
  int s = pm(ip(i) * ip(k) + ip(i) * ip(l) + ip(k) * ip(l));
  YElem r;
  if (k == j) r = r + tmode(bl, i, l);
  if (i == l) r = r - tmode(bl, k, j);
  int sg = pm(ip(k) + ip(l));
  if (-k == j) r = r - Rat(sg) * tmode(bl, -i, l);
  if (i == -l) r = r + Rat(sg) * tmode(bl, k, -j);
  return Rat(s) * r;
}

// the mirror extension at r = 0, pinning [t^a, t^1]; computed only to be
// cross-checked against the walk that uses boundary_first
YElem Engine::boundary_second(TGen a, TGen b1) const {
  assert(level(b1) == 1);
  int i = row(a), j = col(a), k = row(b1), l = col(b1), al = level(a);
  int s = pm(ip(i) * ip(k) + ip(i) * ip(l) + ip(k) * ip(l));
  YElem r;
  if (k == j) r = r + tmode(al, i, l);
  if (i == l) r = r - tmode(al, k, j);
  int sg = pm(ip(k) + ip(l));
  if (-i == l) r = r - Rat(sg) * tmode(al, -k, j);
  if (k == -j) r = r + Rat(sg) * tmode(al, i, -l);
  return Rat(s) * r;
}

YElem Engine::comm_walk(TGen a, TGen b) {
  ++stats_.comm_walks;
  int i = row(a), j = col(a), k = row(b), l = col(b);
  int s = pm(ip(i) * ip(k) + ip(i) * ip(l) + ip(k) * ip(l));
  int m1 = level(a), m2 = level(b);
  YElem acc;
  while (m1 >= 2) {
    acc = acc + Rat(s) * rhs_products(m1 - 1, m2 + 1, i, j, k, l);
    m1 -= 2;
    m2 += 2;
  }
  if (m1 == 1) acc = acc + boundary_first(pack(1, i, j), pack(m2, k, l));
  return normalize(acc);
}

YElem Engine::comm(TGen a, TGen b) {
  std::uint64_t key = ((std::uint64_t)a << 32) | b;
  if (memo_) {
    auto it = cache_.find(key);
    if (it != cache_.end()) {
      ++stats_.cache_hits;
      return it->second;
    }
  }
  YElem r = comm_walk(a, b);
  if (memo_) cache_.emplace(key, r);
  return r;
}

YElem Engine::comm(const YElem& a, const YElem& b) {
  // parity of a homogeneous element under this engine's rank
  auto par = [&](const YElem& e) -> int {
    std::optional<int> p;
    for (const auto& [w, c] : e.t) {
      int wp = 0;
      for (TGen g : w) wp ^= parity(g);
      if (p && *p != wp) throw std::runtime_error("engine: commutator of parity-mixed element");
      p = wp;
    }
    return p.value_or(0);
  };
  int sg = (par(a) && par(b)) ? -1 : 1;
  return normalize(a * b - Rat(sg) * (b * a));
}

namespace {

#ifndef NDEBUG
long word_inversions(const TWord& w) {
  long inv = 0;
  for (size_t x = 0; x < w.size(); ++x)
    for (size_t y = x + 1; y < w.size(); ++y)
      if (w[x] > w[y]) ++inv;
  return inv;
}
#endif

}  // namespace

YElem Engine::normalize(const YElem& x) {
  YElem out;
  std::map<TWord, Rat> agenda = x.t;
  while (!agenda.empty()) {
    auto it = agenda.begin();
    TWord w = it->first;
    Rat c = it->second;
    agenda.erase(it);
    if (sgn(c) == 0) continue;

    size_t pos = w.size();
    bool square = false;
    for (size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] > w[p + 1]) {
        pos = p;
        break;
      }
      if (w[p] == w[p + 1] && parity(w[p])) {
        pos = p;
        square = true;
        break;
      }
    }
    if (pos == w.size()) {
      out.add(w, c);
      continue;
    }

    ++stats_.rewrites;
#ifndef NDEBUG
    const int lvl0 = word_level(w);
    const long inv0 = word_inversions(w);
#endif
    TWord pre(w.begin(), w.begin() + pos), post(w.begin() + pos + 2, w.end());
    auto splice = [&](const YElem& mid, const Rat& scale) {
      for (const auto& [mw, mc] : mid.t) {
        TWord nw = pre;
        nw.insert(nw.end(), mw.begin(), mw.end());
        nw.insert(nw.end(), post.begin(), post.end());
        assert(word_level(nw) < lvl0);
        auto jt = agenda.emplace(std::move(nw), Rat(0)).first;
        jt->second += scale * mc;
        if (sgn(jt->second) == 0) agenda.erase(jt);
      }
    };
    if (square) {
      splice(comm(w[pos], w[pos]), c / 2);
    } else {
      int sg = (parity(w[pos]) && parity(w[pos + 1])) ? -1 : 1;
      TWord sw = w;
      std::swap(sw[pos], sw[pos + 1]);
      assert(word_level(sw) == lvl0 && word_inversions(sw) < inv0);
      auto jt = agenda.emplace(std::move(sw), Rat(0)).first;
      jt->second += Rat(sg) * c;
      if (sgn(jt->second) == 0) agenda.erase(jt);
      splice(comm(w[pos], w[pos + 1]), c);
    }
  }
  return out;
}

std::string Engine::cache_dump() const {
  nlohmann::ordered_json j;
  j["version"] = "engine-v1";
  j["n"] = n_;
  nlohmann::ordered_json entries = nlohmann::ordered_json::object();
  for (const auto& [key, val] : cache_) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [w, c] : val.t)
      terms.push_back({nlohmann::ordered_json(w), rat_str(c)});
    entries[std::to_string(key)] = std::move(terms);
  }
  j["entries"] = std::move(entries);
  return j.dump(1);
}

void Engine::cache_load(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("version") != "engine-v1" || (int)j.at("n") != n_)
    throw std::runtime_error("engine: cache version/rank mismatch");
  for (const auto& [key, terms] : j.at("entries").items()) {
    YElem e;
    for (const auto& t : terms) {
      TWord w = t.at(0).get<std::vector<std::uint32_t>>();
      e.t.emplace(std::move(w), rat_parse(t.at(1).get<std::string>()));
    }
    cache_[std::stoull(key)] = std::move(e);
  }
}

// ---- checks -----------------------------------------------------------------

namespace {

std::vector<TGen> canonical_gens(const Engine& eng, int max_level) {
  std::vector<TGen> out;
  for (int m = 1; m <= max_level; ++m)
    for (int i = 1; i <= eng.rank(); ++i)
      for (int cidx = 0; cidx < 2 * eng.rank(); ++cidx) {
        int j = cidx < eng.rank() ? cidx + 1 : -(cidx - eng.rank() + 1);
        out.push_back(eng.pack(m, i, j));
      }
  return out;
}

std::string pair_id(const Engine& eng, TGen a, TGen b) {
  return eng.gen_str(a) + "," + eng.gen_str(b);
}

}  // namespace

Report boundary_consistency_check(Engine& eng, int max_level) {
  Report rep;
  rep.config["check"] = "boundary-consistency";
  rep.config["n"] = std::to_string(eng.rank());
  for (TGen a : canonical_gens(eng, max_level))
    for (TGen b : canonical_gens(eng, 1)) {
      YElem walk = eng.comm(a, b);
      YElem direct = eng.normalize(eng.boundary_second(a, b));
      YElem d = walk - direct;
      std::string id = "bcc:" + pair_id(eng, a, b);
      if (d.is_zero())
        rep.pass(id, "ny:modes");
      else
        rep.discrepancy(id, "ny:modes", eng.str(d), "", "walk vs second-slot boundary");
    }
  return rep;
}

Report antisymmetry_check(Engine& eng, int max_total) {
  Report rep;
  rep.config["check"] = "antisymmetry";
  rep.config["n"] = std::to_string(eng.rank());
  auto gens = canonical_gens(eng, max_total - 1);
  for (TGen a : gens)
    for (TGen b : gens) {
      if (eng.level(a) + eng.level(b) > max_total) continue;
      int sg = (eng.parity(a) && eng.parity(b)) ? -1 : 1;
      YElem d = eng.comm(a, b) + Rat(sg) * eng.comm(b, a);
      std::string id = "anti:" + pair_id(eng, a, b);
      if (d.is_zero())
        rep.pass(id, "ny:modes");
      else
        rep.fail(id, "ny:modes", eng.str(d));
    }
  return rep;
}

Report jacobi_check(Engine& eng, int max_total) {
  Report rep;
  rep.config["check"] = "jacobi";
  rep.config["n"] = std::to_string(eng.rank());
  auto gens = canonical_gens(eng, max_total - 2);
  auto one = [&](TGen g) {
    YElem e;
    e.t.emplace(TWord{g}, Rat(1));
    return e;
  };
  long count = 0;
  for (TGen x : gens)
    for (TGen y : gens)
      for (TGen z : gens) {
        if (eng.level(x) + eng.level(y) + eng.level(z) > max_total) continue;
        ++count;
        int sg = (eng.parity(x) && eng.parity(y)) ? -1 : 1;
        YElem r = eng.comm(one(x), eng.comm(y, z)) - eng.comm(eng.comm(x, y), one(z)) -
                  Rat(sg) * eng.comm(one(y), eng.comm(x, z));
        std::string id =
            "jac:" + eng.gen_str(x) + "," + eng.gen_str(y) + "," + eng.gen_str(z);
        if (r.is_zero())
          rep.pass(id, "ny:modes");
        else
          rep.fail(id, "ny:modes", eng.str(r));
      }
  rep.numbers["triples"] = count;
  return rep;
}

Report explicit_display_check(Engine& eng, int max_mk) {
  Report rep;
  rep.config["check"] = "explicit-displays";
  rep.config["n"] = std::to_string(eng.rank());
  auto cm = [&](const YElem& a, const YElem& b) { return eng.comm(a, b); };
  long corrected = 0;
  // Each stated closed form is checked verbatim.  When it fails, the repaired
  // closed form — sum range m-1 -> m (restoring the degenerate t^0 terms), the
  // reversed product in the alternating sum taken with +, and in the mixed
  // family the parity placements transposed back — is checked as the corrected
  // candidate; it is emitted only if its own residual normalizes to zero.
  auto verdict = [&](const std::string& id, const std::string& anchor, const YElem& lhs,
                     const YElem& stated, const YElem& fixed, const std::string& note) {
    YElem d = eng.normalize(lhs - stated);
    if (d.is_zero()) {
      rep.pass(id, anchor);
      return;
    }
    YElem df = eng.normalize(lhs - fixed);
    if (df.is_zero()) {
      ++corrected;
      rep.discrepancy(id, anchor, eng.str(d), eng.str(fixed) + " = commutator", note);
    } else {
      rep.fail(id, anchor, eng.str(d), "no corrected closed form found");
    }
  };
  for (int m = 1; m <= max_mk; ++m)
    for (int k = 1; k <= max_mk; ++k) {
      Rat ekm(pm(k + m));
      std::string mk = std::to_string(m) + "," + std::to_string(k);
      // odd-odd row
      {
        YElem lhs = cm(eng.tmode(m, -1, 1), eng.tmode(k, -1, 1));
        YElem stated, fixed;
        for (int r = 1; r <= m; ++r) {
          Rat sr(pm(r));
          YElem p1 = eng.tmode(k + r - 1, -1, 1) * eng.tmode(m - r, -1, 1) -
                     eng.tmode(m - r, -1, 1) * eng.tmode(k + r - 1, -1, 1);
          YElem q1 = ekm * (eng.tmode(k + r - 1, 1, 1) * eng.tmode(m - r, 1, 1));
          YElem q2 = eng.tmode(m - r, 1, 1) * eng.tmode(k + r - 1, 1, 1);
          if (r <= m - 1) stated = stated + p1 + sr * (q1 - q2);
          fixed = fixed + p1 + sr * (q1 + q2);
        }
        verdict("ex-oo:" + mk, "ny:ex1", lhs, stated, fixed,
                "degenerate t^0 terms restored; reversed-product sign flipped");
      }
      // even-even row
      {
        YElem lhs = cm(eng.tmode(m, 1, 1), eng.tmode(k, 1, 1));
        YElem stated, fixed;
        for (int r = 1; r <= m; ++r) {
          Rat sr(pm(r));
          YElem p1 = eng.tmode(k + r - 1, 1, 1) * eng.tmode(m - r, 1, 1) -
                     eng.tmode(m - r, 1, 1) * eng.tmode(k + r - 1, 1, 1);
          YElem q1 = ekm * (eng.tmode(k + r - 1, -1, 1) * eng.tmode(m - r, -1, 1));
          YElem q2 = eng.tmode(m - r, -1, 1) * eng.tmode(k + r - 1, -1, 1);
          if (r <= m - 1) stated = stated - p1 + sr * (q1 - q2);
          fixed = fixed - p1 + sr * (q1 + q2);
        }
        verdict("ex-ee:" + mk, "ny:ex2", lhs, stated, fixed,
                "degenerate t^0 terms restored; reversed-product sign flipped");
      }
      // mixed row
      {
        YElem lhs = cm(eng.tmode(m, 1, 1), eng.tmode(k, -1, 1));
        YElem stated, fixed;
        for (int r = 1; r <= m; ++r) {
          Rat sr(pm(r));
          if (r <= m - 1) {
            stated = stated + eng.tmode(k + r - 1, 1, 1) * eng.tmode(m - r, -1, 1) -
                     eng.tmode(m - r, 1, 1) * eng.tmode(k + r - 1, 1, 1);
            stated = stated +
                     sr * (ekm * (eng.tmode(k + r - 1, -1, 1) * eng.tmode(m - r, 1, 1)) -
                           eng.tmode(m - r, -1, 1) * eng.tmode(k + r - 1, 1, 1));
          }
          fixed = fixed + eng.tmode(m - r, -1, 1) * eng.tmode(k + r - 1, 1, 1) -
                  eng.tmode(k + r - 1, -1, 1) * eng.tmode(m - r, 1, 1);
          fixed = fixed - sr * (ekm * (eng.tmode(k + r - 1, 1, 1) * eng.tmode(m - r, -1, 1)) +
                                eng.tmode(m - r, 1, 1) * eng.tmode(k + r - 1, -1, 1));
        }
        verdict("ex-eo:" + mk, "ny:ex3", lhs, stated, fixed,
                "parity placements repaired; degenerate t^0 terms restored; "
                "reversed-product sign flipped");
      }
    }
  rep.numbers["corrected-pass"] = corrected;
  return rep;
}

Report lemma_comt_check(Engine& eng, int max_sum) {
  Report rep;
  rep.config["check"] = "lemma-comt";
  rep.config["n"] = std::to_string(eng.rank());
  for (int k = 1; k <= max_sum - 1; ++k)
    for (int r = 1; k + r <= max_sum; ++r) {
      YElem d = eng.comm(eng.pack(2 * k, 1, 1), eng.pack(2 * r, 1, 1));
      std::string id = "comt:" + std::to_string(k) + "," + std::to_string(r);
      if (d.is_zero())
        rep.pass(id, "ny:comt");
      else
        rep.fail(id, "ny:comt", eng.str(d));
    }
  return rep;
}

std::vector<TWord> basis_words(const Engine& eng, int max_total) {
  std::vector<TGen> gens = canonical_gens(eng, max_total);
  std::vector<TWord> out;
  TWord cur;
  // words are nondecreasing in the generator order with no repeated odd
  // generator, i.e. exactly the normal-form basis
  std::function<void(size_t, int)> rec = [&](size_t start, int budget) {
    out.push_back(cur);
    for (size_t g = start; g < gens.size(); ++g) {
      int lv = eng.level(gens[g]);
      if (lv > budget) continue;
      if (!cur.empty() && cur.back() == gens[g] && eng.parity(gens[g])) continue;
      cur.push_back(gens[g]);
      rec(g, budget - lv);
      cur.pop_back();
    }
  };
  rec(0, max_total);
  return out;
}

std::optional<IdealCert> ideal_membership(Engine& eng, const YElem& x,
                                          const std::vector<YElem>& gens, int degree) {
  YElem xn = eng.normalize(x);
  if (xn.total_level() > degree)
    throw std::runtime_error("ideal_membership: element exceeds the degree bound");
  RowSpaceCert<TWord> rs;
  struct Slot {
    int gen;
    TWord left, right;
  };
  std::vector<Slot> slots;
  auto words = basis_words(eng, degree);
  auto wordelem = [](const TWord& w) {
    YElem e;
    e.t.emplace(w, Rat(1));
    return e;
  };
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    YElem g = eng.normalize(gens[gi]);
    int lg = g.total_level();
    for (const auto& w1 : words) {
      int l1 = 0;
      for (TGen t : w1) l1 += eng.level(t);
      if (l1 + lg > degree) continue;
      for (const auto& w2 : words) {
        int l2 = 0;
        for (TGen t : w2) l2 += eng.level(t);
        if (l1 + lg + l2 > degree) continue;
        YElem prod = eng.normalize(wordelem(w1) * g * wordelem(w2));
        if (prod.is_zero()) continue;
        if (rs.add(prod.t) >= 0) slots.push_back({(int)gi, w1, w2});
      }
    }
  }
  auto cert = rs.member_cert(xn.t);
  if (!cert) return std::nullopt;
  IdealCert out;
  for (const auto& [id, c] : *cert) {
    const Slot& s = slots[(size_t)id];
    out.pieces.push_back({s.gen, s.left, s.right, c});
  }
  return out;
}

}  // namespace qlie
