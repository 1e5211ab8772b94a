#include "garnier/poly.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "garnier/errors.hpp"
#include "garnier/memguard.hpp"

namespace garnier {

namespace {

struct GrlexGreater {
  bool operator()(const Monomial &a, const Monomial &b) const {
    return grlex_cmp(a, b) > 0;
  }
};

mpz_class num_z(const Rational &r) { return r.get_num(); }
mpz_class den_z(const Rational &r) { return r.get_den(); }

} // namespace

Poly Poly::constant(Rational c) {
  Poly p;
  if (c != 0)
    p.terms_.push_back({Monomial::one(), std::move(c)});
  return p;
}

Poly Poly::variable(int v, std::uint32_t power) {
  Poly p;
  if (power == 0)
    return constant(1);
  p.terms_.push_back({Monomial::unit(v, power), Rational(1)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) {
    return grlex_cmp(a.m, b.m) > 0;
  });
  Poly p;
  p.terms_.reserve(terms.size());
  for (auto &t : terms) {
    if (t.c == 0)
      continue;
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
      if (p.terms_.back().c == 0)
        p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

std::uint64_t Poly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().m.degree();
}

std::uint32_t Poly::degree_in(int v) const {
  std::uint32_t d = 0;
  for (const auto &t : terms_)
    d = std::max(d, t.m.e[v]);
  return d;
}

std::uint32_t Poly::min_degree_in(int v) const {
  if (terms_.empty())
    return 0;
  std::uint32_t d = terms_.front().m.e[v];
  for (const auto &t : terms_)
    d = std::min(d, t.m.e[v]);
  return d;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto &t : r.terms_)
    t.c = -t.c;
  return r;
}

namespace {
// Merge of two descending term lists with coefficient combine.
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term> &a,
                                    const std::vector<Poly::Term> &b,
                                    bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int cmp = grlex_cmp(a[i].m, b[j].m);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(b[j]);
      if (subtract)
        out.back().c = -out.back().c;
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].c - b[j].c) : Rational(a[i].c + b[j].c);
      if (c != 0)
        out.push_back({a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i)
    out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (subtract)
      out.back().c = -out.back().c;
  }
  return out;
}
} // namespace

Poly &Poly::operator+=(const Poly &o) {
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly &Poly::operator-=(const Poly &o) {
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly operator+(const Poly &a, const Poly &b) {
  Poly r;
  r.terms_ = merge_terms(a.terms_, b.terms_, false);
  return r;
}

Poly operator-(const Poly &a, const Poly &b) {
  Poly r;
  r.terms_ = merge_terms(a.terms_, b.terms_, true);
  return r;
}

Poly Poly::times_term(const Monomial &m, const Rational &c) const {
  Poly r;
  if (c == 0)
    return r;
  r.terms_.reserve(terms_.size());
  for (const auto &t : terms_)
    r.terms_.push_back({t.m * m, t.c * c});
  return r;
}

Poly operator*(const Poly &a, const Poly &b) {
  if (a.is_zero() || b.is_zero())
    return Poly();
  if (a.terms_.size() == 1)
    return b.times_term(a.terms_[0].m, a.terms_[0].c);
  if (b.terms_.size() == 1)
    return a.times_term(b.terms_[0].m, b.terms_[0].c);

  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.terms_.size() + b.terms_.size());
  for (const auto &ta : a.terms_) {
    for (const auto &tb : b.terms_) {
      memguard::tick();
      acc[ta.m * tb.m] += ta.c * tb.c;
    }
  }
  std::vector<Poly::Term> out;
  out.reserve(acc.size());
  for (auto &kv : acc)
    if (kv.second != 0)
      out.push_back({kv.first, std::move(kv.second)});
  std::sort(out.begin(), out.end(), [](const Poly::Term &x, const Poly::Term &y) {
    return grlex_cmp(x.m, y.m) > 0;
  });
  Poly r;
  r.terms_ = std::move(out);
  return r;
}

void Poly::scale(const Rational &c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto &t : terms_)
    t.c *= c;
}

Poly Poly::pow(std::uint32_t e) const {
  Poly acc = Poly::constant(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1)
      acc = acc * base;
    base = (e >>= 1) ? base * base : base;
  }
  return acc;
}

Poly Poly::derivative(int v) const {
  Poly r;
  r.terms_.reserve(terms_.size());
  for (const auto &t : terms_) {
    const std::uint32_t e = t.m.e[v];
    if (e == 0)
      continue;
    Monomial m = t.m;
    m.e[v] = e - 1;
    r.terms_.push_back({m, t.c * e});
  }
  // Every kept term loses exactly one from the same exponent slot, which
  // preserves descending grlex order.
  return r;
}

Rational Poly::eval(const std::array<Rational, kNumVars> &x) const {
  std::array<std::vector<Rational>, kNumVars> pows;
  auto power = [&](int v, std::uint32_t e) -> const Rational & {
    auto &tab = pows[v];
    if (tab.empty())
      tab.push_back(Rational(1));
    while (tab.size() <= e)
      tab.push_back(tab.back() * x[v]);
    return tab[e];
  };
  Rational sum(0);
  for (const auto &t : terms_) {
    Rational prod = t.c;
    for (int v = 0; v < kNumVars; ++v)
      if (t.m.e[v])
        prod *= power(v, t.m.e[v]);
    sum += prod;
  }
  return sum;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty())
    return Monomial::one();
  Monomial m = terms_.front().m;
  for (const auto &t : terms_)
    for (int i = 0; i < kNumVars; ++i)
      m.e[i] = std::min(m.e[i], t.m.e[i]);
  return m;
}

Poly Poly::deflate(const Monomial &m) const {
  Poly r;
  r.terms_.reserve(terms_.size());
  for (const auto &t : terms_)
    r.terms_.push_back({m.divide_into(t.m), t.c});
  return r;
}

Rational Poly::content() const {
  if (terms_.empty())
    return Rational(1);
  mpz_class L = 1, G = 0;
  for (const auto &t : terms_)
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), den_z(t.c).get_mpz_t());
  for (const auto &t : terms_) {
    mpz_class n = num_z(t.c) * (L / den_z(t.c));
    mpz_gcd(G.get_mpz_t(), G.get_mpz_t(), n.get_mpz_t());
    if (G == 1 && L == 1)
      break;
  }
  Rational c(G, L);
  c.canonicalize();
  return c;
}

Poly Poly::divide_by_rational(const Rational &c) const {
  if (c == 0)
    throw DivisionByZeroError("polynomial scaled by 1/0");
  Poly r(*this);
  Rational inv(c.get_den(), c.get_num());
  inv.canonicalize();
  r.scale(inv);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b) {
  if (b.is_zero())
    throw DivisionByZeroError("polynomial division by zero");
  std::map<Monomial, Rational, GrlexGreater> rest;
  for (const auto &t : a.terms())
    rest.emplace(t.m, t.c);
  const auto &lb = b.leading();
  std::vector<Poly::Term> quot, rem;
  while (!rest.empty()) {
    memguard::tick();
    auto it = rest.begin();
    if (lb.m.divides(it->first)) {
      Monomial qm = lb.m.divide_into(it->first);
      Rational qc = it->second / lb.c;
      quot.push_back({qm, qc});
      for (const auto &t : b.terms()) {
        auto [pos, inserted] = rest.emplace(qm * t.m, 0);
        pos->second -= qc * t.c;
        if (pos->second == 0)
          rest.erase(pos);
      }
    } else {
      rem.push_back({it->first, it->second});
      rest.erase(it);
    }
  }
  Poly q = Poly::from_terms(std::move(quot));
  Poly r = Poly::from_terms(std::move(rem));
  return {std::move(q), std::move(r)};
}

std::optional<Poly> try_divide(const Poly &a, const Poly &b) {
  if (b.is_zero())
    return std::nullopt;
  if (a.is_zero())
    return Poly();
  std::map<Monomial, Rational, GrlexGreater> rest;
  for (const auto &t : a.terms())
    rest.emplace(t.m, t.c);
  const auto &lb = b.leading();
  std::vector<Poly::Term> quot;
  while (!rest.empty()) {
    memguard::tick();
    auto it = rest.begin();
    if (!lb.m.divides(it->first))
      return std::nullopt; // a multiple of b never strands a leading term
    Monomial qm = lb.m.divide_into(it->first);
    Rational qc = it->second / lb.c;
    quot.push_back({qm, qc});
    for (const auto &t : b.terms()) {
      auto [pos, inserted] = rest.emplace(qm * t.m, 0);
      pos->second -= qc * t.c;
      if (pos->second == 0)
        rest.erase(pos);
    }
  }
  return Poly::from_terms(std::move(quot));
}

namespace {

Poly make_primitive(const Poly &p) {
  if (p.is_zero())
    return p;
  Poly r = p.divide_by_rational(p.content());
  if (r.leading().c < 0)
    r.scale(Rational(-1));
  return r;
}

// Coefficient of v^k, with the v-exponent removed.
Poly coeff_of(const Poly &p, int v, std::uint32_t k) {
  std::vector<Poly::Term> ts;
  for (const auto &t : p.terms())
    if (t.m.e[v] == k) {
      Monomial m = t.m;
      m.e[v] = 0;
      ts.push_back({m, t.c});
    }
  return Poly::from_terms(std::move(ts));
}

// Content of p viewed as a univariate polynomial in v.
Poly content_in(const Poly &p, int v) {
  Poly g;
  const std::uint32_t d = p.degree_in(v);
  for (std::uint32_t k = 0; k <= d; ++k) {
    Poly c = coeff_of(p, v, k);
    if (c.is_zero())
      continue;
    g = poly_gcd(g, c);
    if (g.is_constant())
      return Poly::constant(1);
  }
  return g;
}

// One pseudo-remainder chain step: eliminates v from A against B (deg_v B
// <= deg_v A) up to a unit multiple. Content is stripped afterwards by the
// caller, so the classical lc(B)^k normalization is unnecessary.
Poly prem(Poly A, const Poly &B, int v) {
  const std::uint32_t db = B.degree_in(v);
  const Poly lb = coeff_of(B, v, db);
  while (!A.is_zero()) {
    const std::uint32_t da = A.degree_in(v);
    if (da < db)
      break;
    const Poly la = coeff_of(A, v, da);
    A = lb * A - la * Poly::variable(v, da - db) * B;
  }
  return A;
}

} // namespace

Poly poly_gcd(const Poly &a, const Poly &b) {
  if (a.is_zero())
    return make_primitive(b);
  if (b.is_zero())
    return make_primitive(a);

  const Monomial ma = a.monomial_content();
  const Monomial mb = b.monomial_content();
  Monomial mg;
  for (int i = 0; i < kNumVars; ++i)
    mg.e[i] = std::min(ma.e[i], mb.e[i]);

  Poly A = make_primitive(a.deflate(ma));
  Poly B = make_primitive(b.deflate(mb));
  const Poly mono = Poly::from_terms({{mg, Rational(1)}});

  if (A.is_constant() || B.is_constant())
    return mono;
  if (A == B)
    return mono * A;
  if (try_divide(A, B).has_value())
    return mono * B;
  if (try_divide(B, A).has_value())
    return mono * A;

  // Main variable: present in both, smallest worst-case degree.
  int v = -1;
  std::uint32_t best = 0;
  for (int i = 0; i < kNumVars; ++i) {
    const std::uint32_t da = A.degree_in(i), db = B.degree_in(i);
    if (da == 0 || db == 0)
      continue;
    const std::uint32_t w = std::min(da, db);
    if (v < 0 || w < best) {
      v = i;
      best = w;
    }
  }
  if (v < 0)
    return mono; // no shared variable, primitive parts are coprime

  const Poly contA = content_in(A, v);
  const Poly contB = content_in(B, v);
  Poly U = *try_divide(A, contA);
  Poly V = *try_divide(B, contB);
  const Poly cg = poly_gcd(contA, contB);

  if (U.degree_in(v) < V.degree_in(v))
    std::swap(U, V);
  Poly g;
  while (true) {
    memguard::tick();
    Poly R = prem(U, V, v);
    if (R.is_zero()) {
      g = V;
      break;
    }
    if (R.degree_in(v) == 0) {
      g = Poly::constant(1);
      break;
    }
    R = make_primitive(*try_divide(R, content_in(R, v)));
    U = std::move(V);
    V = std::move(R);
  }
  return make_primitive(mono * cg * g);
}

std::string Poly::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &t : terms_) {
    Rational c = t.c;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0)
        c = -c;
    }
    first = false;
    std::string vars;
    for (int v = 0; v < kNumVars; ++v) {
      if (t.m.e[v] == 0)
        continue;
      if (!vars.empty())
        vars += "*";
      vars += kVarNames[v];
      if (t.m.e[v] > 1)
        vars += "^" + std::to_string(t.m.e[v]);
    }
    if (vars.empty())
      out += garnier::to_string(c);
    else if (c == 1)
      out += vars;
    else
      out += garnier::to_string(c) + "*" + vars;
  }
  return out;
}

} // namespace garnier
