#include "qinv3/sl2z.hpp"

#include "qinv3/error.hpp"

#include <cmath>
#include <cstdlib>

namespace qinv3 {

int ModularData::charge_conjugate(int i) const {
  // (g, chi) -> (g^-1, conj chi); stored by dg_modular_data in the S^2 pattern
  for (int j = 0; j < dim(); ++j)
    if (!(S * S).at(i, j).is_zero()) return j;
  return i;
}

namespace {

CycloMatrix charge_matrix(const GroupTable& g, const CharacterTable& ch) {
  const int n = g.order(), N = ch.root_order;
  CycloMatrix c(n * n, N);
  for (int x = 0; x < n; ++x)
    for (int chi = 0; chi < n; ++chi) {
      int dual = -1;
      for (int psi = 0; psi < n && dual < 0; ++psi) {
        bool ok = true;
        for (int h = 0; h < n && ok; ++h) ok = (ch.exponent(chi, h) + ch.exponent(psi, h)) % N == 0;
        if (ok) dual = psi;
      }
      c.at(x * n + chi, g.inv(x) * n + dual) = Cyclotomic(N, Rational(1));
    }
  return c;
}

CycloMatrix transpose(const CycloMatrix& m) {
  CycloMatrix out(m.dim(), m.field_order());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out.at(j, i) = m.at(i, j);
  return out;
}

CycloMatrix power(const CycloMatrix& m, int k) {
  CycloMatrix out = CycloMatrix::identity(m.dim(), m.field_order());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

// m * T^p, scaling columns
void right_multiply_t(CycloMatrix& m, const ModularData& md, long long p) {
  const int N = md.T.field_order();
  for (int j = 0; j < md.dim(); ++j) {
    long long e = (static_cast<long long>(md.t_exponent[j]) * (p % N)) % N;
    if (e == 0) continue;
    Cyclotomic z = Cyclotomic::root(N, e);
    for (int i = 0; i < md.dim(); ++i)
      if (!m.at(i, j).is_zero()) m.at(i, j) = m.at(i, j) * z;
  }
}

CycloMatrix charge_from(const ModularData& md) { return md.S * md.S; }

}  // namespace

ValidationReport validate_modular_data(const ModularData& md) {
  ValidationReport r;
  const int d = md.dim(), N = md.S.field_order();
  const CycloMatrix id = CycloMatrix::identity(d, N);
  const CycloMatrix s2 = md.S * md.S;
  auto first_diff = [&](const CycloMatrix& x, const CycloMatrix& y) -> std::string {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (!(x.at(i, j) == y.at(i, j))) return "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
    return "";
  };
  auto add = [&](std::string name, const CycloMatrix& x, const CycloMatrix& y) {
    std::string w = first_diff(x, y);
    r.checks.push_back({std::move(name), w.empty(), w});
  };
  add("S-symmetric", md.S, transpose(md.S));
  add("S-unitary", md.S * md.S.conj_transpose(), id);
  bool perm = true;
  for (int i = 0; i < d && perm; ++i) {
    int ones = 0;
    for (int j = 0; j < d; ++j) {
      const Cyclotomic& e = s2.at(i, j);
      if (e.is_zero()) continue;
      if (e == Cyclotomic(N, Rational(1)))
        ++ones;
      else
        perm = false;
    }
    perm = perm && ones == 1;
  }
  r.checks.push_back({"S2-charge-conjugation", perm, perm ? "" : "S^2 is not a permutation matrix"});
  add("S4-identity", s2 * s2, id);
  CycloMatrix st = md.S * md.T;
  add("ST3-equals-S2", st * st * st, s2);
  bool diag = true;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j && !md.T.at(i, j).is_zero()) diag = false;
  r.checks.push_back({"T-diagonal", diag, diag ? "" : "off-diagonal T entry"});
  return r;
}

ModularData dg_modular_data(const GroupTable& g) {
  if (!g.is_abelian()) throw SpecError("dg_modular_data: group '" + g.name() + "' is not abelian");
  const CharacterTable ch = characters_abelian(g);
  const int n = g.order(), N = ch.root_order, d = n * n;
  ModularData md;
  md.group_order = n;
  md.S = CycloMatrix(d, N);
  md.T = CycloMatrix(d, N);
  md.t_exponent.assign(static_cast<std::size_t>(d), 0);
  const Rational inv_n(1, n);
  for (int x = 0; x < n; ++x)
    for (int chi = 0; chi < n; ++chi) {
      const int i = x * n + chi;
      md.simples.emplace_back(x, chi);
      md.t_exponent[i] = ch.exponent(chi, x);
      md.T.at(i, i) = Cyclotomic::root(N, md.t_exponent[i]);
      for (int y = 0; y < n; ++y)
        for (int psi = 0; psi < n; ++psi) {
          int e = ch.exponent(chi, y) + ch.exponent(psi, x);
          md.S.at(i, y * n + psi) = Cyclotomic::root(N, -e) * inv_n;
        }
    }
  ValidationReport r = validate_modular_data(md);
  if (!r.passed()) throw IntegrityError("modular data for '" + g.name() + "' fails:\n" + r.to_string());
  if (!(charge_from(md) == charge_matrix(g, ch)))
    throw IntegrityError("modular data for '" + g.name() + "': S^2 is not charge conjugation");
  return md;
}

Mat2 STWord::matrix() const {
  Mat2 m;
  for (const auto& s : syllables) {
    if (s.letter == 'S') {
      for (long long i = 0; i < s.power; ++i) m = m * Mat2::S();
    } else {
      m = m * Mat2{1, s.power, 0, 1};
    }
  }
  return m;
}

std::string STWord::to_string() const {
  if (syllables.empty()) return "1";
  std::string out;
  for (const auto& s : syllables) {
    if (!out.empty()) out += ' ';
    out += s.letter;
    if (s.power != 1) out += "^" + std::to_string(s.power);
  }
  return out;
}

STWord st_decompose(const Mat2& a) {
  if (a.det() != 1) throw SpecError("st_decompose: determinant of " + a.to_string() + " is " + std::to_string(a.det()));
  // A = T^q1 S T^q2 S ... M with M upper triangular
  STWord w;
  auto push = [&](char letter, long long p) {
    if (p == 0) return;
    if (!w.syllables.empty() && w.syllables.back().letter == letter) {
      w.syllables.back().power += p;
      if (w.syllables.back().power == 0) w.syllables.pop_back();
    } else {
      w.syllables.push_back({letter, p});
    }
  };
  Mat2 m = a;
  while (m.c != 0) {
    // nearest-integer quotient keeps |a - q c| <= |c| / 2
    long long q = m.a / m.c;
    long long r = m.a - q * m.c;
    if (2 * std::llabs(r) > std::llabs(m.c)) {
      long long step = ((r < 0) == (m.c < 0)) ? 1 : -1;
      q += step;
    }
    m = Mat2{m.a - q * m.c, m.b - q * m.d, m.c, m.d};
    push('T', q);
    // m = S * m', m' = S^-1 m
    m = Mat2{m.c, m.d, -m.a, -m.b};
    push('S', 1);
  }
  if (m.a == 1) {
    push('T', m.b);
  } else {
    // m = -[[1, -b], [0, 1]] = S^2 T^-b
    push('S', 2);
    push('T', -m.b);
  }
  // fold S^3 -> S^-1 is not needed; keep S powers 1 or 2 by splitting
  STWord out;
  for (const auto& s : w.syllables) {
    if (s.letter == 'S') {
      long long p = ((s.power % 4) + 4) % 4;
      if (p == 3) {
        out.syllables.push_back({'S', 2});
        out.syllables.push_back({'S', 1});
      } else if (p != 0) {
        out.syllables.push_back({'S', p});
      }
    } else {
      out.syllables.push_back(s);
    }
  }
  if (!(out.matrix() == a)) throw IntegrityError("st_decompose: product check failed for " + a.to_string());
  return out;
}

CycloMatrix torus_representation(const Mat2& a, const ModularData& md) {
  const STWord w = st_decompose(a);
  CycloMatrix m = CycloMatrix::identity(md.dim(), md.S.field_order());
  for (const auto& s : w.syllables) {
    if (s.letter == 'S')
      m = m * power(md.S, static_cast<int>(s.power));
    else
      right_multiply_t(m, md, s.power);
  }
  return m;
}

Scalar tv_trace(const Mat2& a, const ModularData& md) {
  Cyclotomic t = torus_representation(a, md).trace();
  if (t.is_rational()) return Scalar(t.rational_part());
  return Scalar::real(t.to_complex().real());
}

Scalar tv_trace(const Mat2& a, const GroupTable& g) { return tv_trace(a, dg_modular_data(g)); }

}  // namespace qinv3
