#include "csst/rm.h"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace csst {

size_t Monomial::degree() const { return std::popcount(vars); }

std::vector<int> Monomial::variables() const {
  std::vector<int> out;
  for (int i = 0; i < 32; i++) {
    if ((vars >> i) & 1) {
      out.push_back(i + 1);
    }
  }
  return out;
}

std::string Monomial::to_string() const {
  if (vars == 0) {
    return "1";
  }
  std::string s;
  for (int v : variables()) {
    s += "x" + std::to_string(v);
  }
  return s;
}

bool Monomial::operator<(const Monomial &other) const {
  if (degree() != other.degree()) {
    return degree() < other.degree();
  }
  return variables() < other.variables();
}

BitVector ev(const Monomial &f, size_t m) {
  if (m > 24) {
    throw std::invalid_argument("ev: m is too large");
  }
  size_t n = size_t{1} << m;
  BitVector v(n);
  for (size_t p = 0; p < n; p++) {
    if ((p & f.vars) == f.vars) {
      v.set(p);
    }
  }
  return v;
}

BitVector ev(const std::vector<Monomial> &f, size_t m) {
  BitVector v(size_t{1} << m);
  for (const auto &g : f) {
    v ^= ev(g, m);
  }
  return v;
}

std::vector<Monomial> monomials_of_degree(size_t d, size_t m) {
  std::vector<Monomial> out;
  for (uint32_t mask = 0; mask < (uint32_t{1} << m); mask++) {
    if (static_cast<size_t>(std::popcount(mask)) == d) {
      out.push_back({mask});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> monomials_up_to(size_t r, size_t m) {
  std::vector<Monomial> out;
  for (size_t d = 0; d <= std::min(r, m); d++) {
    auto layer = monomials_of_degree(d, m);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

BitMatrix rm_generator(size_t r, size_t m) {
  BitMatrix g(size_t{1} << m);
  for (const auto &f : monomials_up_to(r, m)) {
    g.append(ev(f, m));
  }
  return g;
}

Subspace rm_code(size_t r, size_t m) {
  return Subspace(size_t{1} << m, rm_generator(r, m).rows());
}

bool is_decreasing(const std::vector<Monomial> &set, size_t m) {
  std::set<uint32_t> members;
  for (const auto &f : set) {
    if (f.vars >> m) {
      return false;
    }
    members.insert(f.vars);
  }
  for (uint32_t g : members) {
    for (size_t i = 0; i < m; i++) {
      if (!((g >> i) & 1)) {
        continue;
      }
      // Drop x_{i+1}.
      if (!members.count(g & ~(uint32_t{1} << i))) {
        return false;
      }
      // Replace x_{i+1} by x_i when x_i is absent.
      if (i > 0 && !((g >> (i - 1)) & 1)) {
        uint32_t lower = (g & ~(uint32_t{1} << i)) | (uint32_t{1} << (i - 1));
        if (!members.count(lower)) {
          return false;
        }
      }
    }
  }
  return true;
}

Subspace decreasing_monomial_code(const std::vector<Monomial> &set, size_t m) {
  if (!is_decreasing(set, m)) {
    throw std::invalid_argument("monomial set is not decreasing");
  }
  std::vector<BitVector> rows;
  for (const auto &f : set) {
    rows.push_back(ev(f, m));
  }
  return Subspace(size_t{1} << m, rows);
}

std::vector<Monomial> dual_monomial_set(const std::vector<Monomial> &set,
                                        size_t m) {
  if (!is_decreasing(set, m)) {
    throw std::invalid_argument("monomial set is not decreasing");
  }
  std::set<uint32_t> members;
  for (const auto &f : set) {
    members.insert(f.vars);
  }
  uint32_t full = (uint32_t{1} << m) - 1;
  std::vector<Monomial> out;
  for (uint32_t g = 0; g <= full; g++) {
    if (!members.count(g)) {
      out.push_back({full & ~g});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> rm_half_monomials(size_t m) {
  if (m % 2 || m == 0) {
    throw std::invalid_argument("rm_half_monomials: m must be even");
  }
  std::vector<Monomial> out = monomials_up_to(m / 2 - 1, m);
  auto top = monomials_of_degree(m / 2, m);
  out.insert(out.end(), top.begin(), top.begin() + top.size() / 2);
  return out;
}

namespace {

std::vector<BitVector> evaluations(const std::vector<Monomial> &set,
                                   size_t m) {
  std::vector<BitVector> rows;
  for (const auto &f : set) {
    rows.push_back(ev(f, m));
  }
  return rows;
}

// CSS code from monomial sets for C2, C1^perp and the logical X rows.
CssCode monomial_css(const std::vector<Monomial> &c2,
                     const std::vector<Monomial> &c1_perp,
                     const std::vector<Monomial> &logical_x, size_t m,
                     std::string name) {
  size_t n = size_t{1} << m;
  auto xs = evaluations(c2, m);
  auto zs = evaluations(c1_perp, m);
  auto lx = evaluations(logical_x, m);
  auto lz = paired_logical_z(Subspace(n, xs), Subspace(n, zs), lx);
  return CssCode(n, xs, zs, {}, lx, lz, std::move(name));
}

BitVector drop_first(const BitVector &v) {
  BitVector out(v.size() - 1);
  for (size_t i = 1; i < v.size(); i++) {
    out.set(i - 1, v.get(i));
  }
  return out;
}

CssCode code_622(bool negative) {
  auto b = [](const char *s) { return BitVector::from_string(s); };
  int s = negative ? -1 : 1;
  return CssCode(6, {b("111111")}, {b("110000"), b("001100"), b("000011")},
                 {s, s, s}, {b("110000"), b("001100")},
                 {b("100001"), b("001001")}, negative ? "622" : "622_plus");
}

// Shortened RM(1,4) for X, shortened RM(2,4) for Z; the punctured all-ones
// vector is the logical X.
CssCode code_1513() {
  std::vector<BitVector> xs, zs;
  for (const auto &f : monomials_of_degree(1, 4)) {
    xs.push_back(drop_first(ev(f, 4)));
  }
  for (size_t d = 1; d <= 2; d++) {
    for (const auto &f : monomials_of_degree(d, 4)) {
      zs.push_back(drop_first(ev(f, 4)));
    }
  }
  BitVector one = BitVector::ones(15);
  return CssCode(15, xs, zs, {}, {one}, {one}, "1513");
}

// 4 x 4 array, qubit 4*line + pos. X stabilizers are pairs of adjacent
// lines, Z stabilizers the nine plaquettes and line 2.
CssCode code_1632_bacon_shor() {
  auto q = [](size_t line, size_t pos) { return 4 * line + pos; };
  std::vector<BitVector> xs, zs;
  for (size_t line = 0; line < 3; line++) {
    BitVector v(16);
    for (size_t pos = 0; pos < 4; pos++) {
      v.set(q(line, pos));
      v.set(q(line + 1, pos));
    }
    xs.push_back(v);
  }
  for (size_t line = 0; line < 3; line++) {
    for (size_t pos = 0; pos < 3; pos++) {
      zs.push_back(BitVector::from_support(
          16, {q(line, pos), q(line, pos + 1), q(line + 1, pos),
               q(line + 1, pos + 1)}));
    }
  }
  zs.push_back(BitVector::from_support(16, {4, 5, 6, 7}));
  std::vector<BitVector> lx = {
      BitVector::from_support(16, {0, 1, 2, 3}),
      BitVector::from_support(16, {0, 1, 4, 5, 8, 9, 12, 13}),
      BitVector::from_support(16, {1, 2, 5, 6, 9, 10, 13, 14}),
  };
  auto lz = paired_logical_z(Subspace(16, xs), Subspace(16, zs), lx);
  return CssCode(16, xs, zs, {}, lx, lz, "1632_bacon_shor");
}

CssCode code_1632_monomial() {
  std::vector<Monomial> g2 = {{0}, {1}, {2}};
  std::vector<Monomial> gx = {{4}, {8}, {3}};
  std::vector<Monomial> g1 = g2;
  g1.insert(g1.end(), gx.begin(), gx.end());
  std::sort(g1.begin(), g1.end());
  auto zs = dual_monomial_set(g1, 4);
  // The pairing partners x1x2x4, x1x2x3, x3x4 of x3, x4, x1x2.
  std::vector<Monomial> gz = {{0b1011}, {0b0111}, {0b1100}};
  return CssCode(16, evaluations(g2, 4), evaluations(zs, 4), {},
                 evaluations(gx, 4), evaluations(gz, 4), "1632_monomial");
}

}  // namespace

CssCode qrm_code(size_t r, size_t m) {
  if (r < 1 || r > m || m > 12) {
    throw std::invalid_argument("qrm_code: need 1 <= r <= m <= 12");
  }
  auto c2 = monomials_up_to(r - 1, m);
  auto z = r < m ? monomials_up_to(m - r - 1, m) : std::vector<Monomial>{};
  return monomial_css(c2, z, monomials_of_degree(r, m), m,
                      "QRM(" + std::to_string(r) + "," + std::to_string(m) +
                          ")");
}

std::vector<std::string> catalog_names() {
  return {"622",           "622_plus", "832",   "1513",   "1632_bacon_shor",
          "1632_monomial", "64154",    "128214", "512848"};
}

CssCode catalog(const std::string &name) {
  CssCode code;
  if (name == "622") {
    return code_622(true);
  } else if (name == "622_plus") {
    return code_622(false);
  } else if (name == "832") {
    code = qrm_code(1, 3);
  } else if (name == "1513") {
    return code_1513();
  } else if (name == "1632_bacon_shor") {
    return code_1632_bacon_shor();
  } else if (name == "1632_monomial") {
    return code_1632_monomial();
  } else if (name == "64154") {
    code = qrm_code(2, 6);
  } else if (name == "128214") {
    code = qrm_code(2, 7);
  } else if (name == "512848") {
    code = qrm_code(3, 9);
  } else {
    throw std::invalid_argument("unknown catalog code: " + name);
  }
  code.set_name(name);
  return code;
}

}  // namespace csst
