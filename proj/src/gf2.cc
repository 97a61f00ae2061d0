#include "csst/gf2.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace csst {

EnumerationCapExceeded::EnumerationCapExceeded(std::string what_loop,
                                               double required, uint64_t cap)
    : std::runtime_error([&] {
        std::ostringstream out;
        out << "enumeration cap exceeded in " << what_loop << ": needs ~2^"
            << std::log2(std::max(required, 1.0)) << " work units, cap is "
            << cap;
        return out.str();
      }()),
      loop_(std::move(what_loop)),
      required_(required),
      cap_(cap) {}

DegenerateLevel::DegenerateLevel(int level)
    : std::domain_error("cos(2*pi/2^" + std::to_string(level) +
                        ") is zero; tan/sec undefined at this level") {}

void require_within_cap(const std::string &loop, double work, uint64_t cap) {
  if (work > static_cast<double>(cap)) {
    throw EnumerationCapExceeded(loop, work, cap);
  }
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (size_t i = 0; i < bits.size(); i++) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string contains '" +
                                  std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

BitVector BitVector::from_support(size_t n, const std::vector<size_t> &indices) {
  BitVector v(n);
  for (size_t i : indices) {
    if (i >= n) {
      throw std::out_of_range("support index out of range");
    }
    v.set(i);
  }
  return v;
}

BitVector BitVector::ones(size_t n) {
  BitVector v(n);
  for (auto &w : v.words_) {
    w = ~uint64_t{0};
  }
  v.clear_padding();
  return v;
}

size_t BitVector::weight() const {
  size_t total = 0;
  for (uint64_t w : words_) {
    total += std::popcount(w);
  }
  return total;
}

bool BitVector::is_zero() const {
  for (uint64_t w : words_) {
    if (w) {
      return false;
    }
  }
  return true;
}

size_t BitVector::overlap(const BitVector &other) const {
  check_same_size(other);
  size_t total = 0;
  for (size_t i = 0; i < words_.size(); i++) {
    total += std::popcount(words_[i] & other.words_[i]);
  }
  return total;
}

bool BitVector::is_subset_of(const BitVector &other) const {
  check_same_size(other);
  for (size_t i = 0; i < words_.size(); i++) {
    if (words_[i] & ~other.words_[i]) {
      return false;
    }
  }
  return true;
}

size_t BitVector::first_one() const {
  for (size_t i = 0; i < words_.size(); i++) {
    if (words_[i]) {
      return i * 64 + std::countr_zero(words_[i]);
    }
  }
  return n_;
}

std::vector<size_t> BitVector::support() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < words_.size(); i++) {
    uint64_t w = words_[i];
    while (w) {
      out.push_back(i * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(n_, '0');
  for (size_t i = 0; i < n_; i++) {
    if (get(i)) {
      s[i] = '1';
    }
  }
  return s;
}

BitVector &BitVector::operator^=(const BitVector &other) {
  check_same_size(other);
  for (size_t i = 0; i < words_.size(); i++) {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
  check_same_size(other);
  for (size_t i = 0; i < words_.size(); i++) {
    words_[i] &= other.words_[i];
  }
  return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
  check_same_size(other);
  for (size_t i = 0; i < words_.size(); i++) {
    words_[i] |= other.words_[i];
  }
  return *this;
}

BitVector BitVector::operator~() const {
  BitVector out = *this;
  for (auto &w : out.words_) {
    w = ~w;
  }
  out.clear_padding();
  return out;
}

bool BitVector::operator<(const BitVector &other) const {
  if (n_ != other.n_) {
    return n_ < other.n_;
  }
  for (size_t i = 0; i < words_.size(); i++) {
    if (words_[i] != other.words_[i]) {
      // The lowest differing index decides; a 1 there sorts later.
      uint64_t diff = words_[i] ^ other.words_[i];
      uint64_t low = diff & (~diff + 1);
      return (other.words_[i] & low) != 0;
    }
  }
  return false;
}

void BitVector::check_same_size(const BitVector &other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("bit vector length mismatch: " +
                                std::to_string(n_) + " vs " +
                                std::to_string(other.n_));
  }
}

void BitVector::clear_padding() {
  if (n_ & 63) {
    words_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
  }
}

BitVector star(const BitVector &u, const BitVector &v) { return u & v; }

size_t BitVectorHash::operator()(const BitVector &v) const {
  uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
  for (size_t i = 0; i < v.num_words(); i++) {
    h ^= v.word(i) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<size_t>(h);
}

BitMatrix::BitMatrix(size_t num_cols, std::vector<BitVector> rows)
    : cols_(num_cols), rows_(std::move(rows)) {
  for (const auto &r : rows_) {
    if (r.size() != cols_) {
      throw std::invalid_argument("matrix row length mismatch");
    }
  }
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows) {
  if (rows.empty()) {
    return BitMatrix();
  }
  std::vector<BitVector> out;
  for (const auto &r : rows) {
    out.push_back(BitVector::from_string(r));
  }
  size_t cols = out[0].size();
  return BitMatrix(cols, std::move(out));
}

BitMatrix BitMatrix::identity(size_t n) {
  BitMatrix m(n);
  for (size_t i = 0; i < n; i++) {
    BitVector r(n);
    r.set(i);
    m.append(std::move(r));
  }
  return m;
}

void BitMatrix::append(BitVector row) {
  if (row.size() != cols_) {
    throw std::invalid_argument("matrix row length mismatch");
  }
  rows_.push_back(std::move(row));
}

RrefResult rref(const BitMatrix &m) {
  std::vector<BitVector> rows = m.rows();
  RrefResult result;
  size_t r = 0;
  for (size_t col = 0; col < m.num_cols() && r < rows.size(); col++) {
    size_t pivot = r;
    while (pivot < rows.size() && !rows[pivot].get(col)) {
      pivot++;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[r], rows[pivot]);
    for (size_t j = 0; j < rows.size(); j++) {
      if (j != r && rows[j].get(col)) {
        rows[j] ^= rows[r];
      }
    }
    result.pivots.push_back(col);
    r++;
  }
  result.rank = r;
  result.matrix = BitMatrix(m.num_cols(), std::move(rows));
  return result;
}

Subspace::Subspace(size_t ambient, const std::vector<BitVector> &generators)
    : n_(ambient) {
  RrefResult reduced = rref(BitMatrix(ambient, generators));
  basis_.assign(reduced.matrix.rows().begin(),
                reduced.matrix.rows().begin() + reduced.rank);
  pivots_ = std::move(reduced.pivots);
}

Subspace Subspace::full(size_t n) {
  return Subspace(n, BitMatrix::identity(n).rows());
}

BitVector Subspace::reduce(BitVector v) const {
  for (size_t i = 0; i < basis_.size(); i++) {
    if (v.get(pivots_[i])) {
      v ^= basis_[i];
    }
  }
  return v;
}

bool Subspace::contains(const BitVector &v) const {
  return reduce(v).is_zero();
}

std::optional<std::vector<size_t>> Subspace::coordinates(
    const BitVector &v) const {
  BitVector rest = v;
  std::vector<size_t> used;
  for (size_t i = 0; i < basis_.size(); i++) {
    if (rest.get(pivots_[i])) {
      rest ^= basis_[i];
      used.push_back(i);
    }
  }
  if (!rest.is_zero()) {
    return std::nullopt;
  }
  return used;
}

bool Subspace::is_subspace_of(const Subspace &other) const {
  for (const auto &b : basis_) {
    if (!other.contains(b)) {
      return false;
    }
  }
  return true;
}

Subspace Subspace::restricted_to(const BitVector &mask) const {
  std::vector<BitVector> rows = basis_;
  std::vector<bool> used(rows.size(), false);
  BitVector outside = ~mask;
  for (size_t col : outside.support()) {
    size_t pivot = rows.size();
    for (size_t i = 0; i < rows.size(); i++) {
      if (!used[i] && rows[i].get(col)) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows.size()) {
      continue;
    }
    used[pivot] = true;
    for (size_t i = 0; i < rows.size(); i++) {
      if (!used[i] && rows[i].get(col)) {
        rows[i] ^= rows[pivot];
      }
    }
  }
  std::vector<BitVector> kept;
  for (size_t i = 0; i < rows.size(); i++) {
    if (!used[i]) {
      kept.push_back(rows[i]);
    }
  }
  return Subspace(n_, kept);
}

Subspace Subspace::sum(const Subspace &other) const {
  std::vector<BitVector> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return Subspace(n_, gens);
}

Subspace Subspace::intersect(const Subspace &other) const {
  return dual(dual(*this).sum(dual(other)));
}

void Subspace::for_each_element(
    const std::function<void(const BitVector &)> &visit, uint64_t cap) const {
  require_within_cap("subspace enumeration", std::ldexp(1.0, basis_.size()),
                     cap);
  BitVector cur(n_);
  visit(cur);
  uint64_t count = uint64_t{1} << basis_.size();
  for (uint64_t i = 1; i < count; i++) {
    cur ^= basis_[std::countr_zero(i)];
    visit(cur);
  }
}

std::vector<BitVector> Subspace::elements(uint64_t cap) const {
  std::vector<BitVector> out;
  for_each_element([&](const BitVector &v) { out.push_back(v); }, cap);
  return out;
}

Subspace dual(const Subspace &s) {
  size_t n = s.ambient();
  std::vector<bool> is_pivot(n, false);
  for (size_t p : s.pivots()) {
    is_pivot[p] = true;
  }
  std::vector<BitVector> gens;
  for (size_t f = 0; f < n; f++) {
    if (is_pivot[f]) {
      continue;
    }
    BitVector u(n);
    u.set(f);
    for (size_t i = 0; i < s.dim(); i++) {
      if (s.basis()[i].get(f)) {
        u.set(s.pivots()[i]);
      }
    }
    gens.push_back(std::move(u));
  }
  return Subspace(n, gens);
}

BitVector compress(const BitVector &v, const BitVector &a) {
  std::vector<size_t> positions = a.support();
  BitVector out(positions.size());
  for (size_t j = 0; j < positions.size(); j++) {
    if (v.get(positions[j])) {
      out.set(j);
    }
  }
  return out;
}

BitVector unpuncture(const BitVector &short_v, const BitVector &a) {
  std::vector<size_t> positions = a.support();
  if (positions.size() != short_v.size()) {
    throw std::invalid_argument("unpuncture: length does not match weight(a)");
  }
  BitVector out(a.size());
  for (size_t j = 0; j < positions.size(); j++) {
    if (short_v.get(j)) {
      out.set(positions[j]);
    }
  }
  return out;
}

Subspace puncture(const Subspace &s, const BitVector &a) {
  if (a.size() != s.ambient()) {
    throw std::invalid_argument("puncture: support vector length mismatch");
  }
  std::vector<BitVector> gens;
  for (const auto &b : s.basis()) {
    if (!b.is_subset_of(a)) {
      throw std::invalid_argument("puncture: basis vector " + b.to_string() +
                                  " is not supported on " + a.to_string());
    }
    gens.push_back(compress(b, a));
  }
  return Subspace(a.weight(), gens);
}

std::optional<Subspace> self_dual_certificate(const Subspace &z,
                                              const BitVector &a) {
  size_t w = a.weight();
  if (w % 2) {
    throw std::invalid_argument("self_dual_certificate: weight(a) is odd");
  }
  Subspace zt = puncture(z, a);
  Subspace cert = dual(zt);
  if (!cert.is_subspace_of(zt)) {
    return std::nullopt;
  }
  while (cert.dim() < w / 2) {
    Subspace perp = dual(cert);
    std::optional<BitVector> grow;
    std::vector<BitVector> odd_reps;
    for (const auto &b : perp.basis()) {
      BitVector rep = cert.reduce(b);
      if (rep.is_zero()) {
        continue;
      }
      if (rep.weight() % 2 == 0) {
        grow = rep;
        break;
      }
      if (std::find(odd_reps.begin(), odd_reps.end(), rep) == odd_reps.end()) {
        odd_reps.push_back(rep);
      }
    }
    if (!grow) {
      // Distinct canonical coset representatives; their sum is even and new.
      grow = odd_reps.at(0) ^ odd_reps.at(1);
    }
    std::vector<BitVector> gens = cert.basis();
    gens.push_back(*grow);
    cert = Subspace(w, gens);
  }
  std::vector<BitVector> full;
  for (const auto &b : cert.basis()) {
    full.push_back(unpuncture(b, a));
  }
  return Subspace(a.size(), full);
}

void for_each_outside(const std::vector<BitVector> &inner,
                      const std::vector<BitVector> &outer, size_t n,
                      const std::function<void(const BitVector &)> &visit,
                      uint64_t cap) {
  require_within_cap("coset enumeration",
                     std::ldexp(1.0, inner.size() + outer.size()), cap);
  BitVector out_part(n);
  uint64_t outer_count = uint64_t{1} << outer.size();
  uint64_t inner_count = uint64_t{1} << inner.size();
  for (uint64_t i = 1; i < outer_count; i++) {
    out_part ^= outer[std::countr_zero(i)];
    BitVector cur = out_part;
    visit(cur);
    for (uint64_t j = 1; j < inner_count; j++) {
      cur ^= inner[std::countr_zero(j)];
      visit(cur);
    }
  }
}

std::optional<size_t> min_weight(const Subspace &s, const Subspace &exclude,
                                  uint64_t cap) {
  Subspace common = s.intersect(exclude);
  std::vector<BitVector> outer;
  Subspace spanned = common;
  for (const auto &b : s.basis()) {
    if (!spanned.contains(b)) {
      outer.push_back(b);
      spanned = spanned.sum(Subspace(s.ambient(), {b}));
    }
  }
  if (outer.empty()) {
    return std::nullopt;
  }
  size_t best = s.ambient() + 1;
  for_each_outside(
      common.basis(), outer, s.ambient(),
      [&](const BitVector &v) { best = std::min(best, v.weight()); }, cap);
  return best;
}

std::optional<BitVector> solve_linear(const BitMatrix &a, const BitVector &rhs) {
  if (rhs.size() != a.num_rows()) {
    throw std::invalid_argument("solve_linear: rhs length mismatch");
  }
  size_t cols = a.num_cols();
  BitMatrix augmented(cols + 1);
  for (size_t i = 0; i < a.num_rows(); i++) {
    BitVector row(cols + 1);
    for (size_t j : a.row(i).support()) {
      row.set(j);
    }
    row.set(cols, rhs.get(i));
    augmented.append(std::move(row));
  }
  RrefResult reduced = rref(augmented);
  BitVector solution(cols);
  for (size_t i = 0; i < reduced.rank; i++) {
    size_t p = reduced.pivots[i];
    if (p == cols) {
      return std::nullopt;
    }
    solution.set(p, reduced.matrix.row(i).get(cols));
  }
  return solution;
}

}  // namespace csst
