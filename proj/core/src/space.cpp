#include "plethy/space.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "plethy/combinatorics.hpp"
#include "plethy/error.hpp"

namespace plethy {

std::optional<std::pair<std::vector<int>, int>> wedge_normalize(std::vector<int> factors, int c) {
  for (int f : factors)
    if (f < 0 || f > c) throw InvalidArgument("wedge factor " + std::to_string(f) + " outside {0.." + std::to_string(c) + "}");
  // insertion sort, counting transpositions
  int sign = 1;
  for (std::size_t a = 1; a < factors.size(); ++a) {
    for (std::size_t b = a; b > 0 && factors[b - 1] >= factors[b]; --b) {
      if (factors[b - 1] == factors[b]) return std::nullopt;
      std::swap(factors[b - 1], factors[b]);
      sign = -sign;
    }
  }
  return std::make_pair(std::move(factors), sign);
}

int epsilon(int R) {
  long inversions = static_cast<long>(R) * (R - 1) / 2;
  return inversions % 2 == 0 ? 1 : -1;
}

Factor Factor::build(FactorKind kind, int c, int r, std::vector<std::vector<int>> basis) {
  auto d = std::make_shared<Data>();
  d->kind = kind;
  d->c = c;
  d->r = r;
  d->basis = std::move(basis);
  for (std::size_t idx = 0; idx < d->basis.size(); ++idx) {
    const auto& lab = d->basis[idx];
    d->y_degree.push_back(kind == FactorKind::Det ? r : std::accumulate(lab.begin(), lab.end(), 0L));
    d->index.emplace(lab, idx);
  }
  return Factor(std::move(d));
}

namespace {

std::vector<std::vector<int>> raw(const std::vector<MultiIndex>& v) {
  std::vector<std::vector<int>> out;
  out.reserve(v.size());
  for (const auto& m : v) out.push_back(m.entries());
  return out;
}

}  // namespace

Factor Factor::sym(int c) {
  if (c < 0) throw InvalidArgument("Sym^c needs c >= 0");
  std::vector<std::vector<int>> basis;
  for (int a = 0; a <= c; ++a) basis.push_back({a});
  return build(FactorKind::Sym, c, 1, std::move(basis));
}

Factor Factor::wedge(int R, int c) {
  if (R < 0) throw InvalidArgument("exterior power needs R >= 0");
  if (R == 0) return build(FactorKind::Wedge, c, 0, {{}});
  if (c < 0) throw InvalidArgument("Sym^c needs c >= 0");
  return build(FactorKind::Wedge, c, R, raw(enumerate_increasing(c, R)));
}

Factor Factor::sym_power(int m, int c) {
  if (m < 0) throw InvalidArgument("symmetric power needs m >= 0");
  if (m == 0) return build(FactorKind::SymPower, c, 0, {{}});
  if (c < 0) throw InvalidArgument("Sym^c needs c >= 0");
  return build(FactorKind::SymPower, c, m, raw(enumerate_weakly_increasing(c, m)));
}

Factor Factor::det(int p) {
  if (p < 0) throw InvalidArgument("det power must be >= 0");
  return build(FactorKind::Det, 0, p, {{}});
}

std::size_t Factor::label_length() const {
  switch (kind()) {
    case FactorKind::Sym: return 1;
    case FactorKind::Det: return 0;
    default: return static_cast<std::size_t>(rank());
  }
}

std::optional<std::size_t> Factor::index_of(const std::vector<int>& label) const {
  auto it = data_->index.find(label);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

long Factor::scalar_degree() const {
  switch (kind()) {
    case FactorKind::Sym: return degree();
    case FactorKind::Det: return 2L * rank();
    default: return static_cast<long>(rank()) * std::max(degree(), 0);
  }
}

std::string Factor::description() const {
  std::ostringstream os;
  switch (kind()) {
    case FactorKind::Sym: os << "Sym^" << degree() << " E"; break;
    case FactorKind::Wedge: os << "Wedge^" << rank() << " Sym^" << degree() << " E"; break;
    case FactorKind::SymPower: os << "Sym^" << rank() << " Sym^" << degree() << " E"; break;
    case FactorKind::Det: os << "det^" << rank(); break;
  }
  return os.str();
}

Space::Space(std::vector<Factor> factors) : factors_(std::move(factors)) {
  strides_.assign(factors_.size(), 1);
  dim_ = 1;
  for (std::size_t f = factors_.size(); f-- > 0;) {
    strides_[f] = dim_;
    dim_ *= factors_[f].dim();
  }
}

Space Space::tensor(const Space& a, const Space& b) {
  std::vector<Factor> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return Space(std::move(f));
}

std::vector<std::size_t> Space::factor_indices(std::size_t idx) const {
  std::vector<std::size_t> out(factors_.size());
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    out[f] = idx / strides_[f];
    idx %= strides_[f];
  }
  return out;
}

std::size_t Space::index_from_factors(std::span<const std::size_t> factor_idx) const {
  std::size_t idx = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) idx += factor_idx[f] * strides_[f];
  return idx;
}

std::vector<int> Space::label(std::size_t idx) const {
  std::vector<int> out;
  auto fi = factor_indices(idx);
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const auto& l = factors_[f].label(fi[f]);
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

std::optional<std::size_t> Space::index_of(const std::vector<int>& label) const {
  std::vector<std::size_t> fi(factors_.size());
  std::size_t pos = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    std::size_t len = factors_[f].label_length();
    if (pos + len > label.size()) return std::nullopt;
    std::vector<int> part(label.begin() + static_cast<std::ptrdiff_t>(pos),
                          label.begin() + static_cast<std::ptrdiff_t>(pos + len));
    auto i = factors_[f].index_of(part);
    if (!i) return std::nullopt;
    fi[f] = *i;
    pos += len;
  }
  if (pos != label.size()) return std::nullopt;
  return index_from_factors(fi);
}

std::string Space::label_string(std::size_t idx) const {
  std::ostringstream os;
  auto fi = factor_indices(idx);
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    if (f) os << "|";
    const auto& l = factors_[f].label(fi[f]);
    for (std::size_t a = 0; a < l.size(); ++a) os << (a ? "," : "") << l[a];
  }
  return os.str();
}

long Space::y_degree(std::size_t idx) const {
  long deg = 0;
  auto fi = factor_indices(idx);
  for (std::size_t f = 0; f < factors_.size(); ++f) deg += factors_[f].y_degree(fi[f]);
  return deg;
}

long Space::scalar_degree() const {
  long deg = 0;
  for (const auto& f : factors_) deg += f.scalar_degree();
  return deg;
}

std::string Space::description() const {
  if (factors_.empty()) return "trivial";
  std::string out;
  for (std::size_t f = 0; f < factors_.size(); ++f) out += (f ? " (x) " : "") + factors_[f].description();
  return out;
}

}  // namespace plethy
