#include "plethy/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "plethy/error.hpp"

namespace plethy {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t a = 0; a < v.size(); ++a) os << (a ? "," : "") << v[a];
  os << ")";
  return os.str();
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries, int cap) : entries_(std::move(entries)), cap_(cap) {
  for (int e : entries_)
    if (e < 0 || e > cap_)
      throw InvalidArgument("multi-index entry " + std::to_string(e) + " outside {0.." + std::to_string(cap_) + "}");
}

long MultiIndex::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0L); }

bool MultiIndex::strictly_increasing() const {
  return std::adjacent_find(entries_.begin(), entries_.end(), std::greater_equal<>()) == entries_.end();
}

bool MultiIndex::weakly_increasing() const { return std::is_sorted(entries_.begin(), entries_.end()); }

std::string MultiIndex::to_string() const { return join(entries_); }

bool IndexPair::semistandard() const {
  return i.size() > 0 && i.strictly_increasing() && i[0] <= j && j <= i.cap();
}

std::string IndexPair::to_string() const { return "(" + i.to_string() + "," + std::to_string(j) + ")"; }

SemistandardPair::SemistandardPair(MultiIndex i, int j) : i_(std::move(i)), j_(j) {
  if (!IndexPair{i_, j_}.semistandard())
    throw InvalidArgument("not a semistandard pair: " + IndexPair{i_, j_}.to_string());
}

Content SemistandardPair::content() const {
  Content c = i_.entries();
  c.insert(std::upper_bound(c.begin(), c.end(), j_), j_);
  return c;
}

bool SemistandardPair::j_repeated() const {
  return std::binary_search(i_.entries().begin(), i_.entries().end(), j_);
}

int SemistandardPair::alpha() const {
  int a = 0;
  while (static_cast<std::size_t>(a) < i_.size() && i_[static_cast<std::size_t>(a)] <= j_) ++a;
  return a;
}

std::vector<MultiIndex> enumerate_increasing(int c, int r) {
  std::vector<MultiIndex> out;
  if (r < 0 || c < 0 || r > c + 1) return out;
  std::vector<int> cur(static_cast<std::size_t>(r));
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.emplace_back(cur, c);
    int pos = r - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == c - (r - 1 - pos)) --pos;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < r; ++q) cur[static_cast<std::size_t>(q)] = cur[static_cast<std::size_t>(q) - 1] + 1;
  }
  return out;
}

std::vector<MultiIndex> enumerate_weakly_increasing(int c, int r) {
  std::vector<MultiIndex> out;
  if (r < 0 || c < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(r), 0);
  while (true) {
    out.emplace_back(cur, c);
    int pos = r - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == c) --pos;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < r; ++q) cur[static_cast<std::size_t>(q)] = cur[static_cast<std::size_t>(pos)];
  }
  return out;
}

IndexPair neighbour(const SemistandardPair& p) {
  const auto a = static_cast<std::size_t>(p.alpha());
  std::vector<int> i = p.i().entries();
  int swapped = i[a - 1];
  i[a - 1] = p.j();
  return {MultiIndex(std::move(i), p.cap()), swapped};
}

std::vector<SemistandardPair> chain(std::vector<int> a, int d) {
  std::sort(a.begin(), a.end());
  if (a.size() < 2) throw InvalidArgument("chain needs a set of at least two elements");
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw InvalidArgument("chain content has a repeated element");
  if (a.front() < 0 || a.back() > d) throw InvalidArgument("chain content outside {0..d}");
  int top = a.back();
  a.pop_back();
  std::vector<SemistandardPair> out;
  out.emplace_back(MultiIndex(a, d), top);
  while (out.size() < a.size()) out.emplace_back(neighbour(out.back()));
  return out;
}

Box::Box(const MultiIndex& k) : cap_(k.cap() - 1) {
  if (k.size() < 2 || !k.strictly_increasing())
    throw InvalidArgument("box needs a strictly increasing multi-index of length >= 2, got " + k.to_string());
  for (std::size_t a = 0; a + 1 < k.size(); ++a) {
    lo_.push_back(k[a]);
    hi_.push_back(k[a + 1]);
  }
}

std::size_t Box::size() const {
  std::size_t n = 1;
  for (std::size_t a = 0; a < lo_.size(); ++a) n *= static_cast<std::size_t>(hi_[a] - lo_[a]);
  return n;
}

Box::iterator::iterator(const Box* box, bool done) : box_(box), done_(done) {
  if (!done_) current_ = MultiIndex(box_->lo_, box_->cap_);
}

Box::iterator& Box::iterator::operator++() {
  std::vector<int> cur = current_.entries();
  std::size_t pos = cur.size();
  while (pos-- > 0) {
    if (++cur[pos] < box_->hi_[pos]) {
      current_ = MultiIndex(std::move(cur), box_->cap_);
      return *this;
    }
    cur[pos] = box_->lo_[pos];
  }
  done_ = true;
  return *this;
}

std::strong_ordering pair_order(const SemistandardPair& p, const SemistandardPair& q) {
  if (p.length() != q.length() || p.cap() != q.cap())
    throw InvalidArgument("pair_order: pairs have different (N, d)");
  if (auto c = p.content() <=> q.content(); c != 0) return c;
  return q.j() <=> p.j();
}

std::vector<SemistandardPair> enumerate_semistandard_pairs(int N, int d) {
  if (N < 1 || d < 0) throw InvalidArgument("semistandard pairs need N >= 1 and d >= 0");
  std::vector<SemistandardPair> out;
  for (const MultiIndex& i : enumerate_increasing(d, N))
    for (int j = i[0]; j <= d; ++j) out.emplace_back(i, j);
  std::sort(out.begin(), out.end(), pair_less);
  return out;
}

BigInt count_ssyt_hook(int N, int d) { return BigInt(N) * binomial(d + 2, N + 1); }

bool in_s_alpha(const SemistandardPair& p, int alpha) {
  const auto n = static_cast<int>(p.length());
  if (alpha < 1 || alpha > n) return false;
  const auto a = static_cast<std::size_t>(alpha);
  if (p.i()[a - 1] > p.j()) return false;
  return alpha == n || p.j() < p.i()[a];
}

MultiIndex s_alpha_bijection(const SemistandardPair& p, int alpha) {
  if (!in_s_alpha(p, alpha))
    throw InvalidArgument(p.to_string() + " is not in S_" + std::to_string(alpha));
  const auto a = static_cast<std::size_t>(alpha);
  std::vector<int> k(p.i().entries().begin(), p.i().entries().begin() + static_cast<std::ptrdiff_t>(a));
  k.push_back(p.j() + 1);
  for (std::size_t b = a; b < p.length(); ++b) k.push_back(p.i()[b] + 1);
  return MultiIndex(std::move(k), p.cap() + 1);
}

SemistandardPair s_alpha_inverse(const MultiIndex& k, int alpha) {
  if (!k.strictly_increasing() || k.size() < 2) throw InvalidArgument("s_alpha_inverse needs strictly increasing k");
  const auto a = static_cast<std::size_t>(alpha);
  if (alpha < 1 || a + 1 > k.size()) throw InvalidArgument("alpha out of range");
  std::vector<int> i(k.entries().begin(), k.entries().begin() + static_cast<std::ptrdiff_t>(a));
  for (std::size_t b = a + 1; b < k.size(); ++b) i.push_back(k[b] - 1);
  SemistandardPair p(MultiIndex(std::move(i), k.cap() - 1), k[a] - 1);
  if (!in_s_alpha(p, alpha)) throw InvalidArgument("image is not in S_alpha");
  return p;
}

}  // namespace plethy
