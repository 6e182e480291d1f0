#include <set>

#include "doctest.h"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace plethy;
using plethy::testing::Gen;

namespace {

MultiIndex mi(std::vector<int> v, int cap) { return MultiIndex(std::move(v), cap); }
SemistandardPair sp(std::vector<int> i, int j, int d) { return SemistandardPair(mi(std::move(i), d), j); }

std::vector<std::vector<int>> entries(const std::vector<MultiIndex>& v) {
  std::vector<std::vector<int>> out;
  for (const auto& m : v) out.push_back(m.entries());
  return out;
}

}  // namespace

TEST_CASE("multi-index validation") {
  CHECK_THROWS_AS(mi({0, 6}, 5), InvalidArgument);
  CHECK_THROWS_AS(mi({-1}, 5), InvalidArgument);
  auto m = mi({0, 2, 5}, 5);
  CHECK(m.sum() == 7);
  CHECK(m.strictly_increasing());
  CHECK_FALSE(mi({0, 2, 2}, 5).strictly_increasing());
  CHECK(mi({0, 2, 2}, 5).weakly_increasing());
  CHECK(m.to_string() == "(0,2,5)");
  CHECK_THROWS_AS(sp({0, 2, 2}, 3, 5), InvalidArgument);
  CHECK_THROWS_AS(sp({2, 3}, 1, 5), InvalidArgument);
  CHECK_THROWS_AS(sp({2, 3}, 6, 5), InvalidArgument);
}

TEST_CASE("enumerate_increasing") {
  CHECK(entries(enumerate_increasing(2, 2)) == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(enumerate_increasing(5, 3).size() == 20);
  CHECK(enumerate_increasing(1, 3).empty());
  CHECK(enumerate_increasing(3, 0).size() == 1);
  for (int c = 0; c <= 8; ++c)
    for (int r = 0; r <= 10; ++r) {
      auto v = enumerate_increasing(c, r);
      CHECK(BigInt(v.size()) == oracle::binomial(c + 1, r));
      CHECK(std::is_sorted(v.begin(), v.end()));
      CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
    }
}

TEST_CASE("neighbour map") {
  auto n1 = neighbour(sp({0, 2, 3}, 5, 5));
  CHECK(n1.to_string() == "((0,2,5),3)");
  CHECK(neighbour(sp({0, 3, 5}, 2, 5)).to_string() == "((2,3,5),0)");
  auto fixed = sp({0, 2, 3}, 2, 5);
  CHECK(neighbour(fixed) == fixed.as_index_pair());
  CHECK(neighbour(sp({0, 2}, 2, 4)) == sp({0, 2}, 2, 4).as_index_pair());
}

TEST_CASE("neighbour preserves content, exhaustively") {
  for (int N = 1; N <= 3; ++N)
    for (int d = 0; d <= 6; ++d)
      for (const auto& p : enumerate_semistandard_pairs(N, d)) {
        auto n = neighbour(p);
        std::vector<int> c = n.i.entries();
        c.push_back(n.j);
        std::sort(c.begin(), c.end());
        CHECK(c == p.content());
        CHECK((n == p.as_index_pair()) == p.j_repeated());
      }
}

TEST_CASE("chains") {
  auto c = chain({0, 2, 3, 5}, 5);
  REQUIRE(c.size() == 3);
  CHECK(c[0].to_string() == "((0,2,3),5)");
  CHECK(c[1].to_string() == "((0,2,5),3)");
  CHECK(c[2].to_string() == "((0,3,5),2)");
  CHECK(neighbour(c[2]).to_string() == "((2,3,5),0)");
  CHECK_FALSE(neighbour(c[2]).semistandard());

  auto single = chain({0, 1}, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].to_string() == "((0),1)");

  auto c2 = chain({1, 2, 4, 7}, 7);
  REQUIRE(c2.size() == 3);
  CHECK(c2[0].j() == 7);
  CHECK(c2[1].j() == 4);
  CHECK(c2[2].j() == 2);

  CHECK_THROWS_AS(chain({1, 1, 3}, 5), InvalidArgument);
  CHECK_THROWS_AS(chain({1, 7}, 5), InvalidArgument);
}

TEST_CASE("chain structure for every content") {
  Gen gen(21);
  for (int trial = 0; trial < 300; ++trial) {
    int N = gen.uniform(1, 5), d = gen.uniform(N, 9);
    auto a = gen.increasing(d, N + 1);
    auto c = chain(a.entries(), d);
    REQUIRE(c.size() == static_cast<std::size_t>(N));
    std::set<std::string> seen;
    for (std::size_t t = 0; t < c.size(); ++t) {
      CHECK(c[t].content() == a.entries());
      seen.insert(c[t].to_string());
      if (t > 0) {
        CHECK(c[t].j() < c[t - 1].j());
        CHECK(pair_less(c[t - 1], c[t]));
      }
    }
    CHECK(seen.size() == c.size());
    CHECK_FALSE(neighbour(c.back()).semistandard());
  }
}

TEST_CASE("box") {
  Box b(mi({0, 2, 3, 6}, 6));
  CHECK(b.size() == 6);
  std::vector<std::vector<int>> got;
  for (const auto& i : b) got.push_back(i.entries());
  CHECK(got == std::vector<std::vector<int>>{{0, 2, 3}, {0, 2, 4}, {0, 2, 5}, {1, 2, 3}, {1, 2, 4}, {1, 2, 5}});
  for (const auto& i : b) CHECK(i.cap() == 5);

  Box consecutive(mi({3, 4, 5, 6}, 8));
  REQUIRE(consecutive.size() == 1);
  CHECK((*consecutive.begin()).entries() == std::vector<int>{3, 4, 5});

  Box small(mi({0, 1, 3}, 3));
  got.clear();
  for (const auto& i : small) got.push_back(i.entries());
  CHECK(got == std::vector<std::vector<int>>{{0, 1}, {0, 2}});

  CHECK_THROWS_AS(Box(mi({0, 2, 2}, 4)), InvalidArgument);
}

TEST_CASE("box cardinality and bounds, random k") {
  Gen gen(22);
  for (int trial = 0; trial < 300; ++trial) {
    int N = gen.uniform(1, 4), d = gen.uniform(N - 1, 9);
    auto k = gen.increasing(d + 1, N + 1);
    Box b(k);
    std::size_t expected = 1;
    for (int a = 0; a < N; ++a) expected *= static_cast<std::size_t>(k[a + 1] - k[a]);
    CHECK(b.size() == expected);
    std::size_t count = 0;
    for (const auto& i : b) {
      ++count;
      CHECK(i.strictly_increasing());
      CHECK(i.sum() >= k.sum() - k[N]);
      CHECK(i.sum() <= k.sum() - k[0] - N);
      for (int a = 0; a < N; ++a) {
        CHECK(i[a] >= k[a]);
        CHECK(i[a] < k[a + 1]);
      }
    }
    CHECK(count == expected);
  }
}

TEST_CASE("pair order") {
  CHECK(pair_less(sp({0, 3}, 4, 4), sp({0, 4}, 3, 4)));
  CHECK(pair_less(sp({1, 4}, 2, 4), sp({1, 3}, 3, 4)));
  CHECK(pair_less(sp({0, 2, 5}, 3, 5), sp({0, 3, 5}, 2, 5)));
  CHECK_THROWS_AS((void)pair_order(sp({0, 3}, 4, 4), sp({0, 3}, 4, 5)), InvalidArgument);
  CHECK_THROWS_AS((void)pair_order(sp({0, 3}, 4, 5), sp({0, 3, 4}, 4, 5)), InvalidArgument);

  for (int N = 1; N <= 3; ++N)
    for (int d = N - 1; d <= 5; ++d) {
      auto pairs = enumerate_semistandard_pairs(N, d);
      REQUIRE_FALSE(pairs.empty());
      std::vector<int> least(N), greatest(N);
      for (int a = 0; a < N; ++a) {
        least[a] = a;
        greatest[a] = d - N + 1 + a;
      }
      CHECK(pairs.front() == sp(least, 0, d));
      CHECK(pairs.back() == sp(greatest, d, d));
    }
}

TEST_CASE("pair order is a strict total order on random triples") {
  Gen gen(23);
  auto oracle_less = [](const SemistandardPair& p, const SemistandardPair& q) {
    if (p.content() != q.content()) return p.content() < q.content();
    return p.j() > q.j();
  };
  for (int trial = 0; trial < 2000; ++trial) {
    int N = gen.uniform(1, 4), d = gen.uniform(N, 7);
    auto a = gen.semistandard(N, d), b = gen.semistandard(N, d), c = gen.semistandard(N, d);
    CHECK(pair_less(a, b) == oracle_less(a, b));
    CHECK_FALSE(pair_less(a, a));
    CHECK((pair_order(a, b) == 0) == (a == b));
    if (!(a == b)) CHECK(pair_less(a, b) != pair_less(b, a));
    if (pair_less(a, b) && pair_less(b, c)) CHECK(pair_less(a, c));
  }
}

TEST_CASE("semistandard pair counts") {
  CHECK(count_ssyt_hook(3, 5) == 105);
  CHECK(count_ssyt_hook(2, 4) == 40);
  CHECK(count_ssyt_hook(1, 0) == 1);
  for (int N = 1; N <= 4; ++N)
    for (int d = 0; d <= 8; ++d) {
      auto brute = oracle::semistandard_pairs(N, d);
      auto pairs = enumerate_semistandard_pairs(N, d);
      CHECK(BigInt(brute.size()) == N * oracle::binomial(d + 2, N + 1));
      CHECK(BigInt(pairs.size()) == count_ssyt_hook(N, d));
      CHECK(pairs.size() == brute.size());
      std::set<std::pair<std::vector<int>, int>> a(brute.begin(), brute.end()), b;
      for (const auto& p : pairs) b.emplace(p.i().entries(), p.j());
      CHECK(a == b);
    }
}

TEST_CASE("S_alpha bijection") {
  auto p = sp({0, 2, 5}, 3, 5);
  CHECK(p.alpha() == 2);
  CHECK(in_s_alpha(p, 2));
  CHECK_FALSE(in_s_alpha(p, 1));
  CHECK(s_alpha_bijection(p, 2).entries() == std::vector<int>{0, 2, 4, 6});
  CHECK(s_alpha_bijection(sp({0, 1, 2}, 0, 5), 1).entries() == std::vector<int>{0, 1, 2, 3});
  CHECK_THROWS_AS(s_alpha_bijection(p, 1), InvalidArgument);

  for (const auto& q : enumerate_semistandard_pairs(2, 4)) {
    int a = q.alpha();
    auto k = s_alpha_bijection(q, a);
    CHECK(k.strictly_increasing());
    CHECK(k.cap() == 5);
    CHECK(s_alpha_inverse(k, a) == q);
  }
}

TEST_CASE("the S_alpha classes partition the semistandard pairs") {
  for (int N = 1; N <= 4; ++N)
    for (int d = 0; d <= 8; ++d) {
      std::size_t total = 0;
      auto pairs = enumerate_semistandard_pairs(N, d);
      for (int a = 1; a <= N; ++a) {
        std::set<std::vector<int>> images;
        for (const auto& p : pairs)
          if (in_s_alpha(p, a)) {
            ++total;
            images.insert(s_alpha_bijection(p, a).entries());
          }
        // S_alpha is in bijection with all strictly increasing k in I(d+1, N+1)
        CHECK(BigInt(images.size()) == oracle::binomial(d + 2, N + 1));
      }
      CHECK(total == pairs.size());
    }
}
