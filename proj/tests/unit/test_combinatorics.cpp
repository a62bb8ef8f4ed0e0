#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "bcinterp/partition.hpp"

using namespace bcinterp;

TEST_CASE("partition basics and conjugation involution") {
  Partition mu = Partition::parse("4,2,1,1");
  CHECK(mu.weight() == 8);
  CHECK(mu.length() == 4);
  CHECK(mu.conjugate() == Partition::parse("4,2,1,1"));
  CHECK(Partition::parse("3,1").conjugate() == Partition::parse("2,1,1"));
  CHECK(Partition::parse("2,1,0").length() == 2);  // trailing zeros normalized away
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    std::vector<long> parts;
    long cap = 6;
    for (int i = 0; i < 4; ++i) {
      cap = std::uniform_int_distribution<long>(0, cap)(rng);
      parts.push_back(cap);
    }
    Partition p{std::move(parts)};
    CHECK(p.conjugate().conjugate() == p);
    CHECK(p.conjugate().n_stat() ==
          [&] {
            long acc = 0;
            for (int i = 1; i <= p.length(); ++i) acc += p.part(i) * (p.part(i) - 1) / 2;
            return acc;
          }());
  }
}

TEST_CASE("partitions_upto enumeration order") {
  auto l0 = partitions_upto(0, 3);
  REQUIRE(l0.size() == 1);
  CHECK(l0[0].empty());

  auto l1 = partitions_upto(2, 2);
  REQUIRE(l1.size() == 4);
  CHECK(l1[0] == Partition());
  CHECK(l1[1] == Partition::parse("1"));
  CHECK(l1[2] == Partition::parse("2"));
  CHECK(l1[3] == Partition::parse("1,1"));

  auto l2 = partitions_upto(3, 1);
  REQUIRE(l2.size() == 4);
  CHECK(l2[3] == Partition::parse("3"));
}

TEST_CASE("square statistics and the worked mirror example") {
  Partition mu = Partition::parse("4,2,1,1");
  SquareStats st = square_stats(mu, 4, 1, 1);
  CHECK(st.arm == 3);
  CHECK(st.leg == 3);
  CHECK(st.arm_colength == 0);
  CHECK(st.leg_colength == 0);
  CHECK(st.arm_mirror == 4);
  CHECK(st.leg_mirror == 3);

  SquareStats one = square_stats(Partition::parse("1"), 1, 1, 1);
  CHECK(one.arm_mirror == 1);
  CHECK(one.leg_mirror == 0);

  CHECK_THROWS_AS(square_stats(Partition::parse("1"), 1, 1, 2), OutOfDiagram);
  CHECK_THROWS_AS(square_stats(Partition::parse("1,1"), 1, 1, 1), LengthExceeded);
}

TEST_CASE("mirror statistic sum identities") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 80; ++round) {
    std::vector<long> parts;
    long cap = 7;
    int len = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int i = 0; i < len; ++i) {
      cap = std::uniform_int_distribution<long>(0, cap)(rng);
      parts.push_back(cap);
    }
    Partition mu{std::move(parts)};
    int n = mu.length() + std::uniform_int_distribution<int>(0, 2)(rng);
    long sum_arm = 0, sum_leg = 0, sum_am = 0, sum_lm = 0;
    for (int i = 1; i <= mu.length(); ++i)
      for (int j = 1; j <= mu.part(i); ++j) {
        SquareStats st = square_stats(mu, n, i, j);
        sum_arm += st.arm;
        sum_leg += st.leg;
        sum_am += st.arm_mirror;
        sum_lm += st.leg_mirror;
      }
    long w = mu.weight();
    CHECK(sum_arm == mu.conjugate().n_stat());
    CHECK(sum_leg == mu.n_stat());
    CHECK(sum_am == w + 3 * mu.conjugate().n_stat());
    CHECK(sum_lm == 2 * (static_cast<long>(n) - 1) * w - 3 * mu.n_stat());
  }
}

TEST_CASE("interlacing") {
  CHECK(interlaces(Partition::parse("2,1"), Partition::parse("3,1")));
  CHECK(interlaces(Partition::parse("2,1"), Partition::parse("2,1")));
  CHECK_FALSE(interlaces(Partition::parse("3"), Partition::parse("2,2")));
  CHECK(interlaces(Partition(), Partition::parse("5")));
  CHECK_FALSE(interlaces(Partition(), Partition::parse("1,1")));  // nu_1 < mu_2
}

TEST_CASE("reverse tableaux enumeration") {
  auto t1 = reverse_tableaux(Partition::parse("1"), 2);
  CHECK(t1.size() == 2);
  auto t2 = reverse_tableaux(Partition::parse("1,1"), 2);
  REQUIRE(t2.size() == 1);
  CHECK(t2[0].entry(1, 1) == 2);
  CHECK(t2[0].entry(2, 1) == 1);
  auto t3 = reverse_tableaux(Partition(), 3);
  CHECK(t3.size() == 1);

  // Column strictness and row weak decrease hold for every enumerated filling.
  for (const auto& tab : reverse_tableaux(Partition::parse("3,2"), 3)) {
    const Partition& sh = tab.shape();
    for (int i = 1; i <= sh.length(); ++i)
      for (int j = 1; j <= sh.part(i); ++j) {
        if (j < sh.part(i)) CHECK(tab.entry(i, j) >= tab.entry(i, j + 1));
        if (i < sh.length() && j <= sh.part(i + 1)) CHECK(tab.entry(i, j) > tab.entry(i + 1, j));
      }
  }

  // Duplicate-free.
  std::set<std::string> seen;
  for (const auto& tab : reverse_tableaux(Partition::parse("2,1"), 3)) {
    std::string key;
    for (const auto& step : tab.chain()) key += step.to_string() + "|";
    CHECK(seen.insert(key).second);
  }
}

TEST_CASE("tableau count equals interlacing chain count") {
  for (const auto& mu : partitions_upto(4, 3)) {
    for (int n = mu.length(); n <= 3; ++n) {
      // Count chains empty = la0 < la1 < ... < lan = mu directly.
      auto count_chains = [&](auto&& self, const Partition& top, int steps) -> long {
        if (steps == 0) return top.empty() ? 1 : 0;
        long acc = 0;
        for (const auto& nu : partitions_upto(top.weight(), top.length())) {
          if (interlaces(nu, top)) acc += self(self, nu, steps - 1);
        }
        return acc;
      };
      CHECK(static_cast<long>(reverse_tableaux(mu, n).size()) == count_chains(count_chains, mu, n));
    }
  }
}

TEST_CASE("tilde complement-transpose") {
  CHECK(tilde(Partition::parse("2,1"), 2, 2) == Partition::parse("1"));
  CHECK(tilde(Partition(), 1, 1) == Partition::parse("1"));
  CHECK(tilde(Partition::parse("3,3"), 2, 3) == Partition());
  CHECK_THROWS_AS(tilde(Partition::parse("3"), 2, 2), NotInBox);

  for (const auto& mu : partitions_upto(6, 3)) {
    for (int m = mu.part(1); m <= 4; ++m) {
      int n = 3;
      Partition mt = tilde(mu, n, m);
      CHECK(mt.weight() == static_cast<long>(n) * m - mu.weight());
      CHECK(tilde(mt, m, n) == mu);
    }
  }
}

TEST_CASE("shift operations") {
  CHECK(Partition::parse("2,0").plus_one(2) == Partition::parse("3,1"));
  CHECK(Partition::parse("2,1").minus_one(2) == Partition::parse("1"));
  CHECK_THROWS_AS(Partition::parse("1,0").minus_one(2), NotStrictlyPositive);
  CHECK(Partition::parse("3,2,1").drop_first() == Partition::parse("2,1"));
  CHECK(Partition::parse("3,2,1").tail_from(2) == Partition::parse("2,1"));
  CHECK(Partition::parse("3,2,1").tail_from(4) == Partition());
}
