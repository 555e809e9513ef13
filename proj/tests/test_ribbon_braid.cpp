#include <catch2/catch_amalgamated.hpp>

#include "apa/ribbon_braid.hpp"
#include "oracles.hpp"

using namespace apa;

namespace {

RibbonBraid rb(int n, const std::string& word) {
  return RibbonBraid::parse("rb(" + std::to_string(n) + ")[" + word + "]");
}

RibbonBraid random_element(std::mt19937_64& rng, int n, int len) {
  std::vector<std::pair<char, int>> word;
  if (n >= 1) {
    std::uniform_int_distribution<int> kind(0, 3);
    for (int t = 0; t < len; ++t) {
      switch (kind(rng)) {
        case 0:
          if (n >= 2) word.emplace_back('e', std::uniform_int_distribution<int>(1, n - 1)(rng));
          break;
        case 1:
          if (n >= 2) word.emplace_back('E', std::uniform_int_distribution<int>(1, n - 1)(rng));
          break;
        case 2:
          word.emplace_back('t', std::uniform_int_distribution<int>(1, n)(rng));
          break;
        default:
          word.emplace_back('T', std::uniform_int_distribution<int>(1, n)(rng));
          break;
      }
    }
  }
  return RibbonBraid::from_word(n, word);
}

}  // namespace

TEST_CASE("from_word basics") {
  RibbonBraid a = rb(2, "e 1");
  REQUIRE(a.crossings().size() == 1);
  REQUIRE(a.crossings()[0].index == 1);
  REQUIRE(a.crossings()[0].sign == 1);
  REQUIRE(a.twists() == std::vector<std::int64_t>{0, 0});
  REQUIRE(a.permutation().images() == std::vector<int>{2, 1});

  RibbonBraid b = rb(1, "t 1 t 1");
  REQUIRE(b.crossings().empty());
  REQUIRE(b.twists() == std::vector<std::int64_t>{2});

  // eps_i theta_i = theta_{i+1} eps_i, read bottom to top
  REQUIRE(rb(2, "e 1 t 1").equals(rb(2, "t 2 e 1")));

  REQUIRE_THROWS_AS(rb(2, "e 2"), Error);
  REQUIRE_THROWS_AS(rb(2, "t 3"), Error);
}

TEST_CASE("multiply and inverses") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 5)(rng);
    RibbonBraid a = random_element(rng, n, 8);
    REQUIRE(a.multiply(RibbonBraid::identity(n)).equals(a));
    REQUIRE(RibbonBraid::identity(n).multiply(a).equals(a));
    REQUIRE(a.multiply(a.inverse()).is_identity());
    REQUIRE(a.inverse().multiply(a).is_identity());
  }
  REQUIRE(rb(2, "e 1").multiply(rb(2, "e' 1")).is_identity());
  REQUIRE(rb(3, "e 1 e 2 e 1").equals(rb(3, "e 2 e 1 e 2")));
}

TEST_CASE("equals distinguishes inverses") {
  REQUIRE(rb(2, "e 1 e' 1").is_identity());
  REQUIRE_FALSE(rb(2, "e 1").equals(rb(2, "e' 1")));
  REQUIRE_FALSE(rb(2, "t 1").equals(rb(2, "t 2")));
  REQUIRE_THROWS_AS(rb(2, "e 1").equals(rb(3, "e 1")), Error);
}

TEST_CASE("permutation examples") {
  REQUIRE(rb(3, "e 1").permutation().images() == std::vector<int>{2, 1, 3});
  REQUIRE(rb(3, "t 2").permutation().is_identity());
  // composing the two transpositions by hand, bottom to top:
  // 1 -> 2 -> 3, 2 -> 1 -> 1, 3 -> 3 -> 2
  REQUIRE(rb(3, "e 1 e 2").permutation().images() == std::vector<int>{3, 1, 2});
}

TEST_CASE("defining relations hold for n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      RibbonBraid lhs = RibbonBraid::eps(n, i) * RibbonBraid::eps(n, i + 1) * RibbonBraid::eps(n, i);
      RibbonBraid rhs = RibbonBraid::eps(n, i + 1) * RibbonBraid::eps(n, i) * RibbonBraid::eps(n, i + 1);
      REQUIRE(lhs.equals(rhs));
    }
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j) {
        if (std::abs(i - j) <= 1) continue;
        REQUIRE((RibbonBraid::eps(n, i) * RibbonBraid::eps(n, j))
                    .equals(RibbonBraid::eps(n, j) * RibbonBraid::eps(n, i)));
      }
    for (int i = 1; i <= n - 1; ++i) {
      REQUIRE((RibbonBraid::eps(n, i) * RibbonBraid::theta(n, i))
                  .equals(RibbonBraid::theta(n, i + 1) * RibbonBraid::eps(n, i)));
      REQUIRE((RibbonBraid::eps(n, i) * RibbonBraid::theta(n, i + 1))
                  .equals(RibbonBraid::theta(n, i) * RibbonBraid::eps(n, i)));
      for (int j = 1; j <= n; ++j) {
        if (j == i || j == i + 1) continue;
        REQUIRE((RibbonBraid::eps(n, i) * RibbonBraid::theta(n, j))
                    .equals(RibbonBraid::theta(n, j) * RibbonBraid::eps(n, i)));
      }
    }
  }
}

TEST_CASE("equals is a congruence for multiply") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 5)(rng);
    RibbonBraid a = random_element(rng, n, 12);
    // b: a with a cancelling pair spliced in, so a == b as group elements
    RibbonBraid mid = random_element(rng, n, 3);
    RibbonBraid b = a.multiply(mid).multiply(mid.inverse());
    RibbonBraid c = random_element(rng, n, 12);
    REQUIRE(a.equals(a));
    REQUIRE(b.equals(a));
    REQUIRE(a.equals(b));
    REQUIRE(a.multiply(c).equals(b.multiply(c)));
    REQUIRE(c.multiply(a).equals(c.multiply(b)));
  }
}

TEST_CASE("permutation is a homomorphism") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 6)(rng);
    RibbonBraid a = random_element(rng, n, 10), b = random_element(rng, n, 10);
    REQUIRE(a.multiply(b).permutation() == a.permutation().then(b.permutation()));
  }
}

TEST_CASE("argument validation") {
  REQUIRE_THROWS_AS(rb(2, "e 1").multiply(rb(3, "e 1")), Error);
  REQUIRE_THROWS_AS(rb(2, "e 1").compose_at(3, rb(2, "")), Error);
  REQUIRE_THROWS_AS(rb(2, "e 1").compose_at(0, rb(2, "")), Error);
  REQUIRE_THROWS_AS(RibbonBraid::eps(2, 2), Error);
  REQUIRE_THROWS_AS(RibbonBraid::theta(2, 3), Error);
}

TEST_CASE("operadic composition") {
  // cabling a single twist: theta in RB_1 composed with two parallel
  // strands gives the full twist times a twist on each strand
  RibbonBraid lhs = RibbonBraid::theta(1, 1).compose_at(1, RibbonBraid::identity(2));
  RibbonBraid rhs = rb(2, "e 1 e 1 t 1 t 2");
  REQUIRE(lhs.equals(rhs));

  // plain cabling of the identity slot
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    int r = std::uniform_int_distribution<int>(1, 4)(rng);
    int s = std::uniform_int_distribution<int>(0, 3)(rng);
    int slot = std::uniform_int_distribution<int>(1, r)(rng);
    RibbonBraid sigma = random_element(rng, r, 8);
    RibbonBraid tau = random_element(rng, s, 6);
    RibbonBraid comp = sigma.compose_at(slot, tau);
    REQUIRE(comp.strands() == r + s - 1);
    REQUIRE(comp.permutation() ==
            oracle::block_composite(sigma.permutation(), slot, tau.permutation()));
  }
}

TEST_CASE("operadic associativity on small instances") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    int r = std::uniform_int_distribution<int>(1, 3)(rng);
    int s = std::uniform_int_distribution<int>(1, 3)(rng);
    int t = std::uniform_int_distribution<int>(1, 2)(rng);
    int i = std::uniform_int_distribution<int>(1, r)(rng);
    int j = std::uniform_int_distribution<int>(1, s)(rng);
    RibbonBraid x = random_element(rng, r, 6);
    RibbonBraid y = random_element(rng, s, 6);
    RibbonBraid z = random_element(rng, t, 4);
    // (x o_i y) o_{i+j-1} z == x o_i (y o_j z)
    RibbonBraid lhs = x.compose_at(i, y).compose_at(i + j - 1, z);
    RibbonBraid rhs = x.compose_at(i, y.compose_at(j, z));
    REQUIRE(lhs.equals(rhs));
  }
}

TEST_CASE("free reduction is confluent under randomized order") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int len = std::uniform_int_distribution<int>(0, 30)(rng);
    std::vector<int> raw(len);
    for (int& l : raw) {
      l = std::uniform_int_distribution<int>(1, 4)(rng);
      if (std::uniform_int_distribution<int>(0, 1)(rng)) l = -l;
    }
    apa::detail::FreeWord det;
    for (int l : raw) apa::detail::push_reduced(det, l);
    REQUIRE(oracle::randomized_reduce(raw, rng) == det);
  }
}

TEST_CASE("braid token syntax round trip") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    int n = std::uniform_int_distribution<int>(0, 5)(rng);
    RibbonBraid a = random_element(rng, n, 9);
    RibbonBraid back = RibbonBraid::parse(a.render());
    REQUIRE(back.equals(a));
    REQUIRE(back.render() == a.render());
  }
  // t 3 above e1 e'2 sits on bottom strand 1, t' 1 on bottom strand 2
  REQUIRE(rb(3, "e 1 e' 2 t 3 t' 1").render() == "rb(3)[t 1 t' 2 e 1 e' 2]");
}
