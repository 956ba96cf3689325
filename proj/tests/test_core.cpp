#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "satseq/core.hpp"

using namespace satseq;

TEST_CASE("pattern parsing canonicalizes") {
  CHECK(Pattern::parse("aba").letters() == std::vector<int>{1, 2, 1});
  CHECK(Pattern::parse("bab").letters() == std::vector<int>{1, 2, 1});
  CHECK(Pattern::parse("abcacbc").letters() == std::vector<int>{1, 2, 3, 1, 3, 2, 3});
  CHECK(Pattern::parse("abcacbc").r() == 3);
  CHECK(Pattern::parse("aba").str() == "aba");
  CHECK(Pattern::parse("zyz").str() == "aba");
  CHECK_THROWS_AS(Pattern::parse(""), Error);
  CHECK_THROWS_AS(Pattern::parse("aB1"), Error);
  try {
    Pattern::parse("");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::empty_input);
  }
}

TEST_CASE("sequence text round-trips") {
  Seq s = parse_seq("1,2,10,1,2,9");
  CHECK(s.letters == std::vector<int>{1, 2, 10, 1, 2, 9});
  CHECK(s.alphabet == 10);
  CHECK(format_seq(s) == "1,2,10,1,2,9");
  CHECK(parse_seq(format_seq(s)).letters == s.letters);
  CHECK(parse_seq("3 1 2").letters == std::vector<int>{3, 1, 2});
  CHECK(parse_seq("").letters.empty());
  CHECK_THROWS_AS(parse_seq("1,2,x"), Error);
  CHECK_THROWS_AS(parse_seq("0,1"), Error);
  CHECK_THROWS_AS(Seq({1, 5}, 4), Error);
}

TEST_CASE("canonicalize renames by first occurrence") {
  CHECK(canonicalize(Seq({3, 1, 2}, 3)).letters == std::vector<int>{1, 2, 3});
  CHECK(canonicalize(Seq({2, 2, 5, 2}, 5)).letters == std::vector<int>{1, 1, 2, 1});
  CHECK(canonicalize(Seq({1, 2, 1}, 2)).letters == std::vector<int>{1, 2, 1});
}

TEST_CASE("canonicalize is idempotent and length-preserving") {
  oracle::Rng rng(7);
  for (int it = 0; it < 300; ++it) {
    Seq s = oracle::random_seq(rng, 12, 5);
    Seq c = canonicalize(s);
    CHECK(c.size() == s.size());
    CHECK(canonicalize(c).letters == c.letters);
  }
}

TEST_CASE("r-sparsity") {
  CHECK(is_r_sparse(Seq({1, 2, 3, 1, 2, 3, 1, 2}, 3), 3));
  CHECK(is_r_sparse(Seq({1, 2, 1, 3, 2, 3, 1}, 3), 2));
  CHECK_FALSE(is_r_sparse(Seq({1, 2, 1, 3}, 3), 3));
  CHECK(is_r_sparse(Seq({}, 3), 3));          // empty sequence
  CHECK(is_r_sparse(Seq({1}, 1), 5));         // shorter than the window
  CHECK(is_r_sparse(Seq({1, 1, 1}, 1), 1));   // r = 1 is vacuous
  CHECK_THROWS_AS(is_r_sparse(Seq({1}, 1), 0), Error);
}

TEST_CASE("containment: pinned examples") {
  Pattern u = Pattern::parse("abcacbc");
  auto hit = contains(Seq({1, 2, 3, 1, 2, 3, 1, 2, 3}, 3), u);
  REQUIRE(hit.has_value());
  CHECK(*hit == std::vector<int>{1, 2, 3, 4, 6, 8, 9});
  CHECK_FALSE(contains(Seq({1, 2, 3, 1, 2, 3, 1, 2}, 3), u).has_value());

  Pattern aabb = Pattern::parse("aabb");
  CHECK_FALSE(contains(Seq({1, 2, 1, 2, 1}, 2), aabb).has_value());
  auto hit2 = contains(Seq({1, 2, 1, 2, 1, 2}, 2), aabb);
  REQUIRE(hit2.has_value());
  CHECK(*hit2 == std::vector<int>{1, 3, 4, 6});
}

TEST_CASE("containment through a position: pinned examples") {
  Pattern aabb = Pattern::parse("aabb");
  Seq s({1, 2, 1, 2, 1, 2}, 2);
  CHECK(contains_through(s, aabb, 6));
  CHECK_FALSE(contains_through(s, aabb, 5));
  Seq avoid({1, 2, 1, 2, 1}, 2);
  for (int pos = 1; pos <= avoid.size(); ++pos) CHECK_FALSE(contains_through(avoid, aabb, pos));
  CHECK_THROWS_AS(contains_through(s, aabb, 0), Error);
  CHECK_THROWS_AS(contains_through(s, aabb, 7), Error);
}

TEST_CASE("empty sequence avoids every pattern") {
  Seq empty({}, 4);
  CHECK_FALSE(contains(empty, Pattern::parse("a")).has_value());
  CHECK_FALSE(contains(empty, Pattern::parse("abab")).has_value());
}

TEST_CASE("matcher agrees with the brute-force oracle") {
  // exhaustive over short sequences and a fixed pattern set
  std::vector<Pattern> pats = {
      Pattern::parse("a"),    Pattern::parse("aa"),   Pattern::parse("ab"),
      Pattern::parse("aba"),  Pattern::parse("abab"), Pattern::parse("aabb"),
      Pattern::parse("abc"),  Pattern::parse("abcb"), Pattern::parse("abcba"),
      Pattern::parse("abca"),
  };
  const int n = 3;
  std::vector<int> buf;
  auto all = [&](auto&& self, int len) -> void {
    if (len == 0) {
      Seq s(buf, n);
      for (const Pattern& u : pats) {
        auto got = contains(s, u);
        auto want = oracle::contains(s, u);
        REQUIRE(got == want);
      }
      return;
    }
    for (int c = 1; c <= n; ++c) {
      buf.push_back(c);
      self(self, len - 1);
      buf.pop_back();
    }
  };
  for (int len = 0; len <= 5; ++len) all(all, len);
}

TEST_CASE("matcher agrees with the oracle on random instances") {
  oracle::Rng rng(20260810);
  for (int it = 0; it < 1500; ++it) {
    Seq s = oracle::random_seq(rng, 10, 4);
    Pattern u = oracle::random_pattern(rng, 5, 3);
    auto got = contains(s, u);
    auto want = oracle::contains(s, u);
    REQUIRE(got == want);
    if (!s.empty()) {
      int pos = rng.uniform(1, s.size());
      REQUIRE(contains_through(s, u, pos) == oracle::contains_through(s, u, pos));
    }
  }
}

TEST_CASE("isomorphism invariance") {
  oracle::Rng rng(99);
  for (int it = 0; it < 400; ++it) {
    Seq s = oracle::random_seq(rng, 10, 4);
    Pattern u = oracle::random_pattern(rng, 5, 3);
    // random renaming pi of [4]
    std::vector<int> pi = {1, 2, 3, 4};
    for (int i = 3; i > 0; --i) std::swap(pi[i], pi[rng.uniform(0, i)]);
    std::vector<int> renamed;
    for (int v : s.letters) renamed.push_back(pi[v - 1]);
    Seq t(renamed, 4);
    CHECK(contains(s, u).has_value() == contains(t, u).has_value());
    int r = rng.uniform(1, 4);
    CHECK(is_r_sparse(s, r) == is_r_sparse(t, r));
  }
}

TEST_CASE("containment is monotone under supersequences") {
  oracle::Rng rng(1234);
  for (int it = 0; it < 400; ++it) {
    Seq s = oracle::random_seq(rng, 8, 3);
    Pattern u = oracle::random_pattern(rng, 4, 3);
    if (!contains(s, u)) continue;
    // insert a random letter anywhere: the copy must survive
    std::vector<int> ext = s.letters;
    ext.insert(ext.begin() + rng.uniform(0, (int)ext.size()), rng.uniform(1, 3));
    CHECK(contains(Seq(ext, 3), u).has_value());
  }
}

TEST_CASE("witness is least under (assignment, positions)") {
  // the oracle enumerates assignments lexicographically and matches greedily,
  // so equality with the oracle witness is exactly the determinism contract
  oracle::Rng rng(5150);
  for (int it = 0; it < 600; ++it) {
    Seq s = oracle::random_seq(rng, 9, 4);
    Pattern u = oracle::random_pattern(rng, 4, 3);
    CHECK(contains(s, u) == oracle::contains(s, u));
  }
}
