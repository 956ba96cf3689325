#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "satseq/saturation.hpp"

using namespace satseq;

TEST_CASE("proper insertion: pinned examples") {
  Pattern u = Pattern::parse("abcacbc");
  CHECK(can_properly_insert(Seq({1, 2}, 3), 3, 0, u));
  CHECK_FALSE(can_properly_insert(Seq({1, 2}, 3), 1, 2, u));  // breaks 3-sparsity
  Pattern abcb = Pattern::parse("abcb");
  CHECK_FALSE(can_properly_insert(Seq({1, 2, 3, 1}, 3), 2, 4, abcb));  // 12312 contains abcb
  CHECK_THROWS_AS(can_properly_insert(Seq({1, 2}, 2), 3, 0, u), Error);
  CHECK_THROWS_AS(can_properly_insert(Seq({1, 2}, 2), 1, 3, u), Error);
}

TEST_CASE("verify: pinned examples") {
  CHECK(verify(Seq({1, 2}, 2), 2, Pattern::parse("aba")).verdict == Verdict::Saturated);
  CHECK(verify(Seq({1, 2, 3, 2, 1, 2, 3}, 3), 3, Pattern::parse("aabb")).verdict ==
        Verdict::Saturated);

  auto rep = verify(Seq({1, 2, 3, 1}, 3), 3, Pattern::parse("abcba"));
  CHECK(rep.verdict == Verdict::NotSemisaturated);
  REQUIRE(rep.counterexample.has_value());
  CHECK(rep.counterexample->letter == 2);
  CHECK(rep.counterexample->gap == 4);
}

TEST_CASE("verify separates semisaturation from containment") {
  // 1,2,1 on two letters contains aba yet every insertion is blocked, so it
  // is semisaturated; with a third letter available it no longer is.
  auto semi = verify(Seq({1, 2, 1}, 2), 2, Pattern::parse("aba"));
  CHECK(semi.verdict == Verdict::SemisaturatedOnly);
  REQUIRE(semi.copy.has_value());
  CHECK_FALSE(semi.counterexample.has_value());

  auto forb = verify(Seq({1, 2, 1}, 3), 3, Pattern::parse("aba"));
  CHECK(forb.verdict == Verdict::ContainsForbidden);
  REQUIRE(forb.copy.has_value());
  REQUIRE(forb.counterexample.has_value());
}

TEST_CASE("verify counterexample yields a sparse avoiding sequence") {
  oracle::Rng rng(4242);
  std::vector<Pattern> pats = {Pattern::parse("aba"), Pattern::parse("abcb"),
                               Pattern::parse("aabb"), Pattern::parse("abcba")};
  for (int it = 0; it < 200; ++it) {
    const Pattern& u = pats[rng.uniform(0, (int)pats.size() - 1)];
    int n = rng.uniform(u.r(), 4);
    Seq s = oracle::random_seq(rng, 8, n);
    auto rep = verify(s, n, u);
    if (rep.verdict == Verdict::NotSemisaturated && rep.counterexample) {
      Seq next = insert_letter(s, rep.counterexample->letter, rep.counterexample->gap);
      CHECK(is_r_sparse(next, u.r()));
      CHECK_FALSE(contains(next, u).has_value());
    }
    if (rep.verdict == Verdict::Saturated) {
      CHECK(is_r_sparse(s, u.r()));
      CHECK_FALSE(contains(s, u).has_value());
      for (Letter x = 1; x <= n; ++x)
        for (int g = 0; g <= s.size(); ++g) CHECK_FALSE(can_properly_insert(s, x, g, u));
    }
  }
}

TEST_CASE("verify is schedule-independent under threads") {
  Pattern u = Pattern::parse("abcb");
  Seq s({1, 2, 3, 1}, 3);
  auto a = verify(s, 3, u, 1);
  auto b = verify(s, 3, u, 4);
  CHECK(a.verdict == b.verdict);
  CHECK(a.counterexample == b.counterexample);
}

TEST_CASE("greedy: base cases") {
  Pattern aba = Pattern::parse("aba");
  // the first proper insertion of 2 into [1] is at gap 0, so the output is
  // the isomorphic mirror of 1,2; it is saturated either way
  Seq g2 = greedy_saturate(2, aba);
  CHECK(g2.letters == std::vector<int>{2, 1});
  CHECK(canonicalize(g2).letters == std::vector<int>{1, 2});
  CHECK(verify(g2, 2, aba).verdict == Verdict::Saturated);
  // n = r - 1: initial sequence is already saturated
  CHECK(greedy_saturate(1, aba).letters == std::vector<int>{1});
  CHECK(greedy_saturate(2, Pattern::parse("abcacbc")).letters == std::vector<int>{1, 2});
  CHECK_THROWS_AS(greedy_saturate(1, Pattern::parse("abcacbc")), Error);
}

TEST_CASE("greedy output is saturated and intermediate states stay legal") {
  std::vector<std::string> pats = {"aba", "abab", "aabb", "abcb", "abcacbc", "abcabc"};
  for (const auto& ps : pats) {
    Pattern u = Pattern::parse(ps);
    for (int n = u.r(); n <= u.r() + 3; ++n) {
      GreedyRun run = greedy_saturate_traced(n, u, [&](const Seq& state) {
        REQUIRE(is_r_sparse(state, u.r()));
        REQUIRE_FALSE(contains(state, u).has_value());
      });
      CHECK(verify(run.result, n, u).verdict == Verdict::Saturated);
    }
  }
}

TEST_CASE("greedy prefix property") {
  Pattern u = Pattern::parse("abcacbc");
  for (int n = 4; n <= 8; ++n) {
    GreedyRun run = greedy_saturate_traced(n, u);
    CHECK(run.before_first_max.letters == greedy_saturate(n - 1, u).letters);
  }
}

TEST_CASE("scan: aba lengths and periodicity") {
  ScanResult res = scan(Pattern::parse("aba"), 5);
  REQUIRE(res.records.size() == 4);
  std::vector<int> lengths, deltas;
  for (auto& r : res.records) {
    lengths.push_back(r.length);
    deltas.push_back(r.delta);
    CHECK(r.prefix_ok);
  }
  CHECK(lengths == std::vector<int>{2, 3, 4, 5});
  CHECK(deltas == std::vector<int>{1, 1, 1, 1});
  CHECK(res.periodic);
  CHECK(res.period == 1);
  CHECK(res.preperiod == 0);
}

TEST_CASE("greedy length bounds Sat from above at every scanned n") {
  Pattern u = Pattern::parse("abab");
  ScanResult res = scan(u, 5);
  for (auto& r : res.records) CHECK(r.delta >= 0);
}
