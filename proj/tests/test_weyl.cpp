#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "pathcrystal/partition.hpp"
#include "pathcrystal/weyl.hpp"

using namespace pathcrystal;

TEST_CASE("affine permutation basics") {
  const AffinePerm id(3);
  CHECK(id.window() == std::vector<long long>{1, 2, 3});
  CHECK(id.length() == 0);
  CHECK(id(5) == 5);
  CHECK(id(-2) == -2);

  const AffinePerm r0 = id.left_mult(0);
  const AffinePerm r1 = id.left_mult(1);
  CHECK(r0.length() == 1);
  CHECK(r1.length() == 1);
  CHECK(r1.window() == std::vector<long long>{2, 1, 3});
  // r_0 swaps 0 and 1, i.e. n and n+1 shifted through every period.
  CHECK(r0(1) == 0);
  CHECK(r0(3) == 4);
  CHECK(r0(4) == 3);

  CHECK(AffinePerm::compose(r1, r1) == id);
  CHECK(r0.left_mult(0) == id);

  // Braid relation r_0 r_1 r_0 = r_1 r_0 r_1 in rank 3.
  const AffinePerm a = id.left_mult(0).left_mult(1).left_mult(0);
  const AffinePerm b = id.left_mult(1).left_mult(0).left_mult(1);
  CHECK(a == b);
  CHECK(a.length() == 3);
}

TEST_CASE("translation-periodic evaluation") {
  const AffinePerm w = from_word(parse_word("0 1 0", 2), 2);
  for (long long x = -4; x <= 4; ++x) CHECK(w(x + 2) == w(x) + 2);
  CHECK(w.length() == 3);
}

TEST_CASE("word parsing and printing") {
  CHECK(parse_word("0 1 0", 2) == Word{0, 1, 0});
  CHECK(parse_word("", 2) == Word{});
  CHECK(word_str(Word{0, 1, 0}) == "0 1 0");
  CHECK_THROWS(parse_word("2", 2));   // letter out of range
  CHECK_THROWS(parse_word("-1", 3));
  CHECK_THROWS(parse_word("x", 3));
}

TEST_CASE("length equals reduced word length for the step words") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        const Word w = block_word(k, i, n);
        CHECK(static_cast<int>(w.size()) == k * (n - k));
        CHECK(from_word(w, n).length() == static_cast<long long>(w.size()));
      }
}

TEST_CASE("frozen block words") {
  CHECK(block_word(1, 0, 2) == Word{0});
  CHECK(block_word(1, 0, 3) == Word{1, 0});
  CHECK(block_word(2, 0, 3) == Word{2, 0});
  CHECK(block_word(1, 0, 4) == Word{2, 1, 0});
  CHECK(block_word(2, 0, 4) == Word{0, 3, 1, 0});
  CHECK(block_word(2, 2, 4) == Word{2, 1, 3, 2});
  CHECK(block_word(3, 0, 4) == Word{2, 3, 0});
}

TEST_CASE("both block word forms give the same affine permutation") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        const Word w = block_word(k, i, n);
        const Word v = block_word_alt(k, i, n);
        CHECK(w.size() == v.size());
        CHECK(from_word(w, n) == from_word(v, n));
      }
}

TEST_CASE("scheme-driven word assembly") {
  // scheme(j, a) = a - j (mod 2) reproduces the alternating rank-2 word.
  const Word w = word_from_scheme(2, 1, 3, [](int j, int a) {
    return (((a - j) % 2) + 2) % 2;
  });
  CHECK(w == Word{0, 1, 0});
}

TEST_CASE("column-product word") {
  const Word w = word_wmu(Partition({3, 2, 1}), 4);
  CHECK(w == Word{1, 2, 3, 1, 0, 2, 1, 0, 3, 2});
  CHECK(from_word(w, 4).length() == static_cast<long long>(w.size()));

  const Word w21 = word_wmu(Partition({2, 1}), 3);
  CHECK(from_word(w21, 3).length() == static_cast<long long>(w21.size()));
  CHECK(w21.size() == 2u + 2u);

  const Word w11 = word_wmu(Partition({1, 1}), 2);
  CHECK(from_word(w11, 2).length() == static_cast<long long>(w11.size()));
}

TEST_CASE("increasing chains") {
  std::vector<Word> good = {{}, {0}, {1, 0}, {0, 1, 0}};
  CHECK(is_increasing_chain(good, 2));

  // Appending a repeated letter drops the length instead of raising it.
  std::vector<Word> bad = {{}, {0}, {0, 0}};
  CHECK_FALSE(is_increasing_chain(bad, 2));

  // A chain must grow one letter at a time on the left.
  std::vector<Word> malformed = {{}, {1, 0}};
  CHECK_THROWS(is_increasing_chain(malformed, 2));
}
