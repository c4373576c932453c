#include <doctest.h>

#include <random>

#include "carkwork/error.hpp"
#include "carkwork/modular_group.hpp"
#include "support/oracle.hpp"

using namespace carkwork;

TEST_SUITE("modular_group") {
  TEST_CASE("generator orders") {
    const auto s = GroupElement::generator(Letter::S);
    const auto l = GroupElement::generator(Letter::L);
    CHECK((s * s).is_identity());
    CHECK(!(l * l).is_identity());
    CHECK((l * l * l).is_identity());
    CHECK(l * l == GroupElement::generator(Letter::L2));
  }

  TEST_CASE("sign normalization identifies m and -m") {
    CHECK(GroupElement(-1, 0, 0, -1).is_identity());
    CHECK(GroupElement(0, 1, -1, 0) == GroupElement::generator(Letter::S));
    const GroupElement m(-2, -1, -1, -1);
    CHECK(m.p() == 2);
    CHECK(m.s() == 1);
  }

  TEST_CASE("determinant is checked") {
    CHECK_THROWS_AS(GroupElement(1, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(GroupElement(2, 0, 0, 1), std::invalid_argument);
  }

  TEST_CASE("multiplication agrees with the naive product") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      const Letters w = oracle::random_word(rng, 1 + i % 25);
      CHECK(oracle::same_element(oracle::product(w), word_to_matrix(w)));
    }
  }

  TEST_CASE("inverse") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
      const GroupElement m = word_to_matrix(oracle::random_word(rng, 1 + i % 30));
      CHECK((m * inverse(m)).is_identity());
      CHECK((inverse(m) * m).is_identity());
    }
  }

  TEST_CASE("classification by trace") {
    CHECK(classify_element(GroupElement::generator(Letter::S)) == ElementClass::elliptic);
    CHECK(classify_element(GroupElement::generator(Letter::L)) == ElementClass::elliptic);
    CHECK(classify_element(GroupElement(1, 1, 0, 1)) == ElementClass::parabolic);
    CHECK(classify_element(GroupElement(2, 1, 1, 1)) == ElementClass::hyperbolic);
    CHECK(classify_element(GroupElement()) == ElementClass::parabolic);
  }

  TEST_CASE("word parsing and normal form") {
    CHECK(Word::parse("LSLLS").letters() == Letters{Letter::L, Letter::S, Letter::L2, Letter::S});
    CHECK(Word::parse("").empty());
    CHECK_THROWS_AS(Word::parse("SS"), DomainError);
    CHECK_THROWS_AS(Word::parse("LSLLL"), DomainError);
    CHECK_THROWS_AS(Word::parse("LXS"), DomainError);
    CHECK(Word::parse("SLLSL").to_string() == "SLLSL");
    CHECK(is_normal_form(Letters{Letter::S, Letter::L, Letter::S}));
    CHECK(!is_normal_form(Letters{Letter::L, Letter::L2}));
  }

  TEST_CASE("free reduction") {
    CHECK(free_reduce(Letters{Letter::S, Letter::S}).empty());
    CHECK(free_reduce(Letters{Letter::L, Letter::L2}).empty());
    CHECK(free_reduce(Letters{Letter::L, Letter::L}).letters() == Letters{Letter::L2});
    CHECK(free_reduce(Letters{Letter::L, Letter::S, Letter::S, Letter::L}).letters() ==
          Letters{Letter::L2});
    CHECK(free_reduce(Letters{Letter::S, Letter::L, Letter::L2, Letter::S, Letter::L}).letters() ==
          Letters{Letter::L});
  }

  TEST_CASE("matrix to word round trip") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 300; ++i) {
      const Word w(oracle::random_word(rng, i % 41));
      CHECK(matrix_to_word(word_to_matrix(w)) == w);
    }
    CHECK(matrix_to_word(GroupElement()).empty());
    CHECK(matrix_to_word(GroupElement(1, 1, 0, 1)).to_string() == "LS");
    CHECK(matrix_to_word(GroupElement(1, -1, 0, 1)).to_string() == "SLL");
  }

  TEST_CASE("word meet, the example with shared prefix (LS)^2 (L2 S)^3") {
    const Word w = Word::parse("LSLS" "LLSLLSLLS" "LSL");
    const Word w2 = Word::parse("LSLS" "LLSLLSLLS" "LLSLSLL");
    CHECK(word_meet(w, w2) == Word::parse("LSLSLLSLLSLLS"));
    CHECK(word_meet(w, w2).size() == 10);
    CHECK(word_meet(w, Word()).empty());
  }
}
