#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "coxcert/weyl.hpp"

using namespace coxcert;

namespace {

std::shared_ptr<const RootDatum> rs(const char* name) { return build_root_system(CartanType::parse(name)); }

WeylElt w_of(const std::shared_ptr<const RootDatum>& rd, std::initializer_list<int> one_based) {
  Word w;
  for (int x : one_based) w.push_back(x - 1);
  return WeylElt::from_word(rd, w);
}

int order(const WeylElt& w) {
  WeylElt acc = w;
  int k = 1;
  while (!acc.is_identity()) {
    acc = acc * w;
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("multiply basics") {
  const auto a2 = rs("A2");
  const WeylElt c = w_of(a2, {1, 2});
  CHECK((c * inverse(c)).is_identity());
  CHECK(order(c) == 3);

  const auto b2 = rs("B2");
  const WeylElt cb = w_of(b2, {1, 2});
  CHECK(cb * cb == longest_element(b2));
  CHECK((cb * cb).length() == 4);
}

TEST_CASE("mismatched root data are rejected") {
  const WeylElt x = WeylElt::simple(rs("A2"), 0);
  const WeylElt y = WeylElt::simple(rs("B2"), 0);
  CHECK_THROWS_AS(x * y, MismatchedRootDatum);
}

TEST_CASE("length examples") {
  CHECK(WeylElt::identity(rs("A3")).length() == 0);
  CHECK(WeylElt::simple(rs("A3"), 1).length() == 1);
  CHECK(longest_element(rs("A3")).length() == 6);
  CHECK(longest_element(rs("E8")).length() == 120);
}

TEST_CASE("longest elements") {
  const auto a1 = rs("A1");
  CHECK(longest_element(a1) == WeylElt::simple(a1, 0));
  const auto a2 = rs("A2");
  CHECK(longest_element(a2) == w_of(a2, {1, 2, 1}));
  CHECK(longest_element(a2, std::vector<int>{}).is_identity());
  for (const char* name : {"B3", "D4", "F4", "E6", "G2"}) {
    const auto rd = rs(name);
    const WeylElt w0 = longest_element(rd);
    CHECK(w0.length() == rd->positive_count());
    CHECK((w0 * w0).is_identity());
  }
  const auto a3 = rs("A3");
  const std::vector<int> j{0, 2};
  CHECK(longest_element(a3, j) == w_of(a3, {1, 3}));
}

TEST_CASE("cached word reproduces the permutation") {
  std::mt19937 rng(11);
  for (const char* name : {"A4", "B4", "D5", "E7", "F4", "G2", "E8"}) {
    const auto rd = rs(name);
    std::uniform_int_distribution<int> letter(0, rd->rank() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      Word raw(30);
      for (auto& x : raw) x = letter(rng);
      const WeylElt w = WeylElt::from_word(rd, raw);
      CHECK(WeylElt::from_word(rd, w.word()) == w);
      CHECK(static_cast<int>(w.word().size()) == w.length());
      CHECK(w.length() <= 30);
      CHECK((raw.size() - w.length()) % 2 == 0);
      for (int i = 0; i < rd->root_count(); ++i) CHECK(w.image(rd->negate(i)) == rd->negate(w.image(i)));
    }
  }
}

TEST_CASE("group orders and the longest-element length identity") {
  const std::vector<std::pair<const char*, std::size_t>> orders{
      {"A1", 2}, {"A2", 6}, {"A3", 24}, {"B2", 8}, {"B3", 48}, {"C3", 48}, {"G2", 12}, {"D4", 192}, {"F4", 1152}, {"A4", 120}, {"B4", 384}};
  for (const auto& [name, expect] : orders) {
    CAPTURE(name);
    const auto rd = rs(name);
    const auto all = enumerate_group(rd);
    CHECK(all.size() == expect);
    if (rd->rank() <= 3) {
      const WeylElt w0 = longest_element(rd);
      for (const auto& w : all) CHECK((w0 * w).length() == w0.length() - w.length());
    }
  }
  CHECK_THROWS_AS(enumerate_group(rs("E6"), 10000), GroupTooLarge);
}

TEST_CASE("support") {
  const auto a3 = rs("A3");
  CHECK(support(WeylElt::identity(a3)).empty());
  CHECK(support(w_of(a3, {1, 3})) == std::vector<int>{0, 2});
  CHECK(support(longest_element(rs("B2"))) == std::vector<int>{0, 1});
  for (const char* name : {"A3", "B3", "G2", "D4"}) {
    for (const auto& w : enumerate_group(rs(name))) {
      Word other = reduced_word(w, WordStrategy::kLeftDescentLargest);
      CHECK(static_cast<int>(other.size()) == w.length());
      CHECK(WeylElt::from_word(w.datum_ptr(), other) == w);
      std::sort(other.begin(), other.end());
      other.erase(std::unique(other.begin(), other.end()), other.end());
      CHECK(other == support(w));
    }
  }
}

TEST_CASE("cell product set examples") {
  const auto a2 = rs("A2");
  const WeylElt e = WeylElt::identity(a2);
  const WeylElt s1 = w_of(a2, {1});
  const WeylElt c = w_of(a2, {1, 2});
  for (const auto& x : enumerate_group(a2)) CHECK(cell_product_set(x, e, Side::kLeft) == std::vector<WeylElt>{x});
  CHECK(cell_product_set(s1, s1, Side::kLeft) == std::vector<WeylElt>{e, s1});
  CHECK(cell_product_set(c, s1, Side::kLeft) == std::vector<WeylElt>{w_of(a2, {1, 2, 1})});
  CHECK(cell_product_set(c, s1, Side::kRight) == std::vector<WeylElt>{w_of(a2, {2}), w_of(a2, {1, 2})});
  const Word bad{0, 0};
  CHECK_THROWS_AS(cell_product_set(bad, s1, Side::kLeft), NonReducedWord);
}

TEST_CASE("cell product set invariants") {
  for (const char* name : {"A2", "B2", "G2", "A3", "B3"}) {
    CAPTURE(name);
    const auto all = enumerate_group(rs(name));
    for (const auto& x : all)
      for (const auto& y : all) {
        const auto left = cell_product_set(x, y, Side::kLeft);
        const auto right = cell_product_set(y, x, Side::kRight);
        REQUIRE_FALSE(left.empty());
        CHECK(left.size() <= (std::size_t{1} << x.length()));
        for (const auto& u : left) CHECK(u.length() <= x.length() + y.length());
        // The top cell is always met.
        if ((x * y).length() == x.length() + y.length()) CHECK(std::find(left.begin(), left.end(), x * y) != left.end());
        // Both recursions describe (BxB)(ByB).
        CHECK(left == right);
      }
  }
}

TEST_CASE("action on characters and cocharacters") {
  const auto a2 = rs("A2");
  const QVector a1{1, 0};
  CHECK(act_on_character(WeylElt::simple(a2, 0), a1) == QVector{-1, 0});
  CHECK(act_on_character(longest_element(a2), a1) == QVector{0, -1});
  CHECK(act_on_character(WeylElt::identity(a2), a1) == a1);
  const QVector bad{1, 0, 0};
  CHECK_THROWS_AS(act_on_character(WeylElt::identity(a2), bad), DimensionError);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  for (const char* name : {"B3", "G2", "F4", "E6"}) {
    const auto rd = rs(name);
    std::uniform_int_distribution<int> letter(0, rd->rank() - 1);
    for (int trial = 0; trial < 10; ++trial) {
      Word raw(12);
      for (auto& x : raw) x = letter(rng);
      const WeylElt w = WeylElt::from_word(rd, raw);
      QVector chi(rd->rank()), nu(rd->rank());
      for (auto& x : chi) x = d(rng);
      for (auto& x : nu) x = Rational(d(rng), 1 + (trial % 3));
      CHECK(rd->pairing(act_on_character(w, chi), act_on_cocharacter(w, nu)) == rd->pairing(chi, nu));
    }
  }
}
