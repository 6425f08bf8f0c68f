#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "coxcert/twist.hpp"

using namespace coxcert;

namespace {

std::shared_ptr<const RootDatum> rs(const char* name) { return build_root_system(CartanType::parse(name)); }

WeylElt w_of(const std::shared_ptr<const RootDatum>& rd, std::initializer_list<int> one_based) {
  Word w;
  for (int x : one_based) w.push_back(x - 1);
  return WeylElt::from_word(rd, w);
}

TwistedFrob split_frob(const char* name, std::initializer_list<int> word, std::optional<long> q = std::nullopt) {
  const auto rd = rs(name);
  const WeylElt c = w_of(rd, word);
  return make_twisted_frob(rd, standard_diagram_aut(*rd, 1), c, c.word(), q);
}

TwistedFrob good(const TwistedType& t, std::optional<long> q = std::nullopt) {
  const auto rd = build_root_system(t.type);
  TwistedFrob tf = good_pair_search(rd, standard_diagram_aut(*rd, t.twist)).frob;
  tf.q = q;
  return tf;
}

}  // namespace

TEST_CASE("diagram automorphisms") {
  const auto a4 = rs("A4");
  const DiagramAut flip = standard_diagram_aut(*a4, 2);
  CHECK(flip.perm == std::vector<int>{3, 2, 1, 0});
  CHECK(flip.order == 2);
  CHECK(flip.orbits() == std::vector<std::vector<int>>{{0, 3}, {1, 2}});

  const auto d4 = rs("D4");
  const DiagramAut tri = standard_diagram_aut(*d4, 3);
  CHECK(tri.order == 3);
  CHECK(tri.orbits() == std::vector<std::vector<int>>{{0, 2, 3}, {1}});

  CHECK_THROWS_AS(standard_diagram_aut(*rs("B3"), 2), InvalidTwist);
  CHECK_THROWS_AS(make_diagram_aut(*rs("B2"), {1, 0}), InvalidTwist);
  CHECK_THROWS_AS(make_diagram_aut(*a4, {0, 0, 1, 2}), InvalidTwist);
  CHECK(standard_diagram_aut(*rs("E6"), 2).orbits().size() == 4);
}

TEST_CASE("twisted type strings") {
  CHECK(TwistedType::parse("2A4").twist == 2);
  CHECK(TwistedType::parse("3D4").name() == "3D4");
  CHECK(TwistedType::parse("E8").name() == "E8");
  CHECK_THROWS_AS(TwistedType::parse("2B3"), InvalidTwist);
  CHECK_THROWS_AS(TwistedType::parse("3D5"), InvalidTwist);
  CHECK_THROWS_AS(TwistedType::parse("2A1"), InvalidTwist);
  // 34 split types of rank <= 8 (C2 included), plus 2A2..2A8, 2D4..2D8, 3D4, 2E6.
  CHECK(all_twisted_types(8).size() == all_types(8).size() + 7 + 5 + 1 + 1);
}

TEST_CASE("sigma acts on W by permuting simple reflections") {
  const auto a3 = rs("A3");
  const DiagramAut s = standard_diagram_aut(*a3, 2);
  CHECK(apply_sigma(s, w_of(a3, {1})) == w_of(a3, {3}));
  CHECK(apply_sigma(s, w_of(a3, {1, 2})) == w_of(a3, {3, 2}));
  CHECK(apply_sigma(s, w_of(a3, {1, 2}), 2) == w_of(a3, {1, 2}));
  CHECK(apply_sigma(s, longest_element(a3)) == longest_element(a3));
}

TEST_CASE("twisted Coxeter element counts") {
  CHECK(twisted_coxeter_elements(rs("A1"), standard_diagram_aut(*rs("A1"), 1)).size() == 1);
  const auto a2 = rs("A2");
  const auto two = twisted_coxeter_elements(a2, standard_diagram_aut(*a2, 1));
  REQUIRE(two.size() == 2);
  CHECK(two[0].element == w_of(a2, {1, 2}));
  CHECK(two[1].element == w_of(a2, {2, 1}));
  // Acyclic orientations of a tree with r nodes: 2^{r-1}.
  CHECK(twisted_coxeter_elements(rs("A3"), standard_diagram_aut(*rs("A3"), 1)).size() == 4);
  CHECK(twisted_coxeter_elements(rs("D4"), standard_diagram_aut(*rs("D4"), 1)).size() == 8);
  const auto a3 = rs("A3");
  for (const auto& tc : twisted_coxeter_elements(a3, standard_diagram_aut(*a3, 2))) CHECK(tc.element.length() == 2);
}

TEST_CASE("Coxeter numbers") {
  CHECK(split_frob("A2", {1, 2}).h == 3);
  CHECK(split_frob("B2", {1, 2}).h == 4);
  CHECK(split_frob("G2", {1, 2}).h == 6);
  CHECK(split_frob("E8", {1, 2, 3, 4, 5, 6, 7, 8}).h == 30);
  CHECK(good({CartanType::parse("A2"), 2}).h == 6);
  CHECK(good({CartanType::parse("D4"), 3}).h == 12);
}

TEST_CASE("good pair search") {
  const auto a2 = rs("A2");
  const auto ra = good_pair_search(a2, standard_diagram_aut(*a2, 1));
  CHECK(ra.frob.c == w_of(a2, {1, 2}));
  CHECK(ra.partial_lengths == std::vector<int>{0, 2});

  const auto b2 = rs("B2");
  const auto rb = good_pair_search(b2, standard_diagram_aut(*b2, 1));
  CHECK(rb.frob.c == w_of(b2, {1, 2}));
  CHECK(rb.partial_lengths == std::vector<int>{0, 2, 4});
  CHECK(w0_identity_check(rb.frob));

  const auto e8 = rs("E8");
  const auto re = good_pair_search(e8, standard_diagram_aut(*e8, 1));
  CHECK(re.candidates == 128);
  std::vector<int> expect;
  for (int i = 0; i <= 15; ++i) expect.push_back(8 * i);
  CHECK(re.partial_lengths == expect);
  CHECK(w0_identity_check(re.frob));
}

TEST_CASE("longest-element identity") {
  CHECK(w0_identity_check(split_frob("B2", {1, 2})));
  CHECK(w0_identity_check(split_frob("G2", {1, 2})));
  CHECK_THROWS_AS(w0_identity_check(split_frob("A2", {1, 2})), OddCoxeterNumber);
  // s1 s2 s3 in A3 is not bipartite, so its square is not w0.
  CHECK_FALSE(w0_identity_check(split_frob("A3", {1, 2, 3})));
  CHECK(w0_identity_check(split_frob("A3", {1, 3, 2})));
}

TEST_CASE("c_k powers") {
  const TwistedFrob b2 = split_frob("B2", {1, 2});
  CHECK(c_power(b2, 0).is_identity());
  for (int k = 0; k < 8; ++k) CHECK(c_power(b2, k) == power(b2.c, k));
  CHECK(c_power(b2, -1) == inverse(b2.c));

  const TwistedFrob t = good({CartanType::parse("A3"), 2});
  for (int k = 0; k < t.h; ++k) CHECK(c_power(t, k + 1) == c_power(t, k) * apply_sigma(t.sigma, t.c, k));
  CHECK(c_power(t, t.h).is_identity());
}

TEST_CASE("cyclic shift connectivity") {
  const auto a1 = rs("A1");
  const ShiftGraph g1 = cyclic_shift_connectivity(a1, standard_diagram_aut(*a1, 1));
  CHECK(g1.vertices.size() == 1);
  CHECK(g1.connected);

  const auto a2 = rs("A2");
  const ShiftGraph g2 = cyclic_shift_connectivity(a2, standard_diagram_aut(*a2, 1));
  CHECK(g2.vertices.size() == 2);
  CHECK(g2.edges == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(g2.connected);

  const auto a3 = rs("A3");
  const ShiftGraph g3 = cyclic_shift_connectivity(a3, standard_diagram_aut(*a3, 1));
  CHECK(g3.vertices.size() == 4);
  CHECK(g3.connected);
}

TEST_CASE("Frobenius on the A1 lattice") {
  const TwistedFrob tf = split_frob("A1", {1}, 2);
  CHECK(frob_matrix(tf)(0, 0) == -2);
  CHECK(frob_minus_one_inverse(tf)(0, 0) == Rational(-1, 3));
  CHECK_THROWS_AS(frob_matrix(split_frob("A1", {1})), MissingFrobeniusParameter);
  CHECK_THROWS_AS(frob_matrix(split_frob("A1", {1}, 1)), MissingFrobeniusParameter);
}

TEST_CASE("Frobenius identities") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  for (const auto& t : all_twisted_types(5)) {
    CAPTURE(t.name());
    const TwistedFrob tf = good(t, 3);
    const QMatrix f = frob_matrix(tf);
    const std::size_t n = f.rows();
    QMatrix p = QMatrix::identity(n);
    for (int i = 0; i < tf.h; ++i) p = p * f;
    Rational qh = 1;
    for (int i = 0; i < tf.h; ++i) qh *= 3;
    CHECK(p == QMatrix::identity(n).scaled(qh));

    const QMatrix inv = frob_minus_one_inverse_by_sum(tf);
    CHECK(inv == frob_minus_one_inverse_direct(tf));
    CHECK(((f - QMatrix::identity(n)) * inv).is_identity());

    const QMatrix fc = frob_cocharacter_matrix(tf);
    const auto& rd = tf.datum();
    for (int trial = 0; trial < 3; ++trial) {
      QVector chi(n), nu(n);
      for (auto& x : chi) x = d(rng);
      for (auto& x : nu) x = d(rng);
      CHECK(rd.pairing(f.apply(std::span<const Rational>(chi)), nu) == rd.pairing(chi, fc.apply(std::span<const Rational>(nu))));
    }
  }
}

TEST_CASE("H_chi directions") {
  const TwistedFrob a1 = split_frob("A1", {1}, 2);
  const QVector chi{1};
  CHECK(h_chi_direction(a1, chi) == std::vector<Integer>{1});
  const QVector zero{0};
  CHECK_THROWS_AS(h_chi_direction(a1, zero), std::invalid_argument);

  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-3, 3);
  for (const char* name : {"B3", "G2", "2A3", "3D4"}) {
    CAPTURE(name);
    const TwistedFrob tf = good(TwistedType::parse(name), 5);
    const int n = tf.datum().rank();
    const QMatrix fc = frob_cocharacter_matrix(tf);
    for (int trial = 0; trial < 5; ++trial) {
      QVector nu(n);
      for (auto& x : nu) x = d(rng);
      if (std::all_of(nu.begin(), nu.end(), [](const Rational& x) { return sgn(x) == 0; })) nu[0] = 1;
      const auto mu = h_chi_direction(tf, nu);
      QVector twice = nu;
      for (auto& x : twice) x *= 2;
      CHECK(h_chi_direction(tf, twice) == mu);
      // F mu - mu is parallel to nu.
      QVector muq(mu.begin(), mu.end());
      const QVector img = fc.apply(std::span<const Rational>(muq));
      const int pivot = static_cast<int>(std::find_if(nu.begin(), nu.end(), [](const Rational& x) { return sgn(x) != 0; }) - nu.begin());
      const Rational ratio = (img[pivot] - muq[pivot]) / nu[pivot];
      CHECK(sgn(ratio) != 0);
      for (int i = 0; i < n; ++i) CHECK(img[i] - muq[i] == ratio * nu[i]);
      Integer g = 0;
      for (const auto& x : mu) g = gcd(g, x);
      CHECK(g == 1);
      const auto first = std::find_if(mu.begin(), mu.end(), [](const Integer& x) { return sgn(x) != 0; });
      CHECK(sgn(*first) > 0);
    }
  }
}

TEST_CASE("regularity certificates") {
  const TwistedFrob a1 = split_frob("A1", {1}, 2);
  const auto c1 = regularity_certificate(a1);
  CHECK(c1.table[1][0] == Rational(-1, 3));
  CHECK(c1.verdict);

  const auto c2 = regularity_certificate(split_frob("A2", {1, 2}, 2));
  CHECK(c2.table.size() == 6);
  CHECK(c2.verdict);
  CHECK(c2.routes_agree);

  const auto e8 = regularity_certificate(good({CartanType::parse("E8"), 1}, 7));
  CHECK(e8.table.size() == 240);
  CHECK(e8.verdict);
  CHECK(e8.routes_agree);
  CHECK_FALSE(e8.zero_witness.has_value());
}

TEST_CASE("tau orbits") {
  auto sizes = tau_orbit_sizes(split_frob("A2", {1, 2}));
  CHECK(sizes == std::vector<int>(6, 3));
  sizes = tau_orbit_sizes(split_frob("B2", {1, 2}));
  CHECK(sizes == std::vector<int>(8, 4));
  sizes = tau_orbit_sizes(good({CartanType::parse("E8"), 1}));
  CHECK(sizes == std::vector<int>(240, 30));
}
