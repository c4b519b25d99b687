#include "demazure/charring.hpp"

#include <doctest.h>

#include <random>

using namespace demazure;

namespace {

Character random_character(const CartanData& cd, std::mt19937& rng, int max_terms = 12) {
  std::uniform_int_distribution<std::int64_t> dco(-3, 3);
  std::uniform_int_distribution<std::int64_t> dc(-5, 5);
  std::uniform_int_distribution<int> dn(1, max_terms);
  Character x(cd);
  int n = dn(rng);
  for (int t = 0; t < n; ++t) {
    Coords w(cd.dim(), 0);
    for (int i = cd.node_first(); i <= cd.n; ++i) w[i] = dco(rng);
    add_term(x.terms, w, dc(rng));
  }
  return x;
}

}  // namespace

TEST_CASE("monomials and units") {
  const CartanData& cd = get_cartan("A1^1");
  Character m0 = monomial(cd, {1, 0});
  CHECK(m0.terms == std::map<Coords, Int>{{{1, 0}, 1}});
  Character unit = monomial(cd, {0, 0});
  Character x = monomial(cd, {-1, 2});  // Lambda_0 + 2 omega_1
  CHECK(multiply(x, unit) == x);
  CHECK(add(x, scale(x, -1)).empty());
}

TEST_CASE("A1 convolution square") {
  const CartanData& cd = get_cartan("A1^1");
  Character x = add(monomial(cd, embed_finite(cd, {1})), monomial(cd, embed_finite(cd, {-1})));
  Character sq = multiply(x, x);
  std::map<Coords, Int> want{{embed_finite(cd, {2}), 1},
                             {embed_finite(cd, {0}), 2},
                             {embed_finite(cd, {-2}), 1}};
  CHECK(sq.terms == want);
}

TEST_CASE("ring laws on random characters") {
  std::mt19937 rng(5);
  const CartanData& cd = get_cartan("C2^1");
  for (int t = 0; t < 15; ++t) {
    Character a = random_character(cd, rng);
    Character b = random_character(cd, rng);
    Character c = random_character(cd, rng);
    CHECK(add(a, b) == add(b, a));
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(multiply(a, add(b, c)) == add(multiply(a, b), multiply(a, c)));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("twist") {
  const CartanData& cd = get_cartan("A1^1");
  std::vector<int> swap{1, 0};
  CHECK(twist(monomial(cd, {1, 0}), swap) == monomial(cd, {0, 1}));
  std::vector<int> id{0, 1};
  std::mt19937 rng(9);
  for (int t = 0; t < 10; ++t) {
    Character a = random_character(cd, rng);
    Character b = random_character(cd, rng);
    CHECK(twist(a, id) == a);
    CHECK(twist(twist(a, swap), swap) == a);
    CHECK(twist(multiply(a, b), swap) == multiply(twist(a, swap), twist(b, swap)));
  }
  CHECK_THROWS_AS(twist(monomial(get_cartan("C2^1"), {1, 0, 0}), {1, 0, 2}),
                  std::invalid_argument);
}

TEST_CASE("levels add under multiplication") {
  const CartanData& cd = get_cartan("A2^1");
  std::mt19937 rng(13);
  std::uniform_int_distribution<std::int64_t> d(-3, 3);
  for (int t = 0; t < 10; ++t) {
    Coords a(cd.dim()), b(cd.dim());
    for (int i = 0; i <= cd.n; ++i) {
      a[i] = d(rng);
      b[i] = d(rng);
    }
    Character p = multiply(monomial(cd, a), monomial(cd, b));
    CHECK(level(cd, p.terms.begin()->first) == level(cd, a) + level(cd, b));
  }
}

TEST_CASE("project_to_finite") {
  const CartanData& cd = get_cartan("A1^1");
  Character x(cd);
  add_term(x.terms, Coords{-1, 2}, 1);
  add_term(x.terms, Coords{1, 0}, 2);
  add_term(x.terms, Coords{3, -2}, 1);
  auto [lv, fin] = project_to_finite(x);
  CHECK(lv == 1);
  std::map<Coords, Int> want{{{2}, 1}, {{0}, 2}, {{-2}, 1}};
  CHECK(fin.terms == want);

  auto [lv2, fin2] = project_to_finite(monomial(cd, {3, 0}));
  CHECK(lv2 == 3);
  CHECK(fin2.terms == std::map<Coords, Int>{{{0}, 1}});

  Character mixed = add(monomial(cd, {1, 0}), monomial(cd, {2, 0}));
  CHECK_THROWS_AS(project_to_finite(mixed), std::invalid_argument);
}

TEST_CASE("projection is multiplicative on homogeneous characters") {
  const CartanData& cd = get_cartan("C2^1");
  std::mt19937 rng(21);
  std::uniform_int_distribution<std::int64_t> d(0, 2);
  auto homogeneous = [&](std::int64_t lev) {
    Character x(cd);
    for (int t = 0; t < 6; ++t) {
      Coords w(cd.n);
      for (auto& v : w) v = d(rng);
      Coords e = embed_finite(cd, w);
      e[0] += lev;
      add_term(x.terms, e, d(rng) + 1);
    }
    return x;
  };
  for (int t = 0; t < 8; ++t) {
    Character a = homogeneous(1), b = homogeneous(2);
    auto [la, fa] = project_to_finite(a);
    auto [lb, fb] = project_to_finite(b);
    auto [lab, fab] = project_to_finite(multiply(a, b));
    CHECK(lab == la + lb);
    CHECK(fab == multiply(fa, fb));
  }
}

TEST_CASE("serialization is deterministic and exact") {
  const CartanData& cd = get_cartan("A1^1");
  Character x(cd);
  add_term(x.terms, Coords{-1, 2}, 1);
  add_term(x.terms, Coords{1, 0}, 2);
  add_term(x.terms, Coords{3, -2}, 1);
  auto [lv, fin] = project_to_finite(x);
  CHECK(to_json(fin, "A1^1", lv) ==
        R"({"algebra":"A1^1","level":1,"terms":[{"mult":1,"weight":[-2]},{"mult":2,"weight":[0]},{"mult":1,"weight":[2]}]})");
  CHECK(to_tsv(fin) == "-2\t1\n0\t2\n2\t1\n");
}
