#include "demazure/weylgroup.hpp"

#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

using namespace demazure;

namespace {

Coords random_weight(const CartanData& cd, std::mt19937& rng, std::int64_t lo = -5,
                     std::int64_t hi = 5) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  Coords c(cd.dim(), 0);
  for (int i = cd.node_first(); i <= cd.n; ++i) c[i] = d(rng);
  return c;
}

std::vector<Coords> dominant_upto(int rank, std::int64_t max_sum) {
  std::vector<Coords> out;
  Coords cur(rank, 0);
  std::function<void(int, std::int64_t)> rec = [&](int pos, std::int64_t left) {
    if (pos == rank) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(0, max_sum);
  return out;
}

const std::vector<std::string> kLengthGrid = {"A1", "A2", "A3", "A4", "B2", "B3", "B4",
                                              "C2", "C3", "C4", "D4", "F4", "G2"};

}  // namespace

TEST_CASE("translation action") {
  const CartanData& cd = get_cartan("A1^1");
  ExtAffineElement t = translation_element(cd, {1});  // t_{-omega_1}
  CHECK(t.act(Coords{1, 0}) == Coords{2, -1});
  // level-0 weights are fixed by any translation
  CHECK(t.act(embed_finite(cd, {3})) == embed_finite(cd, {3}));
  // s_1 t_{-omega_1} (Lambda_0) = Lambda_1
  ExtAffineElement g = simple_reflection(cd, 1) * t;
  CHECK(g.act(Coords{1, 0}) == Coords{0, 1});
  CHECK_THROWS_AS(translation_element(cd, {-1}), std::invalid_argument);
}

TEST_CASE("translations compose additively") {
  std::mt19937 rng(3);
  for (const std::string& name : {"A2^1", "C2^1", "G2^1"}) {
    const CartanData& cd = get_cartan(name);
    std::uniform_int_distribution<std::int64_t> d(-3, 3);
    for (int t = 0; t < 10; ++t) {
      Coords a(cd.n), b(cd.n), s(cd.n);
      for (int i = 0; i < cd.n; ++i) {
        a[i] = d(rng);
        b[i] = d(rng);
        s[i] = a[i] + b[i];
      }
      CHECK(translation_by_weight(cd, a) * translation_by_weight(cd, b) ==
            translation_by_weight(cd, s));
    }
  }
}

TEST_CASE("peel on A1^1 translations") {
  const CartanData& cd = get_cartan("A1^1");
  ReducedWord w1 = peel_reduced_word(translation_element(cd, {1}));
  CHECK(w1.letters == std::vector<int>{1});
  CHECK(w1.tail == std::vector<int>{1, 0});
  ReducedWord w2 = peel_reduced_word(translation_element(cd, {2}));
  CHECK(w2.letters == std::vector<int>{1, 0});
  CHECK(w2.tail_is_identity());
  ReducedWord e = peel_reduced_word(ExtAffineElement::identity(cd));
  CHECK(e.letters.empty());
  CHECK(e.tail_is_identity());
}

TEST_CASE("detect_sigma") {
  const CartanData& cd = get_cartan("C2^1");
  ExtAffineElement t = translation_element(cd, {0, 1});
  ReducedWord w = peel_reduced_word(t);
  CHECK(w.letters.size() == 3);
  CHECK(w.tail == std::vector<int>{2, 1, 0});  // swap(0,2), fix 1
  CHECK(detect_sigma(ExtAffineElement::identity(cd)) == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(detect_sigma(simple_reflection(cd, 1)), std::invalid_argument);
}

TEST_CASE("peel round trip") {
  std::mt19937 rng(17);
  for (const std::string& name : {"A2^1", "C2^1", "A4^2", "D3^2", "D4^3"}) {
    CAPTURE(name);
    const CartanData& cd = get_cartan(name);
    std::uniform_int_distribution<std::int64_t> dcw(0, 2);
    std::uniform_int_distribution<int> dnode(cd.node_first(), cd.n);
    for (int t = 0; t < 8; ++t) {
      // random element: a translation times a few reflections
      ExtAffineElement g = ExtAffineElement::identity(cd);
      if (!cd.label.twisted()) {
        Coords cw(cd.n);
        for (auto& v : cw) v = dcw(rng);
        g = translation_element(cd, cw);
      } else {
        // translate by a simple root of the subdiagram (always in the lattice)
        const FiniteSystem& fs = cd.finite_system(0);
        Coords mu = fs.simple_root_weight_coords(t % cd.n);
        g = translation_by_weight(cd, mu);
      }
      for (int k = 0; k < 4; ++k) g = g * simple_reflection(cd, dnode(rng));
      ReducedWord w = peel_reduced_word(g);
      ExtAffineElement h = compose_word(cd, w);
      CHECK(h == g);
      for (int k = 0; k < 50; ++k) {
        Coords x = random_weight(cd, rng);
        CHECK(h.act(x) == g.act(x));
      }
      // tail is an automorphism of the gcm
      for (int i = 0; i <= cd.n; ++i)
        for (int j = 0; j <= cd.n; ++j)
          CHECK(cd.gcm[w.tail[i]][w.tail[j]] == cd.gcm[i][j]);
    }
  }
}

TEST_CASE("longest words") {
  const CartanData& a1 = get_cartan("A1^1");
  CHECK(longest_word(a1).letters == std::vector<int>{1});
  const CartanData& a2 = get_cartan("A2^1");
  ReducedWord w0 = longest_word(a2);
  CHECK(w0.letters.size() == 3);
  CHECK(compose_word(a2, w0).act(embed_finite(a2, {1, 0})) == embed_finite(a2, {0, -1}));
  CHECK(longest_word(get_cartan("C2^1")).letters.size() == 4);
  CHECK(longest_word(get_cartan("G2^1")).letters.size() == 6);
  CHECK(longest_word(get_cartan("F4^1")).letters.size() == 24);
  CHECK(longest_word(a2, {1}).letters == std::vector<int>{1});
}

TEST_CASE("length basics") {
  const CartanData& cd = get_cartan("A1^1");
  CHECK(length(ExtAffineElement::identity(cd)) == 0);
  CHECK(length(translation_element(cd, {2})) == 2);
  CHECK(length(translation_element(cd, {1})) == 1);
  CHECK(length(from_permutation(cd, {1, 0})) == 0);
}

TEST_CASE("length additivity lemmas") {
  for (const std::string& name : kLengthGrid) {
    CAPTURE(name);
    const CartanData& aff = get_cartan(affinize(AlgebraLabel::parse(name)));
    ExtAffineElement w0 = compose_word(aff, longest_word(aff));
    std::size_t lw0 = length(w0);
    CHECK(lw0 == aff.finite_system(0).pos_roots.size());
    Coords mu(aff.n, 0);
    mu[0] = 1;
    std::size_t lmu = length(translation_element(aff, mu));
    for (const Coords& lam : dominant_upto(aff.n, 3)) {
      ExtAffineElement t = translation_element(aff, lam);
      std::size_t lt = length(t);
      CHECK(length(t * w0) == lt + lw0);
      Coords sum = lam;
      sum[0] += 1;
      CHECK(length(translation_element(aff, sum)) == lt + lmu);
    }
  }
}

TEST_CASE("translation lengths match the closed form") {
  // l(t_{nu(lam^vee)}) = sum over positive roots alpha of <alpha, lam^vee>
  for (const std::string& name : {"A3", "B3", "C3", "D4", "F4", "G2"}) {
    CAPTURE(name);
    const CartanData& aff = get_cartan(affinize(AlgebraLabel::parse(name)));
    const FiniteSystem& fs = aff.finite_system(0);
    for (const Coords& lam : dominant_upto(aff.n, 2)) {
      std::int64_t expect = 0;
      for (const Coords& root : fs.pos_roots)
        for (int i = 0; i < fs.size(); ++i) expect += root[i] * lam[i];
      CHECK(length(translation_element(aff, lam)) == static_cast<std::size_t>(expect));
    }
  }
}

TEST_CASE("rho-hat walk never meets a wall") {
  std::mt19937 rng(23);
  const CartanData& cd = get_cartan("C3^1");
  std::uniform_int_distribution<std::int64_t> d(0, 2);
  for (int t = 0; t < 20; ++t) {
    Coords cw(cd.n);
    for (auto& v : cw) v = d(rng);
    CHECK_NOTHROW(peel_reduced_word(translation_element(cd, cw)));
  }
}
