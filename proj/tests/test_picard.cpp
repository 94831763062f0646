#include <doctest.h>

#include <algorithm>

#include "isogr/picard.hpp"
#include "isogr/prng.hpp"

using namespace isogr;

namespace {

DivClass dc(std::initializer_list<long> xs) {
  DivClass v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

IVec iv(std::initializer_list<long> xs) {
  IVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

std::vector<Int> pr(std::initializer_list<long> xs) { return iv(xs); }

}  // namespace

TEST_CASE("basis sizes and labels") {
  const PicardBasis lg3 = picard_basis(Family::LG, 3);
  CHECK(lg3.nplus == 2);
  CHECK(lg3.nminus == 2);
  CHECK(lg3.labels ==
        std::vector<std::string>{"H", "D+_1", "D+_2", "D-_1", "D-_2"});

  const PicardBasis og6 = picard_basis(Family::OG, 6);
  CHECK(og6.nplus == 2);
  CHECK(og6.nminus == 2);

  const PicardBasis og7 = picard_basis(Family::OG, 7);
  CHECK(og7.nplus == 2);
  CHECK(og7.nminus == 3);
  CHECK(og7.labels ==
        std::vector<std::string>{"H", "D+_1", "D+_2", "D-_1", "D-_2", "D-_3"});
}

TEST_CASE("section classes, pinned small values") {
  // LG(2), basis (H, D+_1, D-_1)
  CHECK(class_B(Family::LG, 2, 0) == dc({1, -2, 0}));
  CHECK(class_B(Family::LG, 2, 1) == dc({1, -1, -1}));
  CHECK(class_B(Family::LG, 2, 2) == dc({1, 0, -2}));

  // LG(3), basis (H, D+_1, D+_2, D-_1, D-_2)
  CHECK(class_B(Family::LG, 3, 0) == dc({1, -3, -2, 0, 0}));
  CHECK(class_B(Family::LG, 3, 1) == dc({1, -2, -1, -1, 0}));
  CHECK(class_B(Family::LG, 3, 2) == dc({1, -1, 0, -2, -1}));
  CHECK(class_B(Family::LG, 3, 3) == dc({1, 0, 0, -3, -2}));

  // OG(5), basis (H, D+_1, D-_1, D-_2); valid k: 0..2
  CHECK(class_B(Family::OG, 5, 0) == dc({1, -2, 0, 0}));
  CHECK(class_B(Family::OG, 5, 1) == dc({1, -1, -1, 0}));
  CHECK(class_B(Family::OG, 5, 2) == dc({1, 0, -2, -1}));

  // OG(4), basis (H, D+_1, D-_1); valid k: 0..2
  CHECK(class_B(Family::OG, 4, 0) == dc({1, -2, 0}));
  CHECK(class_B(Family::OG, 4, 1) == dc({1, -1, -1}));
  CHECK(class_B(Family::OG, 4, 2) == dc({1, 0, -2}));
}

TEST_CASE("Delta classes") {
  CHECK(class_Delta(Family::LG, 3, +1, 0) == dc({0, 0, 0, 0, 0}));
  CHECK(class_Delta(Family::LG, 3, +1, 2) == dc({0, -2, -1, 0, 0}));
  CHECK(class_Delta(Family::LG, 3, -1, 1) == dc({0, 0, 0, -1, 0}));
  CHECK(class_Delta(Family::OG, 5, -1, 2) == dc({0, 0, -2, -1}));
}

TEST_CASE("canonical class, pinned small values") {
  const auto lg2 = class_K(Family::LG, 2);
  CHECK(lg2.first == dc({-3, 2, 2}));
  CHECK(lg2.first == lg2.second);

  const auto lg3 = class_K(Family::LG, 3);
  CHECK(lg3.first == dc({-4, 5, 2, 5, 2}));
  CHECK(lg3.first == lg3.second);

  const auto og3 = class_K(Family::OG, 3);  // basis (H, D-_1)
  CHECK(og3.first == dc({-4, 2}));
  CHECK(og3.first == og3.second);

  const auto og4 = class_K(Family::OG, 4);
  CHECK(og4.first == dc({-6, 5, 5}));
  CHECK(og4.first == og4.second);

  const auto og5 = class_K(Family::OG, 5);
  CHECK(og5.first == dc({-8, 5, 9, 2}));
  CHECK(og5.first == og5.second);
}

TEST_CASE("the two canonical class expressions agree for all n up to 12") {
  for (int n = 1; n <= 12; ++n) {
    const auto lg = class_K(Family::LG, n);
    CHECK(lg.first == lg.second);
  }
  for (int n = 2; n <= 12; ++n) {
    const auto og = class_K(Family::OG, n);
    CHECK(og.first == og.second);
  }
}

TEST_CASE("curve classes and anticanonical pairings, pinned") {
  // LG(2): mori order gamma_0, gamma_1, zeta-_1, zeta+_1
  const auto m2 = mori_generators(Family::LG, 2);
  REQUIRE(m2.size() == 4);
  CHECK(m2[0].label == "gamma_0");
  CHECK(m2[0].pairings == pr({1, 0, 1}));
  CHECK(m2[1].label == "gamma_1");
  CHECK(m2[1].pairings == pr({1, 1, 0}));
  CHECK(m2[2].label == "zeta-_1");
  CHECK(m2[2].pairings == pr({0, 0, -1}));
  CHECK(m2[3].label == "zeta+_1");
  CHECK(m2[3].pairings == pr({0, -1, 0}));

  const auto f2 = fano_classify(Family::LG, 2);
  CHECK(f2.verdict == "fano");
  REQUIRE(f2.pairings.size() == 4);
  CHECK(f2.pairings[0].second == 1);
  CHECK(f2.pairings[1].second == 1);
  CHECK(f2.pairings[2].second == 2);
  CHECK(f2.pairings[3].second == 2);

  // OG(4): -K = 6H - 5D+_1 - 5D-_1, pairings (1, 1, 5, 5)
  const auto f4 = fano_classify(Family::OG, 4);
  CHECK(f4.verdict == "fano");
  REQUIRE(f4.pairings.size() == 4);
  CHECK(f4.pairings[0].second == 1);
  CHECK(f4.pairings[1].second == 1);
  CHECK(f4.pairings[2].second == 5);
  CHECK(f4.pairings[3].second == 5);

  // OG(5): pairings (1, 1, 5, 2, 5) in the order gamma_0, gamma_1,
  // zeta-_1, zeta-_2, zeta+_1
  const auto f5 = fano_classify(Family::OG, 5);
  CHECK(f5.verdict == "fano");
  REQUIRE(f5.pairings.size() == 5);
  CHECK(f5.pairings[0].second == 1);
  CHECK(f5.pairings[1].second == 1);
  CHECK(f5.pairings[2].second == 5);
  CHECK(f5.pairings[3].second == 2);
  CHECK(f5.pairings[4].second == 5);
}

TEST_CASE("mori generator counts") {
  for (int n = 2; n <= 8; ++n) {
    CHECK(mori_generators(Family::LG, n).size() ==
          static_cast<std::size_t>(3 * n - 2));
  }
  for (int n = 3; n <= 10; ++n) {
    const PicardBasis b = picard_basis(Family::OG, n);
    const int h = n / 2;
    CHECK(mori_generators(Family::OG, n).size() ==
          static_cast<std::size_t>(h + b.nminus + b.nplus));
  }
}

TEST_CASE("fano verdicts across the table") {
  for (int n = 1; n <= 8; ++n) {
    const auto r = fano_classify(Family::LG, n);
    CHECK(r.verdict == (n <= 2 ? "fano" : "weak_fano"));
    for (const auto& kv : r.pairings) CHECK(kv.second >= 0);
  }
  for (int n = 2; n <= 10; ++n) {
    const auto r = fano_classify(Family::OG, n);
    CHECK(r.verdict == (n <= 5 ? "fano" : "weak_fano"));
    for (const auto& kv : r.pairings) CHECK(kv.second >= 0);
  }
}

TEST_CASE("nef cone: pinned ray sets") {
  // LG(2): coordinates (h, a_1, b_1)
  CHECK(same_ray_set(nef_extremal_rays(Family::LG, 2),
                     {iv({1, 0, 0}), iv({1, 0, 1}), iv({1, 1, 0}),
                      iv({1, 1, 1})}));

  // OG(3): coordinates (h, a_1)
  CHECK(same_ray_set(nef_extremal_rays(Family::OG, 3),
                     {iv({1, 0}), iv({1, 1})}));

  // OG(5): coordinates (h, a_1, a_2, b_1)
  CHECK(same_ray_set(nef_extremal_rays(Family::OG, 5),
                     {iv({1, 0, 0, 0}), iv({1, 1, 0, 0}), iv({1, 0, 1, 0}),
                      iv({1, 0, 0, 1}), iv({1, 1, 0, 1})}));
}

TEST_CASE("three descriptions of the nef cone coincide") {
  for (int n = 2; n <= 6; ++n) {
    const auto dd = nef_extremal_rays(Family::LG, n);
    CHECK(same_ray_set(dd, nef_claimed(Family::LG, n)));
    CHECK(same_ray_set(dd, chain_polytope_rays(Family::LG, n)));
  }
  for (int n = 3; n <= 8; ++n) {
    const auto dd = nef_extremal_rays(Family::OG, n);
    CHECK(same_ray_set(dd, nef_claimed(Family::OG, n)));
    CHECK(same_ray_set(dd, chain_polytope_rays(Family::OG, n)));
  }
}

TEST_CASE("nef ray counts, frozen") {
  const int lg_counts[] = {4, 8, 13, 19};  // n = 2..5
  for (int n = 2; n <= 5; ++n) {
    CHECK(nef_extremal_rays(Family::LG, n).size() ==
          static_cast<std::size_t>(lg_counts[n - 2]));
  }
  const int og_counts[] = {2, 4, 5, 8, 9, 13, 14};  // n = 3..9
  for (int n = 3; n <= 9; ++n) {
    CHECK(nef_extremal_rays(Family::OG, n).size() ==
          static_cast<std::size_t>(og_counts[n - 3]));
  }
}

TEST_CASE("inequality rows pair as the mori generators") {
  for (Family f : {Family::LG, Family::OG}) {
    for (int n = (f == Family::LG ? 2 : 3); n <= 6; ++n) {
      const auto ineqs = nef_inequalities(f, n);
      const auto mori = mori_generators(f, n);
      REQUIRE(ineqs.size() == mori.size());
      SmallRatRng rng(601);
      const int dim = static_cast<int>(ineqs[0].size());
      for (int t = 0; t < 10; ++t) {
        IVec v(dim);
        for (int i = 0; i < dim; ++i) {
          v[i] = Int(static_cast<long>(rng.index(9)) - 4);
        }
        const DivClass d = nef_vector_to_div(f, n, v);
        for (std::size_t r = 0; r < ineqs.size(); ++r) {
          Int row = 0;
          for (int i = 0; i < dim; ++i) row += ineqs[r][i] * v[i];
          CHECK(row == pair_div_curve(d, mori[r]));
        }
      }
    }
  }
}

TEST_CASE("nef_vector_to_div, pinned") {
  // LG(2): (1,0,0) -> H; (1,1,1) -> H + Delta-_1 + Delta+_1 = H - D-_1 - D+_1
  CHECK(nef_vector_to_div(Family::LG, 2, iv({1, 0, 0})) == dc({1, 0, 0}));
  CHECK(nef_vector_to_div(Family::LG, 2, iv({1, 1, 1})) == dc({1, -1, -1}));
  // LG(3): (0,0,1,0,0) -> Delta-_2 = -2D-_1 - D-_2 ... wait: coords are
  // (h, a_1, a_2, b_1, b_2), so (0,0,1,0,0) is a_2.
  CHECK(nef_vector_to_div(Family::LG, 3, iv({0, 0, 1, 0, 0})) ==
        dc({0, 0, 0, -2, -1}));
}

TEST_CASE("nef rays pair nonnegatively with every mori generator") {
  for (Family f : {Family::LG, Family::OG}) {
    for (int n = (f == Family::LG ? 2 : 3); n <= 7; ++n) {
      const auto mori = mori_generators(f, n);
      for (const auto& ray : nef_extremal_rays(f, n)) {
        const DivClass d = nef_vector_to_div(f, n, ray);
        for (const auto& c : mori) CHECK(pair_div_curve(d, c) >= 0);
      }
    }
  }
}

TEST_CASE("effective cone contains the section classes but not -H") {
  for (Family f : {Family::LG, Family::OG}) {
    for (int n = (f == Family::LG ? 2 : 3); n <= 6; ++n) {
      const auto gens = eff_generators(f, n);
      std::vector<IVec> rays;
      for (const auto& g : gens) rays.push_back(g);
      const int kmax = (f == Family::LG) ? n : n / 2;
      for (int k = 0; k <= kmax; ++k) {
        const DivClass b = class_B(f, n, k);
        std::vector<Rat> x(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) x[i] = Rat(b[i]);
        CHECK(in_cone(rays, x));
      }
      std::vector<Rat> minus_h(gens[0].size(), Rat(0));
      minus_h[0] = -1;
      CHECK(!in_cone(rays, minus_h));
    }
  }
}

TEST_CASE("eff generator counts") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(eff_generators(Family::LG, n).size() ==
          static_cast<std::size_t>(2 * n));
  }
  // OG: D+_1..D+_{h-1}, B_0, D-_1..D-_nminus, B_h
  for (int n = 3; n <= 8; ++n) {
    const PicardBasis b = picard_basis(Family::OG, n);
    CHECK(eff_generators(Family::OG, n).size() ==
          static_cast<std::size_t>(b.nplus + b.nminus + 2));
  }
}

TEST_CASE("out of range arguments are rejected") {
  CHECK_THROWS_AS(class_B(Family::LG, 3, 4), usage_error);
  CHECK_THROWS_AS(class_B(Family::OG, 5, 3), usage_error);
  CHECK_THROWS_AS(picard_basis(Family::LG, 0), usage_error);
  CHECK_THROWS_AS(curve_class(Family::LG, 3, 'q', 0), usage_error);
}
