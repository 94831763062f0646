#include <doctest.h>

#include "isogr/lm.hpp"
#include "isogr/prng.hpp"

using namespace isogr;

namespace {

Mat random_symmetric(int n, SmallRatRng& rng) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = rng.rat();
    for (int j = i + 1; j < n; ++j) {
      const Rat v = rng.rat();
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  }
  return m;
}

Mat random_skew(int n, SmallRatRng& rng) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Rat v = rng.rat();
      m.at(i, j) = v;
      m.at(j, i) = -v;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("point validation") {
  Mat sym(2, 2);
  sym.at(0, 1) = 1;
  sym.at(1, 0) = 1;
  CHECK_NOTHROW(make_lm_point(Family::LG, 2, Rat(1), sym));
  try {
    make_lm_point(Family::OG, 2, Rat(1), sym);  // not skew
    CHECK(false);
  } catch (const math_error& e) {
    CHECK(e.kind() == "not_skew");
  }
  Mat asym(2, 2);
  asym.at(0, 1) = 1;
  asym.at(1, 0) = -1;
  try {
    make_lm_point(Family::LG, 2, Rat(1), asym);  // not symmetric
    CHECK(false);
  } catch (const math_error& e) {
    CHECK(e.kind() == "not_symmetric");
  }
  CHECK_THROWS_AS(make_lm_point(Family::LG, 2, Rat(0), Mat(2, 2)), usage_error);
  CHECK_THROWS_AS(make_lm_point(Family::LG, 2, Rat(1), Mat(3, 3)), usage_error);
}

TEST_CASE("evaluation and the base locus") {
  // x00 = 0 with invertible X is fine; x00 = 0 with singular X is not.
  Mat sing(2, 2);
  sing.at(0, 0) = 1;  // rank 1 symmetric
  const LMPoint bad = make_lm_point(Family::LG, 2, Rat(0), sing);
  try {
    lm_eval(bad);
    CHECK(false);
  } catch (const math_error& e) {
    CHECK(e.kind() == "base_locus");
  }

  SmallRatRng rng(701);
  Mat inv(2, 2);
  inv.at(0, 0) = 1;
  inv.at(1, 1) = -2;
  inv.at(0, 1) = inv.at(1, 0) = 1;  // det = -3
  const LMPoint ok = make_lm_point(Family::LG, 2, Rat(0), inv);
  CHECK(is_isotropic(lm_eval(ok)));

  // generic points map to isotropic row spans, both families
  for (int n = 1; n <= 5; ++n) {
    const LMPoint p =
        make_lm_point(Family::LG, n, rng.nonzero_rat(), random_symmetric(n, rng));
    CHECK(is_isotropic(lm_eval(p)));
  }
  for (int n = 2; n <= 5; ++n) {
    const LMPoint p =
        make_lm_point(Family::OG, n, rng.nonzero_rat(), random_skew(n, rng));
    CHECK(is_isotropic(lm_eval(p)));
  }
}

TEST_CASE("inversion signs, pinned for n = 3") {
  // With x00 = 1, the minor on columns (1..j^..n, n+i) of (I | X) equals
  // (-1)^(n-j) X_ji: the sign alternates with j and is independent of i.
  SmallRatRng rng(702);
  const int n = 3;
  const Mat x = random_symmetric(n, rng);
  const LMPoint p = make_lm_point(Family::LG, n, Rat(1), x);
  const PluckerVector v = plucker_embed(lm_eval(p));
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      std::vector<int> key;
      for (int r = 1; r <= n; ++r) {
        if (r != j) key.push_back(r);
      }
      key.push_back(n + i);
      const Rat got =
          v.coords.count(key) ? v.coords.at(key) : Rat(0);
      const Rat sign = ((n - j) % 2 == 0) ? Rat(1) : Rat(-1);
      CHECK(got == sign * x.at(j - 1, i - 1));
    }
  }
}

TEST_CASE("round trips through the projections") {
  SmallRatRng rng(703);
  for (int n = 1; n <= 6; ++n) {
    for (int t = 0; t < 10; ++t) {
      const LMPoint p = make_lm_point(Family::LG, n, rng.nonzero_rat(),
                                      random_symmetric(n, rng));
      const PluckerVector full = plucker_embed(lm_eval(p));
      const LMPoint back = lm_invert_lg(kal_project_lg(full));
      CHECK(lm_equal_projective(p, back));
    }
  }
  for (int n = 2; n <= 6; ++n) {
    for (int t = 0; t < 10; ++t) {
      const LMPoint p = make_lm_point(Family::OG, n, rng.nonzero_rat(),
                                      random_skew(n, rng));
      const ExtElement full = spinor_embed(lm_eval(p), 0);
      const LMPoint back = lm_invert_og(kal_project_og(full));
      CHECK(lm_equal_projective(p, back));
    }
  }
}

TEST_CASE("projections keep exactly the advertised parts") {
  SmallRatRng rng(704);
  const LMPoint p =
      make_lm_point(Family::LG, 3, rng.nonzero_rat(), random_symmetric(3, rng));
  const PluckerVector full = plucker_embed(lm_eval(p));
  const PluckerVector kept = kal_project_lg(full);
  for (const auto& kv : kept.coords) {
    int w = 0;
    for (int e : kv.first) {
      if (e > kept.n) ++w;
    }
    CHECK(w <= 1);
    CHECK(kv.second == full.coords.at(kv.first));
  }

  const LMPoint q =
      make_lm_point(Family::OG, 4, rng.nonzero_rat(), random_skew(4, rng));
  const ExtElement efull = spinor_embed(lm_eval(q), 0);
  const ExtElement ekept = kal_project_og(efull);
  for (const auto& kv : ekept.terms) {
    const std::size_t deg = mask_to_subset(kv.first).size();
    CHECK((deg == 0 || deg == 2));
    CHECK(kv.second == efull.terms.at(kv.first));
  }
}

TEST_CASE("projective equality of source points") {
  SmallRatRng rng(705);
  const Mat x = random_symmetric(3, rng);
  const LMPoint p = make_lm_point(Family::LG, 3, Rat(2), x);
  Mat x2 = x;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) x2.at(i, j) *= Rat(-3) / 5;
  }
  const LMPoint q = make_lm_point(Family::LG, 3, Rat(2) * Rat(-3) / 5, x2);
  CHECK(lm_equal_projective(p, q));
  Mat x3 = x;
  x3.at(0, 0) += 1;
  const LMPoint r = make_lm_point(Family::LG, 3, Rat(2), x3);
  CHECK(!lm_equal_projective(p, r));
}

TEST_CASE("center generators vanish exactly by rank") {
  SmallRatRng rng(706);
  for (Family f : {Family::LG, Family::OG}) {
    for (int n = 2; n <= 5; ++n) {
      for (int t = 0; t < 12; ++t) {
        // build X of controlled rank r
        const int r = static_cast<int>(rng.index(n + 1));
        Mat c(r, n);
        for (int i = 0; i < r; ++i) {
          for (int j = 0; j < n; ++j) c.at(i, j) = rng.rat();
        }
        Mat x(n, n);
        if (f == Family::LG) {
          x = transpose(c) * c;
        } else {
          const int m = 2 * (r / 2);
          Mat cc(m, n);
          for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) cc.at(i, j) = c.at(i, j);
          }
          Mat jm(m, m);
          for (int i = 0; i + 1 < m; i += 2) {
            jm.at(i, i + 1) = 1;
            jm.at(i + 1, i) = -1;
          }
          x = transpose(cc) * (jm * cc);
        }
        const std::size_t rk = rank(x);
        const Rat x00 = (t % 2 == 0) ? Rat(0) : rng.nonzero_rat();
        if (x00 == 0 && rk == 0) continue;  // all coordinates zero
        const LMPoint p = make_lm_point(f, n, x00, x);

        for (int l = 0; l <= n - 1; ++l) {
          // Y-chain: generators vanish iff rank(X) <= l
          const auto y = center_generators(CenterSpec{f, n, false, l}, p);
          bool y_zero = true;
          for (const Rat& g : y) {
            if (g != 0) y_zero = false;
          }
          CHECK(y_zero == (rk <= static_cast<std::size_t>(l)));

          // Z-chain: x00 = 0 and (l = 0 or rank(X) <= n - l)
          const auto z = center_generators(CenterSpec{f, n, true, l}, p);
          bool z_zero = true;
          for (const Rat& g : z) {
            if (g != 0) z_zero = false;
          }
          const bool expect =
              x00 == 0 && (l == 0 || rk <= static_cast<std::size_t>(n - l));
          CHECK(z_zero == expect);
        }
      }
    }
  }
}

TEST_CASE("blow-up tower lengths") {
  CHECK(blowup_step_counts(Family::LG, 2) == std::pair<int, int>{2, 1});
  CHECK(blowup_step_counts(Family::LG, 4) == std::pair<int, int>{6, 3});
  CHECK(blowup_step_counts(Family::LG, 7) == std::pair<int, int>{12, 6});
  CHECK(blowup_step_counts(Family::OG, 4) == std::pair<int, int>{2, 1});
  CHECK(blowup_step_counts(Family::OG, 6) == std::pair<int, int>{4, 2});
  CHECK(blowup_step_counts(Family::OG, 7) == std::pair<int, int>{5, 2});
  CHECK(blowup_step_counts(Family::OG, 9) == std::pair<int, int>{7, 3});
}

TEST_CASE("generic fiber degrees") {
  for (int n = 1; n <= 4; ++n) {
    const FiberReport r = fiber_degree_lg(n, 811 + n);
    CHECK(r.max_degree == n);
    CHECK(r.unit_coordinate_ok);
    CHECK(r.residual_ok);
  }
  for (int n = 2; n <= 5; ++n) {
    const FiberReport r = fiber_degree_og(n, 911 + n);
    CHECK(r.max_degree == n / 2);
    CHECK(r.unit_coordinate_ok);
    CHECK(r.residual_ok);
  }
}

TEST_CASE("projection of a vanishing part is rejected") {
  // A point with x00 = 0: the weight-0 Plucker part is x00^n = 0 and the
  // weight-1 part vanishes as well, so the projection is undefined there.
  Mat inv(2, 2);
  inv.at(0, 0) = 1;
  inv.at(1, 1) = -2;
  inv.at(0, 1) = inv.at(1, 0) = 1;
  const LMPoint p = make_lm_point(Family::LG, 2, Rat(0), inv);
  const PluckerVector full = plucker_embed(lm_eval(p));
  try {
    kal_project_lg(full);
    CHECK(false);
  } catch (const math_error& e) {
    CHECK(e.kind() == "indeterminate");
  }
}
