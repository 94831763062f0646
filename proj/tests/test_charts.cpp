#include <doctest.h>

#include <string>
#include <vector>

#include "isogr/charts.hpp"
#include "isogr/prng.hpp"

using namespace isogr;

namespace {

Rat R(const std::string& s) { return rat_parse(s); }

Mat mat_from(const std::vector<std::vector<std::string>>& rows) {
  Mat m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == m.cols());
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = R(rows[i][j]);
  }
  return m;
}

void check_mat_equal(const Mat& got, const Mat& want) {
  REQUIRE(got.rows() == want.rows());
  REQUIRE(got.cols() == want.cols());
  for (std::size_t i = 0; i < got.rows(); ++i) {
    for (std::size_t j = 0; j < got.cols(); ++j) {
      INFO("entry (" << i << "," << j << ")");
      CHECK(got.at(i, j) == want.at(i, j));
    }
  }
}

// Worked example: layered chart, n = 4, l = 2.
ChartCoordsI worked_type1() {
  ChartCoordsI c;
  c.n = 4;
  c.l = 2;
  c.a[3] = R("2");
  c.a[4] = R("-1/2");
  c.b[3] = R("3");
  c.b[4] = R("1/3");
  c.x[{1, 3}] = R("1/2");
  c.x[{1, 4}] = R("-2");
  c.x[{2, 3}] = R("5/3");
  c.x[{2, 4}] = R("1");
  c.xi[{1, 2}] = R("-1/3");
  c.xi[{3, 4}] = R("2/5");
  return c;
}

// Worked example: glued chart, n = 4, l = 0, layer 1 glued.
ChartCoordsII worked_type2() {
  ChartCoordsII c;
  c.n = 4;
  c.l = 0;
  c.tau.minus = {1};
  c.b[1] = R("2");
  c.b[3] = R("-3/2");
  c.b[4] = R("1/2");
  c.y[1] = R("1/3");
  c.y[2] = R("-1");
  c.xi[{1, 3}] = R("1");
  c.xi[{1, 4}] = R("-1/2");
  c.xi[{2, 3}] = R("2");
  c.xi[{2, 4}] = R("1/3");
  c.xi[{3, 4}] = R("3");
  return c;
}

// Worked example: orthogonal chart, n = 4, l = 0.
ChartCoordsO worked_og() {
  ChartCoordsO c;
  c.n = 4;
  c.l = 0;
  c.b[1] = R("3/2");
  c.b[2] = R("-2");
  c.xi[{1, 3}] = R("1/3");
  c.xi[{1, 4}] = R("2");
  c.xi[{2, 3}] = R("-1");
  c.xi[{2, 4}] = R("1/2");
  return c;
}

}  // namespace

TEST_CASE("worked layered chart matrix, entry by entry") {
  const Mat want = mat_from({
      {"-7/9", "-2/3", "0", "0", "1", "0", "1/2", "-2"},
      {"-2/3", "2", "0", "0", "0", "1", "5/3", "1"},
      {"-1/2", "-5/3", "1", "0", "0", "0", "3", "6/5"},
      {"2", "-1", "0", "1", "0", "0", "6/5", "37/25"},
  });
  const ChartCoordsI c = worked_type1();
  check_mat_equal(chart_layout(c), want);
  const IsotropicPoint p = chart_point(c);
  CHECK(p.m == to_standard(want));
  CHECK(is_isotropic(p));
}

TEST_CASE("worked glued chart matrix, entry by entry") {
  const Mat want = mat_from({
      {"1", "0", "0", "0", "2/3", "2", "2", "-1"},
      {"0", "1", "0", "0", "2", "-2", "4", "2/3"},
      {"0", "0", "1", "0", "2", "4", "5/2", "-133/12"},
      {"0", "0", "0", "1", "-1", "2/3", "-133/12", "-2065/72"},
  });
  const ChartCoordsII c = worked_type2();
  check_mat_equal(chart_layout(c), want);
  CHECK(is_isotropic(chart_point(c)));
}

TEST_CASE("worked orthogonal chart matrix, entry by entry") {
  const Mat want = mat_from({
      {"1", "0", "0", "0", "0", "3/2", "1/2", "3"},
      {"0", "1", "0", "0", "-3/2", "0", "-3/2", "3/4"},
      {"0", "0", "1", "0", "-1/2", "3/2", "0", "1/4"},
      {"0", "0", "0", "1", "-3", "-3/4", "-1/4", "0"},
  });
  const ChartCoordsO c = worked_og();
  check_mat_equal(chart_layout(c), want);
  CHECK(is_isotropic(chart_point(c)));
}

TEST_CASE("chart shapes of the worked examples") {
  const ChartShape s1 = chart_shape(worked_type1());
  CHECK(s1.a_keys == std::vector<int>{3, 4});
  CHECK(s1.b_keys == std::vector<int>{3, 4});
  CHECK(s1.y_keys.empty());
  CHECK(s1.x_keys ==
        std::vector<CoordKey>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(s1.xi_keys == std::vector<CoordKey>{{1, 2}, {3, 4}});

  const ChartShape s2 = chart_shape(worked_type2());
  CHECK(s2.a_keys.empty());
  CHECK(s2.b_keys == std::vector<int>{1, 3, 4});  // b_2 is glued away
  CHECK(s2.y_keys == std::vector<int>{1, 2});
  CHECK(s2.xi_keys ==
        std::vector<CoordKey>{{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});

  const ChartShape so = chart_shape(worked_og());
  CHECK(so.a_keys.empty());
  CHECK(so.b_keys == std::vector<int>{1, 2});
  CHECK(so.xi_keys ==
        std::vector<CoordKey>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

TEST_CASE("to_standard flips dual columns only for even n") {
  Mat m(4, 8);
  int v = 1;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 8; ++j) m.at(i, j) = v++;
  }
  const Mat s = to_standard(m);  // n = 4: dual half negated
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(s.at(i, j) == m.at(i, j));
      CHECK(s.at(i, 4 + j) == -m.at(i, 4 + j));
    }
  }
  Mat odd(3, 6);
  v = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 6; ++j) odd.at(i, j) = v++;
  }
  CHECK(to_standard(odd) == odd);  // n = 3: unchanged
}

TEST_CASE("chart origin embeds to a single unit coordinate") {
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; l <= n; ++l) {
      ChartCoordsI c;
      c.n = n;
      c.l = l;
      const PluckerVector v = plucker_embed(chart_point(c));
      std::vector<int> key;
      for (int j = 1; j <= n; ++j) key.push_back(l + j);
      REQUIRE(v.coords.size() == 1);
      CHECK(v.coords.count(key) == 1);
      CHECK(v.coords.at(key) == 1);
    }
  }
}

TEST_CASE("distinguished minors are the expected monomials") {
  const ChartCoordsI c = worked_type1();  // a_3 = 2, a_4 = -1/2, b_3 = 3, b_4 = 1/3
  CHECK(distinguished_minor_formula(c, 0) == R("-2"));  // a_3^2 a_4
  CHECK(distinguished_minor_formula(c, 1) == R("2"));   // a_3
  CHECK(distinguished_minor_formula(c, 2) == R("1"));
  CHECK(distinguished_minor_formula(c, 3) == R("3"));   // b_3
  CHECK(distinguished_minor_formula(c, 4) == R("3"));   // b_3^2 b_4
  for (int k = 0; k <= 4; ++k) {
    CHECK(pullback_monomial(c, k) == distinguished_minor_formula(c, k));
  }
}

TEST_CASE("pullback monomials agree with evaluated minors on random charts") {
  SmallRatRng rng(301);
  for (int n = 1; n <= 4; ++n) {
    for (int l = 0; l <= n; ++l) {
      for (int t = 0; t < 5; ++t) {
        ChartCoordsI c;
        c.n = n;
        c.l = l;
        const ChartShape sh = chart_shape(c);
        for (int k : sh.a_keys) c.a[k] = rng.rat();
        for (int k : sh.b_keys) c.b[k] = rng.rat();
        for (CoordKey k : sh.x_keys) c.x[k] = rng.rat();
        for (CoordKey k : sh.xi_keys) c.xi[k] = rng.rat();
        for (int k = 0; k <= n; ++k) {
          // pullback_monomial itself cross-checks the evaluated minor
          // against the closed form and throws logic_error on mismatch.
          CHECK(pullback_monomial(c, k) == distinguished_minor_formula(c, k));
        }
      }
    }
  }
}

TEST_CASE("glued charts are only defined off the locus y_k y_{k+1} = 1") {
  ChartCoordsII c;
  c.n = 3;
  c.l = 0;
  c.tau.minus = {1};
  c.y[1] = R("2");
  c.y[2] = R("1/2");
  try {
    chart_layout(c);
    CHECK(false);
  } catch (const math_error& e) {
    CHECK(e.kind() == "open_locus");
  }
  c.y[2] = R("1");  // product 2, fine
  CHECK(is_isotropic(chart_point(c)));
}

TEST_CASE("the embedding rejects rank-deficient matrices") {
  IsotropicPoint p;
  p.family = Family::LG;
  p.n = 2;
  p.m = Mat(2, 4);
  p.m.at(0, 0) = 1;
  p.m.at(1, 0) = 1;  // duplicate rows, rank 1
  try {
    plucker_embed(p);
    CHECK(false);
  } catch (const math_error& e) {
    CHECK(e.kind() == "rank");
  }
}

TEST_CASE("projective helpers") {
  ChartCoordsI c = worked_type1();
  const PluckerVector v = plucker_embed(chart_point(c));
  PluckerVector w = v;
  for (auto& kv : w.coords) kv.second *= R("-6/7");
  CHECK(proj_equal(v, w));
  CHECK(normalize_projective(v).coords == normalize_projective(w).coords);
  PluckerVector u = v;
  u.coords.begin()->second += 1;
  CHECK(!proj_equal(v, u));

  // weight_truncate keeps exactly the coordinates with k dual labels
  for (int k = 0; k <= 4; ++k) {
    const PluckerVector part = weight_truncate(v, k);
    for (const auto& kv : part.coords) {
      int w_count = 0;
      for (int e : kv.first) {
        if (e > v.n) ++w_count;
      }
      CHECK(w_count == k);
      CHECK(kv.second == v.coords.at(kv.first));
    }
  }
}

TEST_CASE("stratum generators vanish exactly by rank, symmetric case") {
  SmallRatRng rng(302);
  for (int n = 2; n <= 5; ++n) {
    for (int l = 0; l <= n; ++l) {
      for (int t = 0; t < 6; ++t) {
        ChartCoordsI c;
        c.n = n;
        c.l = l;
        const ChartShape sh = chart_shape(c);
        // Random fill with many zero layers so that low ranks actually occur.
        for (int k : sh.a_keys) c.a[k] = (rng.index(2) == 0) ? Rat(0) : rng.rat();
        for (int k : sh.b_keys) c.b[k] = (rng.index(2) == 0) ? Rat(0) : rng.rat();
        for (CoordKey k : sh.x_keys) c.x[k] = rng.rat();
        for (CoordKey k : sh.xi_keys) c.xi[k] = rng.rat();
        const Mat layout = chart_layout(c);
        Mat z(l, l), w(n - l, n - l);
        for (int i = 0; i < l; ++i) {
          for (int j = 0; j < l; ++j) z.at(i, j) = layout.at(i, j);
        }
        for (int i = 0; i < n - l; ++i) {
          for (int j = 0; j < n - l; ++j) {
            w.at(i, j) = layout.at(l + i, n + l + j);
          }
        }
        for (int k = 0; k <= n; ++k) {
          IdealSpec spec{Family::LG, n, l, k};
          const auto gens = ideal_generators(spec, c);
          if (k == l) {
            REQUIRE(gens.size() == 1);
            CHECK(gens[0] == 1);
            continue;
          }
          bool all_zero = true;
          for (const Rat& g : gens) {
            if (g != 0) all_zero = false;
          }
          const std::size_t r = (k < l) ? rank(z) : rank(w);
          const std::size_t bound = (k < l) ? static_cast<std::size_t>(l - k)
                                            : static_cast<std::size_t>(k - l);
          // all (m)-minors vanish  iff  rank <= m - 1
          CHECK(all_zero == (r + 1 <= bound));
        }
      }
    }
  }
}

TEST_CASE("stratum generators vanish exactly by rank, antisymmetric case") {
  SmallRatRng rng(303);
  for (int n = 2; n <= 6; ++n) {
    const int h = n / 2;
    for (int l = 0; l <= n; l += 2) {
      if (l / 2 > h) continue;
      for (int t = 0; t < 6; ++t) {
        ChartCoordsO c;
        c.n = n;
        c.l = l;
        const ChartShape sh = chart_shape(c);
        for (int k : sh.a_keys) c.a[k] = (rng.index(2) == 0) ? Rat(0) : rng.rat();
        for (int k : sh.b_keys) c.b[k] = (rng.index(2) == 0) ? Rat(0) : rng.rat();
        for (CoordKey k : sh.x_keys) c.x[k] = rng.rat();
        for (CoordKey k : sh.xi_keys) c.xi[k] = rng.rat();
        const Mat layout = chart_layout(c);
        Mat z(l, l), w(n - l, n - l);
        for (int i = 0; i < l; ++i) {
          for (int j = 0; j < l; ++j) z.at(i, j) = layout.at(i, j);
        }
        for (int i = 0; i < n - l; ++i) {
          for (int j = 0; j < n - l; ++j) {
            w.at(i, j) = layout.at(l + i, n + l + j);
          }
        }
        for (int k = 0; 2 * k <= n; ++k) {
          IdealSpec spec{Family::OG, n, l, k};
          const auto gens = ideal_generators(spec, c);
          if (2 * k == l) {
            REQUIRE(gens.size() == 1);
            CHECK(gens[0] == 1);
            continue;
          }
          bool all_zero = true;
          for (const Rat& g : gens) {
            if (g != 0) all_zero = false;
          }
          const std::size_t r = (2 * k < l) ? rank(z) : rank(w);
          const int size = (2 * k < l) ? (l - 2 * k) : (2 * k - l);
          // Pfaffians of all principal size-m submatrices vanish iff
          // rank <= m - 2 (skew ranks are even).
          CHECK(all_zero == (r + 2 <= static_cast<std::size_t>(size) + 1));
        }
      }
    }
  }
}

TEST_CASE("form helpers on explicit vectors") {
  // n = 2, rows u = e_1 + e*_1 and v = e_2 + 3 e*_1.
  Mat m(2, 4);
  m.at(0, 0) = 1;
  m.at(0, 2) = 1;
  m.at(1, 1) = 1;
  m.at(1, 2) = 3;
  CHECK(q_form(m, 0) == 1);   // alpha(v) = 1
  CHECK(q_form(m, 1) == 0);   // e*_1 pairs with e_2 trivially
  CHECK(beta_form(m, 0, 1) == 3);   // a1(v2) + a2(v1) = 0 + 3
  CHECK(omega_form(m, 0, 1) == 3);  // a2(v1) - a1(v2) = 3 - 0
  CHECK(omega_form(m, 0, 0) == 0);
}
