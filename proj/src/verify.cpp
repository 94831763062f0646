#include "isogr/verify.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "isogr/clifford.hpp"
#include "isogr/lm.hpp"
#include "isogr/picard.hpp"

namespace isogr {

namespace {

std::string fam_tag(Family f) { return f == Family::LG ? "lg" : "og"; }

// One rng per named check, derived from the user seed so that checks are
// insensitive to each other's draw counts.
SmallRatRng make_rng(std::uint64_t seed, std::uint64_t salt, int n) {
  return SmallRatRng(seed * 1000003ull + salt * 7919ull +
                     static_cast<std::uint64_t>(n));
}

class Checker {
 public:
  explicit Checker(std::string name) {
    res_.name = std::move(name);
    res_.pass = true;
  }

  void fail(const std::string& detail) {
    if (res_.pass) {
      res_.pass = false;
      res_.detail = detail;
    }
  }

  void require(bool ok, const std::string& detail) {
    if (!ok) fail(detail);
  }

  const CheckResult& result() const { return res_; }

 private:
  CheckResult res_;
};

std::string spot(int n, int l, int trial) {
  std::ostringstream os;
  os << "n=" << n << " l=" << l << " trial=" << trial;
  return os.str();
}

void split_row(const Mat& m, std::size_t r, std::vector<Rat>& v,
               std::vector<Rat>& alpha) {
  const std::size_t n = m.cols() / 2;
  v.assign(n, Rat(0));
  alpha.assign(n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    v[j] = m.at(r, j);
    alpha[j] = m.at(r, n + j);
  }
}

bool rows_annihilate(const IsotropicPoint& p, const ExtElement& e) {
  std::vector<Rat> v, alpha;
  for (std::size_t r = 0; r < p.m.rows(); ++r) {
    split_row(p.m, r, v, alpha);
    if (!clifford_act(v, alpha, e).terms.empty()) return false;
  }
  return true;
}

bool all_vanish(const std::vector<Rat>& gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [](const Rat& g) { return g == 0; });
}

std::vector<Rat> to_rat_vector(const IVec& v) {
  std::vector<Rat> out;
  out.reserve(v.size());
  for (const Int& c : v) out.emplace_back(c);
  return out;
}

}  // namespace

ChartCoordsI random_chart_i(int n, int l, SmallRatRng& rng) {
  ChartCoordsI c;
  c.n = n;
  c.l = l;
  const ChartShape sh = chart_shape(c);
  for (int k : sh.a_keys) c.a[k] = rng.rat();
  for (int k : sh.b_keys) c.b[k] = rng.rat();
  for (const CoordKey& k : sh.x_keys) c.x[k] = rng.rat();
  for (const CoordKey& k : sh.xi_keys) c.xi[k] = rng.rat();
  return c;
}

ChartCoordsII random_chart_ii(int n, int l, const Type2Tau& tau,
                              SmallRatRng& rng) {
  ChartCoordsII c;
  c.n = n;
  c.l = l;
  c.tau = tau;
  const ChartShape sh = chart_shape(c);
  for (int k : sh.a_keys) c.a[k] = rng.rat();
  for (int k : sh.b_keys) c.b[k] = rng.rat();
  for (int k : sh.y_keys) c.y[k] = rng.rat();
  for (const CoordKey& k : sh.x_keys) c.x[k] = rng.rat();
  for (const CoordKey& k : sh.xi_keys) c.xi[k] = rng.rat();
  // Stay off the excluded locus of the glued layers.
  for (const auto& list : {tau.plus, tau.minus}) {
    for (int k : list) {
      while (c.y[k] * c.y[k + 1] == 1) c.y[k + 1] = rng.rat();
    }
  }
  return c;
}

ChartCoordsO random_chart_o(int n, int l, SmallRatRng& rng) {
  ChartCoordsO c;
  c.n = n;
  c.l = l;
  const ChartShape sh = chart_shape(c);
  for (int k : sh.a_keys) c.a[k] = rng.rat();
  for (int k : sh.b_keys) c.b[k] = rng.rat();
  for (const CoordKey& k : sh.x_keys) c.x[k] = rng.rat();
  for (const CoordKey& k : sh.xi_keys) c.xi[k] = rng.rat();
  return c;
}

Mat random_symmetric(int n, SmallRatRng& rng) {
  Mat X(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const Rat v = rng.rat();
      X.at(i, j) = v;
      X.at(j, i) = v;
    }
  }
  return X;
}

Mat random_skew(int n, SmallRatRng& rng) {
  Mat X(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Rat v = rng.rat();
      X.at(i, j) = v;
      X.at(j, i) = -v;
    }
  }
  return X;
}

Mat random_symmetric_rank(int n, int r, SmallRatRng& rng) {
  Mat C(r, n);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) C.at(i, j) = rng.rat();
  }
  return transpose(C) * C;  // symmetric, rank <= r
}

Mat random_skew_rank(int n, int r, SmallRatRng& rng) {
  const int m = (r / 2) * 2;
  Mat C(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) C.at(i, j) = rng.rat();
  }
  Mat J(m, m);
  for (int i = 0; i + 1 < m; i += 2) {
    J.at(i, i + 1) = 1;
    J.at(i + 1, i) = -1;
  }
  return transpose(C) * J * C;  // skew, rank <= m
}

SuiteResult suite_charts(Family family, int max_n, std::uint64_t seed,
                         int trials) {
  SuiteResult out;
  out.suite = "charts";
  if (family == Family::LG) {
    for (int n = 1; n <= max_n; ++n) {
      {
        Checker ck("lg_typeI_isotropy_n" + std::to_string(n));
        SmallRatRng rng = make_rng(seed, 11, n);
        for (int l = 0; l <= n; ++l) {
          for (int t = 0; t < trials; ++t) {
            const ChartCoordsI c = random_chart_i(n, l, rng);
            ck.require(is_isotropic(chart_point(c)), spot(n, l, t));
          }
        }
        out.checks.push_back(ck.result());
      }
      {
        Checker ck("lg_typeII_isotropy_n" + std::to_string(n));
        SmallRatRng rng = make_rng(seed, 13, n);
        for (int l = 0; l <= n; ++l) {
          for (const Type2Tau& tau : enum_type2(n, l)) {
            for (int t = 0; t < trials; ++t) {
              const ChartCoordsII c = random_chart_ii(n, l, tau, rng);
              ck.require(is_isotropic(chart_point(c)), spot(n, l, t));
            }
          }
        }
        out.checks.push_back(ck.result());
      }
      {
        Checker ck("lg_typeII_open_locus_n" + std::to_string(n));
        for (int l = 0; l <= n; ++l) {
          for (const Type2Tau& tau : enum_type2(n, l)) {
            if (tau.plus.empty() && tau.minus.empty()) continue;
            ChartCoordsII c;
            c.n = n;
            c.l = l;
            c.tau = tau;
            const int k = tau.plus.empty() ? tau.minus.front() : tau.plus.front();
            c.y[k] = 2;
            c.y[k + 1] = Rat(1) / 2;
            try {
              chart_layout(c);
              ck.fail(spot(n, l, 0) + ": no error on the excluded locus");
            } catch (const math_error& e) {
              ck.require(e.kind() == "open_locus",
                         spot(n, l, 0) + ": unexpected kind " + e.kind());
            }
          }
        }
        out.checks.push_back(ck.result());
      }
      if (n <= 5) {
        Checker ck("lg_pullback_monomial_n" + std::to_string(n));
        SmallRatRng rng = make_rng(seed, 17, n);
        for (int l = 0; l <= n; ++l) {
          for (int k = 0; k <= n; ++k) {
            for (int t = 0; t < trials; ++t) {
              const ChartCoordsI c = random_chart_i(n, l, rng);
              try {
                pullback_monomial(c, k);
              } catch (const std::logic_error&) {
                ck.fail(spot(n, l, t) + " k=" + std::to_string(k));
              }
            }
          }
        }
        out.checks.push_back(ck.result());
      }
    }
  } else {
    for (int n = 2; n <= max_n; ++n) {
      Checker ck("og_isotropy_n" + std::to_string(n));
      SmallRatRng rng = make_rng(seed, 19, n);
      for (int l = 0; l <= n; l += 2) {
        for (int t = 0; t < trials; ++t) {
          const ChartCoordsO c = random_chart_o(n, l, rng);
          ck.require(is_isotropic(chart_point(c)), spot(n, l, t));
        }
      }
      out.checks.push_back(ck.result());
    }
  }
  return out;
}

SuiteResult suite_spinor(Family family, int max_n, std::uint64_t seed,
                         int trials) {
  if (family != Family::OG) {
    throw usage_error("the spinor suite applies to the orthogonal family");
  }
  SuiteResult out;
  out.suite = "spinor";
  for (int n = 1; n <= max_n; ++n) {
    Checker ck("spinor_annihilation_n" + std::to_string(n));
    SmallRatRng rng = make_rng(seed, 23, n);
    for (int l = 0; l <= n; l += 2) {
      for (int t = 0; t < trials; ++t) {
        const Mat A = random_skew(n, rng);
        ck.require(annihilation_check(n, l, A), spot(n, l, t));
      }
    }
    out.checks.push_back(ck.result());
  }
  for (int n = 2; n <= max_n; ++n) {
    Checker ck("chart_spinor_annihilation_n" + std::to_string(n));
    SmallRatRng rng = make_rng(seed, 29, n);
    for (int l = 0; l <= n; l += 2) {
      for (int t = 0; t < trials; ++t) {
        const ChartCoordsO c = random_chart_o(n, l, rng);
        const IsotropicPoint p = chart_point(c);
        const ExtElement e = spinor_embed(p, l);
        ck.require(rows_annihilate(p, e), spot(n, l, t));
      }
    }
    out.checks.push_back(ck.result());
  }
  return out;
}

SuiteResult suite_cones(Family family, int max_n) {
  SuiteResult out;
  out.suite = "cones";
  const std::string fam = fam_tag(family);
  const int nmin = family == Family::LG ? 1 : 2;
  for (int n = nmin; n <= max_n; ++n) {
    const PicardBasis basis = picard_basis(family, n);
    const int dim = 1 + basis.nminus + basis.nplus;
    const std::vector<IVec> ineqs = nef_inequalities(family, n);
    const std::vector<IVec> dd = nef_extremal_rays(family, n);
    const std::vector<IVec> claimed = nef_claimed(family, n);
    {
      Checker ck("nef_dd_equals_claimed_" + fam + "_n" + std::to_string(n));
      std::ostringstream os;
      os << "computed " << dd.size() << " rays, claimed " << claimed.size();
      ck.require(same_ray_set(dd, claimed), os.str());
      out.checks.push_back(ck.result());
    }
    {
      Checker ck("nef_equals_chain_polytope_" + fam + "_n" + std::to_string(n));
      const std::vector<IVec> cp = chain_polytope_rays(family, n);
      std::ostringstream os;
      os << "chain polytope " << cp.size() << " rays, nef " << dd.size();
      ck.require(same_ray_set(cp, dd), os.str());
      out.checks.push_back(ck.result());
    }
    if ((family == Family::LG && n <= 5) || (family == Family::OG && n <= 7)) {
      Checker ck("nef_dd_equals_bruteforce_" + fam + "_n" + std::to_string(n));
      const std::vector<IVec> bf = extreme_rays_bruteforce(ineqs, dim);
      std::ostringstream os;
      os << "double description " << dd.size() << " rays, brute force "
         << bf.size();
      ck.require(same_ray_set(dd, bf), os.str());
      out.checks.push_back(ck.result());
    }
    {
      Checker ck("nef_rays_nonneg_on_mori_" + fam + "_n" + std::to_string(n));
      for (const IVec& ray : dd) {
        const DivClass d = nef_vector_to_div(family, n, ray);
        for (const Int& v : pairing_row(family, n, d)) {
          if (v < 0) {
            ck.fail("a computed nef ray pairs negatively with a Mori generator");
          }
        }
      }
      out.checks.push_back(ck.result());
    }
    {
      // The inequality rows, evaluated at (h, a, b), must reproduce the
      // intersection pairings of h H + sum a_j Delta^-_j + sum b_i Delta^+_i
      // with the Mori generators, in matching order.
      Checker ck("pairings_match_inequality_rows_" + fam + "_n" +
                 std::to_string(n));
      const std::vector<CurveClass> mori = mori_generators(family, n);
      SmallRatRng rng = make_rng(0xc0de, 31, n);
      for (int t = 0; t < 10; ++t) {
        IVec v(dim);
        for (int i = 0; i < dim; ++i) {
          v[i] = Int(static_cast<long>(rng.raw() % 11) - 5);
        }
        const DivClass d = nef_vector_to_div(family, n, v);
        for (std::size_t i = 0; i < ineqs.size(); ++i) {
          Int lhs = 0;
          for (int c = 0; c < dim; ++c) lhs += ineqs[i][c] * v[c];
          if (lhs != pair_div_curve(d, mori[i])) {
            ck.fail("row " + std::to_string(i) + " trial " + std::to_string(t));
          }
        }
      }
      out.checks.push_back(ck.result());
    }
    {
      Checker ck("colors_in_effective_cone_" + fam + "_n" + std::to_string(n));
      const std::vector<DivClass> eff = eff_generators(family, n);
      const int kmax = family == Family::LG ? n : n / 2;
      for (int k = 0; k <= kmax; ++k) {
        if (!in_cone(eff, to_rat_vector(class_B(family, n, k)))) {
          ck.fail("B_" + std::to_string(k) + " not in the effective cone");
        }
      }
      std::vector<Rat> minus_h(static_cast<std::size_t>(dim), Rat(0));
      minus_h[0] = -1;
      ck.require(!in_cone(eff, minus_h), "-H reported effective");
      out.checks.push_back(ck.result());
    }
  }
  return out;
}

SuiteResult suite_fano(Family family, int max_n) {
  SuiteResult out;
  out.suite = "fano";
  const std::string fam = fam_tag(family);
  const int nmin = family == Family::LG ? 1 : 2;
  for (int n = nmin; n <= max_n; ++n) {
    {
      Checker ck("canonical_class_identity_" + fam + "_n" + std::to_string(n));
      const auto [direct, via_sections] = class_K(family, n);
      ck.require(direct == via_sections, "the two expressions disagree");
      out.checks.push_back(ck.result());
    }
    {
      Checker ck("fano_verdict_" + fam + "_n" + std::to_string(n));
      const int fano_top = family == Family::LG ? 2 : 5;
      const std::string expected = n <= fano_top ? "fano" : "weak_fano";
      try {
        const FanoReport rep = fano_classify(family, n);
        ck.require(rep.verdict == expected,
                   "verdict " + rep.verdict + ", expected " + expected);
      } catch (const math_error& e) {
        ck.fail(std::string("negative pairing: ") + e.what());
      }
      out.checks.push_back(ck.result());
    }
  }
  return out;
}

SuiteResult suite_lm(Family family, int max_n, std::uint64_t seed, int trials) {
  SuiteResult out;
  out.suite = "lm";
  const std::string fam = fam_tag(family);
  const int nmin = family == Family::LG ? 1 : 2;
  for (int n = nmin; n <= max_n; ++n) {
    {
      Checker ck("lm_round_trip_" + fam + "_n" + std::to_string(n));
      SmallRatRng rng = make_rng(seed, 37, n);
      for (int t = 0; t < trials; ++t) {
        const Rat x00 = rng.nonzero_rat();
        const Mat X = family == Family::LG ? random_symmetric(n, rng)
                                           : random_skew(n, rng);
        const LMPoint p = make_lm_point(family, n, x00, X);
        const LMPoint q =
            family == Family::LG
                ? lm_invert_lg(kal_project_lg(plucker_embed(lm_eval(p))))
                : lm_invert_og(kal_project_og(spinor_embed(lm_eval(p), 0)));
        ck.require(lm_equal_projective(p, q), spot(n, 0, t));
      }
      out.checks.push_back(ck.result());
    }
    {
      Checker ck("center_rank_property_" + fam + "_n" + std::to_string(n));
      SmallRatRng rng = make_rng(seed, 41, n);
      for (int t = 0; t < trials; ++t) {
        const int r = static_cast<int>(rng.index(static_cast<std::size_t>(n) + 1));
        Mat X = family == Family::LG ? random_symmetric_rank(n, r, rng)
                                     : random_skew_rank(n, r, rng);
        Rat x00 = (t % 2 == 0) ? Rat(0) : rng.nonzero_rat();
        bool zero_x = true;
        for (int i = 0; i < n && zero_x; ++i) {
          for (int j = 0; j < n && zero_x; ++j) {
            if (X.at(i, j) != 0) zero_x = false;
          }
        }
        if (x00 == 0 && zero_x) x00 = 1;
        const LMPoint p = make_lm_point(family, n, x00, X);
        const int rk = static_cast<int>(rank(X));
        for (int l = 0; l <= n - 1; ++l) {
          const bool y_vanish =
              all_vanish(center_generators({family, n, false, l}, p));
          ck.require(y_vanish == (rk <= l),
                     spot(n, l, t) + " rank-stratum generators");
          const bool z_vanish =
              all_vanish(center_generators({family, n, true, l}, p));
          const bool z_expected = (x00 == 0) && (l == 0 || rk <= n - l);
          ck.require(z_vanish == z_expected,
                     spot(n, l, t) + " x00-stratum generators");
        }
      }
      out.checks.push_back(ck.result());
    }
    {
      Checker ck("base_locus_" + fam + "_n" + std::to_string(n));
      SmallRatRng rng = make_rng(seed, 43, n);
      // Smallest singular-but-nonzero X: rank 1 symmetric, rank 2 skew.  For
      // the orthogonal family at n = 2 no such matrix exists (the base locus
      // is empty and the map is a morphism), so the throw branch is skipped.
      const bool has_base_locus = family == Family::LG ? n >= 2 : n >= 3;
      if (has_base_locus) {
        Mat X(n, n);
        if (family == Family::LG) {
          X.at(0, 0) = 1;
        } else {
          X.at(0, 1) = 1;
          X.at(1, 0) = -1;
        }
        const LMPoint p = make_lm_point(family, n, Rat(0), X);
        try {
          lm_eval(p);
          ck.fail("no error on the base locus");
        } catch (const math_error& e) {
          ck.require(e.kind() == "base_locus", "unexpected kind " + e.kind());
        }
      }
      {
        // Away from the base locus the image must be an isotropic point.
        Mat Xf = family == Family::LG ? random_symmetric(n, rng)
                                      : random_skew(n, rng);
        const LMPoint p = make_lm_point(family, n, Rat(1), Xf);
        ck.require(is_isotropic(lm_eval(p)), "image not isotropic");
      }
      if (family == Family::LG || n % 2 == 0) {
        // x00 = 0 with invertible X is a genuine point of the target.
        Mat Xf(n, n);
        if (family == Family::LG) {
          Xf = Mat::identity(n);
        } else {
          for (int i = 0; i + 1 < n; i += 2) {
            Xf.at(i, i + 1) = 1;
            Xf.at(i + 1, i) = -1;
          }
        }
        const LMPoint p = make_lm_point(family, n, Rat(0), Xf);
        ck.require(is_isotropic(lm_eval(p)), "x00 = 0 image not isotropic");
      }
      out.checks.push_back(ck.result());
    }
    {
      Checker ck("fiber_degree_" + fam + "_n" + std::to_string(n));
      const int cap = family == Family::LG ? n : n / 2;
      for (int s = 0; s < 2; ++s) {
        const FiberReport rep = family == Family::LG
                                    ? fiber_degree_lg(n, seed + 100 + s)
                                    : fiber_degree_og(n, seed + 100 + s);
        std::ostringstream os;
        os << "seed offset " << s << ": degree " << rep.max_degree
           << " (expected " << cap << "), unit "
           << (rep.unit_coordinate_ok ? "ok" : "bad") << ", residual "
           << (rep.residual_ok ? "ok" : "bad");
        ck.require(rep.max_degree == cap && rep.unit_coordinate_ok &&
                       rep.residual_ok,
                   os.str());
      }
      out.checks.push_back(ck.result());
    }
  }
  return out;
}

std::vector<SuiteResult> run_suites(const std::string& which, Family family,
                                    int max_n, std::uint64_t seed, int trials) {
  const auto pick = [&](const std::string& name, int fallback_lg,
                        int fallback_og) {
    if (max_n > 0) return max_n;
    (void)name;
    return family == Family::LG ? fallback_lg : fallback_og;
  };
  std::vector<SuiteResult> out;
  const bool all = which == "all";
  if (all || which == "charts") {
    out.push_back(suite_charts(family, pick("charts", 5, 6), seed, trials));
  }
  if (which == "spinor" || (all && family == Family::OG)) {
    out.push_back(suite_spinor(family, pick("spinor", 5, 5), seed, trials));
  }
  if (all || which == "cones") {
    out.push_back(suite_cones(family, pick("cones", 5, 7)));
  }
  if (all || which == "fano") {
    out.push_back(suite_fano(family, pick("fano", 8, 10)));
  }
  if (all || which == "lm") {
    out.push_back(suite_lm(family, pick("lm", 4, 4), seed, trials));
  }
  if (out.empty()) {
    throw usage_error("unknown suite: " + which);
  }
  return out;
}

}  // namespace isogr
