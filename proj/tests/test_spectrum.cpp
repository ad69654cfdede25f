#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "paneitz/rng.hpp"
#include "paneitz/spectrum.hpp"

using namespace paneitz;

namespace {

struct Prepared {
  ModelData md;
  PaneitzCoefficients coeffs;
  QValue q;
};

Prepared prepare(const ModelManifold& m) {
  Prepared p{model_data(m), {}, {}};
  p.coeffs = coefficients(p.md.invariants.n);
  p.q = q_curvature(p.md.curvature, p.coeffs);
  return p;
}

SpectrumResult enumerate_model(const ModelManifold& m, long long count,
                               const EnumerationOptions& opts = {}) {
  const auto p = prepare(m);
  return enumerate_spectrum(p.md.spectrum, p.md.curvature, p.q, p.coeffs, count, opts);
}

FlatTorus random_torus(int n, Rng& rng) {
  std::vector<double> radii(n);
  double s2 = 0.0;
  for (double& r : radii) {
    r = rng.uniform(0.5, 1.5);
    s2 += r * r;
  }
  for (double& r : radii) r /= std::sqrt(s2);
  return {radii};
}

} // namespace

TEST_CASE("unit S^7 spectrum head") {
  const auto res = enumerate_model(GeodesicSphere{7, 1, 0, 1.0}, 2);
  REQUIRE(res.slices.size() >= 2);
  CHECK(res.slices[0].value == doctest::Approx(59.0625).epsilon(1e-13));
  CHECK(res.slices[0].multiplicity == 1);
  CHECK(res.slices[1].value == doctest::Approx(216.5625).epsilon(1e-13));
  CHECK(res.slices[1].multiplicity == 8);
  CHECK(res.certificate.lower_bound_at_cutoff > res.slices.back().value);
}

TEST_CASE("equal-radius flat torus: P = Delta^2") {
  const FlatTorus torus{std::vector<double>(7, 1.0 / std::sqrt(7.0))};
  const auto res = enumerate_model(torus, 15);
  REQUIRE(res.slices.size() >= 2);
  CHECK(res.slices[0].value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(res.slices[0].multiplicity == 1);
  CHECK(res.slices[1].value == doctest::Approx(49.0).epsilon(1e-12));
  CHECK(res.slices[1].multiplicity == 14); // 7 circles x (+-1), merged by symmetry
}

TEST_CASE("Clifford S^3 x S^4: lambda2 at the first S^4 mode") {
  const auto res =
      enumerate_model(make_product_sphere(3, 4, std::sqrt(3.0 / 7.0)), 6);
  REQUIRE(res.slices.size() >= 2);
  CHECK(res.slices[0].value == doctest::Approx(65513.0 / 1600.0).epsilon(1e-13));
  CHECK(res.slices[1].value == doctest::Approx(859019.0 / 4800.0).epsilon(1e-13));
  CHECK(res.slices[1].multiplicity == 5);
  REQUIRE(res.slices[1].modes.size() == 2);
  CHECK(res.slices[1].modes[0] == 0); // S^3 constant
  CHECK(res.slices[1].modes[1] == 1); // first S^4 harmonic level
}

TEST_CASE("second_eigenvalue conventions") {
  std::vector<SpectrumSlice> sphere{{59.0625, 1, {0}}, {216.5625, 8, {1}}};
  CHECK(second_eigenvalue(sphere) == 216.5625);
  std::vector<SpectrumSlice> torus{{0.0, 1, {0}}, {49.0, 14, {1}}};
  CHECK(second_eigenvalue(torus) == 49.0);
  std::vector<SpectrumSlice> multi{{5.0, 3, {0}}, {9.0, 1, {1}}};
  CHECK(second_eigenvalue(multi) == 5.0); // multiplicity-counted
  CHECK(second_eigenvalue(multi, /*distinct=*/true) == 9.0);
  std::vector<SpectrumSlice> single{{5.0, 1, {0}}};
  CHECK_THROWS_AS(second_eigenvalue(single), std::invalid_argument);
}

TEST_CASE("certificate soundness: brute force past the cutoff") {
  // every mode with total Laplacian eigenvalue in (s*, 4 s*] must sit at or
  // above the certified lower bound
  auto check = [](const ModelManifold& m, long long count) {
    const auto p = prepare(m);
    const auto res = enumerate_spectrum(p.md.spectrum, p.md.curvature, p.q, p.coeffs, count);
    const double s_star = res.certificate.cutoff;
    const auto& factors = p.md.spectrum.factors;
    double rho_max = 0.0;
    for (const auto& f : factors) rho_max = std::max(rho_max, f.ricci);
    // the quadratic minorant behind the certificate, increasing past its vertex
    auto minorant = [&](double s) {
      return s * s + (p.coeffs.a * p.md.curvature.scalar + p.coeffs.b * rho_max) * s +
             0.5 * (p.md.invariants.n - 4.0) * p.q.q;
    };
    std::vector<FactorMode> modes(factors.size());
    double violated = 1e300;
    auto rec = [&](auto&& self, size_t j, double acc) -> void {
      if (j == factors.size()) {
        const double lam = paneitz_symbol(p.md.invariants.n, p.coeffs, p.md.curvature,
                                          modes, p.q);
        CHECK(lam >= minorant(acc) - 1e-9 * std::max(1.0, std::abs(lam)));
        if (acc > s_star)
          violated = std::min(violated, lam - res.certificate.lower_bound_at_cutoff);
        return;
      }
      for (int k = 0;; ++k) {
        const double mu = factors[j].eigenvalue(k);
        if (acc + mu > 4.0 * s_star) break;
        modes[j] = {mu, factors[j].ricci};
        self(self, j + 1, acc + mu);
      }
    };
    rec(rec, 0, 0.0);
    CHECK(violated >= 0.0);
  };
  check(GeodesicSphere{7, 1, 0, 1.0}, 4);
  check(GeodesicSphere{9, 2, -1, 0.8}, 3);
  check(make_product_sphere(3, 4, std::sqrt(3.0 / 7.0)), 6);
  check(make_product_sphere(1, 6, 0.4), 4);
  check(FlatTorus{std::vector<double>(5, 1.0 / std::sqrt(5.0))}, 10);
}

TEST_CASE("multiplicity stability under factor reordering") {
  Rng rng(3);
  const FlatTorus torus = random_torus(7, rng);
  FlatTorus reversed{std::vector<double>(torus.radii.rbegin(), torus.radii.rend())};
  const auto a = enumerate_model(torus, 12);
  const auto b = enumerate_model(reversed, 12);
  REQUIRE(a.slices.size() == b.slices.size());
  for (size_t i = 0; i < a.slices.size(); ++i) {
    CHECK(a.slices[i].value == doctest::Approx(b.slices[i].value).epsilon(1e-12));
    CHECK(a.slices[i].multiplicity == b.slices[i].multiplicity);
  }

  const auto pa = enumerate_model(make_product_sphere(3, 4, 0.6), 8);
  const auto pb = enumerate_model(make_product_sphere(4, 3, 0.8), 8);
  REQUIRE(pa.slices.size() == pb.slices.size());
  for (size_t i = 0; i < pa.slices.size(); ++i) {
    CHECK(pa.slices[i].value == doctest::Approx(pb.slices[i].value).epsilon(1e-12));
    CHECK(pa.slices[i].multiplicity == pb.slices[i].multiplicity);
  }
}

TEST_CASE("scaling the model by t scales eigenvalues by 1/t^4") {
  for (double t : {0.5, 2.0, 3.0}) {
    const auto base = enumerate_model(GeodesicSphere{7, 1, 0, 1.0}, 6);
    const auto scaled = enumerate_model(GeodesicSphere{7, 1, 0, t}, 6);
    REQUIRE(base.slices.size() == scaled.slices.size());
    for (size_t i = 0; i < base.slices.size(); ++i) {
      CHECK(scaled.slices[i].value ==
            doctest::Approx(base.slices[i].value / (t * t * t * t)).epsilon(1e-11));
      CHECK(scaled.slices[i].multiplicity == base.slices[i].multiplicity);
    }
  }

  // torus route: scale the factor spectra and curvature package directly
  // (the catalog type pins the ambient to the unit sphere)
  Rng rng(8);
  const FlatTorus torus = random_torus(6, rng);
  const double t = 1.7, t2 = t * t, t4 = t2 * t2;
  const auto p = prepare(torus);
  SpectrumSource scaled_source = p.md.spectrum;
  for (auto& f : scaled_source.factors) f.radius *= t;
  const auto scaled_curv = make_curvature_data(6, {{0.0, 6}}, 0.0, true);
  const auto scaled =
      enumerate_spectrum(scaled_source, scaled_curv, p.q, p.coeffs, 10);
  const auto base = enumerate_spectrum(p.md.spectrum, p.md.curvature, p.q, p.coeffs, 10);
  REQUIRE(base.slices.size() >= 2);
  for (size_t i = 0; i < std::min(base.slices.size(), scaled.slices.size()); ++i)
    CHECK(scaled.slices[i].value ==
          doctest::Approx(base.slices[i].value / t4).epsilon(1e-11));
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_model(GeodesicSphere{7, 1, 0, 1.0}, 1), std::invalid_argument);
  EnumerationOptions tiny;
  tiny.max_modes = 2;
  CHECK_THROWS_AS(enumerate_model(FlatTorus{std::vector<double>(5, 1.0 / std::sqrt(5.0))}, 10, tiny),
                  NumericalError);
}

TEST_CASE("flat torus grid oracle") {
  const FlatTorus torus{std::vector<double>(7, 1.0 / std::sqrt(7.0))};

  // mode 0 is exactly zero
  const auto head = flat_torus_grid_oracle(torus, 32, 3);
  CHECK(head[0] == 0.0);

  // lambda2 within the discrete-symbol deviation of the analytic 49
  const double h = 2.0 * std::numbers::pi / 32.0;
  const double sym_defect = 1.0 - (2.0 - 2.0 * std::cos(h)) / (h * h);
  CHECK(std::abs(head[1] - 49.0) / 49.0 <= 2.5 * sym_defect);
  CHECK(head[1] < 49.0);

  // doubling N shrinks the defect roughly quadratically
  const auto fine = flat_torus_grid_oracle(torus, 64, 3);
  const double ratio = (49.0 - head[1]) / (49.0 - fine[1]);
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);

  CHECK_THROWS_AS(flat_torus_grid_oracle(torus, 7, 3), std::invalid_argument);
  CHECK_THROWS_AS(flat_torus_grid_oracle(torus, 6, 3), std::invalid_argument);
}

TEST_CASE("grid oracle with extrapolation matches the certified enumeration") {
  Rng rng(17);
  for (int trial = 0; trial < 4; ++trial) {
    const int n = trial % 2 == 0 ? 7 : 8;
    const FlatTorus torus = random_torus(n, rng);
    const auto res = enumerate_model(torus, 10);
    std::vector<double> enumerated;
    for (const auto& s : res.slices) {
      for (long long i = 0; i < s.multiplicity && enumerated.size() < 10; ++i)
        enumerated.push_back(s.value);
      if (enumerated.size() >= 10) break;
    }
    const auto oracle = flat_torus_grid_oracle_extrapolated(torus, 64, 10);
    REQUIRE(oracle.size() >= enumerated.size());
    for (size_t i = 0; i < enumerated.size(); ++i)
      CHECK(std::abs(oracle[i] - enumerated[i]) <=
            1e-6 * std::max(1.0, std::abs(enumerated[i])));
  }
}
