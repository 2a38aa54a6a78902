// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cliff/cliff.hpp"

using namespace cliff;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Corpus {
  int m, k;
  std::vector<CliffordPolynomial> polys;
};

constexpr int kDrawsPerDegree = 20;

const std::vector<Corpus>& decomposition_corpus() {
  static const std::vector<Corpus> corpus = [] {
    std::vector<Corpus> out;
    Rng rng(1);
    for (int m = 2; m <= 4; ++m)
      for (int k = 2; k <= 6; ++k) {
        Corpus c{m, k, {}};
        for (int i = 0; i < kDrawsPerDegree; ++i) c.polys.push_back(random_polynomial(m, k, rng, 6, std::nullopt, 3));
        out.push_back(std::move(c));
      }
    return out;
  }();
  return corpus;
}

Outcome fischer_exactness() {
  std::size_t n = 0;
  for (const auto& c : decomposition_corpus())
    for (const auto& p : c.polys) {
      const auto d = fischer_decompose(p, c.k);
      if (d.infra + mul_by_x_both(d.quotient) != p) return {false, "reconstruction failed"};
      if (!sandwich(d.infra).is_zero()) return {false, "sandwich(I) != 0"};
      // <I, x Q' x> over the full basis of P(k-2)
      const PolyBasis lower(c.m, c.k - 2);
      for (std::size_t i = 0; i < lower.size(); ++i)
        if (sgn(fischer_inner(d.infra, mul_by_x_both(lower.element(i)))) != 0) return {false, "not orthogonal"};
      ++n;
    }
  return {true, std::to_string(n) + " decompositions exact"};
}

Outcome direct_sum_dimensions() {
  std::ostringstream os;
  for (int m = 2; m <= 4; ++m)
    for (int k = 2; k <= 6; ++k) {
      const std::size_t lower = space_dim(m, k - 2);
      const std::size_t st_rank = fischer_operators(m, k)->st.rank();
      const BlockedOperator s(PolyBasis(m, k), {PolyBasis(m, k - 2)},
                              [](const CliffordPolynomial& p) { return stack_one(sandwich(p)); });
      const std::size_t kernel = space_dim(m, k) - s.rank();
      if (st_rank != lower || kernel != space_dim(m, k) - lower) {
        os << "m=" << m << " k=" << k << " rank(S∘T)=" << st_rank << " dim ker S=" << kernel;
        return {false, os.str()};
      }
    }
  return {true, "rank(S∘T) = dim P(k-2) and dim I(k) = dim P(k) - dim P(k-2) for 15 (m,k)"};
}

Outcome complete_tower() {
  for (const auto& c : decomposition_corpus())
    for (const auto& p : c.polys) {
      const auto t = fischer_tower(p, c.k);
      if (t.layers.size() != static_cast<std::size_t>(c.k / 2 + 1)) return {false, "wrong layer count"};
      if (t.reconstruct() != p) return {false, "tower does not reconstruct"};
      for (const auto& layer : t.layers)
        if (!is_inframonogenic(layer.infra)) return {false, "layer not inframonogenic"};
    }
  return {true, "300 towers reconstruct with floor(k/2)+1 layers"};
}

struct Shape {
  int m, k;
};

const std::vector<Shape>& sample_shapes() {
  static const std::vector<Shape> shapes = [] {
    std::vector<Shape> out;
    for (int m = 2; m <= 4; ++m)
      for (int k = 2; k <= 5; ++k) out.push_back({m, k});
    return out;
  }();
  return shapes;
}

Outcome inclusion_chain() {
  Rng rng(4);
  const auto& shapes = sample_shapes();
  for (int i = 0; i < 100; ++i) {
    const Shape s = shapes[static_cast<std::size_t>(i) % shapes.size()];
    const CliffordPolynomial f = KernelSampler(s.m, s.k, KernelKind::Inframonogenic).sample(rng);
    if (!dirac_power(f, 3, Side::Left).is_zero() || !dirac_power(f, 3, Side::Right).is_zero())
      return {false, "inframonogenic sample not two-sided 3-monogenic"};
    if (!is_biharmonic(f)) return {false, "inframonogenic sample not biharmonic"};
  }
  for (int i = 0; i < 100; ++i) {
    const Shape s = shapes[static_cast<std::size_t>(i) % shapes.size()];
    const KernelKind kind = i % 2 ? KernelKind::LeftMonogenic : KernelKind::RightMonogenic;
    if (!is_inframonogenic(KernelSampler(s.m, s.k, kind).sample(rng))) return {false, "monogenic sample not inframonogenic"};
  }
  int scalar = 0;
  for (const auto& s : shapes) {
    const KernelSampler sampler(s.m, s.k, KernelKind::Inframonogenic, 0);
    for (int i = 0; i < 5 && sampler.kernel_dim() > 0; ++i, ++scalar)
      if (!is_harmonic(sampler.sample(rng))) return {false, "scalar inframonogenic sample not harmonic"};
  }
  return {true, "100 inframonogenic, 100 one-sided monogenic, " + std::to_string(scalar) + " scalar samples"};
}

Outcome two_sided_products() {
  Rng rng(5);
  std::vector<Shape> shapes;
  for (int m = 2; m <= 4; ++m)
    for (int k = 1; k <= 4; ++k) shapes.push_back({m, k});
  int nontrivial = 0;
  for (int i = 0; i < 50; ++i) {
    const Shape s = shapes[static_cast<std::size_t>(i) % shapes.size()];
    const CliffordPolynomial f = KernelSampler(s.m, s.k, KernelKind::TwoSidedMonogenic).sample(rng);
    if (!is_two_sided_monogenic(f)) return {false, "sample not two-sided monogenic"};
    nontrivial += !f.is_zero();
    const CliffordPolynomial xf = mul_by_x_left(f), fx = mul_by_x_right(f);
    if (!sandwich(xf).is_zero() || !sandwich(fx).is_zero()) return {false, "x f or f x not inframonogenic"};
    if (!laplacian(xf).is_zero() || !laplacian(fx).is_zero()) return {false, "x f or f x not harmonic"};
  }
  return {true, "50 samples (" + std::to_string(nontrivial) + " nonzero)"};
}

Outcome identity_suite() {
  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    const int m = 1 + i % 5;
    const int g = i % (m + 1);
    const CliffordPolynomial f = random_polynomial(m, i % 5, rng, 4, g, 3);
    for (const auto& v : identity_checks(f))
      if (!v.holds) return {false, v.name + " failed"};
    if (conjugate_sum(f) != f * Rational(conjugate_sum_eigenvalue(m, g))) return {false, "conjugate sum eigenvalue"};
  }
  return {true, "200 inputs, 4 identities + conjugate-sum eigenvalue"};
}

struct GradedShape {
  int m, k, g;
};

Outcome harmonic_infra_biconditionals() {
  Rng rng(7);
  std::vector<GradedShape> shapes;
  for (int m = 2; m <= 4; ++m)
    for (int k = 2; k <= 4; ++k)
      for (int g = 0; g <= m; ++g)
        if (2 * g != m) shapes.push_back({m, k, g});
  int positives = 0, total = 0;
  for (KernelKind kind : {KernelKind::Harmonic, KernelKind::Inframonogenic}) {
    int drawn = 0;
    for (std::size_t i = 0; drawn < 50; ++i) {
      const GradedShape s = shapes[i % shapes.size()];
      const KernelSampler sampler(s.m, s.k, kind, s.g);
      if (sampler.kernel_dim() == 0) continue;
      const auto v = harmonic_infra_verdicts(sampler.sample(rng));
      if (!v.agree()) {
        std::ostringstream os;
        os << "disagreement at m=" << s.m << " k=" << s.k << " grade=" << s.g;
        return {false, os.str()};
      }
      positives += v.harmonic_and_inframonogenic;
      ++drawn;
      ++total;
    }
  }
  return {true, std::to_string(total) + " samples agree (" + std::to_string(positives) + " positive)"};
}

Outcome almansi_characterization() {
  Rng rng(8);
  std::vector<Shape> shapes;
  for (int m = 2; m <= 4; ++m)
    for (int k = 1; k <= 4; ++k) shapes.push_back({m, k});
  int positives = 0;
  for (int i = 0; i < 100; ++i) {
    const Shape s = shapes[static_cast<std::size_t>(i) % shapes.size()];
    const KernelKind kind = i % 4 == 3 ? KernelKind::HarmonicInframonogenic : KernelKind::Harmonic;
    const CliffordPolynomial h = KernelSampler(s.m, s.k, kind).sample(rng);
    const auto r = harmonic_inframonogenic_analysis(h, s.k);
    if (!almansi_dirac_identity(h, r.split)) return {false, "d h != -m f2 - 2E f2"};
    if (!r.verdicts_agree()) return {false, "verdicts disagree"};
    positives += r.inframonogenic;
  }
  const CliffordPolynomial counter = parse_polynomial("x1*x2*e1", 2);
  if (sandwich(counter) != parse_polynomial("-2*e2", 2)) return {false, "counterexample sandwich mismatch"};
  if (!is_harmonic(counter)) return {false, "counterexample not harmonic"};
  return {true, "100 harmonic samples agree (" + std::to_string(positives) + " inframonogenic); x1x2e1 -> -2e2"};
}

Outcome numeric_family() {
  using namespace cliff::numeric;
  Rng rng(9);
  std::uniform_real_distribution<double> coef(-2.0, 2.0), freq(-3.0, 3.0);
  const auto grid = square_grid(5);
  const auto coarse_grid = square_grid(5);
  double worst_sandwich = 0.0, worst_ode = 0.0, min_factor = 1e300, max_factor = 0.0;
  int fails = 0, missed_harmonic = 0, false_harmonic = 0;
  std::ostringstream bad;
  for (int i = 0; i < 20; ++i) {
    TrigExpFamily f{coef(rng), coef(rng), coef(rng), coef(rng), freq(rng)};
    const double r = max_sandwich_residual(as_field(f), grid, kDefaultStep);
    worst_sandwich = std::max(worst_sandwich, r);
    if (r > kResidualTolerance) {
      ++fails;
      bad << " draw" << i << "(n=" << f.n << ")=" << r;
    }
    // harmonic exactly when c2 = c4 = 0
    const TrigExpFamily g{f.c1, 0.0, f.c3, 0.0, f.n};
    if (family_harmonicity_scan(f, grid).harmonic) ++false_harmonic;
    if (!family_harmonicity_scan(g, grid).harmonic) {
      ++missed_harmonic;
      bad << " c2=c4=0 draw" << i << " laplacian=" << family_harmonicity_scan(g, grid).max_residual;
    }
    for (const auto& p : grid) {
      const auto o = ode_system_residual(f, p[0]);
      worst_ode = std::max({worst_ode, std::abs(o.alpha), std::abs(o.beta)});
    }
    const double e1 = max_sandwich_residual(as_field(f), coarse_grid, 1e-2);
    const double e2 = max_sandwich_residual(as_field(f), coarse_grid, 5e-3);
    min_factor = std::min(min_factor, e1 / e2);
    max_factor = std::max(max_factor, e1 / e2);
  }
  std::ostringstream os;
  os.precision(3);
  os << "max sandwich residual " << worst_sandwich << " (" << fails << "/20 draws above 1e-6)"
     << ", harmonicity verdict errors " << missed_harmonic << " (c2=c4=0 judged non-harmonic) + "
     << false_harmonic << " (c2,c4 != 0 judged harmonic)" << ", max ODE residual " << worst_ode
     << ", halving factor in [" << min_factor << ", " << max_factor << "]";
  if (fails) os << ";" << bad.str();
  const bool pass = fails == 0 && missed_harmonic == 0 && false_harmonic == 0 && worst_ode <= 1e-10 && min_factor >= 3.5 && max_factor <= 4.5;
  return {pass, os.str()};
}

Outcome inner_product() {
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k <= 4; ++k) {
      const PolyBasis b(m, k);
      for (std::size_t i = 0; i < b.size(); ++i) {
        const CliffordPolynomial bi = b.element(i);
        for (std::size_t j = 0; j < b.size(); ++j) {
          const Rational v = fischer_inner(bi, b.element(j));
          if (i == j ? sgn(v) <= 0 : sgn(v) != 0) return {false, "Gram matrix not positive diagonal"};
        }
      }
    }
  Rng rng(10);
  for (int i = 0; i < 200; ++i) {
    const int m = 1 + i % 4, k = i % 5;
    const CliffordPolynomial p = random_polynomial(m, k, rng, 4, std::nullopt, 3);
    const CliffordPolynomial q = random_polynomial(m, k, rng, 4, std::nullopt, 3);
    if (fischer_inner(p, q) != fischer_inner_differential(p, q)) return {false, "closed form != differential"};
  }
  for (int i = 0; i < 100; ++i) {
    const int m = 1 + i % 4, k = 2 + i % 4;
    const CliffordPolynomial q = random_polynomial(m, k, rng, 4, std::nullopt, 3);
    if (!adjoint_checks(random_polynomial(m, k - 1, rng, 4, std::nullopt, 3), k - 1, q, k).all_hold() ||
        !adjoint_checks(random_polynomial(m, k - 2, rng, 4, std::nullopt, 3), k - 2, q, k).all_hold())
      return {false, "adjointness failed"};
  }
  return {true, "Gram matrices positive diagonal for m<=3, k<=4; 200 pairs agree; 100 adjoint triples exact"};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string spawn(const std::string& args) {
  const std::string cmd = std::string(CLIFF_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

Outcome cli_golden() {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"decompose --m 2 --k 2 \"x1^2\"", "decompose_m2_k2_x1sq.json"},
      {"check --m 2 \"x1*x2*e1\"", "check_m2_x1x2e1.txt"},
      {"dims --m 3 --k 4", "dims_m3_k4.txt"},
  };
  for (const auto& [args, file] : cases)
    if (spawn(args) != slurp(std::string(CLIFF_GOLDEN_DIR) + "/" + file)) return {false, args + " differs from " + file};
  return {true, "3 golden files byte-match"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"fischer decomposition exactness", fischer_exactness},
      {"direct-sum dimensions", direct_sum_dimensions},
      {"complete tower", complete_tower},
      {"inclusion chain", inclusion_chain},
      {"two-sided monogenic times x", two_sided_products},
      {"identity suite", identity_suite},
      {"harmonic inframonogenic characterizations", harmonic_infra_biconditionals},
      {"almansi characterization", almansi_characterization},
      {"numeric family", numeric_family},
      {"fischer inner product", inner_product},
      {"cli golden files", cli_golden},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("%s [%zu] %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
