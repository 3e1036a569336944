// Polynomial root finding: balanced companion-matrix eigenvalues for moderate
// degree, Aberth-Ehrlich simultaneous iteration above that, Newton polishing
// and sequential deflation for the roots that lie in the disk.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hardy/blaschke.hpp"
#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double abs1(Complex z) { return std::abs(z.real()) + std::abs(z.imag()); }

struct ValueAndSlope {
  Complex p;
  Complex dp;
  double bound;  // sum |a_i| |z|^i, the scale of rounding error in p
};

ValueAndSlope horner2(std::span<const Complex> a, Complex z) {
  Complex p{}, dp{};
  double bound = 0.0;
  const double az = std::abs(z);
  for (std::size_t i = a.size(); i > 0; --i) {
    dp = dp * z + p;
    p = p * z + a[i - 1];
    bound = bound * az + std::abs(a[i - 1]);
  }
  return {p, dp, bound};
}

// Parlett-Reinsch balancing with radix-2 scale factors.
void balance(Eigen::MatrixXcd& a) {
  constexpr double radix = 2.0;
  constexpr double sqrdx = radix * radix;
  const Eigen::Index n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += abs1(a(j, i));
        r += abs1(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) *= 1.0 / f;
        a.col(i) *= f;
      }
    }
  }
}

std::vector<Complex> companion_roots(std::span<const Complex> a) {
  const std::size_t d = a.size() - 1;
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -a[i] / a[d];
  balance(c);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw ConvergenceError("companion eigenvalue solver did not converge");
  std::vector<Complex> roots(d);
  for (std::size_t i = 0; i < d; ++i) roots[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
  return roots;
}

// Starting points on circles whose radii come from the upper convex hull of
// (i, log|a_i|).
std::vector<Complex> aberth_start(std::span<const Complex> a) {
  const std::size_t d = a.size() - 1;
  std::vector<double> lg(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    lg[i] = a[i] == Complex{} ? -std::numeric_limits<double>::infinity() : std::log(std::abs(a[i]));
  }
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i <= d; ++i) {
    if (!std::isfinite(lg[i])) continue;
    while (hull.size() >= 2) {
      const std::size_t p = hull[hull.size() - 2], q = hull.back();
      const double cross = (lg[q] - lg[p]) * static_cast<double>(i - p) - (lg[i] - lg[p]) * static_cast<double>(q - p);
      if (cross <= 0.0) hull.pop_back();
      else break;
    }
    hull.push_back(i);
  }
  std::vector<Complex> z;
  z.reserve(d);
  const double sigma = 0.7;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const std::size_t k0 = hull[s], k1 = hull[s + 1];
    const std::size_t cnt = k1 - k0;
    const double radius = std::exp((lg[k0] - lg[k1]) / static_cast<double>(cnt));
    for (std::size_t j = 0; j < cnt; ++j) {
      const double ang = 2.0 * std::numbers::pi * (static_cast<double>(j) / cnt + static_cast<double>(s) / d) + sigma;
      z.push_back(std::polar(radius, ang));
    }
  }
  return z;
}

std::vector<Complex> aberth_roots(std::span<const Complex> a, int max_iterations) {
  const std::size_t d = a.size() - 1;
  std::vector<Complex> rev(a.rbegin(), a.rend());
  std::vector<Complex> z = aberth_start(a);
  std::vector<bool> done(d, false);
  std::size_t remaining = d;
  for (int it = 0; it < max_iterations && remaining > 0; ++it) {
    for (std::size_t k = 0; k < d; ++k) {
      if (done[k]) continue;
      Complex ratio;
      bool converged;
      if (std::abs(z[k]) <= 1.0) {
        const auto v = horner2(a, z[k]);
        converged = std::abs(v.p) <= 4.0 * static_cast<double>(d) * kEps * v.bound;
        ratio = v.dp == Complex{} ? Complex{} : v.p / v.dp;
      } else {
        const Complex w = 1.0 / z[k];
        const auto v = horner2(rev, w);
        converged = std::abs(v.p) <= 4.0 * static_cast<double>(d) * kEps * v.bound;
        const Complex den = static_cast<double>(d) * v.p - w * v.dp;
        ratio = den == Complex{} ? Complex{} : z[k] * v.p / den;
      }
      if (converged) {
        done[k] = true;
        --remaining;
        continue;
      }
      Complex sum{};
      for (std::size_t j = 0; j < d; ++j) {
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      }
      const Complex corr = ratio / (1.0 - ratio * sum);
      z[k] -= corr;
      if (std::abs(corr) <= kEps * std::abs(z[k])) {
        done[k] = true;
        --remaining;
      }
    }
  }
  if (remaining > 0) {
    throw ConvergenceError("Aberth-Ehrlich iteration left " + std::to_string(remaining) + " of " +
                           std::to_string(d) + " roots unconverged after " + std::to_string(max_iterations) +
                           " sweeps");
  }
  return z;
}

// Safeguarded Newton: a step is kept only if it does not increase |p|.
Complex newton_polish(std::span<const Complex> a, Complex z, int steps) {
  auto v = horner2(a, z);
  for (int i = 0; i < steps; ++i) {
    if (v.dp == Complex{} || v.p == Complex{}) break;
    const Complex step = v.p / v.dp;
    const Complex zn = z - step;
    const auto vn = horner2(a, zn);
    if (std::abs(vn.p) > std::abs(v.p)) break;
    z = zn;
    v = vn;
    if (std::abs(step) <= 2.0 * kEps * std::abs(z)) break;
  }
  return z;
}

}  // namespace

std::vector<Complex> polynomial_roots(const Series& f, const RootOptions& opts) {
  const Series p = f.trimmed();
  if (p.empty()) throw ZeroSeries("the zero series has no isolated roots");
  const std::size_t d = p.size() - 1;
  if (d == 0) return {};
  std::size_t low = 0;
  while (p[low] == Complex{}) ++low;
  std::vector<Complex> roots(low, Complex{});
  const std::span<const Complex> q = p.coeffs().subspan(low);
  const std::size_t dq = q.size() - 1;
  if (dq == 1) {
    roots.push_back(-q[0] / q[1]);
  } else if (dq > 1) {
    auto r = static_cast<int>(dq) <= opts.companion_max_degree ? companion_roots(q) : aberth_roots(q, opts.max_iterations);
    roots.insert(roots.end(), r.begin(), r.end());
  }
  return roots;
}

RootSearch find_roots_in_disk(const Series& f, const RootOptions& opts) {
  if (f.is_zero()) throw ZeroSeries("the zero series has no isolated roots");
  const Series p = f.trimmed();
  const double tol = opts.residual_tol(f);

  std::size_t low = 0;
  while (p[low] == Complex{}) ++low;
  std::vector<Complex> inside(low, Complex{});
  RootSearch out;

  const Series q(std::vector<Complex>(p.vec().begin() + static_cast<long>(low), p.vec().end()));
  if (q.size() > 1) {
    std::vector<Complex> cand = polynomial_roots(q, opts);
    std::sort(cand.begin(), cand.end(), [](Complex x, Complex y) { return std::abs(x) < std::abs(y); });
    Series current = q;
    for (Complex c : cand) {
      if (std::abs(c) >= 1.0 + 1e-3) break;
      c = newton_polish(current.coeffs(), c, opts.newton_steps);
      c = newton_polish(q.coeffs(), c, opts.newton_steps);
      const double modulus = std::abs(c);
      if (modulus >= 1.0 + opts.boundary_margin) continue;
      if (std::abs(1.0 - modulus) < opts.boundary_margin) {
        out.near_boundary.push_back(c);
      } else {
        const double residual = std::abs(evaluate_unchecked(f.coeffs(), c));
        if (residual > tol) {
          throw ConvergenceError("root at (" + std::to_string(c.real()) + ", " + std::to_string(c.imag()) +
                                 ") has residual " + std::to_string(residual) + " above tolerance " +
                                 std::to_string(tol));
        }
        inside.push_back(c);
      }
      if (current.size() > 1) current = deflate(current, c).quotient;
    }
  }
  out.inside = RootSet(std::move(inside));
  return out;
}

}  // namespace hardy
