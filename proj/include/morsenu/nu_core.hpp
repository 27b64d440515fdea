#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

// Generic Nikiforov-Uvarov machinery for hypergeometric-type equations
//
//   psi'' + (tau_tilde/sigma) psi' + (sigma_tilde/sigma^2) psi = 0
//
// with sigma, sigma_tilde of degree <= 2 and tau_tilde of degree <= 1.
// The method turns the equation into polynomial conditions: find every k
// for which the expression under the square root of
//
//   pi = (sigma' - tau_tilde)/2 +- sqrt(((sigma' - tau_tilde)/2)^2
//                                       - sigma_tilde + k sigma)
//
// is a perfect square, form tau = tau_tilde + 2 pi and lambda = k + pi',
// and keep the branches with tau' < 0.

namespace morsenu {

/// Real polynomial of degree <= 2, coefficients of 1, s, s^2.
struct Poly2 {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;

  double operator()(double s) const { return c0 + s * (c1 + s * c2); }
  Poly2 derivative() const { return {c1, 2.0 * c2, 0.0}; }

  int degree() const {
    if (c2 != 0.0) return 2;
    if (c1 != 0.0) return 1;
    return 0;
  }
};

inline Poly2 operator+(const Poly2& a, const Poly2& b) {
  return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
}
inline Poly2 operator-(const Poly2& a, const Poly2& b) {
  return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
}
inline Poly2 operator*(double s, const Poly2& a) {
  return {s * a.c0, s * a.c1, s * a.c2};
}

/// Product of two degree-<=1 polynomials.
inline Poly2 linear_product(const Poly2& a, const Poly2& b) {
  if (a.c2 != 0.0 || b.c2 != 0.0)
    throw std::invalid_argument("linear_product: arguments must be linear");
  return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c1 * b.c1};
}

/// The (sigma, sigma_tilde, tau_tilde) triple defining one NU problem.
struct NuProblem {
  Poly2 sigma;
  Poly2 sigma_tilde;
  Poly2 tau_tilde;  // degree <= 1
};

/// One resolved (k, pi, tau, lambda) branch.
struct NuBranch {
  double k = 0.0;
  Poly2 pi_poly;  // degree <= 1
  Poly2 tau;      // tau_tilde + 2 pi
  double lambda = 0.0;
  bool admissible = false;  // tau' < 0 and phi normalizable at sigma's root
};

namespace detail {

// Coefficients (in s) of the quadratic under the square root for a given k:
//   Q(s; k) = ((sigma' - tau_tilde)/2)^2 - sigma_tilde + k sigma.
struct UnderRoot {
  Poly2 base;   // k-independent part
  Poly2 slope;  // multiplied by k
  Poly2 at(double k) const { return base + k * slope; }
};

inline UnderRoot under_root(const NuProblem& p) {
  if (p.tau_tilde.degree() > 1)
    throw std::invalid_argument("NuProblem: tau_tilde must have degree <= 1");
  const Poly2 h = 0.5 * (p.sigma.derivative() - p.tau_tilde);
  return {linear_product(h, h) - p.sigma_tilde, p.sigma};
}

inline double discriminant(const Poly2& q) {
  return q.c1 * q.c1 - 4.0 * q.c2 * q.c0;
}

// Magnitude scale of a quadratic's coefficients, for relative tolerances.
inline double coeff_scale(const Poly2& q) {
  double s = std::fabs(q.c0);
  s = std::max(s, std::fabs(q.c1));
  s = std::max(s, std::fabs(q.c2));
  return s > 0.0 ? s : 1.0;
}

}  // namespace detail

/// Every real k that makes the under-root quadratic a perfect square
/// (zero discriminant in s).  The discriminant is itself a quadratic in k.
inline std::vector<double> k_candidates(const NuProblem& p) {
  const auto ur = detail::under_root(p);
  const Poly2& b = ur.base;
  const Poly2& m = ur.slope;

  // disc(k) = A k^2 + B k + C
  const double A = m.c1 * m.c1 - 4.0 * m.c2 * m.c0;
  const double B = 2.0 * b.c1 * m.c1 - 4.0 * (b.c2 * m.c0 + b.c0 * m.c2);
  const double C = b.c1 * b.c1 - 4.0 * b.c2 * b.c0;

  const double scale = std::max({std::fabs(A), std::fabs(B), std::fabs(C), 1.0});
  const double tol = 1e-14 * scale;

  std::vector<double> ks;
  if (std::fabs(A) > tol) {
    const double disc = B * B - 4.0 * A * C;
    if (disc < -1e-10 * scale * scale)
      throw std::domain_error("k_candidates: no perfect-square root");
    const double root = std::sqrt(std::max(disc, 0.0));
    ks.push_back((-B - root) / (2.0 * A));
    ks.push_back((-B + root) / (2.0 * A));
    if (ks[0] > ks[1]) std::swap(ks[0], ks[1]);
    if (root == 0.0) ks.pop_back();
  } else if (std::fabs(B) > tol) {
    ks.push_back(-C / B);
  } else if (std::fabs(C) <= tol) {
    // Discriminant vanishes identically; k = 0 is as good as any.
    ks.push_back(0.0);
  } else {
    throw std::domain_error("k_candidates: no perfect-square root");
  }
  return ks;
}

/// All (k, sign) branches: pi = (sigma' - tau_tilde)/2 +- w where w is the
/// linear square root of the perfect-square quadratic.  Errors out only if
/// no branch has tau' < 0.
inline std::vector<NuBranch> resolve_branches(const NuProblem& p) {
  const auto ur = detail::under_root(p);
  const Poly2 h = 0.5 * (p.sigma.derivative() - p.tau_tilde);

  std::vector<NuBranch> branches;
  for (double k : k_candidates(p)) {
    const Poly2 q = ur.at(k);
    const double scale = detail::coeff_scale(q);
    if (std::fabs(detail::discriminant(q)) > 1e-10 * scale * scale)
      throw std::domain_error("resolve_branches: residual discriminant");

    // Square root of the perfect square, as a linear polynomial.
    Poly2 w;
    if (q.c2 > 1e-14 * scale) {
      w.c1 = std::sqrt(q.c2);
      w.c0 = q.c1 / (2.0 * w.c1);
    } else {
      w.c0 = std::sqrt(std::max(q.c0, 0.0));
    }

    const bool degenerate = (w.c0 == 0.0 && w.c1 == 0.0);
    for (int sign : {+1, -1}) {
      NuBranch br;
      br.k = k;
      br.pi_poly = h + static_cast<double>(sign) * w;
      br.tau = p.tau_tilde + 2.0 * br.pi_poly;
      br.lambda = k + br.pi_poly.c1;
      // tau' < 0, and when the interval boundary is a root of sigma at
      // s = 0 the factor phi ~ s^{pi(0)/sigma'(0)} must vanish there,
      // which rules out the mirrored minus branch of the other k.
      br.admissible = br.tau.c1 < 0.0;
      if (std::fabs(p.sigma.c0) < 1e-14 && p.sigma.c1 != 0.0)
        br.admissible =
            br.admissible && br.pi_poly.c0 / p.sigma.c1 > 0.0;
      branches.push_back(br);
      if (degenerate) break;
    }
  }

  bool any = false;
  for (const auto& br : branches) any = any || br.admissible;
  if (!any)
    throw std::domain_error("resolve_branches: no negative-derivative branch");
  return branches;
}

/// lambda_n = -n tau' - n(n-1)/2 sigma''; the eigencondition is
/// lambda = lambda_n.
inline double quantization(const NuBranch& branch, const NuProblem& p, int n) {
  if (n < 0) throw std::domain_error("quantization: n must be >= 0");
  const double sigma_dd = 2.0 * p.sigma.c2;
  return -n * branch.tau.c1 - 0.5 * n * (n - 1) * sigma_dd;
}

/// Weight function rho(s) = s^power e^{rate s}, solved from first
/// principles via (sigma rho)' = tau rho for sigma = s:
///   rho'/rho = (tau - sigma')/sigma = (tau0 - 1)/s + tau1.
struct WeightExponents {
  double power = 0.0;
  double rate = 0.0;
};

inline WeightExponents weight_function_exponents(const NuBranch& branch,
                                                 const NuProblem& p) {
  const bool sigma_is_s = std::fabs(p.sigma.c0) < 1e-14 &&
                          std::fabs(p.sigma.c1 - 1.0) < 1e-14 &&
                          std::fabs(p.sigma.c2) < 1e-14;
  if (!sigma_is_s)
    throw std::invalid_argument(
        "weight_function_exponents: only sigma(s) = s is supported");
  return {branch.tau.c0 - 1.0, branch.tau.c1};
}

}  // namespace morsenu
