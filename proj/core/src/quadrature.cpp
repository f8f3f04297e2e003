#include "lowzero/quadrature.hpp"

#include <cmath>
#include <vector>

#include "lowzero/errors.hpp"
#include "lowzero/summation.hpp"

namespace lowzero {

namespace {

struct SimpsonState {
  const std::function<double(double)>* f;
  double tol_total;
  double error_acc = 0.0;
  bool converged = true;
};

double simpson(double fa, double fm, double fb, double h6) {
  return h6 * (fa + 4.0 * fm + fb);
}

double adapt(SimpsonState& st, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = (*st.f)(lm), frm = (*st.f)(rm);
  const double h12 = (b - a) / 12.0;
  const double left = simpson(fa, flm, fm, h12);
  const double right = simpson(fm, frm, fb, h12);
  const double delta = left + right - whole;
  // Accept on tolerance or once delta sits at the roundoff floor.
  const double floor_ = 5e-16 * (std::fabs(left) + std::fabs(right));
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol || std::fabs(delta) <= floor_) {
    if (depth <= 0 && std::fabs(delta) > std::max(15.0 * tol, floor_))
      st.converged = false;
    st.error_acc += std::fabs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return adapt(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// Nodes/weights for 16-point Gauss-Legendre on [-1, 1] (positive half).
const double kGL16x[8] = {0.0950125098376374, 0.2816035507792589,
                          0.4580167776572274, 0.6178762444026438,
                          0.7554044083550030, 0.8656312023878318,
                          0.9445750230732326, 0.9894009349916499};
const double kGL16w[8] = {0.1894506104550685, 0.1826034150449236,
                          0.1691565193950025, 0.1495959888165767,
                          0.1246289712555339, 0.0951585116824928,
                          0.0622535239386479, 0.0271524594117541};

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double tol, int max_depth) {
  QuadResult res;
  if (a == b) return res;
  SimpsonState st;
  st.f = &f;
  st.tol_total = tol;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = simpson(fa, fm, fb, (b - a) / 6.0);
  res.value = adapt(st, a, b, fa, fm, fb, whole, tol, max_depth);
  res.error_estimate = st.error_acc;
  res.converged = st.converged;
  return res;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  QuadResult r = integrate_adaptive(f, a, b, tol);
  if (!r.converged)
    throw precision_error("adaptive quadrature did not converge", r.error_estimate);
  return r.value;
}

double gauss_legendre_16(const std::function<double(double)>& f, double a,
                         double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 8; ++i)
    s += kGL16w[i] * (f(c - h * kGL16x[i]) + f(c + h * kGL16x[i]));
  return s * h;
}

double integrate_composite(const std::function<double(double)>& f, double a,
                           double b, double panel_width) {
  if (b <= a) return 0.0;
  const int n = std::max(1, static_cast<int>(std::ceil((b - a) / panel_width)));
  const double h = (b - a) / n;
  std::vector<double> panels(n);
  for (int i = 0; i < n; ++i)
    panels[i] = gauss_legendre_16(f, a + i * h, a + (i + 1) * h);
  return pairwise_sum(panels);
}

}  // namespace lowzero
