#include "qubeam/bogoliubov.hpp"

#include <cmath>
#include <sstream>

#include "qubeam/error.hpp"

namespace qubeam {

namespace {

// (-1)^(lambda'-1) on rows with lambda = 1, -i on rows with lambda = 2.
Complex polarization_phase(int row_lambda, int col_lambda) {
  return row_lambda == 1 ? Complex(branch_sign(col_lambda), 0.0) : Complex(0.0, -1.0);
}

}  // namespace

double q_radicand(const ModeFrequency& r, int lambda, const ModelParams& p) {
  const double value = r.value();
  double sum = 0.0;
  for (double ks : {p.kappa1, p.kappa2}) {
    const double gap = r.sq_gap(ks);
    sum += 1.0 / (gap * gap);
  }
  return -branch_sign(lambda) * p.omega / (value * value * value * p.eps) + 2.0 * sum;
}

QNorms q_norms(const ModeRoots& roots, const ModelParams& p) {
  QNorms q{};
  for (const auto m : kModes) {
    const double rad = q_radicand(roots.at(m), m.lambda, p);
    if (!(rad > 0.0) || !std::isfinite(rad)) {
      std::ostringstream os;
      os.precision(17);
      os << "q radicand for (k=" << m.k << ", lambda=" << m.lambda << ") is " << rad;
      throw Error(ErrorCode::NegativeRadicand, os.str());
    }
    q[m.k - 1][m.lambda - 1] = 1.0 / std::sqrt(rad);
  }
  return q;
}

BogoliubovBlock build_block(const ModeRoots& roots, const ModelParams& p) {
  BogoliubovBlock block;
  block.roots = roots;
  block.q = q_norms(roots, p);
  for (const auto col : kModes) {
    const ModeFrequency& r = roots.at(col);
    const double value = r.value();
    const double qn = block.q[col.k - 1][col.lambda - 1];
    for (const auto row : kModes) {
      const double ks = p.kappa(row.k);
      const double gap = r.sq_gap(ks);
      if (gap == 0.0) {
        throw Error(ErrorCode::PoleEvaluation, "quasiphoton frequency equals a photon frequency");
      }
      const double root_ratio = std::sqrt(value / ks);
      const double plus = root_ratio + 1.0 / root_ratio;
      // sqrt(r/k) - sqrt(k/r) = (r - k) / sqrt(r k)
      const double minus = ((r.kappa - ks) + r.shift) / std::sqrt(value * ks);
      const Complex phase = polarization_phase(row.lambda, col.lambda);
      const double scale = qn / (2.0 * gap);
      block.u(row.flat(), col.flat()) = plus * scale * phase;
      block.v(row.flat(), col.flat()) = minus * scale * phase;
    }
  }
  return block;
}

IdentityDefect identity_defect(const PhotonMatrix& u, const PhotonMatrix& v) {
  const PhotonMatrix comm = u * u.adjoint() - v * v.adjoint() - PhotonMatrix::Identity();
  const PhotonMatrix sym = v * u.transpose() - u * v.transpose();
  return {comm.cwiseAbs().maxCoeff(), sym.cwiseAbs().maxCoeff()};
}

IdentityDefect identity_defect(const BogoliubovBlock& block) {
  return identity_defect(block.u, block.v);
}

}  // namespace qubeam
