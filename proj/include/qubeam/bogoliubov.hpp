#pragma once

#include <array>
#include <complex>

#include <Eigen/Core>

#include "qubeam/dispersion.hpp"
#include "qubeam/params.hpp"

namespace qubeam {

using Complex = std::complex<double>;
using PhotonMatrix = Eigen::Matrix<Complex, 4, 4>;
using QNorms = std::array<std::array<double, 2>, 2>;  // [k-1][lambda-1]

/// Photon block of the canonical transformation a = u c - v c^+.
/// Rows are free-photon modes s-lambda, columns quasiphoton modes k-lambda',
/// both flattened as 11, 12, 21, 22 (ModeIndex::flat()).
struct BogoliubovBlock {
  PhotonMatrix u = PhotonMatrix::Zero();
  PhotonMatrix v = PhotonMatrix::Zero();
  QNorms q{};
  ModeRoots roots;

  Complex u_at(ModeIndex row, ModeIndex col) const { return u(row.flat(), col.flat()); }
  Complex v_at(ModeIndex row, ModeIndex col) const { return v(row.flat(), col.flat()); }
};

/// (-1)^lambda omega / (r^3 eps) + 2 sum_s (r^2 - kappa_s^2)^-2 for one mode.
double q_radicand(const ModeFrequency& r, int lambda, const ModelParams& params);

/// q_{k lambda} = radicand^(-1/2). Throws NegativeRadicand.
QNorms q_norms(const ModeRoots& roots, const ModelParams& params);

BogoliubovBlock build_block(const ModeRoots& roots, const ModelParams& params);

struct IdentityDefect {
  double uu = 0.0;   // max |u u^+ - v v^+ - 1|
  double sym = 0.0;  // max |v u^T - u v^T|
};

/// How far the photon block is from satisfying the Bose-commutation
/// identities on its own; the missing quasielectron row makes this O(eps).
IdentityDefect identity_defect(const BogoliubovBlock& block);
IdentityDefect identity_defect(const PhotonMatrix& u, const PhotonMatrix& v);

}  // namespace qubeam
