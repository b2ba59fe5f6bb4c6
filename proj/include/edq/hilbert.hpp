#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "edq/errors.hpp"

namespace edq {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Finite-dimensional state over the eigenbasis of some Hermitian observable.
struct SystemState {
  std::vector<cplx> amplitudes;
  std::vector<double> eigenvalues;  // basis labels a_n

  std::size_t dim() const { return amplitudes.size(); }
  void validate() const;  // d >= 1, labels finite, sizes match
};

// Dense d x d Hermitian matrix, row-major.
struct HermitianOperator {
  std::size_t dim = 0;
  std::vector<cplx> matrix;

  static HermitianOperator diagonal(std::span<const double> eigs);
  cplx at(std::size_t i, std::size_t j) const { return matrix[i * dim + j]; }
  cplx& at(std::size_t i, std::size_t j) { return matrix[i * dim + j]; }
  void validate(double tol = 1e-12) const;  // A == A^H within tol
};

enum class Domain { position, momentum };

// Complex samples of a 1-D wavefunction on a uniform grid. Norm convention:
// dx * sum |psi_j|^2. The grid length must be a power of two (>= 16) for the
// unitary transforms; boundaries are treated as periodic by the transforms.
struct GridWavefunction {
  std::vector<cplx> samples;
  double x_min = 0.0;
  double dx = 1.0;
  double hbar = 1.0;
  double mass = 1.0;
  Domain domain = Domain::position;
  // Origin of the conjugate-domain axis; makes to_position(to_momentum(w))
  // an exact inverse for any grid placement.
  double dual_origin = 0.0;

  std::size_t size() const { return samples.size(); }
  double x(std::size_t j) const { return x_min + static_cast<double>(j) * dx; }
  double x_max() const { return x_min + static_cast<double>(size() - 1) * dx; }
};

// Throws BadGrid unless m is a power of two >= 16.
void require_transform_grid(std::size_t m);

double norm(const SystemState& s);
double norm(const GridWavefunction& w);

// Returned value = input / ||input||. Throws ZeroNorm below 1e-300.
SystemState normalize(SystemState s);
GridWavefunction normalize(GridWavefunction w);

// p_n = |alpha_n|^2. Throws NotNormalized if the norm deviates from 1 by > 1e-8.
std::vector<double> born_probabilities(const SystemState& s);

// <a|b>, conjugate-linear in the first argument.
cplx inner(const SystemState& a, const SystemState& b);
cplx inner(const GridWavefunction& a, const GridWavefunction& b);  // dx-weighted

SystemState apply(const HermitianOperator& op, const SystemState& s);

// <psi|A|psi>; the (tiny) imaginary part of the quadratic form is discarded.
double expectation(const HermitianOperator& op, const SystemState& psi);

// Unitary transform pair with convention
//   psi~(p) = (2*pi)^(-1/2) * Integral psi(x) e^{-i p x} dx,
// realized as an exactly invertible discrete map on the grid. The momentum
// axis is centered: p_min = -(M/2)*dp, dp = 2*pi/(M*dx).
GridWavefunction to_momentum(const GridWavefunction& w);
GridWavefunction to_position(const GridWavefunction& w);

std::vector<double> density(const GridWavefunction& w);  // rho_j = |psi_j|^2

// Normalized Gaussian packet exp(-(x-x0)^2/(4 sigma^2) + i p0 x / hbar).
GridWavefunction gaussian_packet(std::size_t m, double x_min, double dx, double x0, double sigma,
                                 double p0, double hbar = 1.0, double mass = 1.0);

}  // namespace edq
