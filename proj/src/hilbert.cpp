#include "edq/hilbert.hpp"

#include <cmath>

#include "edq/fft.hpp"

namespace edq {

void SystemState::validate() const {
  if (amplitudes.empty()) fail(Errc::dimension_mismatch, "state dimension must be >= 1");
  if (eigenvalues.size() != amplitudes.size())
    fail(Errc::dimension_mismatch, "eigenvalue list length differs from amplitude length");
  for (double a : eigenvalues) {
    if (!std::isfinite(a)) fail(Errc::dimension_mismatch, "eigenvalues must be finite");
  }
}

HermitianOperator HermitianOperator::diagonal(std::span<const double> eigs) {
  HermitianOperator op;
  op.dim = eigs.size();
  op.matrix.assign(op.dim * op.dim, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < op.dim; ++i) op.at(i, i) = eigs[i];
  return op;
}

void HermitianOperator::validate(double tol) const {
  if (dim == 0 || matrix.size() != dim * dim)
    fail(Errc::dimension_mismatch, "operator storage does not match its dimension");
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      if (std::abs(at(i, j) - std::conj(at(j, i))) > tol)
        fail(Errc::not_hermitian, "matrix is not Hermitian within tolerance");
    }
  }
}

void require_transform_grid(std::size_t m) {
  if (m < 16 || (m & (m - 1)) != 0)
    fail(Errc::bad_grid, "grid length must be a power of two and >= 16");
}

double norm(const SystemState& s) {
  double acc = 0.0;
  for (const cplx& a : s.amplitudes) acc += std::norm(a);
  return std::sqrt(acc);
}

double norm(const GridWavefunction& w) {
  double acc = 0.0;
  for (const cplx& a : w.samples) acc += std::norm(a);
  return std::sqrt(acc * w.dx);
}

SystemState normalize(SystemState s) {
  const double n = norm(s);
  if (n < 1e-300) fail(Errc::zero_norm, "cannot normalize a state with vanishing norm");
  for (cplx& a : s.amplitudes) a /= n;
  return s;
}

GridWavefunction normalize(GridWavefunction w) {
  const double n = norm(w);
  if (n < 1e-300) fail(Errc::zero_norm, "cannot normalize a wavefunction with vanishing norm");
  for (cplx& a : w.samples) a /= n;
  return w;
}

std::vector<double> born_probabilities(const SystemState& s) {
  const double n = norm(s);
  if (std::abs(n - 1.0) > 1e-8)
    fail(Errc::not_normalized, "Born probabilities require a normalized state");
  std::vector<double> p(s.dim());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(s.amplitudes[i]);
  return p;
}

cplx inner(const SystemState& a, const SystemState& b) {
  if (a.dim() != b.dim()) fail(Errc::dimension_mismatch, "inner product dimension mismatch");
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return acc;
}

cplx inner(const GridWavefunction& a, const GridWavefunction& b) {
  if (a.size() != b.size()) fail(Errc::grid_mismatch, "inner product grid mismatch");
  cplx acc{0.0, 0.0};
  for (std::size_t j = 0; j < a.size(); ++j) acc += std::conj(a.samples[j]) * b.samples[j];
  return acc * a.dx;
}

SystemState apply(const HermitianOperator& op, const SystemState& s) {
  if (op.dim != s.dim()) fail(Errc::dimension_mismatch, "operator/state dimension mismatch");
  SystemState out = s;
  for (std::size_t i = 0; i < op.dim; ++i) {
    cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j < op.dim; ++j) acc += op.at(i, j) * s.amplitudes[j];
    out.amplitudes[i] = acc;
  }
  return out;
}

double expectation(const HermitianOperator& op, const SystemState& psi) {
  return inner(psi, apply(op, psi)).real();
}

GridWavefunction to_momentum(const GridWavefunction& w) {
  require_transform_grid(w.size());
  if (w.domain != Domain::position)
    fail(Errc::bad_grid, "to_momentum expects a position-representation wavefunction");

  const std::size_t m = w.size();
  const double dp = 2.0 * kPi / (static_cast<double>(m) * w.dx);
  const double p_min = -0.5 * static_cast<double>(m) * dp;

  GridWavefunction out = w;
  for (std::size_t j = 0; j < m; ++j) {
    out.samples[j] = (j % 2 == 0) ? w.samples[j] : -w.samples[j];
  }
  detail::dft_pow2(out.samples.data(), m, /*forward=*/true);

  const double scale = w.dx / std::sqrt(2.0 * kPi);
  for (std::size_t k = 0; k < m; ++k) {
    const double p = p_min + static_cast<double>(k) * dp;
    out.samples[k] *= scale * std::polar(1.0, -p * w.x_min);
  }
  out.x_min = p_min;
  out.dx = dp;
  out.domain = Domain::momentum;
  out.dual_origin = w.x_min;
  return out;
}

GridWavefunction to_position(const GridWavefunction& w) {
  require_transform_grid(w.size());
  if (w.domain != Domain::momentum)
    fail(Errc::bad_grid, "to_position expects a momentum-representation wavefunction");

  const std::size_t m = w.size();
  const double dp = w.dx;
  const double dx = 2.0 * kPi / (static_cast<double>(m) * dp);
  const double x_min = w.dual_origin;

  GridWavefunction out = w;
  for (std::size_t k = 0; k < m; ++k) {
    const double p = w.x_min + static_cast<double>(k) * dp;
    out.samples[k] = w.samples[k] * std::polar(1.0, p * x_min);
  }
  detail::dft_pow2(out.samples.data(), m, /*forward=*/false);

  const double scale = dp / std::sqrt(2.0 * kPi);
  for (std::size_t j = 0; j < m; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    out.samples[j] *= scale * sign;
  }
  out.x_min = x_min;
  out.dx = dx;
  out.domain = Domain::position;
  out.dual_origin = w.x_min;
  return out;
}

std::vector<double> density(const GridWavefunction& w) {
  std::vector<double> rho(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) rho[j] = std::norm(w.samples[j]);
  return rho;
}

GridWavefunction gaussian_packet(std::size_t m, double x_min, double dx, double x0, double sigma,
                                 double p0, double hbar, double mass) {
  require_transform_grid(m);
  if (sigma <= 0.0) fail(Errc::bad_grid, "gaussian packet width must be positive");
  GridWavefunction w;
  w.samples.resize(m);
  w.x_min = x_min;
  w.dx = dx;
  w.hbar = hbar;
  w.mass = mass;
  for (std::size_t j = 0; j < m; ++j) {
    const double d = w.x(j) - x0;
    w.samples[j] = std::polar(std::exp(-d * d / (4.0 * sigma * sigma)), p0 * (w.x(j) - x0) / hbar);
  }
  return normalize(std::move(w));
}

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::zero_norm: return "zero_norm";
    case Errc::not_normalized: return "not_normalized";
    case Errc::bad_grid: return "bad_grid";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::node_encountered: return "node_encountered";
    case Errc::unstable_step: return "unstable_step";
    case Errc::grid_too_small: return "grid_too_small";
    case Errc::not_orthonormal: return "not_orthonormal";
    case Errc::not_hermitian: return "not_hermitian";
    case Errc::inconsistent_data: return "inconsistent_data";
    case Errc::orthogonal_postselection: return "orthogonal_postselection";
    case Errc::zero_momentum_amplitude: return "zero_momentum_amplitude";
    case Errc::empty_sample: return "empty_sample";
    case Errc::grid_mismatch: return "grid_mismatch";
    case Errc::config_invalid: return "config_invalid";
    case Errc::io_failure: return "io_failure";
  }
  return "unknown";
}

}  // namespace edq
