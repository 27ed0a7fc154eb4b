#include "qmem/correlations.hpp"

#include <cmath>
#include <numbers>

namespace qmem {

namespace {

constexpr int kThetaGrid = 64;
constexpr int kPhiGrid = 128;
constexpr int kRefineRounds = 20;

double clamp_noise(double v) { return (v < 0.0 && v >= -kNegativityTol) ? 0.0 : v; }

void require_x_state(const TwoQubitState& s, const char* what) {
  if (!is_x_state(s)) throw InvalidInput(std::string(what) + ": state is not of X form");
}

// -sum_i rho_ii log2 rho_ii
double diagonal_entropy(const TwoQubitState& s) {
  std::array<double, 4> d{};
  for (std::size_t i = 0; i < 4; ++i) d[i] = s(i, i).real();
  return shannon_entropy(d);
}

}  // namespace

std::array<Mat2, 2> MeasurementBasis::projectors() const {
  const double nx = std::sin(theta_m) * std::cos(phi_m);
  const double ny = std::sin(theta_m) * std::sin(phi_m);
  const double nz = std::cos(theta_m);
  const Mat2 n_sigma = pauli::x() * nx + pauli::y() * ny + pauli::z() * nz;
  const Mat2 id = Mat2::identity();
  return {(id + n_sigma) * 0.5, (id - n_sigma) * 0.5};
}

bool is_x_state(const TwoQubitState& s, double tol) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) {
        // Only the (0,3)/(3,0) corners survive on the anti-diagonal.
        if (i + j == 3 && i != 0 && i != 3 && std::abs(s(i, j)) > tol) return false;
        continue;
      }
      if (std::abs(s(i, j)) > tol) return false;
    }
  return true;
}

double concurrence_general(const TwoQubitState& s) {
  const Mat4& rho = s.matrix();
  const auto es = eig_hermitian(rho);
  Mat4 sqrt_rho;
  for (std::size_t k = 0; k < 4; ++k) {
    const double w = std::sqrt(std::max(0.0, es.values[k]));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) sqrt_rho(i, j) += w * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  const Mat4 yy = kron(pauli::y(), pauli::y());
  const Mat4 flipped = yy * rho.conjugate() * yy;
  Mat4 r = sqrt_rho * flipped * sqrt_rho;
  r = (r + r.adjoint()) * 0.5;
  const auto mu = eig_hermitian(r);
  std::array<double, 4> eps{};
  for (std::size_t k = 0; k < 4; ++k) eps[k] = std::sqrt(std::max(0.0, mu.values[k]));
  return std::clamp(eps[0] - eps[1] - eps[2] - eps[3], 0.0, 1.0);
}

double concurrence_x_state(const TwoQubitState& s) {
  require_x_state(s, "concurrence_x_state");
  const double rho22 = std::max(0.0, s(1, 1).real());
  const double rho33 = std::max(0.0, s(2, 2).real());
  return 2.0 * std::max(0.0, std::abs(s(0, 3)) - std::sqrt(rho22 * rho33));
}

double mutual_information(const TwoQubitState& s) {
  return von_neumann_entropy(partial_trace(s, Subsystem::A)) + von_neumann_entropy(partial_trace(s, Subsystem::B)) -
         von_neumann_entropy(s);
}

double mutual_information_x_state(const TwoQubitState& s) {
  require_x_state(s, "mutual_information_x_state");
  const double a0 = (s(0, 0) + s(1, 1)).real();
  const double b0 = (s(0, 0) + s(2, 2)).real();
  return binary_entropy(a0) + binary_entropy(b0) - von_neumann_entropy(s);
}

double classical_information(const TwoQubitState& s, const MeasurementBasis& basis) {
  const Mat4& rho = s.matrix();
  double conditional = 0.0;
  for (const Mat2& proj : basis.projectors()) {
    // tr_B[(I x P) rho (I x P)] = tr_B[(I x P) rho]
    const Mat2 block = partial_trace(kron(Mat2::identity(), proj) * rho, Subsystem::A);
    const double p = block.trace().real();
    if (p <= 1e-15) continue;
    Mat2 cond = block * (1.0 / p);
    cond = (cond + cond.adjoint()) * 0.5;
    conditional += p * von_neumann_entropy(cond);
  }
  return von_neumann_entropy(partial_trace(s, Subsystem::A)) - conditional;
}

double discord_x_state(const TwoQubitState& s) {
  require_x_state(s, "discord_x_state");
  const double rho11 = s(0, 0).real();
  const double rho33 = s(2, 2).real();
  const double rho44 = s(3, 3).real();
  const double abs14 = std::abs(s(0, 3));

  const double s_b = binary_entropy(rho11 + rho33);
  const double neg_s_ab = -von_neumann_entropy(s);

  const double z = 1.0 - 2.0 * (rho33 + rho44);
  const double kappa = std::min(1.0, std::sqrt(z * z + 4.0 * abs14 * abs14));
  const double d1 = binary_entropy((1.0 + kappa) / 2.0);
  const double d2 = diagonal_entropy(s) - s_b;

  const double q = s_b + neg_s_ab + std::min(d1, d2);
  return clamp_noise(q);
}

DiscordSearch discord_search(const TwoQubitState& s) {
  const double pi = std::numbers::pi;
  double best = -1.0;
  MeasurementBasis best_basis;
  const auto consider = [&](double th, double ph) {
    const MeasurementBasis b{th, ph};
    const double j = classical_information(s, b);
    if (j > best) {
      best = j;
      best_basis = b;
    }
  };

  const double d_theta = pi / (kThetaGrid - 1);
  const double d_phi = 2.0 * pi / kPhiGrid;
  for (int i = 0; i < kThetaGrid; ++i)
    for (int j = 0; j < kPhiGrid; ++j) consider(i * d_theta, j * d_phi);

  double st = d_theta, sp = d_phi;
  for (int round = 0; round < kRefineRounds; ++round) {
    const MeasurementBasis centre = best_basis;
    for (int di = -1; di <= 1; ++di)
      for (int dj = -1; dj <= 1; ++dj)
        if (di != 0 || dj != 0) consider(centre.theta_m + di * st, centre.phi_m + dj * sp);
    st *= 0.5;
    sp *= 0.5;
  }

  DiscordSearch out;
  out.mutual_info = mutual_information(s);
  out.classical = best;
  out.discord = clamp_noise(out.mutual_info - best);
  out.basis = best_basis;
  return out;
}

double discord_oracle(const TwoQubitState& s) { return discord_search(s).discord; }

CorrelationReport correlation_report(const TwoQubitState& s) {
  const DiscordSearch d = discord_search(s);
  return {concurrence_general(s), d.discord, d.classical, d.mutual_info};
}

}  // namespace qmem
