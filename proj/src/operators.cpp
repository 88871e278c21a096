#include "urbound/operators.hpp"

#include <cmath>
#include <string>

namespace urbound {

namespace {

void require_dim(std::size_t d) {
  if (d < 2) throw Error(Errc::BadDimension, "operator dimension must be >= 2");
}

Complex root_of_unity(long long k, std::size_t d) {
  const double angle = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(d);
  return std::polar(1.0, angle);
}

}  // namespace

int index_min(std::size_t d) noexcept { return -static_cast<int>(d / 2); }
int index_max(std::size_t d) noexcept { return static_cast<int>((d - 1) / 2); }

std::size_t slot_of(long long j, std::size_t d) {
  if (d == 0) throw Error(Errc::BadDimension, "slot_of with d = 0");
  const auto dd = static_cast<long long>(d);
  long long shifted = (j - index_min(d)) % dd;
  if (shifted < 0) shifted += dd;
  return static_cast<std::size_t>(shifted);
}

int label_of(std::size_t slot, std::size_t d) {
  if (slot >= d) throw Error(Errc::BadDimension, "slot out of range");
  return static_cast<int>(slot) + index_min(d);
}

WeylPair::WeylPair(ComplexMatrix u, ComplexMatrix v) : u_(std::move(u)), v_(std::move(v)) {
  require_square(u_, "WeylPair U");
  require_square(v_, "WeylPair V");
  if (u_.rows() != v_.rows()) throw Error(Errc::DimensionMismatch, "WeylPair U and V sizes differ");
  if (!is_unitary(u_) || !is_unitary(v_))
    throw Error(Errc::NotUnitary, "WeylPair members must be unitary to 1e-10");
  phase_ = commutation_phase(u_, v_);
  const Complex w = std::polar(1.0, phase_);
  if ((u_ * v_ - w * v_ * u_).norm() > 1e-10 * static_cast<double>(u_.rows()))
    throw Error(Errc::NotWeylPair, "UV != e^{i phi} VU to 1e-10");
}

ComplexMatrix clock(std::size_t d) {
  require_dim(d);
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (std::size_t s = 0; s < d; ++s) {
    const auto i = static_cast<Eigen::Index>(s);
    u(i, i) = root_of_unity(label_of(s, d), d);
  }
  return u;
}

ComplexMatrix shift(std::size_t d) {
  require_dim(d);
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix v = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) v((k + 1) % n, k) = 1.0;
  return v;
}

ComplexMatrix dft(std::size_t d) {
  require_dim(d);
  const auto n = static_cast<Eigen::Index>(d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix f(n, n);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      // reduce j*k mod d before forming the angle so large d keeps full accuracy
      const long long jk = static_cast<long long>(label_of(a, d)) * label_of(b, d);
      const auto dd = static_cast<long long>(d);
      f(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          norm * root_of_unity(-(jk % dd), d);
    }
  }
  return f;
}

WeylPair clock_shift_pair(std::size_t d) { return WeylPair(clock(d), shift(d)); }

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix pauli_unitary(const Eigen::Vector3d& a) {
  if (!a.allFinite() || std::abs(a.norm() - 1.0) > 1e-12)
    throw Error(Errc::NotUnitVector, "Pauli direction must be a unit vector to 1e-12");
  return a(0) * pauli_x() + a(1) * pauli_y() + a(2) * pauli_z();
}

std::vector<ComplexMatrix> gamma_generators(int n) {
  if (n < 1 || n > 5) throw Error(Errc::BadRank, "gamma_generators requires 1 <= n <= 5");
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(2 * n));
  for (int k = 1; k <= n; ++k) {
    for (const ComplexMatrix& middle : {pauli_x(), pauli_y()}) {
      ComplexMatrix g = ComplexMatrix::Identity(1, 1);
      for (int site = 1; site <= n; ++site) {
        if (site < k) g = kron(g, pauli_z());
        else if (site == k) g = kron(g, middle);
        else g = kron(g, id2);
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

ComplexMatrix gamma_combination(const Eigen::VectorXd& coeffs,
                                const std::vector<ComplexMatrix>& gammas) {
  if (gammas.empty() || static_cast<std::size_t>(coeffs.size()) != gammas.size())
    throw Error(Errc::DimensionMismatch, "coefficient vector length must equal generator count");
  ComplexMatrix out = ComplexMatrix::Zero(gammas.front().rows(), gammas.front().cols());
  for (std::size_t i = 0; i < gammas.size(); ++i)
    out += coeffs(static_cast<Eigen::Index>(i)) * gammas[i];
  return out;
}

ComplexMatrix translation(const WeylPair& pair, long long m, long long n) {
  return unitary_power(pair.u(), m) * unitary_power(pair.v(), -n);
}

ComplexMatrix cosine_part(const ComplexMatrix& u) { return 0.5 * (u + u.adjoint()); }

ComplexMatrix harper(const WeylPair& pair) {
  return -cosine_part(pair.u()) - cosine_part(pair.v());
}

ComplexMatrix tilted_harper(const WeylPair& pair, double theta, double phi_u, double phi_v) {
  const ComplexMatrix ut = std::polar(1.0, -phi_u) * pair.u();
  const ComplexMatrix vt = std::polar(1.0, -phi_v) * pair.v();
  return -std::cos(theta) * cosine_part(ut) - std::sin(theta) * cosine_part(vt);
}

double commutation_phase(const ComplexMatrix& u, const ComplexMatrix& v) {
  require_square(u, "commutation_phase U");
  require_square(v, "commutation_phase V");
  if (u.rows() != v.rows()) throw Error(Errc::DimensionMismatch, "commutation_phase sizes differ");
  const ComplexMatrix uv = u * v;
  const ComplexMatrix vu = v * u;
  Eigen::Index bi = 0, bj = 0;
  vu.cwiseAbs().maxCoeff(&bi, &bj);
  if (std::abs(vu(bi, bj)) == 0.0) throw Error(Errc::NotWeylPair, "VU vanishes");
  const Complex ratio = uv(bi, bj) / vu(bi, bj);
  double phi = std::arg(ratio);
  if (phi <= -kPi) phi += 2.0 * kPi;
  const Complex w = std::polar(1.0, phi);
  if ((uv - w * vu).norm() > 1e-8 * static_cast<double>(u.rows()))
    throw Error(Errc::NotWeylPair, "no single phase relates UV and VU");
  return phi;
}

}  // namespace urbound
