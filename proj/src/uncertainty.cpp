#include "urbound/uncertainty.hpp"

#include <algorithm>
#include <cmath>

namespace urbound {

namespace {

constexpr double kClampSlack = 1e-12;
constexpr double kPhaseUndefined = 1e-14;

void require_match(std::size_t dim, const ComplexMatrix& a, const char* what) {
  if (static_cast<std::size_t>(a.rows()) != dim || static_cast<std::size_t>(a.cols()) != dim)
    throw Error(Errc::DimensionMismatch, std::string(what) + ": operator and state sizes differ");
}

double clamp_unit(double x) {
  if (x < 0.0 && x >= -kClampSlack) return 0.0;
  if (x > 1.0 && x <= 1.0 + kClampSlack) return 1.0;
  return x;
}

double clamp_nonneg(double x) { return (x < 0.0 && x >= -kClampSlack) ? 0.0 : x; }

}  // namespace

Complex expectation(const PureState& psi, const ComplexMatrix& a) {
  require_match(psi.dim(), a, "expectation");
  return psi.amplitudes().dot(a * psi.amplitudes());
}

Complex expectation(const DensityMatrix& rho, const ComplexMatrix& a) {
  require_match(rho.dim(), a, "expectation");
  return (rho.matrix() * a).trace();
}

double variance(const PureState& psi, const ComplexMatrix& u) {
  return clamp_unit(1.0 - std::norm(expectation(psi, u)));
}

double variance(const DensityMatrix& rho, const ComplexMatrix& u) {
  return clamp_unit(1.0 - std::norm(expectation(rho, u)));
}

double visibility(const PureState& psi, const ComplexMatrix& u) {
  return std::abs(expectation(psi, u));
}

double visibility(const DensityMatrix& rho, const ComplexMatrix& u) {
  return std::abs(expectation(rho, u));
}

double fubini_study(const PureState& psi1, const PureState& psi2) {
  return 4.0 * clamp_unit(1.0 - std::norm(psi1.inner(psi2)));
}

Complex covariance(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v) {
  const ComplexMatrix ud = u.adjoint();
  return expectation(psi, ud * v) - expectation(psi, ud) * expectation(psi, v);
}

Complex covariance(const DensityMatrix& rho, const ComplexMatrix& u, const ComplexMatrix& v) {
  const ComplexMatrix ud = u.adjoint();
  return expectation(rho, ud * v) - expectation(rho, ud) * expectation(rho, v);
}

double BargmannTriple::cos_phase() const noexcept {
  return phase_undefined ? 0.0 : std::cos(phase);
}

BargmannTriple bargmann3(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v) {
  require_match(psi.dim(), u, "bargmann3");
  require_match(psi.dim(), v, "bargmann3");
  const ComplexVector& p = psi.amplitudes();
  const ComplexVector pu = u * p;
  const ComplexVector pv = v * p;
  BargmannTriple out;
  out.value = p.dot(pu) * pu.dot(pv) * pv.dot(p);
  out.modulus = std::abs(out.value);
  out.phase_undefined = out.modulus <= kPhaseUndefined;
  out.phase = out.phase_undefined ? 0.0 : std::arg(out.value);
  return out;
}

double gvariance(const PureState& psi, const ComplexMatrix& a) {
  const Complex mean = expectation(psi, a);
  return clamp_nonneg(expectation(psi, a * a.adjoint()).real() - std::norm(mean));
}

double gvariance(const DensityMatrix& rho, const ComplexMatrix& a) {
  const Complex mean = expectation(rho, a);
  return clamp_nonneg(expectation(rho, a * a.adjoint()).real() - std::norm(mean));
}

VaidmanDecomposition vaidman_perp(const PureState& psi, const ComplexMatrix& a) {
  require_match(psi.dim(), a, "vaidman_perp");
  const ComplexVector& p = psi.amplitudes();
  const ComplexVector ap = a * p;
  const Complex mean = p.dot(ap);
  ComplexVector rest = ap - mean * p;
  rest -= p * p.dot(rest);
  const double dev = rest.norm();
  if (dev <= 1e-12)
    throw Error(Errc::DegenerateDecomposition, "state is an eigenvector of the operator");
  return VaidmanDecomposition{mean, dev, PureState::normalized(rest)};
}

double orthogonal_weight(const PureState& psi, const ComplexMatrix& a) {
  require_match(psi.dim(), a, "orthogonal_weight");
  const ComplexVector& p = psi.amplitudes();
  const ComplexVector ap = a * p;
  const ComplexVector rest = ap - p * p.dot(ap);
  return rest.squaredNorm();
}

}  // namespace urbound
