#include "urbound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "urbound/asymptotics.hpp"
#include "urbound/bounds.hpp"
#include "urbound/mus.hpp"
#include "urbound/operators.hpp"
#include "urbound/parallel.hpp"
#include "urbound/random.hpp"
#include "urbound/report.hpp"
#include "urbound/uncertainty.hpp"

namespace urbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::size_t> dims_or(const VerifyOptions& o, std::vector<std::size_t> fallback) {
  return o.dims.empty() ? fallback : o.dims;
}

int samples_or(const VerifyOptions& o, int fallback) { return o.samples.value_or(fallback); }

void check(SuiteReport& rep, bool ok, const std::string& text) {
  rep.passed = rep.passed && ok;
  rep.lines.push_back(std::string(ok ? "PASS " : "FAIL ") + rep.name + " " + text);
}

// Min over i of f(i), evaluated in parallel and reduced in index order.
template <typename F>
double parallel_min(std::size_t n, F f) {
  std::vector<double> slot(n, kInf);
  parallel_for(n, [&](std::size_t i) { slot[i] = f(i); });
  double m = kInf;
  for (double x : slot) m = std::min(m, x);
  return m;
}

template <typename F>
double parallel_max(std::size_t n, F f) {
  return -parallel_min(n, [&](std::size_t i) { return -f(i); });
}

SuiteReport suite_validity(const VerifyOptions& o) {
  SuiteReport rep{"validity", true, {}};
  const int n = samples_or(o, 1000);
  for (std::size_t d : dims_or(o, {2, 3, 5, 8, 12})) {
    const WeylPair pair = clock_shift_pair(d);
    const std::uint64_t base = derive_seed(o.seed, d << 32);
    const double worst = parallel_min(static_cast<std::size_t>(n), [&](std::size_t i) {
      const PureState psi = haar_random_state(d, derive_seed(base, 2 * i));
      EvalConfig cfg;
      cfg.check_slack = false;
      cfg.ur2 = Ur2Sampled{20, derive_seed(base, 2 * i + 1)};
      const BoundReport r = evaluate_all(psi, pair.u(), pair.v(), cfg);
      const double opt = r.sum - ur2_best(psi, pair.u(), pair.v()).value;
      return std::min(r.min_slack(), opt);
    });
    check(rep, worst >= -kBoundSlackTol,
          "d=" + std::to_string(d) + " samples=" + std::to_string(n) +
              " worst_slack=" + format_real(worst));
  }
  return rep;
}

SuiteReport suite_mixed(const VerifyOptions& o) {
  SuiteReport rep{"mixed", true, {}};
  const int n = samples_or(o, 500);
  for (std::size_t d : dims_or(o, {2, 3, 5})) {
    const WeylPair pair = clock_shift_pair(d);
    const std::uint64_t base = derive_seed(o.seed, (d << 32) | 1u);
    const double worst = parallel_min(static_cast<std::size_t>(n), [&](std::size_t i) {
      const std::size_t rank = 1 + i % d;
      const DensityMatrix rho = random_density(d, rank, derive_seed(base, i));
      const double sum = variance(rho, pair.u()) + variance(rho, pair.v());
      return std::min(sum - ur1(rho, pair.u(), pair.v()),
                      sum - ur1_weak_mod(rho, pair.u(), pair.v()));
    });
    check(rep, worst >= -kBoundSlackTol,
          "d=" + std::to_string(d) + " samples=" + std::to_string(n) +
              " worst_slack=" + format_real(worst));
  }
  return rep;
}

SuiteReport suite_pauli(const VerifyOptions& o) {
  SuiteReport rep{"pauli", true, {}};
  const int pairs = samples_or(o, 100);
  const std::size_t states = 10 * static_cast<std::size_t>(pairs);
  const std::uint64_t base = derive_seed(o.seed, 0x9a11ull << 40);

  const double sat_err = parallel_max(static_cast<std::size_t>(pairs), [&](std::size_t i) {
    const Eigen::Vector3d a = random_unit_vector(3, derive_seed(base, 3 * i));
    const Eigen::Vector3d b = random_unit_vector(3, derive_seed(base, 3 * i + 1));
    std::mt19937_64 rng(derive_seed(base, 3 * i + 2));
    const double target = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const DensityMatrix rho = pauli_saturating_state(a, b, target);
    const double sum = variance(rho, pauli_unitary(a)) + variance(rho, pauli_unitary(b));
    return std::abs(sum - pauli_bound(rho, a, b).state_indep);
  });
  check(rep, sat_err <= 1e-9,
        "saturation pairs=" + std::to_string(pairs) + " max_gap=" + format_real(sat_err));

  const Eigen::Vector3d a = random_unit_vector(3, derive_seed(base, 1ull << 32));
  const Eigen::Vector3d b = random_unit_vector(3, derive_seed(base, (1ull << 32) + 1));
  const double worst = parallel_min(states, [&](std::size_t i) {
    const DensityMatrix rho = random_density(2, 1 + i % 2, derive_seed(base, (2ull << 32) + i));
    const PauliBound pb = pauli_bound(rho, a, b);
    const double sum = variance(rho, pauli_unitary(a)) + variance(rho, pauli_unitary(b));
    return std::min(sum - pb.state_dep, sum - pb.state_indep);
  });
  check(rep, worst >= -kBoundSlackTol,
        "validity states=" + std::to_string(states) + " worst_slack=" + format_real(worst));
  return rep;
}

SuiteReport suite_gamma(const VerifyOptions& o) {
  SuiteReport rep{"gamma", true, {}};
  const int n = samples_or(o, 100);
  const std::vector<ComplexMatrix> g = gamma_generators(2);
  double table_err = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      const ComplexMatrix expected =
          (i == j ? 2.0 : 0.0) * ComplexMatrix::Identity(g[i].rows(), g[i].cols());
      table_err = std::max(table_err, (anticommutator(g[i], g[j]) - expected).cwiseAbs().maxCoeff());
    }
  check(rep, table_err <= 1e-12, "anticommutation n=2 max_err=" + format_real(table_err));

  const std::uint64_t base = derive_seed(o.seed, 0x6a11ull << 40);
  const double sat_err = parallel_max(static_cast<std::size_t>(n), [&](std::size_t i) {
    const Eigen::VectorXd a = random_unit_vector(4, derive_seed(base, 3 * i));
    const Eigen::VectorXd b = random_unit_vector(4, derive_seed(base, 3 * i + 1));
    std::mt19937_64 rng(derive_seed(base, 3 * i + 2));
    const double target = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const DensityMatrix rho = gamma_saturating_state(a, b, target, g);
    const double sum = variance(rho, gamma_combination(a, g)) + variance(rho, gamma_combination(b, g));
    return std::abs(sum - gamma_bound(rho, a, b, g));
  });
  check(rep, sat_err <= 1e-8,
        "saturation n=2 samples=" + std::to_string(n) + " max_gap=" + format_real(sat_err));
  return rep;
}

SuiteReport suite_critical(const VerifyOptions& o) {
  SuiteReport rep{"critical", true, {}};
  for (std::size_t d : dims_or(o, {2, 3, 4, 5, 6, 7, 8})) {
    const WeylPair pair = clock_shift_pair(d);
    const Realignment al = realign_phases(harper_ground(pair).psi, pair);
    const double res = critical_residual(al.psi, pair.u(), pair.v());
    check(rep, res <= 1e-8 && al.aligned,
          "ground d=" + std::to_string(d) + " residual=" + format_real(res) +
              " aligned=" + (al.aligned ? "yes" : "no"));
    if (d > 6) continue;
    const double du = variance(al.psi, pair.u());
    const double dv = variance(al.psi, pair.v());
    double drift = 0.0;
    const auto dd = static_cast<long long>(d);
    for (long long m = 0; m < dd; ++m)
      for (long long k = 0; k < dd; ++k) {
        const PureState t = PureState::normalized(translation(pair, m, k) * al.psi.amplitudes());
        drift = std::max({drift, std::abs(variance(t, pair.u()) - du),
                          std::abs(variance(t, pair.v()) - dv),
                          std::abs(critical_residual(t, pair.u(), pair.v()) - res)});
      }
    check(rep, drift <= 1e-10,
          "translations d=" + std::to_string(d) + " max_drift=" + format_real(drift));
  }
  return rep;
}

SuiteReport suite_dominance(const VerifyOptions& o) {
  SuiteReport rep{"dominance", true, {}};
  const int steps = samples_or(o, 200);
  for (std::size_t d : dims_or(o, {3, 5, 8, 12})) {
    const std::vector<SweepRecord> rows =
        theta_sweep(d, static_cast<std::size_t>(steps), 20, derive_seed(o.seed, d));
    double worst = kInf;
    std::size_t used = 0;
    for (const SweepRecord& r : rows) {
      if (!r.cos_phi3 || *r.cos_phi3 < 0.0) continue;
      ++used;
      worst = std::min(worst, r.ur1 - r.ms_sum);
    }
    check(rep, used > 0 && worst >= -kBoundSlackTol,
          "d=" + std::to_string(d) + " points=" + std::to_string(used) + "/" +
              std::to_string(rows.size()) + " min_margin=" + (used ? format_real(worst) : "none"));
  }
  return rep;
}

SuiteReport suite_asymptotics(const VerifyOptions& o) {
  SuiteReport rep{"asymptotics", true, {}};
  std::vector<std::size_t> dims = dims_or(o, {32, 64, 128});
  std::sort(dims.begin(), dims.end());
  std::vector<AsymptoticRecord> recs(dims.size());
  parallel_for(dims.size(), [&](std::size_t i) {
    recs[i] = asymptotic_gap(dims[i], AsymptoticFamily::HarperGround);
  });
  for (const AsymptoticRecord& r : recs) {
    rep.lines.push_back("INFO asymptotics d=" + std::to_string(r.d) +
                        " gap_hermitian=" + format_real(r.gap_hermitian) +
                        " gap_ur1=" + format_real(r.gap_ur1) +
                        " limit_residual=" + format_real(r.limit_residual) +
                        " series_residual=" + format_real(r.series_residual));
    check(rep, r.hermitian_slack >= -kBoundSlackTol,
          "hermitian d=" + std::to_string(r.d) + " slack=" + format_real(r.hermitian_slack));
  }
  auto monotone = [&](const char* name, double AsymptoticRecord::*field) {
    bool ok = true;
    for (std::size_t i = 1; i < recs.size(); ++i) ok = ok && recs[i].*field <= recs[i - 1].*field;
    check(rep, ok, std::string("non-increasing ") + name);
  };
  monotone("gap_hermitian", &AsymptoticRecord::gap_hermitian);
  monotone("gap_ur1", &AsymptoticRecord::gap_ur1);
  monotone("limit_residual", &AsymptoticRecord::limit_residual);
  return rep;
}

SuiteReport suite_table(const VerifyOptions& o) {
  SuiteReport rep{"table", true, {}};
  const std::vector<MusRecord> rows = mus_table(2, 8, o.seed);
  for (const TableRow& ref : reference_table()) {
    const MusRecord& r = rows[ref.d - 2];
    const double tol = ref.d == 2 ? 1e-9 : 1e-3;
    const double tol_du = ref.d == 2 ? 1e-9 : 1e-5;
    const std::string tag = "d=" + std::to_string(ref.d);

    check(rep, std::abs(r.delta_u2 - ref.delta_u2) <= tol_du,
          tag + " delta_u2=" + format_real(r.delta_u2) + " ref=" + format_real(ref.delta_u2));

    const bool ur1_direct = std::abs(r.ur1_half - ref.ur1) <= tol;
    const bool ur1_weak = std::abs(r.ur1_weak_half - ref.ur1) <= tol;
    check(rep, ur1_direct || ur1_weak,
          tag + " ur1 ref=" + format_real(ref.ur1) + " signed=" + format_real(r.ur1_half) +
              " abs_cos_weak=" + format_real(r.ur1_weak_half) + " match=" +
              (ur1_direct ? "signed" : ur1_weak ? "abs_cos_weak" : "none"));

    const bool ur2_direct = std::abs(r.ur2_half - ref.ur2) <= tol;
    const bool ur2_between =
        ref.ur2 >= r.ur2_floor_half - tol && ref.ur2 <= r.ur2_half + tol;
    check(rep, ur2_direct || ur2_between,
          tag + " ur2 ref=" + format_real(ref.ur2) + " optimal=" + format_real(r.ur2_half) +
              " sampled20=" + format_real(r.ur2_sampled_half) +
              " floor=" + format_real(r.ur2_floor_half) + " match=" +
              (ur2_direct ? "optimal" : ur2_between ? "between_floor_and_optimal" : "none"));

    check(rep, std::abs(r.ur3_half - ref.ur3) <= tol,
          tag + " ur3=" + format_real(r.ur3_half) + " ref=" + format_real(ref.ur3));
  }
  return rep;
}

}  // namespace

const std::vector<TableRow>& reference_table() {
  static const std::vector<TableRow> rows = {
      {2, 0.5, 0.5, 0.5, 0.5},
      {3, 0.533494, 0.468072, 0.533492, 0.454247},
      {4, 0.5, 0.416667, 0.499721, 0.375},
      {5, 0.450012, 0.370848, 0.447758, 0.305345},
      {6, 0.401089, 0.33344, 0.39402, 0.254505},
      {7, 0.358678, 0.302603, 0.348081, 0.218263},
      {8, 0.323223, 0.276769, 0.314628, 0.191461},
  };
  return rows;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"validity", "mixed",     "pauli",
                                                 "gamma",    "critical",  "dominance",
                                                 "asymptotics", "table"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "validity") return suite_validity(options);
  if (name == "mixed") return suite_mixed(options);
  if (name == "pauli") return suite_pauli(options);
  if (name == "gamma") return suite_gamma(options);
  if (name == "critical") return suite_critical(options);
  if (name == "dominance") return suite_dominance(options);
  if (name == "asymptotics") return suite_asymptotics(options);
  if (name == "table") return suite_table(options);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace urbound
