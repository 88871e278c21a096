#include "urbound/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "urbound/bounds.hpp"
#include "urbound/operators.hpp"
#include "urbound/parallel.hpp"
#include "urbound/random.hpp"

namespace urbound {

namespace {

using Json = nlohmann::ordered_json;

// Round-trips through the 12-digit text so JSON and CSV carry the same value.
Json json_real(double x) { return std::stod(format_real(x)); }

template <typename Row, typename Fields>
void write_rows(std::ostream& os, const std::vector<Row>& rows, OutputFormat format,
                const std::vector<std::string>& header, Fields fields) {
  if (format == OutputFormat::Csv) {
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const Row& row : rows) {
      const std::vector<Json> values = fields(row);
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        const Json& v = values[i];
        if (v.is_string()) {
          os << v.get<std::string>();
        } else if (v.is_number_float()) {
          os << format_real(v.get<double>());
        } else if (v.is_null()) {
          os << "undef";
        } else {
          os << v.dump();
        }
      }
      os << '\n';
    }
    return;
  }
  Json out = Json::array();
  for (const Row& row : rows) {
    const std::vector<Json> values = fields(row);
    Json obj = Json::object();
    for (std::size_t i = 0; i < header.size(); ++i) {
      const Json& v = values[i];
      obj[header[i]] = v.is_number_float() ? json_real(v.get<double>()) : v;
    }
    out.push_back(std::move(obj));
  }
  os << out.dump(2) << '\n';
}

}  // namespace

std::string format_real(double x) {
  if (!std::isfinite(x)) throw Error(Errc::NonFinite, "non-finite value in output");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

PureState theta_state(std::size_t d, double theta) {
  if (d < 2) throw Error(Errc::BadDimension, "theta_state needs d >= 2");
  ComplexVector x = ComplexVector::Zero(static_cast<Eigen::Index>(d));
  x(static_cast<Eigen::Index>(slot_of(0, d))) = std::cos(theta);
  x(static_cast<Eigen::Index>(slot_of(-1, d))) = -std::sin(theta);
  return PureState::normalized(x);
}

std::vector<SweepRecord> theta_sweep(std::size_t d, std::size_t steps, int perp_samples,
                                     std::uint64_t seed) {
  if (steps < 1) throw Error(Errc::BadDimension, "sweep needs at least one step");
  const WeylPair pair = clock_shift_pair(d);
  std::vector<SweepRecord> rows(steps);
  parallel_for(steps, [&](std::size_t i) {
    const double theta =
        steps == 1 ? 0.0 : 0.25 * kPi * static_cast<double>(i) / static_cast<double>(steps - 1);
    const PureState psi = theta_state(d, theta);
    EvalConfig config;
    config.ur2 = Ur2Sampled{perp_samples, derive_seed(seed, i)};
    const BoundReport rep = evaluate_all(psi, pair.u(), pair.v(), config);
    const double ur2_opt = ur2_best(psi, pair.u(), pair.v()).value;
    if (ur2_opt > rep.sum + kBoundSlackTol)
      throw Error(Errc::BoundViolated, "optimal ur2 exceeds the variance sum");
    SweepRecord& r = rows[i];
    r.d = d;
    r.theta = theta;
    r.sum = rep.sum;
    r.ur1 = rep.ur1;
    r.ur2 = rep.ur2;
    r.ur2_opt = ur2_opt;
    r.ur3 = rep.ur3;
    r.ms_sum = rep.ms_sum.value_or(0.0);
    r.cos_phi3 = rep.cos_phi3;
  });
  return rows;
}

void write_sweep(std::ostream& os, const std::vector<SweepRecord>& rows, OutputFormat format) {
  write_rows(os, rows, format,
             {"d", "theta", "sum", "ur1", "ur2", "ur2_opt", "ur3", "ms_sum", "cos_phi3"},
             [](const SweepRecord& r) {
               return std::vector<Json>{r.d,     r.theta,   r.sum,   r.ur1,   r.ur2,
                                        r.ur2_opt, r.ur3, r.ms_sum,
                                        r.cos_phi3 ? Json(*r.cos_phi3) : Json(nullptr)};
             });
}

void write_mus_table(std::ostream& os, const std::vector<MusRecord>& rows, OutputFormat format) {
  write_rows(os, rows, format,
             {"d", "delta_u2", "ur1_half", "ur2_half", "ur3_half", "residual", "energy"},
             [](const MusRecord& r) {
               return std::vector<Json>{r.d,        r.delta_u2, r.ur1_half,     r.ur2_half,
                                        r.ur3_half, r.residual, r.ground_energy};
             });
}

void write_asymptotics(std::ostream& os, const std::vector<AsymptoticRecord>& rows,
                       OutputFormat format) {
  write_rows(os, rows, format,
             {"d", "family", "theta", "sum", "scaled", "ur1", "gap_hermitian", "gap_ur1",
              "limit_residual", "series_residual", "hermitian_slack"},
             [](const AsymptoticRecord& r) {
               return std::vector<Json>{r.d,
                                        family_name(r.family),
                                        r.theta,
                                        r.sum,
                                        r.scaled,
                                        r.ur1,
                                        r.gap_hermitian,
                                        r.gap_ur1,
                                        r.limit_residual,
                                        r.series_residual,
                                        r.hermitian_slack};
             });
}

}  // namespace urbound
