#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "urbound/asymptotics.hpp"
#include "urbound/mus.hpp"

namespace urbound {

enum class OutputFormat { Csv, Json };

/// "%.12g"; throws NonFinite for NaN or infinity.
std::string format_real(double x);

/// One grid point of the family cos(theta)|0> - sin(theta)|-1> on the clock/shift pair.
struct SweepRecord {
  std::size_t d = 0;
  double theta = 0.0;
  double sum = 0.0;
  double ur1 = 0.0;
  double ur2 = 0.0;      // max over sampled perps and both signs
  double ur2_opt = 0.0;  // optimal perp
  double ur3 = 0.0;
  double ms_sum = 0.0;
  std::optional<double> cos_phi3;
};

/// theta_i = (pi/4) i / (steps - 1), i = 0 .. steps-1 (theta = 0 when steps = 1).
/// Row i samples perps with derive_seed(seed, i). Throws BoundViolated if a
/// bound exceeds the sum by more than 1e-10.
std::vector<SweepRecord> theta_sweep(std::size_t d, std::size_t steps, int perp_samples,
                                     std::uint64_t seed);

PureState theta_state(std::size_t d, double theta);

void write_sweep(std::ostream& os, const std::vector<SweepRecord>& rows, OutputFormat format);
void write_mus_table(std::ostream& os, const std::vector<MusRecord>& rows, OutputFormat format);
void write_asymptotics(std::ostream& os, const std::vector<AsymptoticRecord>& rows,
                       OutputFormat format);

}  // namespace urbound
