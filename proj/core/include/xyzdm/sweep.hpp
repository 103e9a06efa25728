#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "xyzdm/dynamics.hpp"
#include "xyzdm/model.hpp"
#include "xyzdm/teleport.hpp"

namespace xyzdm {

inline constexpr char kArtifactVersion[] = "0.1.0";

// Fixed CSV header. Absent outputs (and theta/phi when no input is
// configured) emit empty fields; floats use "%.17g"; rows end in '\n'.
inline constexpr char kCsvHeader[] =
    "variant,J,gamma,Jz,D,Gamma,family,alpha,t,theta,phi,"
    "C,C_out,F,F_asymptotic";

// Every sweepable scalar. Variant axes carry the encoded values 0 (Dz)
// and 1 (Dx) in an explicit list.
enum class SweepField { Variant, J, Anisotropy, Jz, D, Rate, Time, Alpha, Theta, Phi };

// Inclusive linspace: count >= 1, start <= stop, count == 1 yields {start}.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  std::int64_t count = 1;
  bool operator==(const Range&) const = default;
};

struct AxisSpec {
  SweepField field = SweepField::Time;
  bool is_range = false;
  Range range;                 // when is_range
  std::vector<double> values;  // explicit list otherwise
  std::uint64_t count() const;
  std::vector<double> materialize() const;
  bool operator==(const AxisSpec&) const = default;
};

struct SweepOutputs {
  bool C = true;
  bool C_out = false;
  bool F = false;
  bool F_asymptotic = false;
  bool operator==(const SweepOutputs&) const = default;
};

// A Cartesian grid: scalar slots provide the value of every field that is
// not swept, axes (in config-document order, last fastest) provide the
// rest. A field given as a range or list leaves its scalar slot at the
// type default, so configs compare and round-trip exactly.
struct SweepConfig {
  ModelParams model;
  double Gamma = 0.0;
  double time = 0.0;
  InitialStateSpec initial;
  bool has_input = false;  // teleportation outputs require an input section
  InputState input;
  SweepOutputs outputs;
  std::uint64_t grid_cap = 10'000'000;
  std::vector<AxisSpec> axes;
  bool operator==(const SweepConfig&) const = default;
};

// Effective parameter values at one grid index (row order = index order).
struct SweepPoint {
  ModelParams model;
  double Gamma = 0.0;
  double t = 0.0;
  InitialStateSpec initial;
  InputState input;
};

// JSON config, keys mirroring the field names above: model {variant, J,
// gamma, Jz, D}, Gamma, time, initial {family, alpha}, input {theta, phi},
// outputs (list of column names), grid_cap. Numeric fields accept a
// scalar, a {start, stop, count} range, or an explicit list; variant
// accepts "Dz", "Dx", or a list of those. Axis nesting order is the order
// the swept fields appear in the document. Unknown keys, malformed
// ranges, domain violations, and a grid larger than grid_cap all throw
// validation_error.
SweepConfig parse_config(const std::string& text);

// Single-line JSON which parses back to an equal config. Sections and
// keys are emitted so that swept fields appear in axis order (axes of the
// same section serialize adjacently).
std::string serialize_config(const SweepConfig& cfg);

// The checks behind parse_config, usable on hand-built configs.
void validate_config(const SweepConfig& cfg);

// Product of axis counts (1 when axes is empty). Throws validation_error
// past grid_cap.
std::uint64_t grid_size(const SweepConfig& cfg);

SweepPoint sweep_point(const SweepConfig& cfg, std::uint64_t index);

// One CSV row per grid point in nesting order, header first. Deterministic
// and byte-identical for identical configs regardless of threads: workers
// fill indexed slots, emission is in-order. threads <= 0 picks the
// hardware count.
void run_sweep(const SweepConfig& cfg, std::ostream& out, int threads = 1);

// run_sweep for asymptotic-fidelity studies; requires outputs.F_asymptotic.
void asymptotic_fidelity_curve(const SweepConfig& cfg, std::ostream& out,
                               int threads = 1);

struct RunMetadata {
  std::string recipe;  // empty for ad hoc configs
  std::vector<std::string> assumptions;
  std::uint64_t rows = 0;
  double wall_clock_seconds = 0.0;
  int threads = 1;
};

// Sidecar key-value lines: artifact version, recipe, stamped assumptions,
// config echo, row count, wall clock, thread count.
void write_metadata(std::ostream& out, const SweepConfig& cfg,
                    const RunMetadata& meta);

}  // namespace xyzdm
