#include "xyzdm/sweep.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "xyzdm/entanglement.hpp"
#include "xyzdm/errors.hpp"

namespace xyzdm {
namespace {

using ojson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) {
  throw validation_error("config: " + msg);
}

// Canonical placement of each sweepable field in the config document.
struct FieldInfo {
  SweepField field;
  int section;  // 0 model, 1 Gamma, 2 time, 3 initial, 4 input
  int pos;      // canonical position inside its section
  const char* key;
};

constexpr FieldInfo kFields[] = {
    {SweepField::Variant, 0, 0, "variant"},
    {SweepField::J, 0, 1, "J"},
    {SweepField::Anisotropy, 0, 2, "gamma"},
    {SweepField::Jz, 0, 3, "Jz"},
    {SweepField::D, 0, 4, "D"},
    {SweepField::Rate, 1, 0, "Gamma"},
    {SweepField::Time, 2, 0, "time"},
    {SweepField::Alpha, 3, 1, "alpha"},
    {SweepField::Theta, 4, 0, "theta"},
    {SweepField::Phi, 4, 1, "phi"},
};

constexpr int kFieldCount = 10;

const FieldInfo& field_info(SweepField f) {
  return kFields[static_cast<int>(f)];
}

double axis_value(const AxisSpec& ax, std::uint64_t i) {
  if (!ax.is_range) return ax.values[i];
  if (ax.range.count == 1) return ax.range.start;
  const auto last = static_cast<std::uint64_t>(ax.range.count - 1);
  if (i == last) return ax.range.stop;
  return ax.range.start + (ax.range.stop - ax.range.start) *
                              (static_cast<double>(i) / static_cast<double>(last));
}

double finite_number(const ojson& v, const std::string& key) {
  if (!v.is_number()) fail(key + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(key + " must be finite");
  return x;
}

Range parse_range(const ojson& v, const std::string& key) {
  Range r;
  bool saw_start = false, saw_stop = false, saw_count = false;
  for (const auto& [k, item] : v.items()) {
    if (k == "start") {
      r.start = finite_number(item, key + ".start");
      saw_start = true;
    } else if (k == "stop") {
      r.stop = finite_number(item, key + ".stop");
      saw_stop = true;
    } else if (k == "count") {
      if (!item.is_number_integer()) fail(key + ".count must be an integer");
      r.count = item.get<std::int64_t>();
      saw_count = true;
    } else {
      fail(key + ": unknown range key '" + k + "'");
    }
  }
  if (!saw_start || !saw_stop || !saw_count)
    fail(key + " range needs start, stop, and count");
  return r;
}

void parse_numeric(const ojson& v, SweepField f, const std::string& key,
                   double* scalar, SweepConfig& cfg) {
  if (v.is_number()) {
    *scalar = finite_number(v, key);
    return;
  }
  AxisSpec ax;
  ax.field = f;
  if (v.is_array()) {
    for (const auto& item : v)
      ax.values.push_back(finite_number(item, key + " list entry"));
  } else if (v.is_object()) {
    ax.is_range = true;
    ax.range = parse_range(v, key);
  } else {
    fail(key + " must be a number, a list, or a {start, stop, count} range");
  }
  cfg.axes.push_back(std::move(ax));
}

DmAxis parse_variant_name(const ojson& v, const std::string& key) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "Dz") return DmAxis::Z;
    if (s == "Dx") return DmAxis::X;
  }
  fail(key + " must be \"Dz\" or \"Dx\"");
}

void parse_variant(const ojson& v, SweepConfig& cfg) {
  if (v.is_array()) {
    AxisSpec ax;
    ax.field = SweepField::Variant;
    for (const auto& item : v)
      ax.values.push_back(
          parse_variant_name(item, "model.variant entry") == DmAxis::Z ? 0.0
                                                                       : 1.0);
    cfg.axes.push_back(std::move(ax));
    return;
  }
  cfg.model.variant = parse_variant_name(v, "model.variant");
}

StateFamily parse_family(const ojson& v) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "antiparallel") return StateFamily::Antiparallel;
    if (s == "parallel") return StateFamily::Parallel;
  }
  fail("initial.family must be \"antiparallel\" or \"parallel\"");
}

void parse_model_section(const ojson& v, SweepConfig& cfg) {
  if (!v.is_object()) fail("model must be an object");
  for (const auto& [k, item] : v.items()) {
    if (k == "variant")
      parse_variant(item, cfg);
    else if (k == "J")
      parse_numeric(item, SweepField::J, "model.J", &cfg.model.J, cfg);
    else if (k == "gamma")
      parse_numeric(item, SweepField::Anisotropy, "model.gamma",
                    &cfg.model.gamma, cfg);
    else if (k == "Jz")
      parse_numeric(item, SweepField::Jz, "model.Jz", &cfg.model.Jz, cfg);
    else if (k == "D")
      parse_numeric(item, SweepField::D, "model.D", &cfg.model.D, cfg);
    else
      fail("model: unknown key '" + k + "'");
  }
}

void parse_initial_section(const ojson& v, SweepConfig& cfg) {
  if (!v.is_object()) fail("initial must be an object");
  for (const auto& [k, item] : v.items()) {
    if (k == "family")
      cfg.initial.family = parse_family(item);
    else if (k == "alpha")
      parse_numeric(item, SweepField::Alpha, "initial.alpha",
                    &cfg.initial.alpha, cfg);
    else
      fail("initial: unknown key '" + k + "'");
  }
}

void parse_input_section(const ojson& v, SweepConfig& cfg) {
  if (!v.is_object()) fail("input must be an object");
  for (const auto& [k, item] : v.items()) {
    if (k == "theta")
      parse_numeric(item, SweepField::Theta, "input.theta", &cfg.input.theta,
                    cfg);
    else if (k == "phi")
      parse_numeric(item, SweepField::Phi, "input.phi", &cfg.input.phi, cfg);
    else
      fail("input: unknown key '" + k + "'");
  }
}

void parse_outputs(const ojson& v, SweepConfig& cfg) {
  if (!v.is_array()) fail("outputs must be a list");
  cfg.outputs = SweepOutputs{false, false, false, false};
  for (const auto& item : v) {
    if (!item.is_string()) fail("outputs entries must be strings");
    const std::string s = item.get<std::string>();
    if (s == "C")
      cfg.outputs.C = true;
    else if (s == "C_out")
      cfg.outputs.C_out = true;
    else if (s == "F")
      cfg.outputs.F = true;
    else if (s == "F_asymptotic")
      cfg.outputs.F_asymptotic = true;
    else
      fail("outputs: unknown column '" + s + "'");
  }
}

// Smallest and largest value an axis can take; ranges interpolate linearly
// so the endpoints bound every sample.
std::pair<double, double> axis_bounds(const AxisSpec& ax) {
  if (ax.is_range) return {ax.range.start, ax.range.stop};
  const auto [lo, hi] = std::minmax_element(ax.values.begin(), ax.values.end());
  return {*lo, *hi};
}

void check_field_domain(const SweepConfig& cfg, SweepField f, double scalar,
                        double lo, double hi, bool hi_open, const char* what) {
  const AxisSpec* axis = nullptr;
  for (const auto& ax : cfg.axes)
    if (ax.field == f) axis = &ax;
  double vmin = scalar, vmax = scalar;
  if (axis) {
    const auto [a, b] = axis_bounds(*axis);
    vmin = a;
    vmax = b;
  }
  const bool hi_ok = hi_open ? vmax < hi : vmax <= hi;
  if (!(vmin >= lo && hi_ok)) fail(std::string(what));
}

void apply_field(SweepPoint& p, SweepField f, double v) {
  switch (f) {
    case SweepField::Variant:
      p.model.variant = v == 0.0 ? DmAxis::Z : DmAxis::X;
      break;
    case SweepField::J:
      p.model.J = v;
      break;
    case SweepField::Anisotropy:
      p.model.gamma = v;
      break;
    case SweepField::Jz:
      p.model.Jz = v;
      break;
    case SweepField::D:
      p.model.D = v;
      break;
    case SweepField::Rate:
      p.Gamma = v;
      break;
    case SweepField::Time:
      p.t = v;
      break;
    case SweepField::Alpha:
      p.initial.alpha = v;
      break;
    case SweepField::Theta:
      p.input.theta = v;
      break;
    case SweepField::Phi:
      p.input.phi = v;
      break;
  }
}

// Per-worker evaluation with last-value caches: consecutive grid indices
// share their outer-axis values, so the spectrum and the initial state are
// reused across the innermost sweeps.
class Evaluator {
 public:
  explicit Evaluator(const SweepConfig& cfg) : cfg_(cfg) {}

  void row(std::uint64_t index, std::string& out) {
    const SweepPoint p = sweep_point(cfg_, index);
    if (!spec_ || !(spec_key_ == p.model)) {
      spec_ = analytic_spectrum(p.model);
      spec_key_ = p.model;
    }
    if (!rho0_ || !(rho0_key_ == p.initial)) {
      rho0_ = initial_state(p.initial);
      rho0_key_ = p.initial;
    }
    const SweepOutputs& o = cfg_.outputs;
    double c = 0.0, c_out = 0.0, f = 0.0, fa = 0.0;
    if (o.C || o.C_out || o.F) {
      const DensityMatrix rho_t = evolve(*spec_, *rho0_, {p.Gamma, p.t});
      if (o.C) c = concurrence(rho_t);
      if (o.C_out || o.F) {
        const DensityMatrix tele = teleport_output(rho_t, rho_t, p.input);
        if (o.C_out) c_out = concurrence(tele);
        if (o.F) f = fidelity(input_state(p.input), tele);
      }
    }
    if (o.F_asymptotic) {
      const DensityMatrix rinf = asymptotic_state(*spec_, *rho0_);
      fa = fidelity(input_state(p.input), teleport_output(rinf, rinf, p.input));
    }
    format_row(p, c, c_out, f, fa, out);
  }

 private:
  void format_row(const SweepPoint& p, double c, double c_out, double f,
                  double fa, std::string& out) const {
    char buf[40];
    const auto num = [&](double v) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
    };
    out += p.model.variant == DmAxis::Z ? "Dz" : "Dx";
    out += ',';
    num(p.model.J);
    out += ',';
    num(p.model.gamma);
    out += ',';
    num(p.model.Jz);
    out += ',';
    num(p.model.D);
    out += ',';
    num(p.Gamma);
    out += ',';
    out += p.initial.family == StateFamily::Antiparallel ? "antiparallel"
                                                         : "parallel";
    out += ',';
    num(p.initial.alpha);
    out += ',';
    num(p.t);
    out += ',';
    if (cfg_.has_input) num(p.input.theta);
    out += ',';
    if (cfg_.has_input) num(p.input.phi);
    out += ',';
    if (cfg_.outputs.C) num(c);
    out += ',';
    if (cfg_.outputs.C_out) num(c_out);
    out += ',';
    if (cfg_.outputs.F) num(f);
    out += ',';
    if (cfg_.outputs.F_asymptotic) num(fa);
    out += '\n';
  }

  const SweepConfig& cfg_;
  std::optional<Spectrum> spec_;
  ModelParams spec_key_;
  std::optional<DensityMatrix> rho0_;
  InitialStateSpec rho0_key_;
};

}  // namespace

std::uint64_t AxisSpec::count() const {
  if (is_range) return range.count > 0 ? static_cast<std::uint64_t>(range.count) : 0;
  return values.size();
}

std::vector<double> AxisSpec::materialize() const {
  std::vector<double> out(count());
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = axis_value(*this, i);
  return out;
}

SweepConfig parse_config(const std::string& text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("top level must be an object");
  SweepConfig cfg;
  for (const auto& [k, v] : doc.items()) {
    if (k == "model")
      parse_model_section(v, cfg);
    else if (k == "Gamma")
      parse_numeric(v, SweepField::Rate, "Gamma", &cfg.Gamma, cfg);
    else if (k == "time")
      parse_numeric(v, SweepField::Time, "time", &cfg.time, cfg);
    else if (k == "initial")
      parse_initial_section(v, cfg);
    else if (k == "input") {
      cfg.has_input = true;
      parse_input_section(v, cfg);
    } else if (k == "outputs")
      parse_outputs(v, cfg);
    else if (k == "grid_cap") {
      if (!v.is_number_integer()) fail("grid_cap must be an integer");
      const std::int64_t cap = v.get<std::int64_t>();
      if (cap < 1) fail("grid_cap must be >= 1");
      cfg.grid_cap = static_cast<std::uint64_t>(cap);
    } else {
      fail("unknown key '" + k + "'");
    }
  }
  validate_config(cfg);
  return cfg;
}

void validate_config(const SweepConfig& cfg) {
  bool swept[kFieldCount] = {};
  for (const auto& ax : cfg.axes) {
    const char* key = field_info(ax.field).key;
    const int f = static_cast<int>(ax.field);
    if (f < 0 || f >= kFieldCount) fail("axis with unknown field");
    if (swept[f]) fail(std::string(key) + " swept twice");
    swept[f] = true;
    if (ax.is_range) {
      if (!ax.values.empty()) fail(std::string(key) + ": range axis carries a value list");
      if (ax.range.count < 1) fail(std::string(key) + ": count must be >= 1");
      if (!std::isfinite(ax.range.start) || !std::isfinite(ax.range.stop))
        fail(std::string(key) + ": range bounds must be finite");
      if (!(ax.range.start <= ax.range.stop))
        fail(std::string(key) + ": start must be <= stop");
    } else {
      if (ax.values.empty()) fail(std::string(key) + ": list must not be empty");
      for (const double x : ax.values)
        if (!std::isfinite(x)) fail(std::string(key) + ": list entries must be finite");
      if (ax.field == SweepField::Variant)
        for (const double x : ax.values)
          if (x != 0.0 && x != 1.0)
            fail("variant entries must encode Dz (0) or Dx (1)");
    }
  }
  for (const double x : {cfg.model.J, cfg.model.gamma, cfg.model.Jz,
                         cfg.model.D, cfg.Gamma, cfg.time, cfg.initial.alpha,
                         cfg.input.theta, cfg.input.phi})
    if (!std::isfinite(x)) fail("scalar parameters must be finite");
  constexpr double kInf = std::numeric_limits<double>::infinity();
  check_field_domain(cfg, SweepField::Rate, cfg.Gamma, 0.0, kInf, false,
                     "Gamma must be >= 0");
  check_field_domain(cfg, SweepField::Time, cfg.time, 0.0, kInf, false,
                     "time must be >= 0");
  if (cfg.has_input) {
    check_field_domain(cfg, SweepField::Theta, cfg.input.theta, 0.0,
                       std::numbers::pi, false, "theta must lie in [0, pi]");
    check_field_domain(cfg, SweepField::Phi, cfg.input.phi, 0.0,
                       2.0 * std::numbers::pi, true,
                       "phi must lie in [0, 2 pi)");
  } else {
    if (swept[static_cast<int>(SweepField::Theta)] ||
        swept[static_cast<int>(SweepField::Phi)])
      fail("theta/phi swept without an input section");
    if (cfg.outputs.C_out || cfg.outputs.F || cfg.outputs.F_asymptotic)
      fail("teleportation outputs require an input section");
  }
  if (cfg.grid_cap < 1) fail("grid_cap must be >= 1");
  grid_size(cfg);
}

std::uint64_t grid_size(const SweepConfig& cfg) {
  std::uint64_t size = 1;
  for (const auto& ax : cfg.axes) {
    const std::uint64_t c = ax.count();
    if (c == 0) fail(std::string(field_info(ax.field).key) + ": empty axis");
    if (size > cfg.grid_cap / c) fail("grid size exceeds grid_cap");
    size *= c;
  }
  return size;
}

SweepPoint sweep_point(const SweepConfig& cfg, std::uint64_t index) {
  SweepPoint p{cfg.model, cfg.Gamma, cfg.time, cfg.initial, cfg.input};
  for (std::size_t k = cfg.axes.size(); k-- > 0;) {
    const AxisSpec& ax = cfg.axes[k];
    const std::uint64_t c = ax.count();
    apply_field(p, ax.field, axis_value(ax, index % c));
    index /= c;
  }
  return p;
}

void run_sweep(const SweepConfig& cfg, std::ostream& out, int threads) {
  validate_config(cfg);
  const std::uint64_t n = grid_size(cfg);
  int nthreads = threads;
  if (nthreads <= 0)
    nthreads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (static_cast<std::uint64_t>(nthreads) > n) nthreads = static_cast<int>(n);
  if (nthreads < 1) nthreads = 1;

  out << kCsvHeader << '\n';
  constexpr std::uint64_t kBlock = 65536;
  std::vector<std::string> slots;
  for (std::uint64_t base = 0; base < n; base += kBlock) {
    const std::uint64_t m = std::min(kBlock, n - base);
    slots.assign(m, std::string());
    if (nthreads == 1) {
      Evaluator ev(cfg);
      for (std::uint64_t r = 0; r < m; ++r) ev.row(base + r, slots[r]);
    } else {
      const std::uint64_t chunk =
          (m + static_cast<std::uint64_t>(nthreads) - 1) /
          static_cast<std::uint64_t>(nthreads);
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(static_cast<std::size_t>(nthreads));
      for (int w = 0; w < nthreads; ++w) {
        const std::uint64_t lo =
            std::min(static_cast<std::uint64_t>(w) * chunk, m);
        const std::uint64_t hi = std::min(lo + chunk, m);
        if (lo >= hi) break;
        pool.emplace_back([&cfg, &slots, &errors, base, lo, hi, w] {
          try {
            Evaluator ev(cfg);
            for (std::uint64_t r = lo; r < hi; ++r) ev.row(base + r, slots[r]);
          } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (const auto& s : slots) out << s;
  }
}

void asymptotic_fidelity_curve(const SweepConfig& cfg, std::ostream& out,
                               int threads) {
  if (!cfg.outputs.F_asymptotic)
    throw validation_error(
        "asymptotic_fidelity_curve: outputs must include F_asymptotic");
  run_sweep(cfg, out, threads);
}

std::string serialize_config(const SweepConfig& cfg) {
  int axis_idx[kFieldCount];
  const AxisSpec* axis_for[kFieldCount];
  std::fill(std::begin(axis_idx), std::end(axis_idx), INT_MAX);
  std::fill(std::begin(axis_for), std::end(axis_for), nullptr);
  for (std::size_t i = 0; i < cfg.axes.size(); ++i) {
    const int f = static_cast<int>(cfg.axes[i].field);
    axis_idx[f] = static_cast<int>(i);
    axis_for[f] = &cfg.axes[i];
  }

  const auto numeric_value = [&](SweepField f, double scalar) -> ojson {
    if (const AxisSpec* ax = axis_for[static_cast<int>(f)]) {
      if (ax->is_range)
        return ojson{{"start", ax->range.start},
                     {"stop", ax->range.stop},
                     {"count", ax->range.count}};
      return ojson(ax->values);
    }
    return ojson(scalar);
  };

  const auto variant_value = [&]() -> ojson {
    if (const AxisSpec* ax = axis_for[static_cast<int>(SweepField::Variant)]) {
      ojson list = ojson::array();
      for (const double v : ax->values) list.push_back(v == 0.0 ? "Dz" : "Dx");
      return list;
    }
    return cfg.model.variant == DmAxis::Z ? "Dz" : "Dx";
  };

  // Keys inside a section, and sections themselves, are ordered so that
  // swept fields land in axis order; everything unswept keeps its
  // canonical position.
  struct Keyed {
    int first_axis;
    int rank;
    const char* key;
    ojson value;
  };
  const auto by_order = [](const Keyed& a, const Keyed& b) {
    return a.first_axis != b.first_axis ? a.first_axis < b.first_axis
                                        : a.rank < b.rank;
  };
  const auto emit = [](std::vector<Keyed>& entries) {
    ojson obj = ojson::object();
    std::sort(entries.begin(), entries.end(),
              [](const Keyed& a, const Keyed& b) {
                return a.first_axis != b.first_axis
                           ? a.first_axis < b.first_axis
                           : a.rank < b.rank;
              });
    for (auto& e : entries) obj[e.key] = std::move(e.value);
    return obj;
  };

  std::vector<Keyed> model_keys;
  model_keys.push_back({axis_idx[static_cast<int>(SweepField::Variant)], 0,
                        "variant", variant_value()});
  model_keys.push_back({axis_idx[static_cast<int>(SweepField::J)], 1, "J",
                        numeric_value(SweepField::J, cfg.model.J)});
  model_keys.push_back({axis_idx[static_cast<int>(SweepField::Anisotropy)], 2,
                        "gamma",
                        numeric_value(SweepField::Anisotropy, cfg.model.gamma)});
  model_keys.push_back({axis_idx[static_cast<int>(SweepField::Jz)], 3, "Jz",
                        numeric_value(SweepField::Jz, cfg.model.Jz)});
  model_keys.push_back({axis_idx[static_cast<int>(SweepField::D)], 4, "D",
                        numeric_value(SweepField::D, cfg.model.D)});

  std::vector<Keyed> initial_keys;
  initial_keys.push_back(
      {INT_MIN, 0, "family",
       cfg.initial.family == StateFamily::Antiparallel ? "antiparallel"
                                                       : "parallel"});
  initial_keys.push_back({axis_idx[static_cast<int>(SweepField::Alpha)], 1,
                          "alpha",
                          numeric_value(SweepField::Alpha, cfg.initial.alpha)});

  std::vector<Keyed> input_keys;
  if (cfg.has_input) {
    input_keys.push_back({axis_idx[static_cast<int>(SweepField::Theta)], 0,
                          "theta",
                          numeric_value(SweepField::Theta, cfg.input.theta)});
    input_keys.push_back({axis_idx[static_cast<int>(SweepField::Phi)], 1,
                          "phi", numeric_value(SweepField::Phi, cfg.input.phi)});
  }

  const auto section_axis = [&](std::initializer_list<SweepField> fields) {
    int first = INT_MAX;
    for (const SweepField f : fields)
      first = std::min(first, axis_idx[static_cast<int>(f)]);
    return first;
  };

  std::vector<Keyed> sections;
  sections.push_back({section_axis({SweepField::Variant, SweepField::J,
                                    SweepField::Anisotropy, SweepField::Jz,
                                    SweepField::D}),
                      0, "model", emit(model_keys)});
  sections.push_back({axis_idx[static_cast<int>(SweepField::Rate)], 1, "Gamma",
                      numeric_value(SweepField::Rate, cfg.Gamma)});
  sections.push_back({axis_idx[static_cast<int>(SweepField::Time)], 2, "time",
                      numeric_value(SweepField::Time, cfg.time)});
  sections.push_back({section_axis({SweepField::Alpha}), 3, "initial",
                      emit(initial_keys)});
  if (cfg.has_input)
    sections.push_back({section_axis({SweepField::Theta, SweepField::Phi}), 4,
                        "input", emit(input_keys)});
  std::sort(sections.begin(), sections.end(), by_order);

  ojson doc = ojson::object();
  for (auto& s : sections) doc[s.key] = std::move(s.value);
  ojson outs = ojson::array();
  if (cfg.outputs.C) outs.push_back("C");
  if (cfg.outputs.C_out) outs.push_back("C_out");
  if (cfg.outputs.F) outs.push_back("F");
  if (cfg.outputs.F_asymptotic) outs.push_back("F_asymptotic");
  doc["outputs"] = std::move(outs);
  doc["grid_cap"] = cfg.grid_cap;
  return doc.dump();
}

void write_metadata(std::ostream& out, const SweepConfig& cfg,
                    const RunMetadata& meta) {
  out << "artifact_version: " << kArtifactVersion << '\n';
  if (!meta.recipe.empty()) out << "recipe: " << meta.recipe << '\n';
  for (const auto& a : meta.assumptions) out << "assumption: " << a << '\n';
  out << "config: " << serialize_config(cfg) << '\n';
  out << "rows: " << meta.rows << '\n';
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", meta.wall_clock_seconds);
  out << "wall_clock_seconds: " << buf << '\n';
  out << "threads: " << meta.threads << '\n';
}

}  // namespace xyzdm
