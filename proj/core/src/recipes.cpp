#include "xyzdm/recipes.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "xyzdm/errors.hpp"

namespace xyzdm {
namespace {

constexpr double kPi = std::numbers::pi;

AxisSpec range_axis(SweepField f, double start, double stop,
                    std::int64_t count) {
  AxisSpec ax;
  ax.field = f;
  ax.is_range = true;
  ax.range = {start, stop, count};
  return ax;
}

AxisSpec list_axis(SweepField f, std::vector<double> values) {
  AxisSpec ax;
  ax.field = f;
  ax.values = std::move(values);
  return ax;
}

// Notes stamped into run metadata wherever the source caption leaves a
// choice open. Parameters the captions do state are set verbatim.
const char* kTimeNote =
    "time axis: captions give no window; t in [0, 30] with 301 points covers "
    "every caption's decoherence time";
const char* kAlphaPanelNote = "alpha panels: {pi/2, pi/3, pi/4, pi/8} as plotted";
const char* kAlpha81Note = "alpha axis: [0, pi] with 81 points";
const char* kAlpha161Note = "alpha axis: [0, pi] with 161 points";
const char* kThetaPanelNote = "theta panels: {0, pi/6, pi/4, pi/3, pi/2} as plotted";

std::vector<double> alpha_panels() { return {kPi / 2, kPi / 3, kPi / 4, kPi / 8}; }

// The quoted fifth curve is the state with amplitudes (0.9238, 0.3826),
// i.e. alpha = atan2(0.3826, 0.9238) (numerically pi/8).
std::vector<double> alpha_panels_fidelity() {
  return {0.0, std::atan2(0.3826, 0.9238), kPi / 4, 3 * kPi / 8, kPi / 2};
}

std::vector<double> theta_panels() {
  return {0.0, kPi / 6, kPi / 4, kPi / 3, kPi / 2};
}

SweepConfig base_config() {
  SweepConfig cfg;
  cfg.Gamma = 0.02;
  return cfg;
}

// Figs. 1-4: concurrence vs one coupling and t, one alpha panel per curve.
FigureRecipe coupling_figure(const char* name, DmAxis variant, AxisSpec sweep,
                             const char* sweep_note, double J, double gamma,
                             double Jz, double D) {
  FigureRecipe r;
  r.name = name;
  SweepConfig cfg = base_config();
  cfg.model.variant = variant;
  cfg.model.J = J;
  cfg.model.gamma = gamma;
  cfg.model.Jz = Jz;
  cfg.model.D = D;
  cfg.axes.push_back(list_axis(SweepField::Alpha, alpha_panels()));
  cfg.axes.push_back(std::move(sweep));
  cfg.axes.push_back(range_axis(SweepField::Time, 0.0, 30.0, 301));
  r.config = std::move(cfg);
  r.assumptions = {kAlphaPanelNote, sweep_note, kTimeNote};
  return r;
}

// Figs. 5-8: one quantity vs alpha and t for fixed couplings.
FigureRecipe alpha_time_figure(const char* name, DmAxis variant,
                               StateFamily family, double J, double gamma,
                               double Jz, double D) {
  FigureRecipe r;
  r.name = name;
  SweepConfig cfg = base_config();
  cfg.model.variant = variant;
  cfg.model.J = J;
  cfg.model.gamma = gamma;
  cfg.model.Jz = Jz;
  cfg.model.D = D;
  cfg.initial.family = family;
  cfg.axes.push_back(range_axis(SweepField::Alpha, 0.0, kPi, 81));
  cfg.axes.push_back(range_axis(SweepField::Time, 0.0, 30.0, 301));
  r.config = std::move(cfg);
  r.assumptions = {kAlpha81Note, kTimeNote};
  return r;
}

void to_teleported_concurrence(FigureRecipe& r) {
  r.config.outputs = SweepOutputs{false, true, false, false};
  r.config.has_input = true;
  r.config.input = InputState{kPi / 2, 0.0};
  r.assumptions.insert(r.assumptions.begin(),
                       "input theta = pi/2 (caption fixes phi = 0 only)");
}

// Fig. 9: fidelity vs t for both variants, one theta per panel.
FigureRecipe fidelity_figure(const char* name, double theta) {
  FigureRecipe r;
  r.name = name;
  SweepConfig cfg = base_config();
  cfg.model.J = 1.0;
  cfg.model.gamma = 0.4;
  cfg.model.Jz = 0.5;
  cfg.model.D = 2.0;
  cfg.outputs = SweepOutputs{false, false, true, false};
  cfg.has_input = true;
  cfg.input = InputState{theta, 0.0};
  cfg.axes.push_back(list_axis(SweepField::Variant, {0.0, 1.0}));
  cfg.axes.push_back(list_axis(SweepField::Alpha, alpha_panels_fidelity()));
  cfg.axes.push_back(range_axis(SweepField::Time, 0.0, 30.0, 301));
  r.config = std::move(cfg);
  r.assumptions = {
      "alpha curves: {0, atan2(0.3826, 0.9238), pi/4, 3 pi/8, pi/2} as plotted",
      kTimeNote};
  return r;
}

// Figs. 10-11: asymptotic fidelity vs alpha, one theta per curve. Time is
// irrelevant in the asymptotic limit and stays at the scalar default.
FigureRecipe asymptotic_figure(const char* name, StateFamily family,
                               double gamma, double Jz) {
  FigureRecipe r;
  r.name = name;
  SweepConfig cfg = base_config();
  cfg.model.J = 1.0;
  cfg.model.gamma = gamma;
  cfg.model.Jz = Jz;
  cfg.model.D = 2.0;
  cfg.initial.family = family;
  cfg.outputs = SweepOutputs{false, false, false, true};
  cfg.has_input = true;
  cfg.axes.push_back(list_axis(SweepField::Theta, theta_panels()));
  cfg.axes.push_back(range_axis(SweepField::Alpha, 0.0, kPi, 161));
  r.config = std::move(cfg);
  r.assumptions = {kThetaPanelNote, kAlpha161Note};
  return r;
}

std::vector<FigureRecipe> build_catalog() {
  std::vector<FigureRecipe> cat;

  cat.push_back(coupling_figure(
      "fig1a", DmAxis::Z, range_axis(SweepField::J, -3.0, 3.0, 61),
      "J axis: [-3, 3] with 61 points", 1.0, 0.2, 1.0, 2.0));
  cat.push_back(coupling_figure(
      "fig1b", DmAxis::X, range_axis(SweepField::J, -3.0, 3.0, 61),
      "J axis: [-3, 3] with 61 points", 1.0, 0.2, 1.0, 2.0));
  cat.push_back(coupling_figure(
      "fig2a", DmAxis::Z, range_axis(SweepField::Anisotropy, 0.0, 1.0, 51),
      "gamma axis: [0, 1] with 51 points", 1.0, 0.0, 1.0, 2.0));
  cat.push_back(coupling_figure(
      "fig2b", DmAxis::X, range_axis(SweepField::Anisotropy, 0.0, 1.0, 51),
      "gamma axis: [0, 1] with 51 points", 1.0, 0.0, 1.0, 2.0));
  cat.push_back(coupling_figure(
      "fig3a", DmAxis::Z, range_axis(SweepField::Jz, -3.0, 3.0, 61),
      "Jz axis: [-3, 3] with 61 points", 1.0, 0.5, 0.0, 2.0));
  cat.push_back(coupling_figure(
      "fig3b", DmAxis::X, range_axis(SweepField::Jz, -3.0, 3.0, 61),
      "Jz axis: [-3, 3] with 61 points", 1.0, 0.5, 0.0, 2.0));
  cat.push_back(coupling_figure(
      "fig4a", DmAxis::Z, range_axis(SweepField::D, 0.0, 3.0, 61),
      "D axis: [0, 3] with 61 points", 1.0, 0.6, 1.5, 0.0));
  cat.push_back(coupling_figure(
      "fig4b", DmAxis::X, range_axis(SweepField::D, 0.0, 3.0, 61),
      "D axis: [0, 3] with 61 points", 1.0, 0.6, 1.5, 0.0));

  cat.push_back(alpha_time_figure("fig5a", DmAxis::Z,
                                  StateFamily::Antiparallel, 1.0, 0.2, 2.0,
                                  0.5));
  cat.push_back(alpha_time_figure("fig5b", DmAxis::Z, StateFamily::Parallel,
                                  1.0, 0.2, 2.0, 0.5));

  for (const StateFamily family :
       {StateFamily::Antiparallel, StateFamily::Parallel}) {
    FigureRecipe r;
    r.name = family == StateFamily::Antiparallel ? "fig6a" : "fig6b";
    SweepConfig cfg = base_config();
    cfg.model.variant = DmAxis::X;
    cfg.model.gamma = 0.2;
    cfg.model.D = 0.5;
    cfg.initial.family = family;
    cfg.axes.push_back(list_axis(SweepField::J, {1.0, -1.0}));
    cfg.axes.push_back(list_axis(SweepField::Jz, {2.0, -2.0}));
    cfg.axes.push_back(range_axis(SweepField::Alpha, 0.0, kPi, 81));
    cfg.axes.push_back(range_axis(SweepField::Time, 0.0, 30.0, 301));
    r.config = std::move(cfg);
    r.assumptions = {
        "caption omits J and Jz; panels use J in {1, -1} and Jz in {2, -2}",
        kAlpha81Note, kTimeNote};
    cat.push_back(std::move(r));
  }

  {
    FigureRecipe r = alpha_time_figure("fig7a", DmAxis::Z,
                                       StateFamily::Antiparallel, 1.0, 0.2,
                                       2.0, 0.5);
    to_teleported_concurrence(r);
    cat.push_back(std::move(r));
  }
  {
    FigureRecipe r = alpha_time_figure("fig7b", DmAxis::Z,
                                       StateFamily::Parallel, 1.0, 0.2, 2.0,
                                       0.5);
    to_teleported_concurrence(r);
    cat.push_back(std::move(r));
  }
  {
    FigureRecipe r = alpha_time_figure("fig8a", DmAxis::X,
                                       StateFamily::Antiparallel, 1.0, 0.2,
                                       2.0, 0.5);
    to_teleported_concurrence(r);
    cat.push_back(std::move(r));
  }
  {
    FigureRecipe r = alpha_time_figure("fig8b", DmAxis::X,
                                       StateFamily::Antiparallel, 1.0, 0.2,
                                       -2.0, 0.5);
    to_teleported_concurrence(r);
    cat.push_back(std::move(r));
  }

  cat.push_back(fidelity_figure("fig9a", kPi / 2));
  cat.push_back(fidelity_figure("fig9b", kPi / 3));
  cat.push_back(fidelity_figure("fig9c", kPi / 4));
  cat.push_back(fidelity_figure("fig9d", kPi / 6));

  {
    FigureRecipe r = asymptotic_figure("fig10a", StateFamily::Antiparallel,
                                       0.8, 2.0);
    r.config.model.variant = DmAxis::Z;
    cat.push_back(std::move(r));
  }
  {
    FigureRecipe r = asymptotic_figure("fig10b", StateFamily::Antiparallel,
                                       0.8, 2.0);
    r.config.model.variant = DmAxis::X;
    cat.push_back(std::move(r));
  }
  {
    FigureRecipe r = asymptotic_figure("fig11", StateFamily::Parallel, 0.1,
                                       3.0);
    AxisSpec variant = list_axis(SweepField::Variant, {0.0, 1.0});
    r.config.axes.insert(r.config.axes.begin(), std::move(variant));
    cat.push_back(std::move(r));
  }

  return cat;
}

}  // namespace

const std::vector<FigureRecipe>& figure_recipes() {
  static const std::vector<FigureRecipe> catalog = build_catalog();
  return catalog;
}

const FigureRecipe& figure_recipe(const std::string& name) {
  for (const auto& r : figure_recipes())
    if (r.name == name) return r;
  throw validation_error("no figure recipe named '" + name + "'");
}

std::vector<std::string> figure_recipe_names() {
  std::vector<std::string> names;
  names.reserve(figure_recipes().size());
  for (const auto& r : figure_recipes()) names.push_back(r.name);
  return names;
}

}  // namespace xyzdm
