#pragma once

#include <string>
#include <vector>

#include "xyzdm/sweep.hpp"

namespace xyzdm {

// A named, baked-in sweep reproducing one published panel. Parameters the
// source caption states are copied exactly; everything the caption leaves
// open (time windows, panel lists, sampling densities) is chosen once here
// and recorded in assumptions, which write_metadata stamps into the run.
struct FigureRecipe {
  std::string name;
  SweepConfig config;
  std::vector<std::string> assumptions;
};

// Catalog order: fig1a..fig11.
const std::vector<FigureRecipe>& figure_recipes();

// Throws validation_error for a name outside the catalog.
const FigureRecipe& figure_recipe(const std::string& name);

std::vector<std::string> figure_recipe_names();

}  // namespace xyzdm
