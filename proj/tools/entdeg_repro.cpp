// Reproduction driver: runs one sweep and writes <out>.csv and <out>.gp.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entdeg/error.hpp"
#include "entdeg/sweep.hpp"

namespace {

constexpr int kExitPointErrors = 1;
constexpr int kExitSpecError = 2;

std::pair<std::string, double> parse_setting(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0)
    throw entdeg::Error(entdeg::ErrorCode::SpecError, "--set expects key=value, got '" + text + "'");
  const std::string value = text.substr(eq + 1);
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return {text.substr(0, eq), v};
  } catch (const std::exception&) {
    throw entdeg::Error(entdeg::ErrorCode::SpecError, "bad value in --set " + text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace entdeg;
  CLI::App app{"Entanglement generation and degradation sweeps"};

  std::string quantity;
  std::string preset_name;
  std::vector<std::string> grids;
  std::vector<std::string> settings;
  int cutoff = 0;
  std::uint64_t seed = 20010601;
  std::string out = "sweep";
  std::string units = "nats";
  int jobs = 1;
  bool list = false;

  app.add_option("--quantity", quantity,
                 "bs-entangle | bs-lossy-bound | fiber-estimate | fiber-bound | fiber-distance | compare | "
                 "available-entanglement");
  app.add_option("--preset", preset_name, "Figure preset (see --list-presets); other flags override it");
  app.add_option("--grid", grids, "Grid axis name=min:max:steps or name=v1,v2,...")->take_all();
  app.add_option("--set", settings, "Fixed parameter key=value")->take_all();
  app.add_option("--cutoff", cutoff, "Fock cutoff per mode");
  app.add_option("--seed", seed, "Seed for minimizer restarts");
  app.add_option("--out", out, "Output prefix; writes <out>.csv and <out>.gp");
  app.add_option("--units", units, "nats or bits")->check(CLI::IsMember({"nats", "bits"}));
  app.add_option("--jobs", jobs, "Concurrent grid points")->check(CLI::PositiveNumber);
  app.add_flag("--list-presets", list, "Print preset names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitSpecError;
  }

  if (list) {
    for (const auto& name : sweep::preset_names()) {
      const auto s = sweep::preset(name);
      std::cout << name << "  " << sweep::to_string(s.quantity);
      for (const auto& a : s.axes) std::cout << "  " << a.name << "[" << a.values.size() << "]";
      std::cout << "\n";
    }
    return 0;
  }

  sweep::SweepSpec spec;
  try {
    if (!preset_name.empty()) spec = sweep::preset(preset_name);
    else if (quantity.empty()) throw Error(ErrorCode::SpecError, "give --quantity or --preset");
    if (!quantity.empty()) spec.quantity = sweep::parse_quantity(quantity);
    if (!grids.empty()) {
      spec.axes.clear();
      for (const auto& g : grids) spec.axes.push_back(sweep::parse_axis(g));
    }
    for (const auto& s : settings) {
      const auto [k, v] = parse_setting(s);
      spec.params[k] = v;
    }
    if (app.count("--cutoff")) spec.cutoff = cutoff;
    spec.seed = seed;
    spec.units = units == "bits" ? sweep::Units::Bits : sweep::Units::Nats;
    spec.jobs = jobs;
    sweep::validate(spec);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitSpecError;
  }

  try {
    const auto table = sweep::run_sweep(spec);
    const std::string csv = out + ".csv";
    sweep::emit_csv(table, csv);
    sweep::emit_plotscript(table, csv, out + ".gp");
    std::size_t failed = 0;
    for (const auto& e : table.errors) failed += !e.empty();
    std::cerr << table.rows.size() << " points, " << failed << " failed; wrote " << csv << " and " << out << ".gp\n";
    return table.has_errors() ? kExitPointErrors : 0;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::SpecError ? kExitSpecError : kExitPointErrors;
  }
}
