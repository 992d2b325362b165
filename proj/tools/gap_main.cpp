#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gap/bounds.hpp"
#include "gap/galerkin.hpp"
#include "gap/gsa.hpp"
#include "gap/jsonio.hpp"
#include "gap/sturm.hpp"

namespace {

using gap::json;

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kInapplicable = 3;
constexpr int kSandwichViolation = 4;

struct Options {
  std::string spec_path;
  std::string out_path;
  std::string body_kind;
  std::string potential_kind;
  std::string weight_arg;
  std::string csv_path;
  double radius = 1.0;
  double half_width = 1.0;
  double p = 2.0;
  double alpha = 2.0;
  int dim = 2;
  unsigned long long seed = 20240901ull;
  int grid_n = 0;       // 0 = per-command default
  int degree = 5;
  double trunc = 0.0;   // 0 = auto
  long long mc_n = 400000;
  double lambda_override = 0.0;
  double inflate_lower = 1.0;  // test hook for the sandwich alarm
};

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

// Descriptor = {"body": ..., "potential": ..., "options": {...}} from --spec,
// or assembled from flags. Flags override file options.
json build_descriptor(const Options& opt, const CLI::App& cmd) {
  json desc;
  if (!opt.spec_path.empty()) {
    desc = load_json_file(opt.spec_path);
    if (!desc.is_object())
      throw std::invalid_argument("descriptor: top level must be an object");
    for (const auto& item : desc.items())
      if (item.key() != "body" && item.key() != "potential" &&
          item.key() != "options")
        throw std::invalid_argument("descriptor: unknown key '" + item.key() +
                                    "'");
    if (desc.contains("options")) {
      const json& o = desc["options"];
      for (const auto& item : o.items()) {
        const std::string& k = item.key();
        if (k != "seed" && k != "grid_n" && k != "degree" && k != "trunc" &&
            k != "mc_n")
          throw std::invalid_argument("descriptor: unknown option '" + k + "'");
      }
    }
  }
  if (!opt.body_kind.empty()) {
    json body;
    body["kind"] = opt.body_kind;
    if (opt.body_kind == "ball" || opt.body_kind == "ball_complement") {
      body["radius"] = opt.radius;
      body["dim"] = opt.dim;
    } else if (opt.body_kind == "box") {
      body["half_width"] = opt.half_width;
      body["dim"] = opt.dim;
    } else if (opt.body_kind == "lp_ball") {
      body["p"] = opt.p;
      body["radius"] = opt.radius;
      body["dim"] = opt.dim;
    } else {
      throw std::invalid_argument(
          "--body must be ball, box, lp_ball or ball_complement "
          "(orlicz bodies need --spec)");
    }
    desc["body"] = body;
  }
  if (!opt.potential_kind.empty()) {
    json pot;
    pot["kind"] = opt.potential_kind;
    if (opt.potential_kind == "radial_power") pot["alpha"] = opt.alpha;
    else if (opt.potential_kind != "uniform")
      throw std::invalid_argument(
          "--potential must be uniform or radial_power "
          "(product potentials need --spec)");
    desc["potential"] = pot;
  }
  if (!desc.contains("body")) throw std::invalid_argument("no body given");
  if (!desc.contains("potential"))
    throw std::invalid_argument("no potential given");
  json o = desc.contains("options") ? desc["options"] : json::object();
  auto flag_given = [&cmd](const std::string& name) {
    return cmd.count(name) > 0;
  };
  if (flag_given("--seed") || !o.contains("seed")) o["seed"] = opt.seed;
  if (flag_given("--grid-n") || !o.contains("grid_n")) o["grid_n"] = opt.grid_n;
  if (flag_given("--degree") || !o.contains("degree")) o["degree"] = opt.degree;
  if (flag_given("--trunc") || !o.contains("trunc")) o["trunc"] = opt.trunc;
  if (flag_given("--mc-n") || !o.contains("mc_n")) o["mc_n"] = opt.mc_n;
  desc["options"] = o;
  return desc;
}

void emit(const json& doc, const Options& opt) {
  if (!opt.out_path.empty()) gap::atomic_write(opt.out_path, gap::dump_json(doc));
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_bounds_table(const json& doc) {
  std::printf("%-28s %-6s %-26s %s\n", "method", "kind", "value", "ok");
  for (const auto& b : doc["bounds"]) {
    std::printf("%-28s %-6s %-26s %s\n",
                b["method"].get<std::string>().c_str(),
                b["kind"].get<std::string>().c_str(),
                fmt(b["value"].get<double>()).c_str(),
                b["assumptions_ok"].get<bool>() ? "yes" : "no");
  }
}

json bounds_to_json(const std::vector<gap::BoundReport>& reps) {
  json arr = json::array();
  for (const auto& r : reps) arr.push_back(gap::report_to_json(r));
  return arr;
}

int cmd_bound(const Options& opt, const CLI::App& cmd) {
  const json desc = build_descriptor(opt, cmd);
  const gap::Body body = gap::body_from_json(desc["body"]);
  const gap::Potential pot = gap::potential_from_json(desc["potential"]);
  const auto reps = gap::best_bound(pot, body);
  json doc;
  doc["command"] = "bound";
  doc["descriptor"] = desc;
  doc["bounds"] = bounds_to_json(reps);
  emit(doc, opt);
  print_bounds_table(doc);
  bool any_ok = false;
  for (const auto& r : reps) any_ok = any_ok || r.assumptions_ok;
  if (!any_ok) {
    std::fprintf(stderr, "no applicable bound for this descriptor\n");
    return kInapplicable;
  }
  return kOk;
}

int cmd_validate(const Options& opt, const CLI::App& cmd) {
  const json desc = build_descriptor(opt, cmd);
  const gap::Body body = gap::body_from_json(desc["body"]);
  const gap::Potential pot = gap::potential_from_json(desc["potential"]);
  const json& o = desc["options"];
  const int sturm_n = o["grid_n"].get<int>() > 0 ? o["grid_n"].get<int>() : 2000;
  const int degree = o["degree"].get<int>();
  const double trunc = o["trunc"].get<double>();
  const auto seed = o["seed"].get<unsigned long long>();
  const auto mc_n = o["mc_n"].get<long long>();

  const auto reps = gap::best_bound(pot, body);
  json doc;
  doc["command"] = "validate";
  doc["descriptor"] = desc;
  doc["bounds"] = bounds_to_json(reps);

  // numeric references: 1D reductions where the structure allows, a
  // variational upper bound everywhere else
  json refs = json::object();
  struct Ref {
    std::string name;
    double value;
    double slack;  // extra tolerance (Monte Carlo error bars)
  };
  std::vector<Ref> ref_list;
  const bool radial_body = std::holds_alternative<gap::Ball>(body) ||
                           std::holds_alternative<gap::BallComplement>(body);
  if (radial_body && gap::is_radial(pot)) {
    const auto rg = gap::radial_gap(pot, body, sturm_n, trunc);
    json r;
    r["value"] = rg.value;
    r["sector0"] = rg.sector0;
    r["sector1"] = rg.sector1;
    r["winning_sector"] = rg.winner;
    r["trunc_radius"] = rg.trunc_radius;
    r["mesh_n"] = sturm_n;
    refs["radial_gap"] = r;
    ref_list.push_back({"radial_gap", rg.value, 0.0});
  }
  if (std::holds_alternative<gap::Box>(body) &&
      (std::holds_alternative<gap::Uniform>(pot) ||
       std::holds_alternative<gap::ProductPotential>(pot))) {
    const double pg = gap::product_gap(pot, body, sturm_n);
    json r;
    r["value"] = pg;
    r["mesh_n"] = sturm_n;
    refs["product_gap"] = r;
    ref_list.push_back({"product_gap", pg, 0.0});
  }
  if (gap::is_bounded(body) || (radial_body && gap::is_radial(pot))) {
    const auto gk = gap::galerkin_upper(pot, body, degree, mc_n, seed, trunc);
    json r;
    r["value"] = gk.value;
    r["std_error"] = gk.std_error;
    r["degree"] = degree;
    r["basis_size"] = gk.basis_size;
    r["basis_used"] = gk.basis_used;
    refs["galerkin_upper"] = r;
    ref_list.push_back({"galerkin_upper", gk.value, 3.0 * gk.std_error});
  }
  doc["references"] = refs;

  // the alarm: no certified lower bound may exceed a numeric reference
  json sandwich;
  sandwich["inflate_factor"] = opt.inflate_lower;
  json violations = json::array();
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& rep : reps) {
    if (rep.kind == gap::BoundKind::upper || !rep.assumptions_ok) continue;
    const double certified = rep.value * opt.inflate_lower;
    for (const auto& ref : ref_list) {
      const double tol = 1e-6 * std::max(1.0, std::fabs(ref.value)) + ref.slack;
      const double margin = ref.value + tol - certified;
      worst = std::min(worst, ref.value - certified);
      if (margin < 0.0) {
        json v;
        v["method"] = rep.method;
        v["certified_value"] = certified;
        v["reference"] = ref.name;
        v["reference_value"] = ref.value;
        v["excess"] = certified - ref.value;
        violations.push_back(v);
      }
    }
  }
  sandwich["ok"] = violations.empty();
  sandwich["worst_margin"] = worst;
  sandwich["violations"] = violations;
  doc["sandwich"] = sandwich;
  emit(doc, opt);

  print_bounds_table(doc);
  std::printf("\n%-28s %-26s\n", "reference", "value");
  for (const auto& item : doc["references"].items())
    std::printf("%-28s %-26s\n", item.key().c_str(),
                fmt(item.value()["value"].get<double>()).c_str());
  if (!doc["sandwich"]["ok"].get<bool>()) {
    for (const auto& v : doc["sandwich"]["violations"])
      std::fprintf(stderr,
                   "sandwich violation: %s = %s exceeds %s = %s\n",
                   v["method"].get<std::string>().c_str(),
                   fmt(v["certified_value"].get<double>()).c_str(),
                   v["reference"].get<std::string>().c_str(),
                   fmt(v["reference_value"].get<double>()).c_str());
    return kSandwichViolation;
  }
  std::printf("\nsandwich ok (worst margin %s)\n",
              fmt(doc["sandwich"]["worst_margin"].get<double>()).c_str());
  return kOk;
}

int cmd_certify(const Options& opt, const CLI::App& cmd) {
  const json desc = build_descriptor(opt, cmd);
  if (opt.weight_arg.empty())
    throw std::invalid_argument("certify needs --weight (JSON or file path)");
  json wj;
  if (!opt.weight_arg.empty() && opt.weight_arg.front() == '{')
    wj = json::parse(opt.weight_arg);
  else
    wj = load_json_file(opt.weight_arg);
  const gap::Body body = gap::body_from_json(desc["body"]);
  const gap::Potential pot = gap::potential_from_json(desc["potential"]);
  const gap::WeightSpec weight = gap::weight_from_json(wj);
  gap::GridSpec grid;
  const json& o = desc["options"];
  if (o["grid_n"].get<int>() > 0) {
    grid.interior = o["grid_n"].get<int>();
    grid.boundary = o["grid_n"].get<int>();
  }
  if (o["trunc"].get<double>() > 0.0)
    grid.trunc_radius = o["trunc"].get<double>();
  const auto rep = gap::certify_weight(pot, body, weight, grid);
  json doc;
  doc["command"] = "certify";
  doc["descriptor"] = desc;
  doc["weight"] = wj;
  doc["certificate"] = gap::report_to_json(rep);
  emit(doc, opt);
  const auto& c = doc["certificate"];
  std::printf("%-28s %s\n", "method", c["method"].get<std::string>().c_str());
  std::printf("%-28s %s\n", "value", fmt(c["value"].get<double>()).c_str());
  std::printf("%-28s %s\n", "assumptions_ok",
              c["assumptions_ok"].get<bool>() ? "yes" : "no");
  for (const auto& item : c["diagnostics"].items())
    std::printf("%-28s %s\n", item.key().c_str(),
                fmt(item.value().get<double>()).c_str());
  if (!rep.assumptions_ok) {
    std::fprintf(stderr, "certificate assumptions failed\n");
    return kInapplicable;
  }
  return kOk;
}

int cmd_gsa(const Options& opt, const CLI::App& cmd) {
  const json desc = build_descriptor(opt, cmd);
  if (opt.csv_path.empty())
    throw std::invalid_argument("gsa needs --csv FILE");
  const gap::Body body = gap::body_from_json(desc["body"]);
  const gap::Potential pot = gap::potential_from_json(desc["potential"]);
  const gap::SampleSet samples = gap::load_sample_csv(opt.csv_path);
  gap::require_inside(samples, body);

  gap::BoundReport lambda;
  if (opt.lambda_override > 0.0) {
    lambda.method = "user_supplied";
    lambda.kind = gap::BoundKind::lower;
    lambda.value = opt.lambda_override;
  } else {
    const auto reps = gap::best_bound(pot, body);
    const gap::BoundReport* best = nullptr;
    for (const auto& r : reps) {
      if (r.kind == gap::BoundKind::upper || !r.assumptions_ok ||
          !(r.value > 0.0))
        continue;
      if (!best || r.value > best->value) best = &r;
    }
    if (!best) {
      std::fprintf(stderr, "no usable spectral-gap lower bound\n");
      return kInapplicable;
    }
    lambda = *best;
  }
  const auto rep = gap::sobol_upper_bound(samples, lambda);
  json doc;
  doc["command"] = "gsa";
  doc["descriptor"] = desc;
  doc["csv"] = opt.csv_path;
  doc["n_samples"] = rep.dgsm.n;
  doc["lambda"] = gap::report_to_json(rep.lambda_used);
  doc["variance"] = rep.dgsm.variance;
  doc["variance_std_error"] = rep.dgsm.variance_se;
  json rows = json::array();
  for (size_t i = 0; i < rep.sobol_upper.size(); ++i) {
    json r;
    r["input"] = "x" + std::to_string(i + 1);
    r["dgsm"] = rep.dgsm.nu[i];
    r["dgsm_std_error"] = rep.dgsm.nu_se[i];
    r["sobol_total_upper"] = rep.sobol_upper[i];
    r["sobol_total_upper_std_error"] = rep.sobol_upper_se[i];
    r["uninformative"] = (bool)rep.exceeds_one[i];
    rows.push_back(r);
  }
  doc["inputs"] = rows;
  emit(doc, opt);
  std::printf("lambda (%s, %s) = %s\n",
              rep.lambda_used.method.c_str(),
              gap::to_string(rep.lambda_used.kind),
              fmt(rep.lambda_used.value).c_str());
  std::printf("variance = %s (se %s)\n", fmt(rep.dgsm.variance).c_str(),
              fmt(rep.dgsm.variance_se).c_str());
  std::printf("%-8s %-24s %-24s %s\n", "input", "dgsm", "sobol_total_upper",
              "note");
  for (const auto& r : doc["inputs"]) {
    std::printf("%-8s %-24s %-24s %s\n",
                r["input"].get<std::string>().c_str(),
                fmt(r["dgsm"].get<double>()).c_str(),
                fmt(r["sobol_total_upper"].get<double>()).c_str(),
                r["uninformative"].get<bool>() ? "exceeds 1" : "");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified spectral-gap bounds for log-concave measures"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--spec", opt.spec_path, "descriptor JSON file");
    cmd->add_option("--body", opt.body_kind,
                    "body kind: ball|box|lp_ball|ball_complement");
    cmd->add_option("--potential", opt.potential_kind,
                    "potential kind: uniform|radial_power");
    cmd->add_option("--radius", opt.radius, "ball / lp ball radius");
    cmd->add_option("--half-width", opt.half_width, "box half width");
    cmd->add_option("--p", opt.p, "lp ball exponent");
    cmd->add_option("--alpha", opt.alpha, "radial power exponent");
    cmd->add_option("--dim", opt.dim, "dimension");
    cmd->add_option("--out", opt.out_path, "write the JSON report here");
    cmd->add_option("--seed", opt.seed, "Monte Carlo seed");
    cmd->add_option("--grid-n", opt.grid_n,
                    "grid size (certificate grids / mesh intervals)");
    cmd->add_option("--degree", opt.degree, "Galerkin polynomial degree");
    cmd->add_option("--trunc", opt.trunc, "truncation radius for complements");
    cmd->add_option("--mc-n", opt.mc_n, "Monte Carlo sample count");
  };

  CLI::App* bound = app.add_subcommand("bound", "closed-form bounds");
  add_common(bound);
  CLI::App* validate =
      app.add_subcommand("validate", "bounds vs numeric references");
  add_common(validate);
  validate
      ->add_option("--test-inflate-lower", opt.inflate_lower,
                   "multiply certified values before the sandwich (test hook)")
      ->group("");  // hidden
  CLI::App* certify = app.add_subcommand("certify", "weight certificate");
  add_common(certify);
  certify->add_option("--weight", opt.weight_arg,
                      "weight spec: inline JSON or a file path");
  CLI::App* gsa = app.add_subcommand("gsa", "DGSM -> Sobol upper bounds");
  add_common(gsa);
  gsa->add_option("--csv", opt.csv_path, "samples: x1..xd,f,g1..gd");
  gsa->add_option("--lambda", opt.lambda_override,
                  "use this lower bound instead of computing one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (bound->parsed()) return cmd_bound(opt, *bound);
    if (validate->parsed()) return cmd_validate(opt, *validate);
    if (certify->parsed()) return cmd_certify(opt, *certify);
    if (gsa->parsed()) return cmd_gsa(opt, *gsa);
  } catch (const gap::json::exception& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kInputError;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "not applicable: %s\n", e.what());
    return kInapplicable;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kInputError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInputError;
  }
  return kInputError;
}
