// Command-line front end: every library operation behind one binary with
// machine-readable output (json, csv or plain key = value lines).

#include "bm/frames.hpp"
#include "bm/geodesics.hpp"
#include "bm/invariance.hpp"
#include "bm/kinematics.hpp"
#include "bm/metric.hpp"
#include "bm/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitUsage = 64;

/// Raised for malformed arguments; mapped to the usage exit code.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  bm::ConstantsChoice constants = bm::ConstantsChoice::hadamard;
  double tol_exact = 1e-12;
  double tol_fd = 1e-6;
  std::string output = "json";
};

std::string constants_name(bm::ConstantsChoice c) {
  return c == bm::ConstantsChoice::hadamard ? "hadamard" : "orthonormal";
}

json config_json(const CliConfig& cfg) {
  return json{{"constants", constants_name(cfg.constants)},
              {"tol_exact", cfg.tol_exact},
              {"tol_fd", cfg.tol_fd},
              {"output", cfg.output}};
}

/// Flag values plus the optional --input document; flags win on conflicts.
class InputSource {
 public:
  void set_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open input file: " + path);
    try {
      in >> doc_;
    } catch (const json::exception& e) {
      throw usage_error("input file is not valid JSON: " +
                        std::string(e.what()));
    }
    if (!doc_.is_object()) {
      throw usage_error("input file must hold a JSON object");
    }
  }

  void bind(const std::string& key, const std::string* flag_value) {
    flags_[key] = flag_value;
  }

  bool has(const std::string& key) const {
    const auto it = flags_.find(key);
    if (it != flags_.end() && !it->second->empty()) return true;
    return doc_.contains(key);
  }

  std::vector<double> reals(const std::string& key, std::size_t n) const {
    const auto values = raw_reals(key);
    if (values.size() != n) {
      throw usage_error(key + ": expected " + std::to_string(n) +
                        " comma-separated reals, got " +
                        std::to_string(values.size()));
    }
    return values;
  }

  double real(const std::string& key) const { return reals(key, 1)[0]; }

 private:
  std::vector<double> raw_reals(const std::string& key) const {
    const auto it = flags_.find(key);
    if (it != flags_.end() && !it->second->empty()) {
      return parse_list(key, *it->second);
    }
    if (!doc_.contains(key)) throw usage_error("missing input: --" + key);
    const json& v = doc_.at(key);
    if (v.is_string()) return parse_list(key, v.get<std::string>());
    if (v.is_number()) return {v.get<double>()};
    if (v.is_array()) {
      std::vector<double> out;
      for (const auto& e : v) {
        if (!e.is_number()) {
          throw usage_error(key + ": array entries must be numbers");
        }
        out.push_back(e.get<double>());
      }
      return out;
    }
    throw usage_error(key + ": expected number, array or string");
  }

  static std::vector<double> parse_list(const std::string& key,
                                        const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        while (used < item.size() && std::isspace(item[used])) ++used;
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw usage_error(key + ": '" + item + "' is not a real number");
      }
    }
    return out;
  }

  json doc_ = json::object();
  std::map<std::string, const std::string*> flags_;
};

bm::UpVector up_from(const InputSource& in, const std::string& key) {
  const auto v = in.reals(key, 4);
  return bm::UpVector(v[0], v[1], v[2], v[3]);
}

bm::Vec4 vec4_from(const InputSource& in, const std::string& key) {
  const auto v = in.reals(key, 4);
  return bm::Vec4(v[0], v[1], v[2], v[3]);
}

bm::Velocity3 velocity_from(const InputSource& in, const std::string& key) {
  const auto v = in.reals(key, 3);
  return bm::Velocity3(v[0], v[1], v[2]);
}

json to_json(const bm::Vec3& v) { return json{v[0], v[1], v[2]}; }
json to_json(const bm::Vec4& v) { return json{v[0], v[1], v[2], v[3]}; }

json to_json(const bm::Mat3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(json{m(i, 0), m(i, 1), m(i, 2)});
  return rows;
}

json to_json(const bm::Mat4& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    rows.push_back(json{m(i, 0), m(i, 1), m(i, 2), m(i, 3)});
  }
  return rows;
}

std::string region_name(bm::ChartRegion r) {
  switch (r) {
    case bm::ChartRegion::above: return "above";
    case bm::ChartRegion::on: return "on";
    case bm::ChartRegion::below: return "below";
  }
  return "unknown";
}

// --- output rendering -------------------------------------------------------

void flatten(const std::string& prefix, const json& v,
             std::vector<std::pair<std::string, json>>& out) {
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      flatten(prefix + "." + std::to_string(i), v[i], out);
    }
  } else if (v.is_object()) {
    for (const auto& [k, e] : v.items()) flatten(prefix + "." + k, e, out);
  } else {
    out.emplace_back(prefix, v);
  }
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  std::ostringstream os;
  os << v;
  return os.str();
}

void emit(const json& doc, const CliConfig& cfg) {
  if (cfg.output == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, json>> cells;
  for (const auto& [k, v] : doc.at("outputs").items()) flatten(k, v, cells);
  if (cfg.output == "csv") {
    // row-major flattening with a header row
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::cout << cells[i].first << (i + 1 < cells.size() ? "," : "\n");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::cout << scalar_text(cells[i].second)
                << (i + 1 < cells.size() ? "," : "\n");
    }
  } else {
    for (const auto& [k, v] : cells) {
      std::cout << k << " = " << scalar_text(v) << "\n";
    }
  }
}

json document(const std::string& op, const json& inputs, const json& outputs,
              const std::string& paper_ref, const CliConfig& cfg) {
  return json{{"op", op},
              {"inputs", inputs},
              {"outputs", outputs},
              {"paper_ref", paper_ref},
              {"config", config_json(cfg)}};
}

// --- subcommands ------------------------------------------------------------

int cmd_metric(const InputSource& in, const CliConfig& cfg) {
  const bm::UpVector y = up_from(in, "y");
  const auto m = bm::metric_tensor(y);
  const json out{{"F", bm::metric_function(y)},
                 {"y_cov", to_json(bm::covariant_vector(y))},
                 {"l", to_json(bm::unit_vector(y).vec())},
                 {"g", to_json(m.g)},
                 {"g_inv", to_json(m.g_inv)},
                 {"det_g", bm::equilibrated_determinant(m.g)}};
  emit(document("metric", json{{"y", to_json(y.vec())}}, out,
                "Eqs. (1.5)-(1.10), (1.16)", cfg),
       cfg);
  return kExitOk;
}

int cmd_chart(const InputSource& in, const CliConfig& cfg) {
  const bm::ConstantsMatrix C = bm::constants_matrix(cfg.constants);
  if (in.has("y")) {
    const bm::UpVector y = up_from(in, "y");
    const bm::ChartPoint z = bm::to_chart(y, C);
    const json out{{"z0", z.z0},
                   {"u", to_json(z.u)},
                   {"region", region_name(z.region)}};
    emit(document("chart", json{{"y", to_json(y.vec())}}, out,
                  "Eqs. (1.48)-(1.49)", cfg),
         cfg);
    return kExitOk;
  }
  if (!in.has("z0") || !in.has("u")) {
    throw usage_error("chart: provide --y (forward) or --z0 and --u (inverse)");
  }
  const double z0 = in.real("z0");
  const auto uv = in.reals("u", 3);
  const bm::UpVector y = bm::from_chart(z0, bm::Vec3(uv[0], uv[1], uv[2]), C);
  emit(document("chart", json{{"z0", z0}, {"u", json{uv[0], uv[1], uv[2]}}},
                json{{"y", to_json(y.vec())}}, "Eqs. (1.20), (1.39)", cfg),
       cfg);
  return kExitOk;
}

int cmd_tetrad(const InputSource& in, const CliConfig& cfg) {
  const bm::UpVector y = up_from(in, "y");
  const bm::Tetrad t = bm::tetrad(y, bm::constants_matrix(cfg.constants));
  const json out{{"h", to_json(t.h)},
                 {"h_recip", to_json(t.h_recip)},
                 {"det_h", t.h.determinant()}};
  emit(document("tetrad", json{{"y", to_json(y.vec())}}, out,
                "Eqs. (1.11)-(1.14), (1.51)", cfg),
       cfg);
  return kExitOk;
}

json curve_samples(const bm::GeodesicCurve& curve, int samples) {
  json points = json::array();
  const int n = std::max(samples, 2);
  for (int i = 0; i < n; ++i) {
    const double s = curve.length() * i / (n - 1);
    points.push_back(json{{"s", s}, {"y", to_json(curve(s).vec())}});
  }
  return points;
}

int cmd_geodesic_ivp(const InputSource& in, const CliConfig& cfg) {
  const bm::UpVector start = up_from(in, "start");
  const bm::Vec4 direction = vec4_from(in, "direction");
  const double length = in.real("length");
  const int samples = in.has("samples") ? static_cast<int>(in.real("samples")) : 5;
  const bm::GeodesicCurve curve = bm::solve_ivp(
      start, direction, length, bm::constants_matrix(cfg.constants));
  const auto& p = curve.params();
  const json out{{"a", p.a},
                 {"b", p.b},
                 {"n", to_json(p.n)},
                 {"m", to_json(p.m)},
                 {"end", to_json(curve(length).vec())},
                 {"points", curve_samples(curve, samples)}};
  const json inputs{{"start", to_json(start.vec())},
                    {"direction", to_json(direction)},
                    {"length", length}};
  emit(document("geodesic-ivp", inputs, out, "Eqs. (2.17)-(2.20)", cfg), cfg);
  return kExitOk;
}

int cmd_geodesic_bvp(const InputSource& in, const CliConfig& cfg) {
  const bm::UpVector y1 = up_from(in, "y1");
  const bm::UpVector y2 = up_from(in, "y2");
  const int samples = in.has("samples") ? static_cast<int>(in.real("samples")) : 5;
  const bm::GeodesicSolution sol =
      bm::solve_bvp(y1, y2, bm::constants_matrix(cfg.constants));
  const auto& p = sol.curve.params();
  const json out{{"delta_s", sol.delta_s},
                 {"eta", sol.eta},
                 {"a", p.a},
                 {"b", p.b},
                 {"n", to_json(p.n)},
                 {"m", to_json(p.m)},
                 {"points", curve_samples(sol.curve, samples)}};
  const json inputs{{"y1", to_json(y1.vec())}, {"y2", to_json(y2.vec())}};
  emit(document("geodesic-bvp", inputs, out, "Eqs. (2.22)-(2.26)", cfg), cfg);
  return kExitOk;
}

int cmd_angle(const InputSource& in, const CliConfig& cfg) {
  const bm::UpVector a = up_from(in, "a");
  const bm::UpVector b = up_from(in, "b");
  const json inputs{{"a", to_json(a.vec())}, {"b", to_json(b.vec())}};
  emit(document("angle", inputs, json{{"eta", bm::angle(a, b)}},
                "Eq. (2.48)", cfg),
       cfg);
  return kExitOk;
}

int cmd_distance(const InputSource& in, const CliConfig& cfg) {
  const bm::UpVector a = up_from(in, "a");
  const bm::UpVector b = up_from(in, "b");
  const json inputs{{"a", to_json(a.vec())}, {"b", to_json(b.vec())}};
  emit(document("distance", inputs, json{{"delta_s", bm::distance(a, b)}},
                "Eq. (2.53)", cfg),
       cfg);
  return kExitOk;
}

int cmd_scalar_product(const InputSource& in, const CliConfig& cfg) {
  const bm::UpVector a = up_from(in, "a");
  const bm::UpVector b = up_from(in, "b");
  const json inputs{{"a", to_json(a.vec())}, {"b", to_json(b.vec())}};
  emit(document("scalar-product", inputs,
                json{{"product", bm::scalar_product(a, b)}}, "Eq. (2.54)",
                cfg),
       cfg);
  return kExitOk;
}

int cmd_boost(const InputSource& in, const CliConfig& cfg) {
  const bm::Vec4 Y = vec4_from(in, "Y");
  const bm::Velocity3 s = velocity_from(in, "s");
  const json inputs{{"Y", to_json(Y)}, {"s", to_json(s.vec())}};
  emit(document("boost", inputs, json{{"Y_out", to_json(bm::boost(Y, s))}},
                "Eqs. (1.59)-(1.62)", cfg),
       cfg);
  return kExitOk;
}

int cmd_compose(const InputSource& in, const CliConfig& cfg) {
  const bm::Velocity3 s1 = velocity_from(in, "s1");
  const bm::Velocity3 s2 = velocity_from(in, "s2");
  const json inputs{{"s1", to_json(s1.vec())}, {"s2", to_json(s2.vec())}};
  emit(document("compose", inputs,
                json{{"s3", to_json(bm::compose(s1, s2).vec())}},
                "Eqs. (3.64)-(3.66)", cfg),
       cfg);
  return kExitOk;
}

int cmd_subtract(const InputSource& in, const CliConfig& cfg) {
  const bm::Velocity3 s3 = velocity_from(in, "s3");
  const bm::Velocity3 s2 = velocity_from(in, "s2");
  const json inputs{{"s3", to_json(s3.vec())}, {"s2", to_json(s2.vec())}};
  emit(document("subtract", inputs,
                json{{"s1", to_json(bm::subtract(s3, s2).vec())}},
                "Eqs. (3.50)-(3.53)", cfg),
       cfg);
  return kExitOk;
}

int cmd_invert_velocity(const InputSource& in, const CliConfig& cfg) {
  const bm::Velocity3 s = velocity_from(in, "s");
  const json out{
      {"s_inv", to_json(bm::reciprocal(s).vec())},
      {"s_inv_polynomial", to_json(bm::reciprocal_polynomial(s).vec())}};
  emit(document("invert-velocity", json{{"s", to_json(s.vec())}}, out,
                "Eqs. (3.76)-(3.81)", cfg),
       cfg);
  return kExitOk;
}

int cmd_kin_length(const InputSource& in, const CliConfig& cfg) {
  const bm::Vec4 Y = vec4_from(in, "Y");
  emit(document("kin-length", json{{"Y", to_json(Y)}},
                json{{"length", bm::kinematic_length(Y)}}, "Eq. (3.30)", cfg),
       cfg);
  return kExitOk;
}

int cmd_rotate(const InputSource& in, const CliConfig& cfg) {
  const bm::UpVector y = up_from(in, "y");
  json inputs{{"y", to_json(y.vec())}};
  bm::PowerTransform t = bm::one_angle_exponents(0.0);
  std::string ref;
  if (in.has("eta")) {
    const double eta = in.real("eta");
    t = bm::one_angle_exponents(eta);
    inputs["eta"] = eta;
    ref = "Eqs. (C.6)-(C.9)";
  } else {
    const bm::RotationAngles angles{
        in.has("theta") ? in.real("theta") : 0.0,
        in.has("psi") ? in.real("psi") : 0.0,
        in.has("phi") ? in.real("phi") : 0.0};
    t = bm::rotation_exponents(angles);
    inputs["theta"] = angles.theta;
    inputs["psi"] = angles.psi;
    inputs["phi"] = angles.phi;
    ref = "Eqs. (A.8)-(A.28)";
  }
  const bm::UpVector image = bm::apply_power_transform(t, y);
  const json out{{"y_out", to_json(image.vec())},
                 {"exponents", to_json(t.exponents())}};
  emit(document("rotate", inputs, out, ref, cfg), cfg);
  return kExitOk;
}

int cmd_dilate(const InputSource& in, const CliConfig& cfg) {
  const bm::UpVector y = up_from(in, "y");
  const bm::Vec4 k = vec4_from(in, "k");
  const json inputs{{"y", to_json(y.vec())}, {"k", to_json(k)}};
  emit(document("dilate", inputs,
                json{{"y_out", to_json(bm::unimodular_dilatation(k, y).vec())}},
                "Eqs. (4.14)-(4.15)", cfg),
       cfg);
  return kExitOk;
}

const std::map<int, std::string> kCheckRefs{
    {1, "Eq. (1.10)"},
    {2, "Eq. (1.9)"},
    {3, "Eq. (1.3)"},
    {4, "Eqs. (1.11)-(1.14)"},
    {5, "Eq. (1.37)"},
    {6, "Eqs. (2.4)-(2.7)"},
    {7, "Eqs. (2.29), (2.48)-(2.50), (2.56)"},
    {8, "Eqs. (2.48), (2.53)"},
    {9, "Eqs. (3.10)-(3.12)"},
    {10, "Eqs. (1.65), (3.31)"},
    {11, "Eqs. (3.64)-(3.83)"},
    {12, "Eqs. (3.84)-(3.86)"},
    {13, "Eqs. (4.10)-(4.11), (A.8)-(A.23), (C.6)-(C.9)"}};

const std::map<std::string, std::vector<int>> kSuites{
    {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}},
    {"metric", {1, 2, 3}},
    {"frames", {4, 5}},
    {"geodesics", {6, 7, 8}},
    {"kinematics", {9, 10, 11, 12}},
    {"invariance", {13}}};

int cmd_verify(const std::string& suite, unsigned seed, const CliConfig& cfg) {
  const auto it = kSuites.find(suite);
  if (it == kSuites.end()) {
    throw usage_error("verify: unknown suite '" + suite +
                      "' (all, metric, frames, geodesics, kinematics, "
                      "invariance)");
  }
  const auto results = bm::run_verification(seed);
  json checks = json::array();
  bool all_pass = true;
  for (const auto& r : results) {
    if (std::find(it->second.begin(), it->second.end(), r.id) ==
        it->second.end()) {
      continue;
    }
    all_pass = all_pass && r.pass;
    checks.push_back(json{{"id", r.id},
                          {"name", r.name},
                          {"pass", r.pass},
                          {"worst", r.worst},
                          {"tolerance", r.tolerance},
                          {"detail", r.detail},
                          {"paper_ref", kCheckRefs.at(r.id)}});
  }
  const json out{{"checks", checks}, {"all_pass", all_pass}};
  emit(document("verify", json{{"suite", suite}, {"seed", seed}}, out,
                "acceptance suite; per-check references under outputs.checks",
                cfg),
       cfg);
  return all_pass ? kExitOk : kExitVerifyFailed;
}

void report_error(const std::string& op, const std::string& type,
                  const std::string& message, const std::string& precondition,
                  const CliConfig& cfg) {
  const json doc{{"op", op},
                 {"error", json{{"type", type},
                                {"message", message},
                                {"precondition", precondition}}},
                 {"config", config_json(cfg)}};
  if (cfg.output == "json") {
    std::cerr << doc.dump(2) << "\n";
  } else {
    std::cerr << "error (" << type << "): " << message << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quartic up-sector geometry toolkit"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string constants_flag;
  if (const char* env = std::getenv("BM_CONSTANTS")) constants_flag = env;
  std::string input_path;
  app.add_option("--constants", constants_flag,
                 "constants choice: hadamard or orthonormal (overrides "
                 "BM_CONSTANTS)");
  app.add_option("--output", cfg.output, "output format: json, csv or plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--input", input_path,
                 "JSON file mirroring the flag schema; flags take precedence");
  app.add_option("--tol-exact", cfg.tol_exact,
                 "tolerance for closed-form identities")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-fd", cfg.tol_fd,
                 "tolerance for finite-difference comparisons")
      ->check(CLI::PositiveNumber);

  InputSource in;
  // every value flag is a raw string so that --input can supply it instead
  std::map<std::string, std::string> values;
  auto bind = [&](CLI::App* cmd, const std::string& key,
                  const std::string& help) {
    // global flags may appear after the subcommand
    cmd->fallthrough();
    auto& slot = values[cmd->get_name() + "." + key];
    cmd->add_option("--" + key, slot, help);
  };

  auto* metric = app.add_subcommand("metric", "metric objects at a point");
  bind(metric, "y", "up-sector point, four comma-separated reals");
  auto* chart = app.add_subcommand("chart", "chart coordinates (both ways)");
  bind(chart, "y", "up-sector point (forward map)");
  bind(chart, "z0", "log-scale coordinate (inverse map)");
  bind(chart, "u", "three indicatrix coordinates (inverse map)");
  auto* tetrad_cmd = app.add_subcommand("tetrad", "tetrad at a point");
  bind(tetrad_cmd, "y", "up-sector point");
  auto* ivp = app.add_subcommand("geodesic-ivp", "initial-value geodesic");
  bind(ivp, "start", "up-sector start point");
  bind(ivp, "direction", "initial direction, four reals");
  bind(ivp, "length", "arc length");
  bind(ivp, "samples", "number of sampled points (default 5)");
  auto* bvp = app.add_subcommand("geodesic-bvp", "fixed-edge geodesic");
  bind(bvp, "y1", "first endpoint");
  bind(bvp, "y2", "second endpoint");
  bind(bvp, "samples", "number of sampled points (default 5)");
  auto* angle_cmd = app.add_subcommand("angle", "angle between two vectors");
  bind(angle_cmd, "a", "first vector");
  bind(angle_cmd, "b", "second vector");
  auto* dist = app.add_subcommand("distance", "timelike separation");
  bind(dist, "a", "first vector");
  bind(dist, "b", "second vector");
  auto* sp = app.add_subcommand("scalar-product", "two-vector scalar product");
  bind(sp, "a", "first vector");
  bind(sp, "b", "second vector");
  auto* boost_cmd = app.add_subcommand("boost", "extended Lorentz transform");
  bind(boost_cmd, "Y", "frame components, four reals");
  bind(boost_cmd, "s", "relative velocity, three reals");
  auto* comp = app.add_subcommand("compose", "velocity composition");
  bind(comp, "s1", "first velocity");
  bind(comp, "s2", "second velocity");
  auto* sub = app.add_subcommand("subtract", "velocity subtraction");
  bind(sub, "s3", "composed velocity");
  bind(sub, "s2", "velocity to remove");
  auto* inv = app.add_subcommand("invert-velocity", "reciprocal velocity");
  bind(inv, "s", "velocity, three reals");
  auto* klen = app.add_subcommand("kin-length", "kinematic length");
  bind(klen, "Y", "frame components, four reals");
  auto* rot = app.add_subcommand("rotate", "indicatrix rotation of a point");
  bind(rot, "y", "up-sector point");
  bind(rot, "theta", "Euler angle theta (default 0)");
  bind(rot, "psi", "Euler angle psi (default 0)");
  bind(rot, "phi", "Euler angle phi (default 0)");
  bind(rot, "eta", "one-angle rotation (overrides the Euler angles)");
  auto* dil = app.add_subcommand("dilate", "unimodular dilatation");
  bind(dil, "y", "up-sector point");
  bind(dil, "k", "four positive factors with unit product");
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->fallthrough();
  std::string suite = "all";
  unsigned seed = 20260823u;
  verify->add_option("--suite", suite,
                     "all, metric, frames, geodesics, kinematics, invariance");
  verify->add_option("--seed", seed, "random sample seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string op = cmd->get_name();
  try {
    if (!constants_flag.empty()) {
      if (constants_flag == "hadamard") {
        cfg.constants = bm::ConstantsChoice::hadamard;
      } else if (constants_flag == "orthonormal") {
        cfg.constants = bm::ConstantsChoice::orthonormal;
      } else {
        throw usage_error("constants choice must be hadamard or orthonormal");
      }
    }
    if (!input_path.empty()) in.set_document(input_path);
    for (const auto& [key, value] : values) {
      const auto dot = key.find('.');
      if (key.substr(0, dot) == op) in.bind(key.substr(dot + 1), &value);
    }

    if (op == "metric") return cmd_metric(in, cfg);
    if (op == "chart") return cmd_chart(in, cfg);
    if (op == "tetrad") return cmd_tetrad(in, cfg);
    if (op == "geodesic-ivp") return cmd_geodesic_ivp(in, cfg);
    if (op == "geodesic-bvp") return cmd_geodesic_bvp(in, cfg);
    if (op == "angle") return cmd_angle(in, cfg);
    if (op == "distance") return cmd_distance(in, cfg);
    if (op == "scalar-product") return cmd_scalar_product(in, cfg);
    if (op == "boost") return cmd_boost(in, cfg);
    if (op == "compose") return cmd_compose(in, cfg);
    if (op == "subtract") return cmd_subtract(in, cfg);
    if (op == "invert-velocity") return cmd_invert_velocity(in, cfg);
    if (op == "kin-length") return cmd_kin_length(in, cfg);
    if (op == "rotate") return cmd_rotate(in, cfg);
    if (op == "dilate") return cmd_dilate(in, cfg);
    if (op == "verify") return cmd_verify(suite, seed, cfg);
    throw usage_error("unknown subcommand: " + op);
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bm::spacelike_error& e) {
    report_error(op, "spacelike", e.what(),
                 "endpoints must be timelike separated", cfg);
    return kExitDomain;
  } catch (const bm::admissibility_error& e) {
    report_error(op, "admissibility", e.what(),
                 "all four bracket factors must be strictly positive", cfg);
    return kExitDomain;
  } catch (const bm::domain_error& e) {
    report_error(op, "domain", e.what(),
                 "arguments must lie in the operation's domain", cfg);
    return kExitDomain;
  } catch (const bm::overflow_error& e) {
    report_error(op, "overflow", e.what(),
                 "result must be representable in double precision", cfg);
    return kExitDomain;
  } catch (const std::exception& e) {
    report_error(op, "internal", e.what(), "", cfg);
    return kExitDomain;
  }
}
