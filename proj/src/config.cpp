#include "xtalk/config.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace xtalk {

using nlohmann::json;

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Scan: return "scan";
    case Command::CoinFlip: return "coinflip";
    case Command::Xor: return "xor";
    case Command::Canary: return "canary";
    case Command::Evolve: return "evolve";
  }
  return "?";
}

Command command_from_name(std::string_view name) {
  for (auto c : {Command::Scan, Command::CoinFlip, Command::Xor, Command::Canary,
                 Command::Evolve}) {
    if (name == command_name(c)) return c;
  }
  throw ValidationError("unknown command '" + std::string(name) + "'");
}

namespace {

json pulse_json(const PulseSpec& p) {
  return {{"shape", std::string(shape_name(p.shape))},
          {"A", p.amplitude},
          {"delta", p.detuning},
          {"sigma", p.width},
          {"c", p.chirp_rate},
          {"alpha", p.drag_alpha}};
}

json evolution_json() {
  const EvolutionConfig e;
  return {{"steps", e.steps}, {"substeps", e.substeps_per_step},
          {"method", std::string(method_name(e.method))}};
}

json coupling_json() {
  const CouplingSpec c;
  return {{"type", c.label()}, {"J01", c.j01}, {"J12", c.j12}};
}

}  // namespace

json default_config(Command command) {
  json doc = {{"seed", 0}, {"evolution", evolution_json()}};
  switch (command) {
    case Command::Scan: {
      const ScanGrid g;
      doc["coupling"] = {{"J01", g.j01}, {"J12", g.j12}};
      json shapes = json::array();
      for (auto s : g.shapes) shapes.push_back(std::string(shape_name(s)));
      doc["scan"] = {{"couplings", {"YX", "ZX"}},
                     {"shapes", shapes},
                     {"scanned_qubit", g.scanned_qubit},
                     {"scanned_pulse", pulse_json(g.scanned_pulse)},
                     {"fixed_pulse", pulse_json(g.fixed_pulse)},
                     {"victim", json::array()},
                     {"timing", std::string(timing_name(g.timing))},
                     {"baseline", std::string(baseline_name(g.baseline))}};
      break;
    }
    case Command::CoinFlip: {
      const auto preset = moderate_preset();
      doc["coupling"] = coupling_json();
      doc["pulse0"] = pulse_json(preset.pulse0);
      doc["pulse1"] = pulse_json(preset.pulse1);
      doc["coinflip"] = {{"lambda_points", 31}};
      break;
    }
    case Command::Xor: {
      const XorExperiment x;
      doc["coupling"] = coupling_json();
      doc["pulse0"] = pulse_json(x.pulse0);
      doc["pulse1"] = pulse_json(x.pulse1);
      doc["xor"] = {{"amplitude_points", static_cast<int>(x.amplitude_grid.size())},
                    {"amplitude_max", x.amplitude_grid.back()},
                    {"timings", {"attacker_first", "victim_first"}},
                    {"baseline", std::string(baseline_name(x.baseline))}};
      break;
    }
    case Command::Canary: {
      const auto preset = aggressive_preset();
      const CanaryConfig c;
      doc["coupling"] = coupling_json();
      doc["pulse0"] = pulse_json(preset.pulse0);
      doc["pulse1"] = pulse_json(preset.pulse1);
      doc["canary"] = {{"lambda_deg", 45.0},
                       {"shots", c.shots},
                       {"threshold", c.threshold},
                       {"attack", true},
                       {"timing", "attacker_first"}};
      break;
    }
    case Command::Evolve: {
      const auto preset = moderate_preset();
      doc["coupling"] = coupling_json();
      doc["pulse0"] = pulse_json(preset.pulse0);
      doc["pulse1"] = pulse_json(preset.pulse1);
      doc["evolve"] = {{"timing", "attacker_first"},
                       {"victim", json::array({{{"gate", "ry"}, {"angle", std::numbers::pi / 4}}})}};
      break;
    }
  }
  return doc;
}

namespace {

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ValidationError(path + ": " + msg);
}

bool same_kind(const json& schema, const json& value) {
  if (schema.is_number_integer()) return value.is_number_integer();
  if (schema.is_number()) return value.is_number();
  if (schema.is_boolean()) return value.is_boolean();
  if (schema.is_string()) return value.is_string();
  if (schema.is_array()) return value.is_array();
  return false;
}

std::string kind_name(const json& schema) {
  if (schema.is_number_integer()) return "an integer";
  if (schema.is_number()) return "a number";
  if (schema.is_boolean()) return "true or false";
  if (schema.is_string()) return "a string";
  if (schema.is_array()) return "a list";
  return "an object";
}

void merge_into(json& target, const json& src, const std::string& path) {
  if (!src.is_object()) fail(path.empty() ? "config" : path, "expected an object");
  for (const auto& [key, value] : src.items()) {
    const std::string here = join(path, key);
    if (!target.contains(key)) fail(here, "unknown key");
    json& slot = target[key];
    if (slot.is_object()) {
      merge_into(slot, value, here);
    } else if (same_kind(slot, value)) {
      slot = value;
    } else if (slot.is_number_float() && value.is_number()) {
      slot = value.get<double>();
    } else {
      fail(here, "expected " + kind_name(slot));
    }
  }
}

json parse_scalar(const json& schema, const std::string& text, const std::string& path) {
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (schema.is_number_integer()) {
    std::int64_t v{};
    auto [p, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || p != end) fail(path, "expected an integer, got '" + text + "'");
    return v;
  }
  if (schema.is_number()) {
    double v{};
    auto [p, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || p != end || !std::isfinite(v)) {
      fail(path, "expected a number, got '" + text + "'");
    }
    return v;
  }
  if (schema.is_boolean()) {
    if (text == "true") return true;
    if (text == "false") return false;
    fail(path, "expected true or false, got '" + text + "'");
  }
  if (schema.is_string()) return text;
  try {
    json v = json::parse(text);
    if (!same_kind(schema, v)) fail(path, "expected " + kind_name(schema));
    return v;
  } catch (const json::parse_error&) {
    fail(path, "expected a JSON list, got '" + text + "'");
  }
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ValidationError("override '" + assignment + "' is not of the form key=value");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string value = assignment.substr(eq + 1);
  json* node = &doc;
  std::string path;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot == std::string::npos ? dot : dot - start);
    path = join(path, part);
    if (!node->is_object() || !node->contains(part)) fail(path, "unknown key");
    node = &(*node)[part];
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  if (node->is_object()) fail(path, "cannot assign a whole section");
  *node = parse_scalar(*node, value, path);
}

// Runs `fn`, prefixing any validation message with `path`.
template <typename Fn>
auto at(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
}

PulseSpec decode_pulse(const json& j, const std::string& path) {
  PulseSpec p;
  p.shape = at(path + ".shape", [&] { return shape_from_name(j.at("shape").get<std::string>()); });
  p.amplitude = j.at("A").get<double>();
  p.detuning = j.at("delta").get<double>();
  p.width = j.at("sigma").get<double>();
  p.chirp_rate = j.at("c").get<double>();
  p.drag_alpha = j.at("alpha").get<double>();
  if (p.amplitude < 0.0) fail(path + ".A", "must be >= 0");
  if ((p.shape == PulseShape::Gaussian || p.shape == PulseShape::Drag) && !(p.width > 0.0)) {
    fail(path + ".sigma", "must be > 0");
  }
  at(path, [&] { p.validate(); return 0; });
  return p;
}

EvolutionConfig decode_evolution(const json& j) {
  EvolutionConfig e;
  e.steps = j.at("steps").get<int>();
  e.substeps_per_step = j.at("substeps").get<int>();
  if (e.steps < 1) fail("evolution.steps", "must be >= 1");
  if (e.substeps_per_step < 1) fail("evolution.substeps", "must be >= 1");
  e.method = at("evolution.method", [&] { return method_from_name(j.at("method").get<std::string>()); });
  return e;
}

CouplingSpec decode_coupling(const json& j) {
  const double j01 = j.at("J01").get<double>();
  const double j12 = j.at("J12").get<double>();
  return at("coupling.type",
            [&] { return coupling_from_label(j.at("type").get<std::string>(), j01, j12); });
}

VictimProgram decode_victim(const json& j, const std::string& path) {
  VictimProgram prog;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string here = path + "[" + std::to_string(i) + "]";
    const json& g = j[i];
    if (!g.is_object()) fail(here, "expected {\"gate\": ..., \"angle\": ...}");
    for (const auto& [k, v] : g.items()) {
      if (k != "gate" && k != "angle") fail(here + "." + k, "unknown key");
    }
    if (!g.contains("gate") || !g["gate"].is_string()) fail(here + ".gate", "missing gate name");
    VictimGate gate;
    gate.kind = at(here + ".gate", [&] { return gate_from_name(g["gate"].get<std::string>()); });
    if (g.contains("angle")) {
      if (!g["angle"].is_number()) fail(here + ".angle", "expected a number");
      gate.angle = g["angle"].get<double>();
    }
    prog.push_back(gate);
  }
  return prog;
}

Timing decode_timing(const json& j, const std::string& path) {
  return at(path, [&] { return timing_from_name(j.get<std::string>()); });
}

}  // namespace

ExperimentConfig parse_config(Command command, std::string_view file_text,
                              const std::vector<std::string>& overrides) {
  json doc = default_config(command);
  if (!file_text.empty()) {
    json user;
    try {
      user = json::parse(file_text);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("config: malformed JSON: ") + e.what());
    }
    merge_into(doc, user, "");
  }
  for (const auto& o : overrides) apply_override(doc, o);

  ExperimentConfig cfg;
  cfg.command = command;
  cfg.resolved = doc;
  if (doc["seed"].get<std::int64_t>() < 0) fail("seed", "must be >= 0");
  cfg.seed = doc["seed"].get<std::uint64_t>();
  const EvolutionConfig evolution = decode_evolution(doc["evolution"]);

  switch (command) {
    case Command::Scan: {
      const json& s = doc["scan"];
      ScanGrid& g = cfg.scan;
      g.j01 = doc["coupling"]["J01"].get<double>();
      g.j12 = doc["coupling"]["J12"].get<double>();
      if (!std::isfinite(g.j01) || !std::isfinite(g.j12)) fail("coupling", "J must be finite");
      g.coupling_types.clear();
      for (std::size_t i = 0; i < s["couplings"].size(); ++i) {
        const std::string here = "scan.couplings[" + std::to_string(i) + "]";
        if (!s["couplings"][i].is_string()) fail(here, "expected a label such as \"YX\"");
        const auto c = at(here, [&] {
          return coupling_from_label(s["couplings"][i].get<std::string>(), g.j01, g.j12);
        });
        g.coupling_types.emplace_back(c.first, c.second);
      }
      g.shapes.clear();
      for (std::size_t i = 0; i < s["shapes"].size(); ++i) {
        const std::string here = "scan.shapes[" + std::to_string(i) + "]";
        if (!s["shapes"][i].is_string()) fail(here, "expected a shape name");
        g.shapes.push_back(at(here, [&] { return shape_from_name(s["shapes"][i].get<std::string>()); }));
      }
      if (g.coupling_types.empty()) fail("scan.couplings", "must not be empty");
      if (g.shapes.empty()) fail("scan.shapes", "must not be empty");
      g.scanned_qubit = s["scanned_qubit"].get<int>();
      if (g.scanned_qubit != 0 && g.scanned_qubit != 1) fail("scan.scanned_qubit", "must be 0 or 1");
      g.scanned_pulse = decode_pulse(s["scanned_pulse"], "scan.scanned_pulse");
      g.fixed_pulse = decode_pulse(s["fixed_pulse"], "scan.fixed_pulse");
      for (auto shape : g.shapes) {
        PulseSpec p = g.scanned_pulse;
        p.shape = shape;
        at("scan.scanned_pulse", [&] { p.validate(); return 0; });
      }
      g.victim = decode_victim(s["victim"], "scan.victim");
      g.timing = decode_timing(s["timing"], "scan.timing");
      g.baseline = at("scan.baseline", [&] { return baseline_from_name(s["baseline"].get<std::string>()); });
      g.evolution = evolution;
      break;
    }
    case Command::CoinFlip: {
      CoinFlipExperiment& e = cfg.coinflip;
      e.coupling = decode_coupling(doc["coupling"]);
      e.evolution = evolution;
      const int points = doc["coinflip"]["lambda_points"].get<int>();
      if (points < 2) fail("coinflip.lambda_points", "must be >= 2");
      e.lambda_grid = default_lambda_grid(points);
      e.presets = {{"configured", decode_pulse(doc["pulse0"], "pulse0"),
                    decode_pulse(doc["pulse1"], "pulse1")}};
      break;
    }
    case Command::Xor: {
      XorExperiment& x = cfg.xor_sweep;
      const json& s = doc["xor"];
      x.coupling = decode_coupling(doc["coupling"]);
      x.pulse0 = decode_pulse(doc["pulse0"], "pulse0");
      x.pulse1 = decode_pulse(doc["pulse1"], "pulse1");
      x.evolution = evolution;
      const int points = s["amplitude_points"].get<int>();
      const double amax = s["amplitude_max"].get<double>();
      if (points < 2) fail("xor.amplitude_points", "must be >= 2");
      if (!(amax >= 0.0)) fail("xor.amplitude_max", "must be >= 0");
      x.amplitude_grid.resize(points);
      for (int i = 0; i < points; ++i) {
        x.amplitude_grid[i] = amax * static_cast<double>(i) / (points - 1);
      }
      x.timings.clear();
      for (std::size_t i = 0; i < s["timings"].size(); ++i) {
        const std::string here = "xor.timings[" + std::to_string(i) + "]";
        if (!s["timings"][i].is_string()) fail(here, "expected a timing name");
        x.timings.push_back(decode_timing(s["timings"][i], here));
      }
      if (x.timings.empty()) fail("xor.timings", "must not be empty");
      x.baseline = at("xor.baseline", [&] { return baseline_from_name(s["baseline"].get<std::string>()); });
      break;
    }
    case Command::Canary: {
      const json& s = doc["canary"];
      CanaryConfig& c = cfg.canary;
      const double deg = s["lambda_deg"].get<double>();
      if (!(deg >= 0.0 && deg <= 90.0)) fail("canary.lambda_deg", "must lie in [0, 90]");
      c.lambda = deg * std::numbers::pi / 180.0;
      c.shots = s["shots"].get<std::int64_t>();
      if (c.shots < 1) fail("canary.shots", "must be >= 1");
      c.threshold = s["threshold"].get<double>();
      if (!(c.threshold > 0.0 && c.threshold <= 1.0)) fail("canary.threshold", "must lie in (0, 1]");
      c.seed = cfg.seed;
      cfg.canary_attack = s["attack"].get<bool>();
      AttackScenario& a = cfg.canary_scenario;
      a.coupling = decode_coupling(doc["coupling"]);
      a.pulse0 = decode_pulse(doc["pulse0"], "pulse0");
      a.pulse1 = decode_pulse(doc["pulse1"], "pulse1");
      a.timing = decode_timing(s["timing"], "canary.timing");
      a.evolution = evolution;
      break;
    }
    case Command::Evolve: {
      const json& s = doc["evolve"];
      AttackScenario& a = cfg.evolve_scenario;
      a.coupling = decode_coupling(doc["coupling"]);
      a.pulse0 = decode_pulse(doc["pulse0"], "pulse0");
      a.pulse1 = decode_pulse(doc["pulse1"], "pulse1");
      a.timing = decode_timing(s["timing"], "evolve.timing");
      a.victim = decode_victim(s["victim"], "evolve.victim");
      a.evolution = evolution;
      break;
    }
  }
  return cfg;
}

}  // namespace xtalk
