// Copyright 2026 The spinsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spinsim/config.h"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

namespace spinsim {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

double parse_double(const std::string& text, int line) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
    throw ConfigError("line " + std::to_string(line) + ": invalid number '" +
                          text + "'",
                      line);
  }
  return v;
}

std::int64_t parse_int(const std::string& text, int line) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  long long v = std::strtoll(begin, &end, 10);
  if (end == begin || *end != '\0' || errno == ERANGE) {
    throw ConfigError("line " + std::to_string(line) + ": invalid integer '" +
                          text + "'",
                      line);
  }
  return v;
}

Axis parse_axis(const std::string& text, int line) {
  if (text == "x") return Axis::kX;
  if (text == "y") return Axis::kY;
  if (text == "z") return Axis::kZ;
  throw ConfigError("line " + std::to_string(line) + ": unknown axis '" + text +
                        "'",
                    line);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ConfigError("line " + std::to_string(line) + ": " + msg, line);
}

struct ParamLine {
  int line;
  std::string kind;  // J h0 h1 f phi
  Axis axis;
  int j;
  int k;  // J only
  double value;
};

struct RawEo {
  std::string name;
  int line;
  double tau_over_2pi = 0.0;
  std::vector<ParamLine> params;
};

struct RawSequence {
  std::string name;
  int line;
  std::vector<std::pair<std::string, int>> eos;  // name, line
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

const ElementaryOperation* ExperimentConfig::find_eo(std::string_view name) const {
  for (const auto& eo : eos) {
    if (eo.name == name) return &eo;
  }
  return nullptr;
}

PulseSequence ExperimentConfig::build_sequence(std::string_view name) const {
  for (const auto& [seq_name, eo_names] : sequences) {
    if (seq_name != name) continue;
    PulseSequence seq;
    for (const auto& eo_name : eo_names) {
      const ElementaryOperation* eo = find_eo(eo_name);
      if (eo == nullptr) {
        throw std::invalid_argument("sequence '" + seq_name +
                                    "' references unknown EO '" + eo_name + "'");
      }
      seq.ops.push_back(*eo);
    }
    return seq;
  }
  std::string known;
  for (const auto& s : sequences) known += (known.empty() ? "" : ", ") + s.first;
  throw std::invalid_argument("unknown sequence '" + std::string(name) +
                              "' (defined: " + known + ")");
}

ExperimentConfig parse_config(std::istream& in) {
  enum class Section { kNone, kEo, kSequence, kRun };
  Section section = Section::kNone;
  std::vector<RawEo> raw_eos;
  std::vector<RawSequence> raw_sequences;
  ExperimentConfig config;
  std::string state_text;
  int state_line = 0;
  int qubits = 0;
  int qubits_line = 0;
  bool run_seen = false;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;

    if (text.front() == '[') {
      if (text.back() != ']') fail(line, "unterminated section header");
      auto words = split_ws(text.substr(1, text.size() - 2));
      if (words.size() == 2 && words[0] == "eo") {
        for (const auto& e : raw_eos) {
          if (e.name == words[1]) fail(line, "duplicate EO '" + words[1] + "'");
        }
        raw_eos.push_back({words[1], line, 0.0, {}});
        section = Section::kEo;
      } else if (words.size() == 2 && words[0] == "sequence") {
        for (const auto& s : raw_sequences) {
          if (s.name == words[1]) fail(line, "duplicate sequence '" + words[1] + "'");
        }
        raw_sequences.push_back({words[1], line, {}});
        section = Section::kSequence;
      } else if (words.size() == 1 && words[0] == "run") {
        if (run_seen) fail(line, "duplicate [run] section");
        run_seen = true;
        section = Section::kRun;
      } else {
        fail(line, "unknown section '" + text + "'");
      }
      continue;
    }

    auto eq = text.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value'");
    std::string key = trim(std::string_view(text).substr(0, eq));
    std::string value = trim(std::string_view(text).substr(eq + 1));

    switch (section) {
      case Section::kNone:
        fail(line, "assignment outside of a section");
      case Section::kEo: {
        RawEo& eo = raw_eos.back();
        auto words = split_ws(key);
        if (words.size() == 1 && words[0] == "tau_over_2pi") {
          eo.tau_over_2pi = parse_double(value, line);
          if (eo.tau_over_2pi < 0.0) fail(line, "negative duration");
          break;
        }
        if (words.empty()) fail(line, "missing parameter name");
        const std::string& kind = words[0];
        ParamLine p{line, kind, Axis::kX, 0, 0, 0.0};
        if (kind == "J") {
          if (words.size() != 4) fail(line, "expected 'J <axis> <j> <k> = value'");
          p.k = static_cast<int>(parse_int(words[3], line));
        } else if (kind == "h0" || kind == "h1" || kind == "f" || kind == "phi") {
          if (words.size() != 3) fail(line, "expected '" + kind + " <axis> <j> = value'");
        } else {
          fail(line, "unknown parameter '" + kind + "'");
        }
        p.axis = parse_axis(words[1], line);
        p.j = static_cast<int>(parse_int(words[2], line));
        p.value = parse_double(value, line);
        if (p.j < 1 || (kind == "J" && p.k < 1)) fail(line, "spin indices start at 1");
        if (kind == "J" && p.j == p.k) fail(line, "coupling of a spin to itself");
        eo.params.push_back(p);
        break;
      }
      case Section::kSequence: {
        if (key != "eos") fail(line, "unknown sequence key '" + key + "'");
        RawSequence& seq = raw_sequences.back();
        std::stringstream items(value);
        std::string item;
        while (std::getline(items, item, ',')) {
          std::string name = trim(item);
          if (name.empty()) {
            if (!value.empty()) fail(line, "empty EO name in list");
            continue;
          }
          seq.eos.emplace_back(name, line);
        }
        break;
      }
      case Section::kRun: {
        if (key == "state") {
          state_text = value;
          state_line = line;
        } else if (key == "qubits") {
          qubits = static_cast<int>(parse_int(value, line));
          qubits_line = line;
        } else if (key == "sequence") {
          config.run.sequence = value;
        } else if (key == "sample_every") {
          config.run.sample_every = parse_int(value, line);
          if (config.run.sample_every < 0) fail(line, "sample_every must be >= 0");
        } else if (key == "steps") {
          if (value == "auto") {
            config.run.steps.reset();
          } else {
            config.run.steps = parse_int(value, line);
            if (*config.run.steps < 1) fail(line, "steps must be >= 1");
          }
        } else if (key == "output") {
          config.run.output = value;
        } else if (key == "rf_clock") {
          if (value == "pulse") {
            config.run.rf_clock = RfClock::kPulseLocal;
          } else if (value == "absolute") {
            config.run.rf_clock = RfClock::kAbsolute;
          } else {
            fail(line, "rf_clock must be 'pulse' or 'absolute'");
          }
        } else {
          fail(line, "unknown run key '" + key + "'");
        }
        break;
      }
    }
  }

  // Register size: the initial state wins, then `qubits`, then the largest
  // spin index mentioned.
  for (char c : state_text) {
    if (c != '0' && c != '1') fail(state_line, "state must be a string of 0/1");
    config.initial_bits.push_back(c - '0');
  }
  int num_qubits = static_cast<int>(config.initial_bits.size());
  if (qubits != 0) {
    if (num_qubits != 0 && qubits != num_qubits) {
      fail(qubits_line, "qubits = " + std::to_string(qubits) +
                            " disagrees with the state length");
    }
    num_qubits = qubits;
  }
  if (num_qubits == 0) {
    for (const auto& eo : raw_eos) {
      for (const auto& p : eo.params) num_qubits = std::max({num_qubits, p.j, p.k});
    }
  }
  if (num_qubits == 0) num_qubits = 1;
  if (num_qubits > kMaxQubits) {
    throw ConfigError("register of " + std::to_string(num_qubits) +
                          " qubits exceeds the limit",
                      qubits_line ? qubits_line : state_line);
  }
  config.num_qubits = num_qubits;
  if (config.initial_bits.empty()) config.initial_bits.assign(num_qubits, 0);

  for (const auto& raw_eo : raw_eos) {
    SpinModel model(num_qubits);
    for (const auto& p : raw_eo.params) {
      if (p.j > num_qubits || p.k > num_qubits) {
        fail(p.line, "spin index exceeds register size " + std::to_string(num_qubits));
      }
      if (p.kind == "J") model.set_coupling(p.j, p.k, p.axis, p.value);
      if (p.kind == "h0") model.set_static_field(p.j, p.axis, p.value);
      if (p.kind == "h1") model.set_rf_amplitude(p.j, p.axis, p.value);
      if (p.kind == "f") model.set_rf_frequency(p.j, p.axis, p.value);
      if (p.kind == "phi") model.set_rf_phase(p.j, p.axis, p.value);
    }
    config.eos.push_back({raw_eo.name, std::move(model), kTwoPi * raw_eo.tau_over_2pi});
  }

  std::string unknown;
  int first_bad_line = 0;
  for (const auto& seq : raw_sequences) {
    std::vector<std::string> names;
    for (const auto& [name, name_line] : seq.eos) {
      if (config.find_eo(name) == nullptr) {
        unknown += (unknown.empty() ? "" : ", ") + std::string("'") + name +
                   "' (line " + std::to_string(name_line) + ")";
        if (first_bad_line == 0) first_bad_line = name_line;
      }
      names.push_back(name);
    }
    config.sequences.emplace_back(seq.name, std::move(names));
  }
  if (!unknown.empty()) {
    throw ConfigError("unknown EO name(s): " + unknown, first_bad_line);
  }
  if (!config.run.sequence.empty()) {
    bool found = false;
    for (const auto& s : config.sequences) found = found || s.first == config.run.sequence;
    if (!found) {
      throw ConfigError("run references unknown sequence '" + config.run.sequence + "'",
                        0);
    }
  }
  return config;
}

ExperimentConfig parse_config_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_config(in);
}

std::string dump_config(const ExperimentConfig& config) {
  std::ostringstream out;
  for (const auto& eo : config.eos) {
    const SpinModel& m = eo.model;
    out << "[eo " << eo.name << "]\n";
    out << "tau_over_2pi = " << format_double(eo.tau / kTwoPi) << "\n";
    for (Axis a : kAllAxes) {
      for (int j = 1; j <= m.num_qubits(); ++j) {
        for (int k = j + 1; k <= m.num_qubits(); ++k) {
          if (double v = m.coupling(j, k, a); v != 0.0) {
            out << "J " << axis_name(a) << ' ' << j << ' ' << k << " = "
                << format_double(v) << "\n";
          }
        }
      }
    }
    for (Axis a : kAllAxes) {
      for (int j = 1; j <= m.num_qubits(); ++j) {
        const std::pair<const char*, double> entries[] = {
            {"h0", m.static_field(j, a)},
            {"h1", m.rf_amplitude(j, a)},
            {"f", m.rf_frequency(j, a)},
            {"phi", m.rf_phase(j, a)}};
        for (const auto& [kind, v] : entries) {
          if (v != 0.0) {
            out << kind << ' ' << axis_name(a) << ' ' << j << " = "
                << format_double(v) << "\n";
          }
        }
      }
    }
    out << "\n";
  }
  for (const auto& [name, eo_names] : config.sequences) {
    out << "[sequence " << name << "]\neos =";
    for (std::size_t i = 0; i < eo_names.size(); ++i) {
      out << (i == 0 ? " " : ", ") << eo_names[i];
    }
    out << "\n\n";
  }
  out << "[run]\nstate = ";
  for (int b : config.initial_bits) out << b;
  out << "\n";
  if (!config.run.sequence.empty()) out << "sequence = " << config.run.sequence << "\n";
  out << "sample_every = " << config.run.sample_every << "\n";
  out << "steps = "
      << (config.run.steps ? std::to_string(*config.run.steps) : std::string("auto"))
      << "\n";
  out << "rf_clock = "
      << (config.run.rf_clock == RfClock::kAbsolute ? "absolute" : "pulse") << "\n";
  if (!config.run.output.empty()) out << "output = " << config.run.output << "\n";
  return out.str();
}

ExperimentConfig profile_config(const HardwareProfile& profile) {
  ExperimentConfig config;
  config.num_qubits = 2;
  config.initial_bits = {0, 0};
  for (const auto& [name, eo] : profile.eo_table) config.eos.push_back(eo);
  auto names = [](const PulseSequence& seq) {
    std::vector<std::string> out;
    for (const auto& op : seq.ops) out.push_back(op.name);
    return out;
  };
  config.sequences.emplace_back("W1", names(wh_transform_seq(1, profile)));
  config.sequences.emplace_back("W2", names(wh_transform_seq(2, profile)));
  for (InitOrder order : {InitOrder::kW1First, InitOrder::kW2First}) {
    for (int item = 0; item < 4; ++item) {
      config.sequences.emplace_back(
          "grover" + std::to_string(item) + "_" + init_order_name(order),
          names(grover_program(item, profile, order).seq));
    }
  }
  config.run.sequence = "grover0_12";
  return config;
}

}  // namespace spinsim
