// Copyright 2026 The qgame Authors
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


#include "qgame/records_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qgame/catalogue.hpp"

namespace qgame {
namespace {

using Json = nlohmann::ordered_json;

// Position of each record within its (gamma, p) point.
std::vector<std::size_t> eq_indices(std::span<const SweepRecord> records) {
  std::vector<std::size_t> out(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const bool same_point = i > 0 && records[i].gamma == records[i - 1].gamma &&
                            records[i].p == records[i - 1].p;
    out[i] = same_point ? out[i - 1] + 1 : 0;
  }
  return out;
}

void append_row(std::string& out, std::initializer_list<std::string> fields) {
  bool first = true;
  for (const std::string& f : fields) {
    if (!first) out += ',';
    out += f;
    first = false;
  }
  out += '\n';
}

std::string num(double x) { return format_number(x); }
std::string idx(std::size_t i) { return std::to_string(i); }

const char* const kPlayerSuffix[] = {"a", "b", "b2"};

Json steps_json(const SteppingParams& s) {
  return Json{{"d_theta", s.d_theta}, {"d_phi", s.d_phi},
              {"d_alpha", s.d_alpha}};
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) {
    throw ConfigError(std::string("sweep JSON: missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("sweep JSON: bad value for '") + key + "'");
  }
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drops the sign of -0
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 12);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), end);
}

std::string sweep_csv(const SweepDataset& data) {
  std::string out;
  const std::vector<std::size_t> eq = eq_indices(data.records);
  if (data.bayesian()) {
    out +=
        "gamma,p,eq_index,a_index,b_index,b2_index,theta_a,phi_a,alpha_a,"
        "theta_b,phi_b,alpha_b,theta_b2,phi_b2,alpha_b2,payoff_a,payoff_b,"
        "payoff_b2\n";
  } else {
    out +=
        "gamma,eq_index,a_index,b_index,theta_a,phi_a,alpha_a,theta_b,phi_b,"
        "alpha_b,payoff_a,payoff_b\n";
  }
  for (std::size_t r = 0; r < data.records.size(); ++r) {
    const SweepRecord& rec = data.records[r];
    const auto& ix = rec.equilibrium.strategy_indices;
    const auto& sp = rec.strategy_params;
    const auto& pay = rec.equilibrium.payoffs;
    if (data.bayesian()) {
      append_row(out, {num(rec.gamma), num(rec.p.value_or(0.0)), idx(eq[r]),
                       idx(ix[0]), idx(ix[1]), idx(ix[2]), num(sp[0].theta()),
                       num(sp[0].phi()), num(sp[0].alpha()), num(sp[1].theta()),
                       num(sp[1].phi()), num(sp[1].alpha()), num(sp[2].theta()),
                       num(sp[2].phi()), num(sp[2].alpha()), num(pay[0]),
                       num(pay[1]), num(pay[2])});
    } else {
      append_row(out, {num(rec.gamma), idx(eq[r]), idx(ix[0]), idx(ix[1]),
                       num(sp[0].theta()), num(sp[0].phi()), num(sp[0].alpha()),
                       num(sp[1].theta()), num(sp[1].phi()), num(sp[1].alpha()),
                       num(pay[0]), num(pay[1])});
    }
  }
  return out;
}

std::string sweep_json(const SweepDataset& data) {
  const SweepMetadata& m = data.metadata;
  Json meta{{"tool", "qgame"},
            {"version", m.version},
            {"command", m.command},
            {"games", m.games},
            {"steps", steps_json(m.steps)},
            {"epsilon", m.epsilon},
            {"strategy_count", m.strategy_count},
            {"gamma_values", m.gamma_values},
            {"p_values", m.p_values}};

  const std::size_t players = data.bayesian() ? 3 : 2;
  const std::vector<std::size_t> eq = eq_indices(data.records);
  Json records = Json::array();
  for (std::size_t r = 0; r < data.records.size(); ++r) {
    const SweepRecord& rec = data.records[r];
    Json j;
    j["gamma"] = rec.gamma;
    if (data.bayesian()) j["p"] = rec.p.value_or(0.0);
    j["eq_index"] = eq[r];
    for (std::size_t k = 0; k < players; ++k) {
      j[std::string(kPlayerSuffix[k]) + "_index"] =
          rec.equilibrium.strategy_indices[k];
    }
    for (std::size_t k = 0; k < players; ++k) {
      const std::string s = kPlayerSuffix[k];
      j["theta_" + s] = rec.strategy_params[k].theta();
      j["phi_" + s] = rec.strategy_params[k].phi();
      j["alpha_" + s] = rec.strategy_params[k].alpha();
    }
    for (std::size_t k = 0; k < players; ++k) {
      j[std::string("payoff_") + kPlayerSuffix[k]] =
          rec.equilibrium.payoffs[k];
    }
    records.push_back(std::move(j));
  }
  Json doc{{"metadata", std::move(meta)}, {"records", std::move(records)}};
  return doc.dump(2) + "\n";
}

SweepDataset parse_sweep_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("sweep JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("metadata") ||
      !doc.contains("records") || !doc["records"].is_array()) {
    throw ConfigError("sweep JSON: expected {\"metadata\", \"records\"}");
  }
  SweepDataset data;
  const Json& meta = doc["metadata"];
  SweepMetadata& m = data.metadata;
  m.version = field<std::string>(meta, "version");
  m.command = field<std::string>(meta, "command");
  m.games = field<std::vector<std::string>>(meta, "games");
  if (m.games.empty() || m.games.size() > 2) {
    throw ConfigError("sweep JSON: 'games' must name one or two games");
  }
  const Json steps = field<Json>(meta, "steps");
  m.steps.d_theta = field<double>(steps, "d_theta");
  m.steps.d_phi = field<double>(steps, "d_phi");
  m.steps.d_alpha = field<double>(steps, "d_alpha");
  m.epsilon = field<double>(meta, "epsilon");
  m.strategy_count = field<std::size_t>(meta, "strategy_count");
  m.gamma_values = field<std::vector<double>>(meta, "gamma_values");
  m.p_values = field<std::vector<double>>(meta, "p_values");

  const std::size_t players = data.bayesian() ? 3 : 2;
  for (const Json& j : doc["records"]) {
    SweepRecord rec;
    rec.gamma = field<double>(j, "gamma");
    if (data.bayesian()) rec.p = field<double>(j, "p");
    for (std::size_t k = 0; k < players; ++k) {
      const std::string s = kPlayerSuffix[k];
      rec.equilibrium.strategy_indices.push_back(
          field<std::size_t>(j, (s + "_index").c_str()));
      try {
        rec.strategy_params.emplace_back(
            field<double>(j, ("theta_" + s).c_str()),
            field<double>(j, ("phi_" + s).c_str()),
            field<double>(j, ("alpha_" + s).c_str()));
      } catch (const std::out_of_range& e) {
        throw ConfigError(std::string("sweep JSON: ") + e.what());
      }
      rec.equilibrium.payoffs.push_back(
          field<double>(j, ("payoff_" + s).c_str()));
    }
    data.records.push_back(std::move(rec));
  }
  return data;
}

std::string strategies_csv(const StrategyGrid& grid) {
  std::string out = "index,theta,phi,alpha\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const StrategyParams& p = grid[i].params;
    append_row(out, {idx(i), num(p.theta()), num(p.phi()), num(p.alpha())});
  }
  return out;
}

std::string pairs_csv(std::string_view x_name, std::string_view y_name,
                      std::span<const std::pair<double, double>> rows) {
  std::string out = std::string(x_name) + "," + std::string(y_name) + "\n";
  for (const auto& [x, y] : rows) append_row(out, {num(x), num(y)});
  return out;
}

std::string histogram_csv(std::span<const HistogramBin> bins) {
  std::string out = "bin_center,count\n";
  for (const HistogramBin& b : bins) {
    append_row(out, {num(b.center), idx(b.count)});
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buf.str();
}

void write_text_file(const std::filesystem::path& path,
                     std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace qgame
