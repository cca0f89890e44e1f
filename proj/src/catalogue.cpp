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


#include "qgame/catalogue.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "qgame/default_catalogue.hpp"

namespace qgame {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string location(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line) + ": ";
}

[[noreturn]] void parse_fail(std::string_view source, std::size_t line,
                             const std::string& msg) {
  throw CatalogueError(CatalogueError::Kind::kParse,
                       location(source, line) + msg);
}

// Comma-separated numbers. Count is checked later so the error can name the
// game.
std::vector<double> parse_numbers(std::string_view value,
                                  std::string_view source, std::size_t line) {
  std::vector<double> out;
  while (true) {
    const auto comma = value.find(',');
    const std::string_view field = trim(value.substr(0, comma));
    double x = 0.0;
    const char* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, x);
    if (field.empty() || ec != std::errc() || ptr != end) {
      parse_fail(source, line,
                 "expected a number, got '" + std::string(field) + "'");
    }
    out.push_back(x);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

struct PendingGame {
  std::string name;
  std::size_t line = 0;
  std::optional<std::vector<double>> payoff_a;
  std::optional<std::vector<double>> payoff_b;
};

GameDefinition finish(const PendingGame& g, std::string_view source) {
  auto fail = [&](const std::string& msg) {
    throw CatalogueError(CatalogueError::Kind::kValidation,
                         location(source, g.line) + "game '" + g.name +
                             "': " + msg);
  };
  if (!g.payoff_a) fail("missing payoff_a");
  if (!g.payoff_b) fail("missing payoff_b");
  if (g.payoff_a->size() != 4) {
    fail("payoff_a has " + std::to_string(g.payoff_a->size()) +
         " entries, expected 4");
  }
  if (g.payoff_b->size() != 4) {
    fail("payoff_b has " + std::to_string(g.payoff_b->size()) +
         " entries, expected 4");
  }
  GameDefinition def;
  def.name = g.name;
  std::copy(g.payoff_a->begin(), g.payoff_a->end(), def.payoff_a.begin());
  std::copy(g.payoff_b->begin(), g.payoff_b->end(), def.payoff_b.begin());
  try {
    def.validate();
  } catch (const std::invalid_argument& e) {
    throw CatalogueError(CatalogueError::Kind::kValidation,
                         location(source, g.line) + e.what());
  }
  return def;
}

}  // namespace

void GameCatalogue::add(GameDefinition game) {
  if (games_.contains(game.name)) {
    throw CatalogueError(CatalogueError::Kind::kValidation,
                         "duplicate game name '" + game.name + "'");
  }
  try {
    game.validate();
  } catch (const std::invalid_argument& e) {
    throw CatalogueError(CatalogueError::Kind::kValidation, e.what());
  }
  std::string name = game.name;
  games_.emplace(std::move(name), std::move(game));
}

bool GameCatalogue::contains(const std::string& name) const {
  return games_.contains(name);
}

const GameDefinition& GameCatalogue::get(const std::string& name) const {
  auto it = games_.find(name);
  if (it == games_.end()) {
    std::string msg = "unknown game '" + name + "'; available:";
    for (const auto& [n, g] : games_) msg += " " + n;
    throw ConfigError(msg);
  }
  return it->second;
}

std::vector<std::string> GameCatalogue::names() const {
  std::vector<std::string> out;
  out.reserve(games_.size());
  for (const auto& [n, g] : games_) out.push_back(n);
  return out;
}

GameCatalogue parse_catalogue(std::string_view text, std::string_view source) {
  std::vector<PendingGame> pending;
  std::size_t line_no = 0;
  do {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

    const auto comment = line.find_first_of("#;");
    line = trim(line.substr(0, comment));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') parse_fail(source, line_no, "unterminated section");
      const std::string_view name = trim(line.substr(1, line.size() - 2));
      if (name.empty()) parse_fail(source, line_no, "empty game name");
      pending.push_back({std::string(name), line_no, {}, {}});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      parse_fail(source, line_no, "expected 'key = value'");
    }
    if (pending.empty()) {
      parse_fail(source, line_no, "key outside of a [game] section");
    }
    const std::string_view key = trim(line.substr(0, eq));
    std::vector<double> values =
        parse_numbers(trim(line.substr(eq + 1)), source, line_no);
    PendingGame& game = pending.back();
    std::optional<std::vector<double>>* slot = nullptr;
    if (key == "payoff_a") {
      slot = &game.payoff_a;
    } else if (key == "payoff_b") {
      slot = &game.payoff_b;
    } else {
      parse_fail(source, line_no, "unknown key '" + std::string(key) + "'");
    }
    if (slot->has_value()) {
      parse_fail(source, line_no, "repeated key '" + std::string(key) + "'");
    }
    *slot = std::move(values);
  } while (!text.empty());
  if (pending.empty()) parse_fail(source, line_no, "no games defined");

  GameCatalogue catalogue;
  for (const PendingGame& g : pending) {
    GameDefinition def = finish(g, source);
    if (catalogue.contains(def.name)) {
      throw CatalogueError(CatalogueError::Kind::kValidation,
                           location(source, g.line) + "duplicate game name '" +
                               def.name + "'");
    }
    catalogue.add(std::move(def));
  }
  return catalogue;
}

GameCatalogue load_catalogue(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open catalogue " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read catalogue " + path.string());
  return parse_catalogue(buf.str(), path.string());
}

GameCatalogue default_catalogue() {
  return parse_catalogue(kDefaultCatalogueText, "default catalogue");
}

}  // namespace qgame
