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


#ifndef QGAME_CATALOGUE_HPP_
#define QGAME_CATALOGUE_HPP_

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qgame/ewl.hpp"

namespace qgame {

// Bad user input: malformed files, unknown names, invalid parameters.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CatalogueError : public ConfigError {
 public:
  enum class Kind { kParse, kValidation };

  CatalogueError(Kind kind, const std::string& what)
      : ConfigError(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Named games; names are case-sensitive.
class GameCatalogue {
 public:
  // Throws CatalogueError (kValidation) on a duplicate name or invalid game.
  void add(GameDefinition game);

  bool contains(const std::string& name) const;
  // Throws ConfigError listing the available names.
  const GameDefinition& get(const std::string& name) const;

  std::vector<std::string> names() const;
  std::size_t size() const { return games_.size(); }

 private:
  std::map<std::string, GameDefinition> games_;
};

// Sections name the games; each needs payoff_a and payoff_b with four
// comma-separated numbers in outcome order 00, 01, 10, 11. '#' and ';' start
// comments. `source` only labels error messages.
GameCatalogue parse_catalogue(std::string_view text,
                              std::string_view source = "<catalogue>");

// Throws IoError when the file cannot be read.
GameCatalogue load_catalogue(const std::filesystem::path& path);

// The catalogue shipped in data/catalogue.ini.
GameCatalogue default_catalogue();

}  // namespace qgame

#endif  // QGAME_CATALOGUE_HPP_
