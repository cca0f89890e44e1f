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


#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "qgame/catalogue.hpp"

namespace qgame {
namespace {

TEST_CASE("default catalogue") {
  const GameCatalogue cat = default_catalogue();
  const GameDefinition& pd = cat.get("prisoners_dilemma");
  CHECK(pd.payoff_a == std::array<double, 4>{3, 0, 5, 1});
  CHECK(pd.payoff_b == std::array<double, 4>{3, 5, 0, 1});
  for (const char* name : {"deadlock", "stag_hunt", "das_brother", "matching_pennies"}) {
    CHECK(cat.contains(name));
  }
  CHECK_FALSE(cat.contains("type_b"));
  CHECK_FALSE(cat.contains("Prisoners_Dilemma"));
  const GameDefinition& mp = cat.get("matching_pennies");
  for (std::size_t j = 0; j < 4; ++j) CHECK(mp.payoff_a[j] + mp.payoff_b[j] == 0.0);
}

TEST_CASE("shipped catalogue file matches the built-in one") {
  const GameCatalogue file = load_catalogue(QGAME_TEST_DATA_DIR "/catalogue.ini");
  const GameCatalogue builtin = default_catalogue();
  REQUIRE(file.names() == builtin.names());
  for (const std::string& n : file.names()) {
    CHECK(file.get(n).payoff_a == builtin.get(n).payoff_a);
    CHECK(file.get(n).payoff_b == builtin.get(n).payoff_b);
  }
}

TEST_CASE("unknown names list what is available") {
  CHECK_THROWS_WITH_AS(default_catalogue().get("chicken"),
                       doctest::Contains("stag_hunt"), ConfigError);
}

CatalogueError::Kind error_kind(std::string_view text) {
  try {
    parse_catalogue(text, "test.ini");
  } catch (const CatalogueError& e) {
    return e.kind();
  }
  FAIL("expected a CatalogueError");
  return CatalogueError::Kind::kParse;
}

TEST_CASE("validation errors name the game") {
  const char* short_list = "[g1]\npayoff_a = 1, 2, 3\npayoff_b = 1, 2, 3, 4\n";
  CHECK(error_kind(short_list) == CatalogueError::Kind::kValidation);
  CHECK_THROWS_WITH(parse_catalogue(short_list, "test.ini"),
                    doctest::Contains("game 'g1'"));
  CHECK(error_kind("[g]\npayoff_a = 1,2,3,4\n") == CatalogueError::Kind::kValidation);
  CHECK(error_kind("[g]\npayoff_a = 1,2,3,4\npayoff_b = 1,2,nan,4\n") ==
        CatalogueError::Kind::kValidation);
  CHECK(error_kind("[g]\npayoff_a=1,2,3,4\npayoff_b=1,2,3,4\n"
                   "[g]\npayoff_a=1,2,3,4\npayoff_b=1,2,3,4\n") ==
        CatalogueError::Kind::kValidation);
}

TEST_CASE("parse errors carry the line number") {
  CHECK(error_kind("") == CatalogueError::Kind::kParse);
  CHECK(error_kind("# only comments\n\n") == CatalogueError::Kind::kParse);
  CHECK(error_kind("payoff_a = 1,2,3,4\n") == CatalogueError::Kind::kParse);
  CHECK(error_kind("[g\n") == CatalogueError::Kind::kParse);
  CHECK(error_kind("[g]\npayoff_c = 1,2,3,4\n") == CatalogueError::Kind::kParse);
  CHECK(error_kind("[g]\njunk\n") == CatalogueError::Kind::kParse);
  CHECK_THROWS_WITH(parse_catalogue("[g]\npayoff_a = 1, x, 3, 4\n", "test.ini"),
                    doctest::Contains("test.ini:2:"));
}

TEST_CASE("comments, blank lines and CRLF are tolerated") {
  const GameCatalogue cat = parse_catalogue(
      "; header\r\n\r\n[coord]  # two equilibria\r\n"
      "payoff_a = 2, 0, 0, 1\r\npayoff_b = 2,0,0,1 ; trailing\r\n");
  CHECK(cat.get("coord").payoff_a == std::array<double, 4>{2, 0, 0, 1});
}

TEST_CASE("missing files are I/O errors") {
  CHECK_THROWS_AS(load_catalogue("/nonexistent/dir/catalogue.ini"), IoError);
}

TEST_CASE("catalogue add rejects duplicates") {
  GameCatalogue cat;
  cat.add({"x", {1, 2, 3, 4}, {4, 3, 2, 1}});
  CHECK_THROWS_AS(cat.add({"x", {1, 2, 3, 4}, {4, 3, 2, 1}}), CatalogueError);
  CHECK(cat.size() == 1);
}

}  // namespace
}  // namespace qgame
