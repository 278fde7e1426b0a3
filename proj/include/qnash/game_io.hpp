#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "qnash/game.hpp"
#include "qnash/profile.hpp"

namespace qnash {

// Plain-text game format:
//   k <k> range <lo> <hi>
//   <k lines of k space-separated row-player payoffs>
//   <blank line>
//   <k lines of k space-separated column-player payoffs>
// followed by an optional sidecar line `hidden <c>` (0-based) written for
// hidden-column instances. Parsers reject out-of-range entries.
struct GameFile {
  BimatrixGame game;
  std::optional<int> hidden_column;
};

GameFile read_game(std::istream& in);
GameFile read_game_file(const std::string& path);

void write_game(std::ostream& out, const BimatrixGame& game,
                std::optional<int> hidden_column = std::nullopt);
void write_game_file(const std::string& path, const BimatrixGame& game,
                     std::optional<int> hidden_column = std::nullopt);

// Profile format: two lines of k space-separated probabilities, row player
// first. Both vectors must be valid distributions.
MixedProfile read_profile(std::istream& in, int k);
MixedProfile read_profile_file(const std::string& path, int k);
void write_profile(std::ostream& out, const MixedProfile& profile);
void write_profile_file(const std::string& path, const MixedProfile& profile);

// Shortest decimal form that round-trips a double.
std::string format_double(double v);

}  // namespace qnash
