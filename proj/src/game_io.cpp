#include "qnash/game_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qnash {

namespace {

std::string next_content_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument(std::string(what) + ": unexpected end of input");
  return line;
}

Matrix read_matrix(std::istream& in, int k, PayoffRange range, const char* name) {
  Matrix m = Matrix::square(k);
  for (int i = 0; i < k; ++i) {
    std::istringstream row(next_content_line(in, name));
    for (int j = 0; j < k; ++j) {
      double v;
      if (!(row >> v)) throw std::invalid_argument(std::string(name) + ": malformed payoff row");
      if (!std::isfinite(v) || !range.contains(v))
        throw std::invalid_argument(std::string(name) + ": payoff outside declared range");
      m(i, j) = v;
    }
    double extra;
    if (row >> extra) throw std::invalid_argument(std::string(name) + ": too many entries in row");
  }
  return m;
}

}  // namespace

std::string format_double(double v) {
  // Shortest form that parses back to the same double.
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  return buf;
}

GameFile read_game(std::istream& in) {
  std::string header = next_content_line(in, "game header");
  std::istringstream hs(header);
  std::string kw1, kw2;
  int k = 0;
  double lo = 0.0, hi = 0.0;
  if (!(hs >> kw1 >> k >> kw2 >> lo >> hi) || kw1 != "k" || kw2 != "range")
    throw std::invalid_argument("game header: expected `k <k> range <lo> <hi>`");
  if (k < 1) throw std::invalid_argument("game header: k must be positive");
  PayoffRange range{lo, hi};
  Matrix r = read_matrix(in, k, range, "R block");
  std::string blank = next_content_line(in, "separator");
  if (!blank.empty()) throw std::invalid_argument("game file: expected blank line between matrices");
  Matrix c = read_matrix(in, k, range, "C block");

  std::optional<int> hidden;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string kw;
    int col = -1;
    if ((ls >> kw >> col) && kw == "hidden") {
      if (col < 0 || col >= k) throw std::invalid_argument("game file: hidden column out of range");
      hidden = col;
    } else {
      throw std::invalid_argument("game file: unexpected trailing content");
    }
  }
  return GameFile{BimatrixGame(std::move(r), std::move(c), range), hidden};
}

GameFile read_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open game file: " + path);
  return read_game(in);
}

void write_game(std::ostream& out, const BimatrixGame& game, std::optional<int> hidden_column) {
  const int k = game.k();
  out << "k " << k << " range " << format_double(game.range().lo) << ' '
      << format_double(game.range().hi) << '\n';
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) out << (j ? " " : "") << format_double(game.r(i, j));
    out << '\n';
  }
  out << '\n';
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) out << (j ? " " : "") << format_double(game.c(i, j));
    out << '\n';
  }
  if (hidden_column) out << "hidden " << *hidden_column << '\n';
}

void write_game_file(const std::string& path, const BimatrixGame& game,
                     std::optional<int> hidden_column) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  write_game(out, game, hidden_column);
}

MixedProfile read_profile(std::istream& in, int k) {
  MixedProfile p;
  for (int side = 0; side < 2; ++side) {
    std::istringstream row(next_content_line(in, "profile"));
    std::vector<double> v(k);
    for (int i = 0; i < k; ++i)
      if (!(row >> v[i])) throw std::invalid_argument("profile: malformed probability line");
    (side == 0 ? p.x : p.y) = std::move(v);
  }
  validate_profile(p, k);
  return p;
}

MixedProfile read_profile_file(const std::string& path, int k) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open profile file: " + path);
  return read_profile(in, k);
}

void write_profile(std::ostream& out, const MixedProfile& profile) {
  for (size_t i = 0; i < profile.x.size(); ++i) out << (i ? " " : "") << format_double(profile.x[i]);
  out << '\n';
  for (size_t i = 0; i < profile.y.size(); ++i) out << (i ? " " : "") << format_double(profile.y[i]);
  out << '\n';
}

void write_profile_file(const std::string& path, const MixedProfile& profile) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  write_profile(out, profile);
}

}  // namespace qnash
