#include "poisonrl/environments.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "poisonrl/errors.hpp"

namespace poisonrl {

GridWorldSpec parse_grid_spec(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("invalid grid spec JSON: ") + e.what());
  }
  GridWorldSpec spec;
  spec.width = j.at("width").get<int>();
  spec.height = j.at("height").get<int>();
  spec.rows = j.at("rows").get<std::vector<std::string>>();
  spec.terminal_rewards = j.at("terminal_rewards").get<std::map<std::string, double>>();
  spec.step_reward = j.at("step_reward").get<double>();
  spec.gray_reward = j.at("gray_reward").get<double>();
  spec.discount = j.at("discount").get<double>();
  return spec;
}

std::string dump_grid_spec(const GridWorldSpec& spec) {
  nlohmann::ordered_json j;
  j["width"] = spec.width;
  j["height"] = spec.height;
  j["rows"] = spec.rows;
  j["terminal_rewards"] = spec.terminal_rewards;
  j["step_reward"] = spec.step_reward;
  j["gray_reward"] = spec.gray_reward;
  j["discount"] = spec.discount;
  return j.dump(2) + "\n";
}

GridWorldSpec load_grid_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_grid_spec(ss.str());
}

void save_grid_spec(const GridWorldSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot open " + path + " for writing");
  out << dump_grid_spec(spec);
}

int CompiledGrid::state_at(int col, int row) const {
  for (int s = 0; s < static_cast<int>(cells.size()); ++s)
    if (cells[s].col == col && cells[s].row == row) return s;
  return -1;
}

int CompiledGrid::next_state(int s, int a) const {
  for (int sn = 0; sn < mdp.num_states(); ++sn)
    if (mdp.p(s, a, sn) == 1.0) return sn;
  return s;
}

namespace {

void check_spec(const GridWorldSpec& spec) {
  if (spec.width < 1 || spec.height < 1) throw ArgumentError("grid dimensions must be positive");
  if (static_cast<int>(spec.rows.size()) != spec.height)
    throw ArgumentError("row count does not match height");
  for (const auto& row : spec.rows)
    if (static_cast<int>(row.size()) != spec.width)
      throw ArgumentError("row length does not match width");
  if (!(spec.discount >= 0.0 && spec.discount < 1.0))
    throw ArgumentError("discount must lie in [0, 1)");
  int starts = 0, terminals = 0;
  for (const auto& row : spec.rows) {
    for (char c : row) {
      if (c == 'S') ++starts;
      if (std::isupper(static_cast<unsigned char>(c)) && c != 'S') {
        ++terminals;
        if (!spec.terminal_rewards.count(std::string(1, c)))
          throw ArgumentError(std::string("terminal '") + c + "' has no reward entry");
      } else if (c != '#' && c != '.' && c != 'g' && c != 'S') {
        throw ArgumentError(std::string("unknown cell character '") + c + "'");
      }
    }
  }
  if (starts != 1) throw ArgumentError("grid must have exactly one start cell");
  if (terminals < 1) throw ArgumentError("grid must have at least one terminal cell");
}

}  // namespace

CompiledGrid compile_gridworld(const GridWorldSpec& spec) {
  check_spec(spec);
  CompiledGrid grid;
  grid.action_names = {"up", "down", "left", "right"};

  auto cell_char = [&spec](int col, int row) {
    return spec.rows[spec.height - 1 - row][col];
  };
  // Reading order: top row first, left to right.
  for (int row = spec.height - 1; row >= 0; --row) {
    for (int col = 0; col < spec.width; ++col) {
      const char c = cell_char(col, row);
      if (c == '#') continue;
      GridCell cell;
      cell.col = col;
      cell.row = row;
      cell.label = c;
      if (c == 'g') cell.kind = CellKind::kGray;
      else if (std::isupper(static_cast<unsigned char>(c)) && c != 'S') cell.kind = CellKind::kTerminal;
      else cell.kind = CellKind::kWhite;
      grid.cells.push_back(cell);
      grid.state_names.push_back("x" + std::to_string(col) + "y" + std::to_string(row));
    }
  }

  const int num_states = static_cast<int>(grid.cells.size());
  grid.mdp = FiniteMdp(num_states, 4, spec.discount);

  auto find_state = [&grid](int col, int row) {
    for (int s = 0; s < static_cast<int>(grid.cells.size()); ++s)
      if (grid.cells[s].col == col && grid.cells[s].row == row) return s;
    return -1;
  };

  static const int dcol[4] = {0, 0, -1, 1};
  static const int drow[4] = {1, -1, 0, 0};

  for (int s = 0; s < num_states; ++s) {
    const GridCell& cell = grid.cells[s];
    if (cell.kind == CellKind::kTerminal) {
      grid.terminal_state[cell.label] = s;
      for (int a = 0; a < 4; ++a) {
        grid.mdp.p(s, a, s) = 1.0;
        grid.mdp.r(s, a) = 0.0;
      }
      continue;
    }
    if (cell.label == 'S') grid.start_state = s;
    for (int a = 0; a < 4; ++a) {
      const int ncol = cell.col + dcol[a];
      const int nrow = cell.row + drow[a];
      int dest = s;
      if (ncol >= 0 && ncol < spec.width && nrow >= 0 && nrow < spec.height) {
        const int cand = find_state(ncol, nrow);
        if (cand >= 0) dest = cand;
      }
      grid.mdp.p(s, a, dest) = 1.0;
      const GridCell& dc = grid.cells[dest];
      double reward = spec.step_reward;
      if (dc.kind == CellKind::kTerminal) reward = spec.terminal_rewards.at(std::string(1, dc.label));
      else if (dc.kind == CellKind::kGray && dest != s) reward = spec.gray_reward;
      grid.mdp.r(s, a) = reward;
    }
  }
  if (grid.start_state < 0) throw ArgumentError("start cell is a wall");
  grid.mdp.validate();
  return grid;
}

CompiledTwoState two_state_mdp(const TwoStateSpec& spec) {
  CompiledTwoState out;
  out.state_names = {"A", "B"};
  out.action_names = {"stay", "move"};
  out.mdp = FiniteMdp(2, 2, spec.discount);
  for (int s = 0; s < 2; ++s) {
    out.mdp.p(s, 0, s) = 1.0;
    out.mdp.p(s, 1, 1 - s) = 1.0;
    out.mdp.r(s, 0) = spec.stay_reward;
    out.mdp.r(s, 1) = spec.move_reward;
  }
  out.mdp.validate();
  return out;
}

}  // namespace poisonrl
