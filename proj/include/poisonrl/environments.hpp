#pragma once

#include <map>
#include <string>
#include <vector>

#include "poisonrl/mdp.hpp"

namespace poisonrl {

// Grid actions, in tie-break order.
enum GridAction : int { kUp = 0, kDown = 1, kLeft = 2, kRight = 3 };
inline const char* grid_action_name(int a) {
  static const char* names[4] = {"up", "down", "left", "right"};
  return names[a];
}

enum class CellKind { kWall, kWhite, kGray, kTerminal };

// Declarative grid-world description. `rows` lists the grid top row first;
// characters: '#' wall, '.' white, 'g' gray, 'S' start (white), any other
// capital letter a terminal keyed into `terminal_rewards`.
struct GridWorldSpec {
  int width = 0;
  int height = 0;
  std::vector<std::string> rows;
  std::map<std::string, double> terminal_rewards;
  double step_reward = -1.0;
  double gray_reward = -10.0;
  double discount = 0.9;

  bool operator==(const GridWorldSpec&) const = default;
};

GridWorldSpec load_grid_spec(const std::string& path);
void save_grid_spec(const GridWorldSpec& spec, const std::string& path);
GridWorldSpec parse_grid_spec(const std::string& json_text);
std::string dump_grid_spec(const GridWorldSpec& spec);

struct GridCell {
  int col = 0;
  int row = 0;  // row 0 is the bottom row
  CellKind kind = CellKind::kWhite;
  char label = '.';
};

// A grid compiled to a finite MDP together with the cell labeling. States
// are the non-wall cells; every state has the four move actions. Moving into
// a wall or off the grid keeps the state. Terminal states absorb: every
// action self-loops with reward 0.
struct CompiledGrid {
  FiniteMdp mdp;
  std::vector<GridCell> cells;             // per state
  std::vector<std::string> state_names;    // "x<col>y<row>"
  std::vector<std::string> action_names;   // up/down/left/right
  int start_state = -1;
  std::map<char, int> terminal_state;      // terminal letter -> state id

  int state_at(int col, int row) const;    // -1 if wall / out of bounds
  int next_state(int s, int a) const;
};

CompiledGrid compile_gridworld(const GridWorldSpec& spec);

// The two-state toy MDP: states A, B; actions stay, move. `stay_reward` and
// `move_reward` apply in both states; transitions are deterministic.
struct TwoStateSpec {
  double stay_reward = 1.0;
  double move_reward = 0.0;
  double discount = 0.9;
};

struct CompiledTwoState {
  FiniteMdp mdp;
  std::vector<std::string> state_names;   // A, B
  std::vector<std::string> action_names;  // stay, move
};

CompiledTwoState two_state_mdp(const TwoStateSpec& spec);

}  // namespace poisonrl
