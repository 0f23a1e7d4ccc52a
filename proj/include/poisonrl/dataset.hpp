#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace poisonrl {

// One tabular training item (s, a, r, s'). States and actions are indices
// into the label tables carried by the dataset.
struct TabularItem {
  int s = 0;
  int a = 0;
  double r = 0.0;
  int s_next = 0;
};

// One continuous-control training item with vector state and action.
struct ContinuousItem {
  Eigen::VectorXd s;
  Eigen::VectorXd a;
  double r = 0.0;
  Eigen::VectorXd s_next;
};

enum class DatasetKind { kTabular, kContinuous };

// A batch of training items. Exactly one of the two item vectors is
// populated, matching `kind`. Rewards are stored as the learner receives
// them; for control data that means negative losses.
struct Dataset {
  DatasetKind kind = DatasetKind::kTabular;
  std::vector<TabularItem> tabular;
  std::vector<ContinuousItem> continuous;
  // Label tables for the tabular variant (indices into these vectors).
  std::vector<std::string> state_names;
  std::vector<std::string> action_names;

  int size() const {
    return kind == DatasetKind::kTabular ? static_cast<int>(tabular.size())
                                         : static_cast<int>(continuous.size());
  }

  Eigen::VectorXd rewards() const;
  Dataset with_rewards(const Eigen::VectorXd& r) const;
};

// The per-pair index sets of a tabular batch: for every (s, a), the list of
// item positions whose state-action pair is (s, a). Together the lists
// partition 0..T-1.
struct IndexSets {
  int num_states = 0;
  int num_actions = 0;
  std::vector<std::vector<int>> by_pair;  // indexed s * num_actions + a

  const std::vector<int>& at(int s, int a) const { return by_pair[s * num_actions + a]; }
  int count(int s, int a) const { return static_cast<int>(at(s, a).size()); }
  // Smallest |T_{s,a}| over covered pairs; 0 if some pair is uncovered.
  int min_count() const;
  bool covered() const { return min_count() >= 1; }
};

IndexSets build_index(const Dataset& dataset, int num_states, int num_actions);

// File IO. Format selected by extension: ".csv" or ".json". Values are
// written with 17 significant digits so a round trip is lossless.
void write_dataset(const Dataset& dataset, const std::string& path);
Dataset read_dataset(const std::string& path);

}  // namespace poisonrl
