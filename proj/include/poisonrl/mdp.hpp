#pragma once

#include <Eigen/Dense>
#include <vector>

#include "poisonrl/dataset.hpp"

namespace poisonrl {

// Action-value table, one row per state and one column per action.
using QTable = Eigen::MatrixXd;

// Deterministic policy: action[s] is the action taken in state s.
struct Policy {
  std::vector<int> action;

  bool operator==(const Policy& other) const { return action == other.action; }
};

// State potential used for potential-based reward shaping.
struct Potential {
  Eigen::VectorXd phi;
};

// Finite MDP with dense transition tensor P[s][a][s'] and reward table
// R[s][a]. Transition rows must be probability distributions and the
// discount must be strictly below one.
class FiniteMdp {
 public:
  FiniteMdp() = default;
  FiniteMdp(int num_states, int num_actions, double discount);

  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }
  double discount() const { return discount_; }

  double p(int s, int a, int s_next) const { return p_[index(s, a) * num_states_ + s_next]; }
  double& p(int s, int a, int s_next) { return p_[index(s, a) * num_states_ + s_next]; }
  double r(int s, int a) const { return r_(s, a); }
  double& r(int s, int a) { return r_(s, a); }

  const Eigen::MatrixXd& reward_table() const { return r_; }
  void set_reward_table(const Eigen::MatrixXd& r);

  // Throws ArgumentError if a transition row does not sum to one within
  // 1e-12, has a negative entry, or the discount is outside [0, 1).
  void validate() const;

 private:
  std::size_t index(int s, int a) const { return static_cast<std::size_t>(s) * num_actions_ + a; }

  int num_states_ = 0;
  int num_actions_ = 0;
  double discount_ = 0.0;
  std::vector<double> p_;
  Eigen::MatrixXd r_;
};

struct ValueIterationResult {
  QTable q;
  int iterations = 0;
};

struct GreedyResult {
  Policy policy;
  bool had_tie = false;
};

// One application of the Bellman optimality operator:
//   H(Q)(s,a) = R(s,a) + gamma * sum_s' P(s'|s,a) max_a' Q(s',a').
QTable bellman_operator(const QTable& q, const FiniteMdp& mdp);

// Iterates the Bellman operator from Q = 0 until the sup-norm residual of
// the returned table is at most tol. `iterations` is the index of the first
// iterate meeting the tolerance. Note the fixed point is reached to within
// tol/(1-gamma) in the table itself.
ValueIterationResult value_iteration(const FiniteMdp& mdp, double tol = 1e-10,
                                     int max_iters = 1000000);

// Inverse of the Bellman fixed-point map: the unique reward table for which
// the given Q satisfies Bellman optimality on (P, gamma):
//   R(s,a) = Q(s,a) - gamma * sum_s' P(s'|s,a) max_a' Q(s',a').
Eigen::MatrixXd q_to_reward(const QTable& q, const FiniteMdp& mdp);

// Greedy policy with deterministic tie-breaking: ties within tie_tol go to
// the lowest action index, and the result reports whether any occurred.
GreedyResult greedy_policy(const QTable& q, double tie_tol = 1e-9);

// Potential-based shaping applied to a tabular batch:
//   r' = r + gamma * phi(s') - phi(s).
Dataset shape_rewards(const Dataset& dataset, const Potential& phi, double gamma);

}  // namespace poisonrl
