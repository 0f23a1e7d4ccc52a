#include "poisonrl/mdp.hpp"

#include <cmath>

#include "poisonrl/errors.hpp"

namespace poisonrl {

FiniteMdp::FiniteMdp(int num_states, int num_actions, double discount)
    : num_states_(num_states), num_actions_(num_actions), discount_(discount) {
  if (num_states < 1 || num_actions < 1) throw ArgumentError("state and action counts must be positive");
  p_.assign(static_cast<std::size_t>(num_states) * num_actions * num_states, 0.0);
  r_.setZero(num_states, num_actions);
}

void FiniteMdp::set_reward_table(const Eigen::MatrixXd& r) {
  if (r.rows() != num_states_ || r.cols() != num_actions_)
    throw ArgumentError("reward table shape mismatch");
  r_ = r;
}

void FiniteMdp::validate() const {
  if (!(discount_ >= 0.0 && discount_ < 1.0)) throw ArgumentError("discount must lie in [0, 1)");
  for (int s = 0; s < num_states_; ++s) {
    for (int a = 0; a < num_actions_; ++a) {
      double sum = 0.0;
      for (int sn = 0; sn < num_states_; ++sn) {
        const double v = p(s, a, sn);
        if (v < 0.0) throw ArgumentError("negative transition probability");
        sum += v;
      }
      if (std::abs(sum - 1.0) > 1e-12) throw ArgumentError("transition row does not sum to one");
    }
  }
  if (!r_.allFinite()) throw ArgumentError("reward table has non-finite entries");
}

namespace {

Eigen::VectorXd row_max(const QTable& q) {
  return q.rowwise().maxCoeff();
}

}  // namespace

QTable bellman_operator(const QTable& q, const FiniteMdp& mdp) {
  if (q.rows() != mdp.num_states() || q.cols() != mdp.num_actions())
    throw ArgumentError("Q table shape does not match the MDP");
  const Eigen::VectorXd v = row_max(q);
  QTable out(mdp.num_states(), mdp.num_actions());
  for (int s = 0; s < mdp.num_states(); ++s) {
    for (int a = 0; a < mdp.num_actions(); ++a) {
      double acc = 0.0;
      for (int sn = 0; sn < mdp.num_states(); ++sn) {
        const double prob = mdp.p(s, a, sn);
        if (prob != 0.0) acc += prob * v(sn);
      }
      out(s, a) = mdp.r(s, a) + mdp.discount() * acc;
    }
  }
  return out;
}

ValueIterationResult value_iteration(const FiniteMdp& mdp, double tol, int max_iters) {
  if (tol <= 0.0) throw ArgumentError("tolerance must be positive");
  QTable q = QTable::Zero(mdp.num_states(), mdp.num_actions());
  for (int k = 0; k < max_iters; ++k) {
    QTable next = bellman_operator(q, mdp);
    const double residual = (next - q).cwiseAbs().maxCoeff();
    if (residual <= tol) {
      // `next` contracts the residual further, so it also meets tol.
      return {next, k};
    }
    q = next;
  }
  throw IterationLimitError("value iteration did not converge within the iteration limit");
}

Eigen::MatrixXd q_to_reward(const QTable& q, const FiniteMdp& mdp) {
  if (q.rows() != mdp.num_states() || q.cols() != mdp.num_actions())
    throw ArgumentError("Q table shape does not match the MDP");
  const Eigen::VectorXd v = row_max(q);
  Eigen::MatrixXd r(mdp.num_states(), mdp.num_actions());
  for (int s = 0; s < mdp.num_states(); ++s) {
    for (int a = 0; a < mdp.num_actions(); ++a) {
      double acc = 0.0;
      for (int sn = 0; sn < mdp.num_states(); ++sn) {
        const double prob = mdp.p(s, a, sn);
        if (prob != 0.0) acc += prob * v(sn);
      }
      r(s, a) = q(s, a) - mdp.discount() * acc;
    }
  }
  return r;
}

GreedyResult greedy_policy(const QTable& q, double tie_tol) {
  GreedyResult out;
  out.policy.action.resize(q.rows());
  for (int s = 0; s < q.rows(); ++s) {
    const double best = q.row(s).maxCoeff();
    int chosen = -1;
    int near_best = 0;
    for (int a = 0; a < q.cols(); ++a) {
      if (q(s, a) >= best - tie_tol) {
        ++near_best;
        if (chosen < 0) chosen = a;
      }
    }
    out.policy.action[s] = chosen;
    if (near_best > 1) out.had_tie = true;
  }
  return out;
}

Dataset shape_rewards(const Dataset& dataset, const Potential& phi, double gamma) {
  if (dataset.kind != DatasetKind::kTabular)
    throw ArgumentError("shape_rewards requires a tabular dataset");
  Dataset out = dataset;
  for (auto& item : out.tabular) {
    if (item.s >= phi.phi.size() || item.s_next >= phi.phi.size())
      throw ArgumentError("potential is missing a value for a dataset state");
    item.r += gamma * phi.phi(item.s_next) - phi.phi(item.s);
  }
  return out;
}

}  // namespace poisonrl
