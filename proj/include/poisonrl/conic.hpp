#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace poisonrl {

// A conic program in the form
//   minimize    c'u  (built from a norm objective and/or linear terms)
//   subject to  equality rows,  inequality rows (row'u >= rhs),
//               and PSD membership of designated symmetric blocks.
//
// Variables are organized in named blocks: plain vectors, or symmetric
// matrices stored by their upper-triangle entries. Norm objectives
// ||x_block - ref||_alpha with alpha in {1, 2, inf} are lowered to epigraph
// form internally.
struct BlockId {
  int id = -1;
};

struct ConicProgram {
  struct Block {
    std::string name;
    int dim = 0;       // scalar count
    int matrix_p = 0;  // >0 for a symmetric p x p block
    int offset = 0;
  };
  struct Row {
    std::vector<std::pair<int, double>> coeffs;
    double rhs = 0.0;
  };
  struct PsdConstraint {
    int block = -1;
    double shift = 0.0;  // mat(block) - shift*I must be PSD
  };
  struct NormObjective {
    int alpha = 0;  // 0 = none; 1, 2, or -1 for inf
    int block = -1;
    Eigen::VectorXd reference;
  };

  std::vector<Block> blocks;
  std::vector<Row> equalities;
  std::vector<Row> inequalities;
  std::vector<PsdConstraint> psd;
  NormObjective norm_objective;
  std::vector<std::pair<int, double>> linear_objective;

  BlockId add_vector_block(const std::string& name, int dim);
  BlockId add_symmetric_block(const std::string& name, int p);
  int num_scalars() const;

  int scalar_index(BlockId block, int i) const;
  // Upper-triangle entry (i, j) with i <= j of a symmetric block.
  int sym_index(BlockId block, int i, int j) const;

  void add_equality(std::vector<std::pair<int, double>> coeffs, double rhs);
  // row'u >= rhs
  void add_inequality_ge(std::vector<std::pair<int, double>> coeffs, double rhs);
  void require_psd(BlockId block, double shift = 0.0);
  void set_norm_objective(int alpha, BlockId block, Eigen::VectorXd reference);
  void add_objective_term(int scalar_var, double coeff);

  std::string dump_json() const;
  static ConicProgram restore_json(const std::string& text);
};

enum class SolveStatus { kOptimal, kInfeasible, kToleranceFailure };

struct ConicSolution {
  SolveStatus status = SolveStatus::kToleranceFailure;
  Eigen::VectorXd values;     // all scalar variables
  double objective = 0.0;
  double primal_residual = 0.0;  // max constraint violation, recomputed
  int iterations = 0;
  std::string message;

  Eigen::VectorXd block(const ConicProgram& program, BlockId id) const;
  Eigen::MatrixXd sym_block(const ConicProgram& program, BlockId id) const;
};

struct SolveOptions {
  double feas_tol = 1e-8;
  double opt_tol = 1e-7;
  int max_iters = 200;
  // After an alpha=2 solve with no PSD block near its boundary, refine the
  // solution by an equality-constrained least-squares step on the active set.
  bool polish = true;
};

ConicSolution solve(const ConicProgram& program, const SolveOptions& options = {});

// Re-solves an alpha=1 program with off-support deviations pinned to zero.
// Returns the sparse solution when its cost matches `solution` within
// 1e-6 * (1 + cost); otherwise returns `solution` unchanged.
ConicSolution sparsify_l1_solution(const ConicProgram& program, const ConicSolution& solution,
                                   const SolveOptions& options = {},
                                   double support_tol = 1e-5);

}  // namespace poisonrl
