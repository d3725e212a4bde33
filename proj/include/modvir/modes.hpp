#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "modvir/virasoro.hpp"

namespace modvir {

/// Node of a descendant state of the vacuum. Nodes are hash-consed, so equal
/// trees share one node and one id.
struct StateNode {
  enum class Kind { Vacuum, Omega, Deriv, Product };
  Kind kind;
  /// Deriv: order j of the divided power D^j/j!.
  int order = 0;
  std::shared_ptr<const StateNode> left;   // Deriv operand, or x in x_{-1}y
  std::shared_ptr<const StateNode> right;  // y in x_{-1}y
  int degree = 0;
  std::uint64_t id = 0;

  std::string to_string() const;
};

using NodePtr = std::shared_ptr<const StateNode>;

NodePtr vacuum_node();
NodePtr omega_node();
/// D^j x / j!.
NodePtr deriv_node(int order, const NodePtr& x);
/// x_{-1} y; collapses x_{-1} 1 = x and 1_{-1} y = y.
NodePtr product_node(const NodePtr& x, const NodePtr& y);

/// Linear combination of state trees with coefficients in one ring.
class StateWord {
 public:
  explicit StateWord(Ring ring) : ring_(ring) {}

  const Ring& ring() const { return ring_; }
  const std::vector<std::pair<NodePtr, Scalar>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree of the first term; build_state only produces homogeneous states.
  int degree() const;

  void add_term(const NodePtr& node, const Scalar& coeff);
  void add_scaled(const StateWord& other, const Scalar& factor);

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<std::pair<NodePtr, Scalar>> terms_;
};

/// L(-n1)...L(-nk)1 in normal form (rightmost mode applied first). L(-1)
/// acts as the translation derivative and distributes over products;
/// L(-k) for k >= 2 becomes (D^(k-2) omega)_{-1}.
StateWord build_state(std::span<const int> word, const Ring& ring);

/// Sum over the partitions of a Verma vector, read as words on the vacuum.
StateWord state_from_verma(const VermaVector& vec);

/// "s" (degree 6) or "u" (degree 4), with integer coefficients mapped into ring.
StateWord named_state(const std::string& name, const Ring& ring);

/// Evaluates components u_n of states on a fixed Verma module. For u of
/// degree k, u_n maps degree d to degree d + k - n - 1. Results are cached per
/// (node, n, monomial).
class ModeEvaluator {
 public:
  explicit ModeEvaluator(const VermaModule& module) : module_(module) {}

  const VermaModule& module() const { return module_; }

  VermaVector apply(const StateWord& state, int n, const VermaVector& target);
  VermaVector apply(const NodePtr& node, int n, const Partition& target);

 private:
  VermaVector apply_node(const NodePtr& node, int n, const VermaVector& target);
  VermaVector compute(const NodePtr& node, int n, const Partition& target);

  const VermaModule& module_;
  std::mutex mutex_;
  std::map<std::tuple<std::uint64_t, int, std::vector<int>>, VermaVector> memo_;
};

VermaVector mode_apply(const StateWord& state, int n, const VermaVector& target,
                       const VermaModule& module);

struct AnnihilationViolation {
  int mode;
  Partition target;
  int result_degree;
};

struct AnnihilationReport {
  std::size_t checks = 0;
  std::vector<AnnihilationViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks that every u_n maps each PBW monomial t of degree <= max_target_degree
/// into the Gram radical, for n <= max_mode and result degree in
/// [0, max_target_degree]; i.e. that u acts as zero on the irreducible quotient.
AnnihilationReport verify_annihilation(const StateWord& state, const VermaModule& module,
                                       int max_mode, int max_target_degree);

}  // namespace modvir
