#include "modvir/modes.hpp"

#include <sstream>
#include <stdexcept>

#include "modvir/linalg.hpp"

namespace modvir {

namespace {

using NodeKey = std::tuple<int, int, std::uint64_t, std::uint64_t>;

std::mutex& intern_mutex() {
  static std::mutex m;
  return m;
}

std::map<NodeKey, NodePtr>& intern_table() {
  static std::map<NodeKey, NodePtr> table;
  return table;
}

NodePtr intern(StateNode::Kind kind, int order, const NodePtr& left, const NodePtr& right,
               int degree) {
  NodeKey key{static_cast<int>(kind), order, left ? left->id : 0, right ? right->id : 0};
  std::lock_guard lock(intern_mutex());
  auto& table = intern_table();
  auto it = table.find(key);
  if (it != table.end()) return it->second;
  auto node = std::make_shared<StateNode>();
  node->kind = kind;
  node->order = order;
  node->left = left;
  node->right = right;
  node->degree = degree;
  node->id = table.size() + 1;
  table.emplace(key, node);
  return node;
}

/// D applied to a node, as integer-weighted nodes (divided powers keep the
/// weights integral: D * D^(j) = (j+1) D^(j+1)).
std::vector<std::pair<long long, NodePtr>> derive(const NodePtr& node) {
  switch (node->kind) {
    case StateNode::Kind::Vacuum:
      return {};
    case StateNode::Kind::Omega:
      return {{1, deriv_node(1, node)}};
    case StateNode::Kind::Deriv:
      return {{node->order + 1, deriv_node(node->order + 1, node->left)}};
    case StateNode::Kind::Product: {
      std::vector<std::pair<long long, NodePtr>> out;
      for (auto& [c, x] : derive(node->left)) out.emplace_back(c, product_node(x, node->right));
      for (auto& [c, y] : derive(node->right)) out.emplace_back(c, product_node(node->left, y));
      return out;
    }
  }
  return {};
}

}  // namespace

std::string StateNode::to_string() const {
  switch (kind) {
    case Kind::Vacuum:
      return "1";
    case Kind::Omega:
      return "w";
    case Kind::Deriv:
      return "D^(" + std::to_string(order) + ")(" + left->to_string() + ")";
    case Kind::Product:
      return "P(" + left->to_string() + ", " + right->to_string() + ")";
  }
  return "?";
}

NodePtr vacuum_node() { return intern(StateNode::Kind::Vacuum, 0, nullptr, nullptr, 0); }
NodePtr omega_node() { return intern(StateNode::Kind::Omega, 0, nullptr, nullptr, 2); }

NodePtr deriv_node(int order, const NodePtr& x) {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  if (order == 0) return x;
  if (x->kind != StateNode::Kind::Omega) {
    throw std::invalid_argument("divided powers apply to omega only; distribute D first");
  }
  return intern(StateNode::Kind::Deriv, order, x, nullptr, x->degree + order);
}

NodePtr product_node(const NodePtr& x, const NodePtr& y) {
  if (y->kind == StateNode::Kind::Vacuum) return x;
  if (x->kind == StateNode::Kind::Vacuum) return y;
  return intern(StateNode::Kind::Product, 0, x, y, x->degree + y->degree);
}

// ---------------------------------------------------------------------------
// StateWord

int StateWord::degree() const {
  if (terms_.empty()) throw std::logic_error("zero state has no degree");
  return terms_.front().first->degree;
}

void StateWord::add_term(const NodePtr& node, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  if (coeff.characteristic() != ring_.characteristic()) {
    throw RingMismatch("state coefficient ring differs");
  }
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->first == node) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
      return;
    }
  }
  terms_.emplace_back(node, coeff);
}

void StateWord::add_scaled(const StateWord& other, const Scalar& factor) {
  for (const auto& [n, c] : other.terms_) add_term(n, c * factor);
}

std::string StateWord::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << '(' << terms_[i].second.to_string() << ")*" << terms_[i].first->to_string();
  }
  return os.str();
}

StateWord build_state(std::span<const int> word, const Ring& ring) {
  StateWord cur(ring);
  cur.add_term(vacuum_node(), ring.one());
  for (std::size_t i = word.size(); i-- > 0;) {
    const int k = -word[i];
    if (k < 1) throw std::invalid_argument("state words use creation modes L(-k), k >= 1");
    StateWord next(ring);
    if (k == 1) {
      for (const auto& [node, c] : cur.terms()) {
        for (auto& [w, d] : derive(node)) next.add_term(d, c * w);
      }
    } else {
      NodePtr head = deriv_node(k - 2, omega_node());
      for (const auto& [node, c] : cur.terms()) next.add_term(product_node(head, node), c);
    }
    cur = std::move(next);
  }
  return cur;
}

StateWord state_from_verma(const VermaVector& vec) {
  StateWord out(vec.ring());
  for (const auto& [p, c] : vec.terms()) {
    std::vector<int> word;
    for (int part : p.parts()) word.push_back(-part);
    out.add_scaled(build_state(word, vec.ring()), c);
  }
  return out;
}

StateWord named_state(const std::string& name, const Ring& ring) {
  std::vector<std::pair<std::vector<int>, long long>> combo;
  if (name == "s") {
    combo = {{{-2, -2, -2}, 64}, {{-3, -3}, 93}, {{-4, -2}, -264}, {{-6}, -108}};
  } else if (name == "u") {
    combo = {{{-2, -2}, 1}, {{-4}, -2}};
  } else {
    throw std::invalid_argument("unknown named state '" + name + "' (expected s or u)");
  }
  StateWord out(ring);
  for (const auto& [word, k] : combo) out.add_scaled(build_state(word, ring), ring.from_int(k));
  return out;
}

// ---------------------------------------------------------------------------
// ModeEvaluator

VermaVector ModeEvaluator::apply(const StateWord& state, int n, const VermaVector& target) {
  if (state.ring().characteristic() != module_.ring().characteristic()) {
    throw RingMismatch("state and module rings differ");
  }
  VermaVector out(module_.ring());
  for (const auto& [node, c] : state.terms()) out.add_scaled(apply_node(node, n, target), c);
  return out;
}

VermaVector ModeEvaluator::apply_node(const NodePtr& node, int n, const VermaVector& target) {
  VermaVector out(module_.ring());
  for (const auto& [p, c] : target.terms()) out.add_scaled(apply(node, n, p), c);
  return out;
}

VermaVector ModeEvaluator::apply(const NodePtr& node, int n, const Partition& target) {
  if (target.degree() + node->degree - n - 1 < 0) return VermaVector(module_.ring());
  std::vector<int> parts(target.parts().begin(), target.parts().end());
  auto key = std::make_tuple(node->id, n, std::move(parts));
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  VermaVector result = compute(node, n, target);
  std::lock_guard lock(mutex_);
  memo_.try_emplace(std::move(key), result);
  return result;
}

// (x_{-1}y)_n = sum_{i<0} x_i y_{n-1-i} + sum_{i>=0} y_{n-1-i} x_i
// (D^(j) x)_n = (-1)^j binom(n, j) x_{n-j}
VermaVector ModeEvaluator::compute(const NodePtr& node, int n, const Partition& target) {
  const Ring& ring = module_.ring();
  const int dt = target.degree();
  switch (node->kind) {
    case StateNode::Kind::Vacuum:
      return n == -1 ? VermaVector::monomial(target, ring.one()) : VermaVector(ring);
    case StateNode::Kind::Omega:
      return module_.apply_mode(n - 1, target);
    case StateNode::Kind::Deriv: {
      const int j = node->order;
      Rational coeff = binomial(n, j);
      if (j % 2 == 1) coeff = -coeff;
      VermaVector out(ring);
      if (coeff == 0) return out;
      out.add_scaled(apply(node->left, n - j, target), ring.from_rational(coeff));
      return out;
    }
    case StateNode::Kind::Product: {
      const NodePtr& x = node->left;
      const NodePtr& y = node->right;
      VermaVector out(ring);
      for (int i = n - dt - y->degree; i <= -1; ++i) {
        VermaVector inner = apply(y, n - 1 - i, target);
        if (!inner.is_zero()) out += apply_node(x, i, inner);
      }
      for (int i = 0; i <= dt + x->degree - 1; ++i) {
        VermaVector inner = apply(x, i, target);
        if (!inner.is_zero()) out += apply_node(y, n - 1 - i, inner);
      }
      return out;
    }
  }
  return VermaVector(ring);
}

VermaVector mode_apply(const StateWord& state, int n, const VermaVector& target,
                       const VermaModule& module) {
  ModeEvaluator eval(module);
  return eval.apply(state, n, target);
}

AnnihilationReport verify_annihilation(const StateWord& state, const VermaModule& module,
                                       int max_mode, int max_target_degree) {
  AnnihilationReport report;
  if (state.is_zero()) return report;
  ModeEvaluator eval(module);
  const int k = state.degree();
  for (int r = 0; r <= max_target_degree; ++r) {
    for (const auto& t : partitions(r)) {
      const VermaVector tv = VermaVector::monomial(t, module.ring().one());
      const int n_min = r + k - 1 - max_target_degree;
      const int n_max = std::min(max_mode, r + k - 1);
      for (int n = n_min; n <= n_max; ++n) {
        const int e = r + k - n - 1;
        VermaVector w = eval.apply(state, n, tv);
        ++report.checks;
        if (w.is_zero()) continue;
        const Matrix& g = module.gram_matrix(e);
        const auto basis = partitions(e);
        auto coords = w.coordinates(basis);
        bool in_radical = true;
        for (std::size_t i = 0; i < basis.size() && in_radical; ++i) {
          Scalar acc = module.ring().zero();
          for (std::size_t j = 0; j < basis.size(); ++j) {
            if (!coords[j].is_zero()) acc += g(i, j) * coords[j];
          }
          in_radical = acc.is_zero();
        }
        if (!in_radical) report.violations.push_back({n, t, e});
      }
    }
  }
  return report;
}

}  // namespace modvir
