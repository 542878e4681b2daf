#include "gcface/operator_expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcface {

struct OperatorExpr::Node {
  Kind kind = Kind::scalar;
  mpq_class value = 1;   // scalar
  std::size_t var = 0;   // derivative
  std::vector<OperatorExpr> children;
};

OperatorExpr OperatorExpr::scalar(const mpq_class& c) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::scalar;
  node->value = c;
  return OperatorExpr(std::move(node));
}

OperatorExpr OperatorExpr::d(std::size_t var) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::derivative;
  node->var = var;
  return OperatorExpr(std::move(node));
}

OperatorExpr OperatorExpr::times_t() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::times_t;
  return OperatorExpr(std::move(node));
}

OperatorExpr OperatorExpr::sum(const std::vector<OperatorExpr>& terms) {
  if (terms.empty()) return scalar(0);
  if (terms.size() == 1) return terms.front();
  auto node = std::make_shared<Node>();
  node->kind = Kind::sum;
  node->children = terms;
  return OperatorExpr(std::move(node));
}

OperatorExpr OperatorExpr::product(const std::vector<OperatorExpr>& factors) {
  if (factors.empty()) return identity();
  if (factors.size() == 1) return factors.front();
  auto node = std::make_shared<Node>();
  node->kind = Kind::product;
  node->children = factors;
  return OperatorExpr(std::move(node));
}

OperatorExpr operator+(const OperatorExpr& lhs, const OperatorExpr& rhs) { return OperatorExpr::sum({lhs, rhs}); }

OperatorExpr operator-(const OperatorExpr& lhs, const OperatorExpr& rhs) {
  return OperatorExpr::sum({lhs, OperatorExpr::product({OperatorExpr::scalar(-1), rhs})});
}

OperatorExpr operator*(const OperatorExpr& lhs, const OperatorExpr& rhs) { return OperatorExpr::product({lhs, rhs}); }

OperatorExpr::Kind OperatorExpr::kind() const noexcept { return node_->kind; }

int OperatorExpr::order() const {
  switch (node_->kind) {
  case Kind::scalar:
  case Kind::times_t:
    return 0;
  case Kind::derivative:
    return 1;
  case Kind::sum: {
    int best = 0;
    for (const auto& c : node_->children) best = std::max(best, c.order());
    return best;
  }
  case Kind::product: {
    int total = 0;
    for (const auto& c : node_->children) total += c.order();
    return total;
  }
  }
  return 0;
}

TruncatedSeries OperatorExpr::apply(const TruncatedSeries& series) const {
  const int ord = order();
  if (ord > series.validity_degree()) {
    throw std::domain_error("operator of order " + std::to_string(ord) + " exceeds series validity degree " +
                            std::to_string(series.validity_degree()));
  }
  return apply_unchecked(series);
}

TruncatedSeries OperatorExpr::apply_unchecked(const TruncatedSeries& series) const {
  switch (node_->kind) {
  case Kind::scalar:
    return series.scaled(node_->value);
  case Kind::times_t:
    return series.times_t();
  case Kind::derivative:
    return series.derivative(node_->var);
  case Kind::sum: {
    TruncatedSeries acc = node_->children.front().apply_unchecked(series);
    for (std::size_t i = 1; i < node_->children.size(); ++i) acc = acc + node_->children[i].apply_unchecked(series);
    return acc;
  }
  case Kind::product: {
    TruncatedSeries acc = series;
    for (std::size_t i = node_->children.size(); i-- > 0;) acc = node_->children[i].apply_unchecked(acc);
    return acc;
  }
  }
  return series;
}

namespace {

void add_into(OperatorNormalForm& acc, const std::pair<Exponent, int>& key, const mpq_class& c) {
  if (c == 0) return;
  auto it = acc.find(key);
  if (it == acc.end()) {
    acc.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == 0) acc.erase(it);
}

} // namespace

OperatorNormalForm OperatorExpr::expand(std::size_t num_vars) const {
  OperatorNormalForm out;
  switch (node_->kind) {
  case Kind::scalar:
    add_into(out, {Exponent(num_vars, 0), 0}, node_->value);
    break;
  case Kind::times_t:
    add_into(out, {Exponent(num_vars, 0), 1}, 1);
    break;
  case Kind::derivative: {
    if (node_->var >= num_vars) throw std::out_of_range("derivative variable out of range");
    Exponent e(num_vars, 0);
    e[node_->var] = 1;
    add_into(out, {e, 0}, 1);
    break;
  }
  case Kind::sum:
    for (const auto& c : node_->children) {
      for (const auto& [key, value] : c.expand(num_vars)) add_into(out, key, value);
    }
    break;
  case Kind::product: {
    add_into(out, {Exponent(num_vars, 0), 0}, 1);
    for (const auto& factor : node_->children) {
      OperatorNormalForm next;
      const OperatorNormalForm rhs = factor.expand(num_vars);
      for (const auto& [lk, lv] : out) {
        for (const auto& [rk, rv] : rhs) {
          Exponent e = lk.first;
          for (std::size_t i = 0; i < num_vars; ++i) e[i] += rk.first[i];
          add_into(next, {e, lk.second + rk.second}, lv * rv);
        }
      }
      out = std::move(next);
    }
    break;
  }
  }
  return out;
}

std::string OperatorExpr::to_string() const {
  switch (node_->kind) {
  case Kind::scalar:
    return node_->value.get_str();
  case Kind::times_t:
    return "t";
  case Kind::derivative:
    return "d" + std::to_string(node_->var);
  case Kind::sum:
  case Kind::product: {
    const char* sep = node_->kind == Kind::sum ? " + " : " * ";
    std::string out = "(";
    for (std::size_t i = 0; i < node_->children.size(); ++i) {
      if (i) out += sep;
      out += node_->children[i].to_string();
    }
    return out + ")";
  }
  }
  return "?";
}

OperatorExpr mixed_x_derivative(std::size_t s) {
  std::vector<OperatorExpr> factors;
  for (std::size_t i = 1; i <= s; ++i) factors.push_back(OperatorExpr::d(x_var(i)));
  return OperatorExpr::product(factors);
}

OperatorExpr terminal_product(std::size_t s) {
  std::vector<OperatorExpr> factors;
  for (std::size_t i = 1; i < s; ++i) {
    factors.push_back(OperatorExpr::sum({OperatorExpr::d(x_var(i)), OperatorExpr::d(x_var(i + 1)),
                                         OperatorExpr::times_t() * OperatorExpr::d(y_var(i))}));
  }
  return OperatorExpr::product(factors);
}

OperatorExpr main_operator(std::size_t s) { return mixed_x_derivative(s) - terminal_product(s); }

OperatorExpr word_operator(const AssignmentWord& w) {
  std::vector<OperatorExpr> factors;
  for (std::size_t i = 1; i <= w.length(); ++i) {
    const int alpha = w.alpha(i);
    const int beta = w.beta(i);
    if (alpha == 0) factors.push_back(OperatorExpr::d(x_var(i)));
    if (beta == 0) factors.push_back(OperatorExpr::d(x_var(i + 1)));
    if (alpha * beta == 1) factors.push_back(OperatorExpr::times_t() * OperatorExpr::d(y_var(i)));
  }
  return OperatorExpr::product(factors);
}

OperatorExpr word_operator_sum(std::size_t s) {
  if (s == 0) throw std::invalid_argument("s must be positive");
  std::vector<OperatorExpr> terms;
  for (const AssignmentWord& w : AssignmentWord::all(s - 1)) terms.push_back(word_operator(w));
  return OperatorExpr::sum(terms);
}

OperatorExpr gkt_operator(std::size_t s) {
  std::vector<OperatorExpr> mixed;
  std::vector<OperatorExpr> factors;
  for (std::size_t i = 1; i <= s; ++i) mixed.push_back(OperatorExpr::d(i - 1));
  for (std::size_t i = 1; i < s; ++i) factors.push_back(OperatorExpr::d(i - 1) + OperatorExpr::d(i));
  return OperatorExpr::product(mixed) - OperatorExpr::product(factors);
}

} // namespace gcface
