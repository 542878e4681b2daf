#include "gcface/truncated_series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gcface/composition.hpp"
#include "gcface/f_polynomial.hpp"

namespace gcface {

TPolynomial::TPolynomial(std::vector<mpq_class> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void TPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

TPolynomial& TPolynomial::operator+=(const TPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

TPolynomial& TPolynomial::operator-=(const TPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

TPolynomial& TPolynomial::operator*=(const mpq_class& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

TPolynomial TPolynomial::times_t() const {
  if (is_zero()) return *this;
  std::vector<mpq_class> out{mpq_class(0)};
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return TPolynomial(std::move(out));
}

std::string TPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].get_str() + ")";
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------

int total_degree(const Exponent& e) noexcept { return std::accumulate(e.begin(), e.end(), 0); }

std::vector<Exponent> exponents_up_to(std::size_t num_vars, int max_degree) {
  std::vector<Exponent> out;
  if (max_degree < 0) return out;
  Exponent current(num_vars, 0);
  // depth-first over positions, remaining degree budget shrinking
  auto recurse = [&](auto& self, std::size_t pos, int budget) -> void {
    if (pos == num_vars) {
      out.push_back(current);
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      current[pos] = v;
      self(self, pos + 1, budget - v);
    }
    current[pos] = 0;
  };
  recurse(recurse, 0, max_degree);
  return out;
}

mpz_class factorial_product(const Exponent& e) {
  mpz_class out = 1;
  for (int v : e) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(v));
    out *= f;
  }
  return out;
}

TruncatedSeries::TruncatedSeries(std::size_t num_vars, int validity_degree)
    : num_vars_(num_vars), validity_(validity_degree) {
  if (validity_degree < 0) throw std::invalid_argument("validity degree must be non-negative");
}

void TruncatedSeries::accumulate(const Exponent& e, const TPolynomial& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TruncatedSeries::add_term(const Exponent& e, const TPolynomial& c) {
  if (e.size() != num_vars_) throw std::invalid_argument("exponent arity does not match series");
  if (std::any_of(e.begin(), e.end(), [](int v) { return v < 0; })) {
    throw std::invalid_argument("negative exponent");
  }
  if (total_degree(e) > validity_) throw std::invalid_argument("term degree exceeds validity degree");
  accumulate(e, c);
}

TPolynomial TruncatedSeries::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? TPolynomial() : it->second;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
  if (other.num_vars_ != num_vars_) throw std::invalid_argument("series have different variable counts");
  TruncatedSeries out(num_vars_, std::min(validity_, other.validity_));
  for (const auto* src : {this, &other}) {
    for (const auto& [e, c] : src->terms_) {
      if (total_degree(e) <= out.validity_) out.accumulate(e, c);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const { return *this + other.scaled(-1); }

TruncatedSeries TruncatedSeries::scaled(const mpq_class& c) const {
  TruncatedSeries out(num_vars_, validity_);
  if (c == 0) return out;
  for (const auto& [e, p] : terms_) {
    TPolynomial q = p;
    q *= c;
    out.terms_.emplace(e, std::move(q));
  }
  return out;
}

TruncatedSeries TruncatedSeries::times_t() const {
  TruncatedSeries out(num_vars_, validity_);
  for (const auto& [e, p] : terms_) out.terms_.emplace(e, p.times_t());
  return out;
}

TruncatedSeries TruncatedSeries::derivative(std::size_t var) const {
  if (var >= num_vars_) throw std::out_of_range("derivative variable out of range");
  if (validity_ == 0) throw std::domain_error("cannot differentiate a series of validity degree 0");
  TruncatedSeries out(num_vars_, validity_ - 1);
  for (const auto& [e, p] : terms_) {
    if (e[var] == 0) continue;
    Exponent lowered = e;
    --lowered[var];
    TPolynomial q = p;
    q *= mpq_class(e[var]);
    out.accumulate(lowered, q);
  }
  return out;
}

TruncatedSeries TruncatedSeries::restrict_to(const std::vector<std::size_t>& kept) const {
  std::vector<char> keep(num_vars_, 0);
  for (std::size_t v : kept) {
    if (v >= num_vars_) throw std::out_of_range("restriction variable out of range");
    keep[v] = 1;
  }
  TruncatedSeries out(kept.size(), validity_);
  for (const auto& [e, p] : terms_) {
    bool vanishes = false;
    for (std::size_t v = 0; v < num_vars_; ++v) {
      if (!keep[v] && e[v] != 0) vanishes = true;
    }
    if (vanishes) continue;
    Exponent image;
    image.reserve(kept.size());
    for (std::size_t v : kept) image.push_back(e[v]);
    out.accumulate(image, p);
  }
  return out;
}

TruncatedSeries TruncatedSeries::at_t_zero() const {
  TruncatedSeries out(num_vars_, validity_);
  for (const auto& [e, p] : terms_) out.accumulate(e, TPolynomial::constant(p.at_zero()));
  return out;
}

TruncatedSeries truncate_psi(int s, int max_degree) {
  if (s < 0) throw std::invalid_argument("number of variables must be non-negative");
  TruncatedSeries out(static_cast<std::size_t>(s), max_degree);
  for (const Exponent& e : exponents_up_to(static_cast<std::size_t>(s), max_degree)) {
    const FPolynomial f = f_polynomial(Composition(e));
    std::vector<mpq_class> coeffs;
    const mpz_class denom = factorial_product(e);
    for (const mpz_class& c : f.coefficients()) coeffs.emplace_back(c, denom);
    out.add_term(e, TPolynomial(std::move(coeffs)));
  }
  return out;
}

} // namespace gcface
