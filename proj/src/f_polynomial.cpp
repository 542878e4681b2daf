#include "gcface/f_polynomial.hpp"

#include <map>
#include <mutex>

#include "gcface/assignment.hpp"
#include "gcface/word_transforms.hpp"

namespace gcface {

FPolynomial::FPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void FPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class FPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

mpz_class FPolynomial::leading_coefficient() const { return is_zero() ? mpz_class(0) : coeffs_.back(); }

mpz_class FPolynomial::evaluate(const mpz_class& t) const {
  mpz_class acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  return acc;
}

FPolynomial& FPolynomial::operator+=(const FPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

FPolynomial FPolynomial::shifted(int power) const {
  if (is_zero()) return *this;
  std::vector<mpz_class> out(static_cast<std::size_t>(power), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return FPolynomial(std::move(out));
}

std::string FPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int p = degree(); p >= 0; --p) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
    } else if (c < 0) {
      out += "-";
    }
    if (p == 0 || mag != 1) out += mag.get_str();
    if (p >= 1) out += "t";
    if (p >= 2) out += "^" + std::to_string(p);
  }
  return out;
}

namespace {

FPolynomial compute(const Composition& k);

FPolynomial memoized(const Composition& reduced) {
  static std::mutex mutex;
  static std::map<Composition, FPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(reduced);
    if (it != cache.end()) return it->second;
  }
  FPolynomial value = compute(reduced);
  std::lock_guard lock(mutex);
  return cache.emplace(reduced, std::move(value)).first->second;
}

FPolynomial compute(const Composition& k) {
  if (k.empty()) return FPolynomial::one();
  FPolynomial total;
  for (const AssignmentWord& w : AssignmentWord::all(static_cast<std::size_t>(k.length() - 1))) {
    total += memoized(child_composition(k, w).reduced()).shifted(w.weight());
  }
  return total;
}

} // namespace

FPolynomial f_polynomial(const Composition& k) { return memoized(k.reduced()); }

std::vector<mpz_class> f_vector(const Composition& k) { return f_polynomial(k).coefficients(); }

} // namespace gcface
