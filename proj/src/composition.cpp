#include "gcface/composition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace gcface {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

void extend(std::vector<Composition>& out, std::vector<int>& prefix, int remaining) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = 1; part <= remaining; ++part) {
    prefix.push_back(part);
    extend(out, prefix, remaining - part);
    prefix.pop_back();
  }
}

} // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("composition parts must be non-negative");
  }
}

Composition Composition::parse(std::string_view text) {
  text = trim(text);
  std::vector<int> parts;
  if (text.empty()) return Composition(parts);
  while (true) {
    const auto comma = text.find(',');
    const std::string_view field = trim(text.substr(0, comma));
    int value = 0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc() || ptr != end) {
      throw std::invalid_argument("malformed composition: '" + std::string(field) + "'");
    }
    if (value < 0) throw std::invalid_argument("composition parts must be non-negative");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Composition(std::move(parts));
}

int Composition::total() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::is_reduced() const noexcept {
  return std::none_of(parts_.begin(), parts_.end(), [](int p) { return p == 0; });
}

Composition Composition::reduced() const {
  std::vector<int> out;
  std::copy_if(parts_.begin(), parts_.end(), std::back_inserter(out), [](int p) { return p > 0; });
  return Composition(std::move(out));
}

Composition Composition::reversed() const {
  return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

std::vector<int> Composition::partial_sums() const {
  std::vector<int> sums{0};
  for (int p : parts_) sums.push_back(sums.back() + p);
  return sums;
}

long long Composition::top_dimension() const noexcept {
  long long n = total();
  long long squares = 0;
  for (int p : parts_) squares += static_cast<long long>(p) * p;
  return (n * n - squares) / 2;
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  extend(out, prefix, n);
  return out;
}

} // namespace gcface
