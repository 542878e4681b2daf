#include "gcface/spectrum.hpp"

#include <stdexcept>

namespace gcface {

Spectrum::Spectrum(std::vector<mpq_class> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("spectrum must have at least one entry");
  for (auto& v : values_) v.canonicalize();
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] > values_[i - 1]) throw std::invalid_argument("spectrum must be weakly decreasing");
  }
}

Spectrum Spectrum::parse(std::string_view text) {
  std::vector<mpq_class> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    std::string field(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    while (!field.empty() && field.front() == ' ') field.erase(field.begin());
    while (!field.empty() && field.back() == ' ') field.pop_back();
    mpq_class q;
    if (field.empty() || q.set_str(field, 10) != 0 || q.get_den() == 0) {
      throw std::invalid_argument("malformed spectrum entry: '" + field + "'");
    }
    q.canonicalize();
    values.push_back(q);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Spectrum(std::move(values));
}

Spectrum Spectrum::with_blocks(const Composition& k, int variant) {
  const Composition blocks = k.reduced();
  if (blocks.empty()) throw std::invalid_argument("spectrum needs a nonempty composition");
  std::vector<mpq_class> values;
  const int s = blocks.length();
  for (int b = 0; b < s; ++b) {
    const int rank = s - 1 - b; // 0 for the last block
    mpq_class value;
    if (variant == 0) {
      value = rank;
    } else {
      // strictly increasing in rank, uneven gaps, non-integral
      value = mpq_class(rank * rank * 3 + rank, 2) - mpq_class(7, 3);
    }
    value.canonicalize();
    for (int r = 0; r < blocks.parts()[static_cast<std::size_t>(b)]; ++r) values.push_back(value);
  }
  return Spectrum(std::move(values));
}

Composition Spectrum::composition() const {
  std::vector<int> parts;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i == 0 || values_[i] != values_[i - 1]) {
      parts.push_back(1);
    } else {
      ++parts.back();
    }
  }
  return Composition(std::move(parts));
}

std::string Spectrum::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += values_[i].get_str();
  }
  return out;
}

} // namespace gcface
