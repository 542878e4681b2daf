#include "gcface/assignment.hpp"

#include <stdexcept>

#include "gcface/word_transforms.hpp"

namespace gcface {

char arrow_letter(Arrow a) noexcept {
  switch (a) {
  case Arrow::right:
    return 'R';
  case Arrow::up:
    return 'U';
  case Arrow::both:
    return 'B';
  }
  return '?';
}

AssignmentWord AssignmentWord::parse(const std::string& letters) {
  std::vector<Arrow> entries;
  for (char c : letters) {
    switch (c) {
    case 'R':
      entries.push_back(Arrow::right);
      break;
    case 'U':
      entries.push_back(Arrow::up);
      break;
    case 'B':
      entries.push_back(Arrow::both);
      break;
    default:
      throw std::invalid_argument(std::string("assignment letter must be R, U or B, got '") + c + "'");
    }
  }
  return AssignmentWord(std::move(entries));
}

std::vector<AssignmentWord> AssignmentWord::all(std::size_t length) {
  std::vector<AssignmentWord> out;
  std::vector<Arrow> current(length, Arrow::right);
  while (true) {
    out.emplace_back(current);
    // odometer with the last position varying fastest
    std::size_t pos = length;
    while (pos > 0) {
      --pos;
      if (current[pos] != Arrow::both) {
        current[pos] = static_cast<Arrow>(static_cast<int>(current[pos]) + 1);
        break;
      }
      current[pos] = Arrow::right;
      if (pos == 0) return out;
    }
    if (length == 0) return out;
  }
}

int AssignmentWord::alpha(std::size_t i) const {
  if (i == entries_.size() + 1) return 1;
  if (i == 0 || i > entries_.size()) throw std::out_of_range("alpha index out of range");
  return entries_[i - 1] == Arrow::up ? 0 : 1;
}

int AssignmentWord::beta(std::size_t i) const {
  if (i == 0) return 1;
  if (i > entries_.size()) throw std::out_of_range("beta index out of range");
  return entries_[i - 1] == Arrow::right ? 0 : 1;
}

int AssignmentWord::weight() const noexcept {
  int w = 0;
  for (Arrow a : entries_) w += a == Arrow::both ? 1 : 0;
  return w;
}

std::vector<int> AssignmentWord::indicator() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (Arrow a : entries_) out.push_back(a == Arrow::both ? 1 : 0);
  return out;
}

std::string AssignmentWord::to_string() const {
  std::string out;
  for (Arrow a : entries_) out += arrow_letter(a);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void require_matching(const IntVector& k, const AssignmentWord& w) {
  if (k.empty() || w.length() + 1 != k.size()) {
    throw std::invalid_argument("assignment word must have length s-1 for a composition of length s");
  }
}

} // namespace

IntVector d_transform(const IntVector& k, const AssignmentWord& w) {
  require_matching(k, w);
  IntVector out(k.size());
  for (std::size_t i = 1; i <= k.size(); ++i) {
    out[i - 1] = k[i - 1] - (1 - w.alpha(i)) - (1 - w.beta(i - 1));
  }
  return out;
}

IntVector r_transform(const IntVector& k, const AssignmentWord& w) {
  require_matching(k, w);
  IntVector out(k.size());
  for (std::size_t i = 1; i <= k.size(); ++i) {
    out[i - 1] = k[i - 1] + 1 - w.alpha(i) - w.beta(i - 1);
  }
  return out;
}

IntVector interleave(const IntVector& x, const IntVector& y) {
  if (x.empty() || y.size() + 1 != x.size()) {
    throw std::invalid_argument("interleave needs |y| = |x| - 1");
  }
  IntVector out;
  out.reserve(x.size() + y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    out.push_back(x[i]);
    out.push_back(y[i]);
  }
  out.push_back(x.back());
  return out;
}

void deinterleave(const IntVector& z, IntVector& x, IntVector& y) {
  if (z.size() % 2 == 0) throw std::invalid_argument("interleaved vectors have odd length");
  x.clear();
  y.clear();
  for (std::size_t i = 0; i < z.size(); ++i) (i % 2 == 0 ? x : y).push_back(z[i]);
}

WordTransforms word_transforms(const IntVector& k, const AssignmentWord& w) {
  WordTransforms out;
  out.d = d_transform(k, w);
  out.r = r_transform(k, w);
  out.indicator = w.indicator();
  out.weight = w.weight();
  return out;
}

IntVector to_int_vector(const Composition& k) { return IntVector(k.parts().begin(), k.parts().end()); }

Composition child_composition(const Composition& k, const AssignmentWord& w) {
  const IntVector r = r_transform(to_int_vector(k), w);
  const std::vector<int> ind = w.indicator();
  const IntVector z = interleave(r, IntVector(ind.begin(), ind.end()));
  std::vector<int> parts;
  parts.reserve(z.size());
  for (long long v : z) {
    if (v < 0) throw std::logic_error("negative part in r_w(k) for a positive composition");
    parts.push_back(static_cast<int>(v));
  }
  return Composition(std::move(parts));
}

} // namespace gcface
