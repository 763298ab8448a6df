#include "prodrep/universe.hpp"

#include <algorithm>
#include <unordered_set>

namespace prodrep::filters {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw DomainError(errc::invalid_input, "universe must contain at least one point");
  }
  if (labels_.size() > kMaxSize) {
    throw DomainError(errc::invalid_input,
                      "universe exceeds the supported maximum of 64 points");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) {
      throw DomainError(errc::invalid_input, "universe labels must be nonempty");
    }
    if (!seen.insert(l).second) {
      throw DomainError(errc::invalid_input, "duplicate universe label '" + l + "'");
    }
  }
}

std::size_t Universe::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw DomainError(errc::invalid_input, "unknown label '" + label + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

bool Universe::has_label(const std::string& label) const noexcept {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

Subset::Subset(std::uint64_t bits, std::size_t universe_size)
    : bits_(bits), n_(universe_size) {
  if (universe_size > Universe::kMaxSize) {
    throw DomainError(errc::invalid_input, "universe size exceeds 64");
  }
  const std::uint64_t mask =
      universe_size == 64 ? ~0ull : ((1ull << universe_size) - 1ull);
  if ((bits_ & ~mask) != 0) {
    throw DomainError(errc::invalid_input, "subset has bits outside its universe");
  }
}

Subset Subset::full(std::size_t n) {
  return Subset(n == 64 ? ~0ull : ((1ull << n) - 1ull), n);
}

Subset Subset::single(const Universe& u, const std::string& label) {
  return Subset(1ull << u.index_of(label), u.size());
}

Subset Subset::single(std::size_t n, std::size_t i) {
  if (i >= n) {
    throw DomainError(errc::invalid_input, "point index outside universe");
  }
  return Subset(1ull << i, n);
}

Subset Subset::of_labels(const Universe& u, std::span<const std::string> labels) {
  std::uint64_t bits = 0;
  for (const auto& l : labels) bits |= 1ull << u.index_of(l);
  return Subset(bits, u.size());
}

Subset Subset::intersect(const Subset& o) const {
  check_same_universe(o);
  return Subset(bits_ & o.bits_, n_);
}

Subset Subset::unite(const Subset& o) const {
  check_same_universe(o);
  return Subset(bits_ | o.bits_, n_);
}

Subset Subset::complement() const {
  const std::uint64_t mask = n_ == 64 ? ~0ull : ((1ull << n_) - 1ull);
  return Subset(~bits_ & mask, n_);
}

bool Subset::is_subset_of(const Subset& o) const {
  check_same_universe(o);
  return (bits_ & ~o.bits_) == 0;
}

std::vector<std::size_t> Subset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i) {
    if ((bits_ >> i) & 1u) out.push_back(i);
  }
  return out;
}

std::vector<std::string> Subset::to_labels(const Universe& u) const {
  if (u.size() != n_) {
    throw DomainError(errc::invalid_input, "subset does not match universe size");
  }
  std::vector<std::string> out;
  for (std::size_t i : indices()) out.push_back(u.label(i));
  return out;
}

std::size_t Subset::check_index(std::size_t i) const {
  if (i >= n_) {
    throw DomainError(errc::invalid_input, "point index outside universe");
  }
  return i;
}

void Subset::check_same_universe(const Subset& o) const {
  if (n_ != o.n_) {
    throw DomainError(errc::invalid_input, "subsets over different universes");
  }
}

}  // namespace prodrep::filters
