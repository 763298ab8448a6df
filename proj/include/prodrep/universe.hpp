#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prodrep/errors.hpp"

namespace prodrep::filters {

// The finite index set. Labels are ordered; that order fixes bit positions
// of every Subset over this universe and all serialized output.
class Universe {
 public:
  static constexpr std::size_t kMaxSize = 64;

  explicit Universe(std::vector<std::string> labels);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  // Position of a label; throws DomainError(invalid_input) if unknown.
  std::size_t index_of(const std::string& label) const;
  bool has_label(const std::string& label) const noexcept;

  bool operator==(const Universe& other) const noexcept {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
};

// Subset of a universe, stored as a bitmask in label order.
class Subset {
 public:
  Subset() : bits_(0), n_(0) {}
  Subset(std::uint64_t bits, std::size_t universe_size);

  static Subset empty_set(const Universe& u) { return Subset(0, u.size()); }
  static Subset empty_set(std::size_t n) { return Subset(0, n); }
  static Subset full(const Universe& u) { return full(u.size()); }
  static Subset full(std::size_t n);
  static Subset single(const Universe& u, const std::string& label);
  static Subset single(std::size_t n, std::size_t i);
  static Subset of_labels(const Universe& u, std::span<const std::string> labels);

  std::uint64_t bits() const noexcept { return bits_; }
  std::size_t universe_size() const noexcept { return n_; }
  std::size_t count() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(std::size_t i) const { return (bits_ >> check_index(i)) & 1u; }

  Subset intersect(const Subset& o) const;
  Subset unite(const Subset& o) const;
  Subset complement() const;
  bool is_subset_of(const Subset& o) const;

  // Positions of the members, ascending.
  std::vector<std::size_t> indices() const;
  std::vector<std::string> to_labels(const Universe& u) const;

  bool operator==(const Subset& o) const noexcept {
    return bits_ == o.bits_ && n_ == o.n_;
  }
  // Orders by bit pattern; used only for canonical listings.
  bool operator<(const Subset& o) const noexcept { return bits_ < o.bits_; }

 private:
  std::size_t check_index(std::size_t i) const;
  void check_same_universe(const Subset& o) const;

  std::uint64_t bits_;
  std::size_t n_;
};

}  // namespace prodrep::filters
