#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prodrep/universe.hpp"

namespace prodrep::filters {

// A candidate collection of subsets, prior to any filter classification.
class SetFamily {
 public:
  SetFamily(Universe universe, std::vector<Subset> members);

  const Universe& universe() const noexcept { return universe_; }
  const std::vector<Subset>& members() const noexcept { return members_; }

 private:
  Universe universe_;
  std::vector<Subset> members_;
};

enum class FamilyClass { not_filter, filter, ultrafilter };

std::string to_string(FamilyClass c);

struct FamilyWitness {
  std::string axiom;             // e.g. "contains empty set"
  std::vector<Subset> offenders; // the set(s) violating the axiom
};

struct FamilyReport {
  FamilyClass classification = FamilyClass::not_filter;
  std::optional<FamilyWitness> witness;  // present iff not_filter
  std::optional<Subset> kernel;          // present iff filter/ultrafilter
};

// Checks the filter axioms: nonempty, excludes the empty set, contains the
// universe, closed under pairwise intersection, upward closed. Classifies as
// ultrafilter when the canonical kernel is a singleton.
FamilyReport validate_family(const SetFamily& family);

// Canonical (kernel) form of a filter over a finite universe. Every such
// filter is principal, so F = { U : kernel is a subset of U } is lossless.
class Filter {
 public:
  Filter(Universe universe, Subset kernel);

  const Universe& universe() const noexcept { return universe_; }
  const Subset& kernel() const noexcept { return kernel_; }

  bool member(const Subset& candidate) const;
  bool is_ultrafilter() const noexcept { return kernel_.count() == 1; }

  bool operator==(const Filter& o) const noexcept {
    return universe_ == o.universe_ && kernel_ == o.kernel_;
  }

 private:
  Universe universe_;
  Subset kernel_;
};

// Throws DomainError(not_a_filter) with the witness when validation fails.
Filter canonicalize(const SetFamily& family);

// All members of a filter, listed in ascending bit order. Guarded to small
// universes; meant for tests and exhaustive checks.
std::vector<Subset> enumerate_members(const Filter& filter);

// Disjoint nonempty blocks covering the universe.
class Partition {
 public:
  Partition(Universe universe, std::vector<Subset> blocks);

  const Universe& universe() const noexcept { return universe_; }
  const std::vector<Subset>& blocks() const noexcept { return blocks_; }
  std::size_t block_of(std::size_t point_index) const;

 private:
  Universe universe_;
  std::vector<Subset> blocks_;
};

// Index of the unique block belonging to an ultrafilter. A general filter
// may select no block at all, so non-ultrafilter input is rejected.
std::size_t partition_select(const Filter& filter, const Partition& partition);

// The filter over block labels "b0", "b1", ... whose members are exactly the
// index sets I with union of the blocks of I a member of the input filter.
Filter quotient_filter(const Filter& filter, const Partition& partition);

}  // namespace prodrep::filters
