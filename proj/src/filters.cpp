#include "prodrep/filters.hpp"

#include <algorithm>
#include <set>

#include "prodrep/errors.hpp"

namespace prodrep::filters {

SetFamily::SetFamily(Universe universe, std::vector<Subset> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  std::set<Subset> seen;
  for (const Subset& m : members_) {
    if (m.universe_size() != universe_.size()) {
      throw DomainError(errc::invalid_input,
                        "family member is not a subset of the universe");
    }
    if (!seen.insert(m).second) {
      throw DomainError(errc::invalid_input, "family members are not distinct");
    }
  }
}

std::string to_string(FamilyClass c) {
  switch (c) {
    case FamilyClass::not_filter: return "not_filter";
    case FamilyClass::filter: return "filter";
    case FamilyClass::ultrafilter: return "ultrafilter";
  }
  return "not_filter";
}

namespace {

bool contains(const std::set<Subset>& pool, const Subset& s) {
  return pool.count(s) != 0;
}

}  // namespace

FamilyReport validate_family(const SetFamily& family) {
  const Universe& u = family.universe();
  const std::size_t n = u.size();

  FamilyReport report;
  auto fail = [&report](std::string axiom, std::vector<Subset> offenders) {
    report.classification = FamilyClass::not_filter;
    report.witness = FamilyWitness{std::move(axiom), std::move(offenders)};
    return report;
  };

  if (family.members().empty()) return fail("empty family", {});

  const std::set<Subset> pool(family.members().begin(), family.members().end());

  const Subset empty = Subset::empty_set(n);
  if (contains(pool, empty)) return fail("contains empty set", {empty});

  const Subset full = Subset::full(n);
  if (!contains(pool, full)) return fail("missing universe", {full});

  for (const Subset& a : pool) {
    for (const Subset& b : pool) {
      if (!contains(pool, a.intersect(b))) {
        return fail("not intersection closed", {a, b});
      }
    }
  }

  // One-point enlargements generate all supersets, so checking them is an
  // exact upward-closure test in O(|members| * n) member lookups.
  for (const Subset& a : pool) {
    for (std::size_t p = 0; p < n; ++p) {
      if (a.contains(p)) continue;
      const Subset bigger = a.unite(Subset::single(n, p));
      if (!contains(pool, bigger)) {
        return fail("not upward closed", {a, bigger});
      }
    }
  }

  Subset kernel = full;
  for (const Subset& a : pool) kernel = kernel.intersect(a);

  report.classification =
      kernel.count() == 1 ? FamilyClass::ultrafilter : FamilyClass::filter;
  report.kernel = kernel;
  return report;
}

Filter::Filter(Universe universe, Subset kernel)
    : universe_(std::move(universe)), kernel_(std::move(kernel)) {
  if (kernel_.universe_size() != universe_.size()) {
    throw DomainError(errc::invalid_input,
                      "kernel is not a subset of the universe");
  }
  if (kernel_.empty()) {
    throw DomainError(errc::invalid_input, "filter kernel is empty");
  }
}

bool Filter::member(const Subset& candidate) const {
  if (candidate.universe_size() != universe_.size()) {
    throw DomainError(errc::invalid_input,
                      "candidate is not a subset of the filter's universe");
  }
  return kernel_.is_subset_of(candidate);
}

Filter canonicalize(const SetFamily& family) {
  FamilyReport report = validate_family(family);
  if (report.classification == FamilyClass::not_filter) {
    std::string detail = "family is not a filter: " + report.witness->axiom;
    throw DomainError(errc::not_a_filter, detail);
  }
  return Filter(family.universe(), *report.kernel);
}

std::vector<Subset> enumerate_members(const Filter& filter) {
  const std::size_t n = filter.universe().size();
  if (n > 20) {
    throw DomainError(errc::invalid_input,
                      "member enumeration limited to universes of size 20");
  }
  std::vector<Subset> out;
  const std::uint64_t kernel = filter.kernel().bits();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if ((bits & kernel) == kernel) out.emplace_back(bits, n);
  }
  return out;
}

Partition::Partition(Universe universe, std::vector<Subset> blocks)
    : universe_(std::move(universe)), blocks_(std::move(blocks)) {
  if (blocks_.empty()) {
    throw DomainError(errc::invalid_input, "partition has no blocks");
  }
  Subset seen = Subset::empty_set(universe_.size());
  for (const Subset& b : blocks_) {
    if (b.universe_size() != universe_.size()) {
      throw DomainError(errc::invalid_input,
                        "partition block is not a subset of the universe");
    }
    if (b.empty()) {
      throw DomainError(errc::invalid_input, "partition block is empty");
    }
    if (!seen.intersect(b).empty()) {
      throw DomainError(errc::invalid_input, "partition blocks overlap");
    }
    seen = seen.unite(b);
  }
  if (seen != Subset::full(universe_.size())) {
    throw DomainError(errc::invalid_input,
                      "partition blocks do not cover the universe");
  }
}

std::size_t Partition::block_of(std::size_t point_index) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].contains(point_index)) return i;
  }
  throw DomainError(errc::invalid_input, "point index out of range");
}

std::size_t partition_select(const Filter& filter,
                             const Partition& partition) {
  if (!filter.is_ultrafilter()) {
    throw DomainError(errc::precondition,
                      "partition_select requires an ultrafilter");
  }
  if (!(partition.universe() == filter.universe())) {
    throw DomainError(errc::invalid_input,
                      "partition universe differs from the filter's");
  }
  const std::size_t point = filter.kernel().indices().front();
  return partition.block_of(point);
}

Filter quotient_filter(const Filter& filter, const Partition& partition) {
  if (!(partition.universe() == filter.universe())) {
    throw DomainError(errc::invalid_input,
                      "partition universe differs from the filter's");
  }
  const std::size_t k = partition.blocks().size();
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) labels[i] = "b" + std::to_string(i);

  // I is a member iff the union of its blocks covers the kernel, which holds
  // exactly when I contains every block that meets the kernel.
  Subset kernel = Subset::empty_set(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (!partition.blocks()[i].intersect(filter.kernel()).empty()) {
      kernel = kernel.unite(Subset::single(k, i));
    }
  }
  return Filter(Universe(labels), kernel);
}

}  // namespace prodrep::filters
