#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "prodrep/errors.hpp"
#include "prodrep/filters.hpp"

using namespace prodrep;
using namespace prodrep::filters;

namespace {

Universe make_universe(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return Universe(labels);
}

SetFamily family_from_masks(const Universe& u,
                            const std::set<std::uint64_t>& masks) {
  std::vector<Subset> members;
  for (std::uint64_t m : masks) members.emplace_back(m, u.size());
  return SetFamily(u, members);
}

// All supersets of `core` over a universe of size n.
std::set<std::uint64_t> supersets(std::size_t n, std::uint64_t core) {
  std::set<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (1ull << n); ++s) {
    if ((s & core) == core) out.insert(s);
  }
  return out;
}

template <typename F>
std::string thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "(nothing thrown)";
}

}  // namespace

TEST_CASE("validate_family classifies hand-built families") {
  Universe xyz({"x", "y", "z"});

  SUBCASE("supersets of a point form an ultrafilter") {
    auto fam = family_from_masks(xyz, supersets(3, 0b010));
    auto rep = validate_family(fam);
    CHECK(rep.classification == FamilyClass::ultrafilter);
    REQUIRE(rep.kernel.has_value());
    CHECK(rep.kernel->to_labels(xyz) == std::vector<std::string>{"y"});
  }

  SUBCASE("the trivial family {X} is a filter, not ultra") {
    Universe xy({"x", "y"});
    auto fam = family_from_masks(xy, {0b11});
    auto rep = validate_family(fam);
    CHECK(rep.classification == FamilyClass::filter);
    CHECK(rep.kernel->bits() == 0b11);
  }

  SUBCASE("empty set in the family") {
    Universe xy({"x", "y"});
    auto rep = validate_family(family_from_masks(xy, {0b00, 0b11}));
    CHECK(rep.classification == FamilyClass::not_filter);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->axiom == "contains empty set");
  }

  SUBCASE("no members at all") {
    auto rep = validate_family(family_from_masks(xyz, {}));
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->axiom == "empty family");
  }

  SUBCASE("universe missing") {
    Universe xy({"x", "y"});
    auto rep = validate_family(family_from_masks(xy, {0b01}));
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->axiom == "missing universe");
  }

  SUBCASE("intersection escapes the family") {
    auto rep = validate_family(family_from_masks(xyz, {0b111, 0b011, 0b110}));
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->axiom == "not intersection closed");
    CHECK(rep.witness->offenders.size() == 2);
  }

  SUBCASE("superset missing") {
    auto rep = validate_family(family_from_masks(xyz, {0b111, 0b001}));
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->axiom == "not upward closed");
    REQUIRE(rep.witness->offenders.size() == 2);
    CHECK(rep.witness->offenders[0].bits() == 0b001);
    CHECK(!rep.witness->offenders[1].is_subset_of(rep.witness->offenders[0]));
  }
}

TEST_CASE("canonicalize produces the kernel form") {
  Universe abc({"a", "b", "c"});

  SUBCASE("kernel of a two-point principal filter") {
    auto f = canonicalize(family_from_masks(abc, supersets(3, 0b011)));
    CHECK(f.kernel().to_labels(abc) == std::vector<std::string>{"a", "b"});
    CHECK(!f.is_ultrafilter());
    CHECK(f.member(Subset(0b111, 3)));
    CHECK(f.member(Subset(0b011, 3)));
    CHECK(!f.member(Subset(0b001, 3)));
  }

  SUBCASE("singleton kernel gives an ultrafilter") {
    auto f = canonicalize(family_from_masks(abc, supersets(3, 0b001)));
    CHECK(f.is_ultrafilter());
    CHECK(f.kernel().bits() == 0b001);
  }

  SUBCASE("{X, X minus a point} is already a complete principal filter") {
    // Supersets of {b,c} inside {a,b,c} are just {b,c} and the universe, so
    // this two-member family satisfies every axiom.
    auto f = canonicalize(family_from_masks(abc, {0b111, 0b110}));
    CHECK(f.kernel().bits() == 0b110);
    CHECK(!f.is_ultrafilter());
  }

  SUBCASE("rejects non-filters with the violated axiom") {
    auto code = thrown_code(
        [&] { canonicalize(family_from_masks(abc, {0b111, 0b001})); });
    CHECK(code == errc::not_a_filter);
    try {
      canonicalize(family_from_masks(abc, {0b111, 0b001}));
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("not upward closed") !=
            std::string::npos);
    }
  }
}

TEST_CASE("classification agrees with the brute-force oracle") {
  // Every family over universes of size 1..3; the subsets of the power set
  // are indexed by bitmasks over the 2^n possible member sets.
  for (std::size_t n = 1; n <= 3; ++n) {
    Universe u = make_universe(n);
    const std::uint64_t nsubsets = 1ull << n;
    for (std::uint64_t fam_mask = 0; fam_mask < (1ull << nsubsets);
         ++fam_mask) {
      std::set<std::uint64_t> masks;
      for (std::uint64_t s = 0; s < nsubsets; ++s) {
        if ((fam_mask >> s) & 1u) masks.insert(s);
      }
      auto expected = oracles::classify_family(n, masks);
      auto rep = validate_family(family_from_masks(u, masks));
      const char* got = rep.classification == FamilyClass::not_filter
                            ? "not_filter"
                            : (rep.classification == FamilyClass::filter
                                   ? "filter"
                                   : "ultrafilter");
      const char* want = expected == oracles::FamilyKind::not_filter
                             ? "not_filter"
                             : (expected == oracles::FamilyKind::filter
                                    ? "filter"
                                    : "ultrafilter");
      INFO("n=", n, " family mask=", fam_mask);
      CHECK(std::string(got) == want);
      if (expected != oracles::FamilyKind::not_filter) {
        CHECK(rep.kernel->bits() == oracles::family_kernel(n, masks));
      }
    }
  }
}

TEST_CASE("sampled families over four points agree with the oracle") {
  Universe u = make_universe(4);
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&state] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  int filters_seen = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    // Random families are almost never filters, so half the trials start
    // from a principal filter and mutate it slightly.
    std::uint64_t fam_mask;
    if (trial % 2 == 0) {
      fam_mask = next() & 0xffff;
    } else {
      std::uint64_t core = next() % 16;
      fam_mask = 0;
      for (std::uint64_t s = 0; s < 16; ++s) {
        if ((s & core) == core) fam_mask |= 1ull << s;
      }
      fam_mask ^= 1ull << (next() % 16);  // flip one membership
    }
    std::set<std::uint64_t> masks;
    for (std::uint64_t s = 0; s < 16; ++s) {
      if ((fam_mask >> s) & 1u) masks.insert(s);
    }
    auto expected = oracles::classify_family(4, masks);
    auto rep = validate_family(family_from_masks(u, masks));
    bool is_filter = rep.classification != FamilyClass::not_filter;
    CHECK(is_filter == (expected != oracles::FamilyKind::not_filter));
    bool is_ultra = rep.classification == FamilyClass::ultrafilter;
    CHECK(is_ultra == (expected == oracles::FamilyKind::ultrafilter));
    if (is_filter) ++filters_seen;
  }
  CHECK(filters_seen > 0);
}

TEST_CASE("re-expanding the kernel reproduces the family") {
  for (std::size_t n = 1; n <= 4; ++n) {
    Universe u = make_universe(n);
    for (std::uint64_t core = 1; core < (1ull << n); ++core) {
      auto masks = supersets(n, core);
      Filter f = canonicalize(family_from_masks(u, masks));
      auto members = enumerate_members(f);
      REQUIRE(members.size() == masks.size());
      std::size_t i = 0;
      for (std::uint64_t m : masks) CHECK(members[i++].bits() == m);
    }
  }
}

TEST_CASE("ultrafilter membership is complement complete") {
  for (std::size_t n = 1; n <= 5; ++n) {
    Universe u = make_universe(n);
    for (std::size_t p = 0; p < n; ++p) {
      Filter f(u, Subset::single(n, p));
      for (std::uint64_t s = 0; s < (1ull << n); ++s) {
        Subset sub(s, n);
        CHECK(f.member(sub) != f.member(sub.complement()));
      }
    }
  }
  // A filter with a two-point kernel misses both some set and its complement.
  Universe u = make_universe(3);
  Filter f(u, Subset(0b011, 3));
  CHECK(!f.member(Subset(0b001, 3)));
  CHECK(!f.member(Subset(0b110, 3)));
}

TEST_CASE("partition_select finds the kernel's block") {
  Universe xyz({"x", "y", "z"});
  Filter ultra(xyz, Subset::single(xyz, "y"));

  SUBCASE("coarse partition") {
    Partition p(xyz, {Subset(0b001, 3), Subset(0b110, 3)});
    CHECK(partition_select(ultra, p) == 1);
  }

  SUBCASE("singleton partition") {
    Partition p(xyz, {Subset(0b001, 3), Subset(0b010, 3), Subset(0b100, 3)});
    CHECK(partition_select(ultra, p) == 1);
  }

  SUBCASE("general filters are rejected even when a block would work") {
    Filter wide(xyz, Subset(0b011, 3));
    Partition separating(xyz,
                         {Subset(0b001, 3), Subset(0b010, 3), Subset(0b100, 3)});
    Partition covering(xyz, {Subset(0b011, 3), Subset(0b100, 3)});
    CHECK(thrown_code([&] { partition_select(wide, separating); }) ==
          errc::precondition);
    CHECK(thrown_code([&] { partition_select(wide, covering); }) ==
          errc::precondition);
  }
}

TEST_CASE("quotient_filter relabels blocks and keeps the membership law") {
  Universe xyz({"x", "y", "z"});

  SUBCASE("ultrafilter input: kernel moves to the selected block") {
    Filter ultra(xyz, Subset::single(xyz, "y"));
    Partition p(xyz, {Subset(0b001, 3), Subset(0b110, 3)});
    Filter q = quotient_filter(ultra, p);
    CHECK(q.universe().labels() == std::vector<std::string>{"b0", "b1"});
    CHECK(q.is_ultrafilter());
    CHECK(q.kernel().to_labels(q.universe()) ==
          std::vector<std::string>{"b1"});
    CHECK(q.kernel().indices().front() == partition_select(ultra, p));
  }

  SUBCASE("two-point kernel spreads over two blocks") {
    Universe abc({"a", "b", "c"});
    Filter f(abc, Subset(0b011, 3));
    Partition p(abc, {Subset(0b001, 3), Subset(0b010, 3), Subset(0b100, 3)});
    Filter q = quotient_filter(f, p);
    CHECK(q.universe().size() == 3);
    CHECK(q.kernel().bits() == 0b011);
    CHECK(!q.is_ultrafilter());
  }

  SUBCASE("trivial partition gives the one-block ultrafilter") {
    Filter f(xyz, Subset(0b101, 3));
    Partition p(xyz, {Subset(0b111, 3)});
    Filter q = quotient_filter(f, p);
    CHECK(q.universe().size() == 1);
    CHECK(q.is_ultrafilter());
  }
}

TEST_CASE("quotient membership matches unions of blocks exhaustively") {
  for (std::size_t n = 1; n <= 5; ++n) {
    Universe u = make_universe(n);
    auto partitions = oracles::all_partitions(n);
    for (std::uint64_t core = 1; core < (1ull << n); ++core) {
      Filter f(u, Subset(core, n));
      for (const auto& blocks : partitions) {
        std::vector<Subset> bs;
        for (std::uint64_t b : blocks) bs.emplace_back(b, n);
        Partition p(u, bs);
        Filter q = quotient_filter(f, p);
        const std::size_t k = blocks.size();
        for (std::uint64_t idx = 0; idx < (1ull << k); ++idx) {
          std::uint64_t unioned = 0;
          for (std::size_t i = 0; i < k; ++i) {
            if ((idx >> i) & 1u) unioned |= blocks[i];
          }
          CHECK(q.member(Subset(idx, k)) == f.member(Subset(unioned, n)));
        }
      }
    }
  }
}

TEST_CASE("exactly one block of any partition lies in an ultrafilter") {
  for (std::size_t n = 1; n <= 6; ++n) {
    Universe u = make_universe(n);
    auto partitions = oracles::all_partitions(n);
    for (std::size_t pt = 0; pt < n; ++pt) {
      Filter f(u, Subset::single(n, pt));
      for (const auto& blocks : partitions) {
        int inside = 0;
        for (std::uint64_t b : blocks) {
          if (f.member(Subset(b, n))) ++inside;
        }
        CHECK(inside == 1);
      }
    }
  }
}

TEST_CASE("quotient of an ultrafilter selects consistently") {
  Universe u = make_universe(5);
  auto partitions = oracles::all_partitions(5);
  for (std::size_t pt = 0; pt < 5; ++pt) {
    Filter f(u, Subset::single(5, pt));
    for (const auto& blocks : partitions) {
      std::vector<Subset> bs;
      for (std::uint64_t b : blocks) bs.emplace_back(b, 5);
      Partition p(u, bs);
      Filter q = quotient_filter(f, p);
      REQUIRE(q.is_ultrafilter());
      CHECK(q.kernel().indices().front() == partition_select(f, p));
    }
  }
}

TEST_CASE("invalid inputs are rejected with invalid_input") {
  CHECK(thrown_code([] { Universe({}); }) == errc::invalid_input);
  CHECK(thrown_code([] { Universe({"a", ""}); }) == errc::invalid_input);
  CHECK(thrown_code([] { Universe({"a", "a"}); }) == errc::invalid_input);
  CHECK(thrown_code([] { Subset(0b100, 2); }) == errc::invalid_input);

  Universe xy({"x", "y"});
  CHECK(thrown_code([&] {
          SetFamily(xy, {Subset(0b01, 2), Subset(0b01, 2)});
        }) == errc::invalid_input);
  CHECK(thrown_code([&] { SetFamily(xy, {Subset(0b001, 3)}); }) ==
        errc::invalid_input);
  CHECK(thrown_code([&] { Filter(xy, Subset(0, 2)); }) == errc::invalid_input);

  // partitions: overlap, gap, empty block
  CHECK(thrown_code([&] {
          Partition(xy, {Subset(0b01, 2), Subset(0b11, 2)});
        }) == errc::invalid_input);
  CHECK(thrown_code([&] { Partition(xy, {Subset(0b01, 2)}); }) ==
        errc::invalid_input);
  CHECK(thrown_code([&] {
          Partition(xy, {Subset(0b11, 2), Subset(0b00, 2)});
        }) == errc::invalid_input);

  // mixed universes
  Universe abc({"a", "b", "c"});
  Filter f(abc, Subset(0b001, 3));
  Partition p(xy, {Subset(0b11, 2)});
  CHECK(thrown_code([&] { partition_select(Filter(abc, Subset(0b001, 3)), p); }) ==
        errc::invalid_input);
  CHECK(thrown_code([&] { quotient_filter(f, p); }) == errc::invalid_input);
  CHECK(thrown_code([&] { f.member(Subset(0b01, 2)); }) == errc::invalid_input);
}
