// Developer tool producing random JSON fixtures. Everything is a pure
// function of --seed and the size flags, so fixtures are reproducible and
// the main CLI can stay free of randomness. With --truth the hidden
// structure of the fixture (support, multiplicities, kernel point) goes to
// a sidecar file for harnesses to compare against.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prodrep/errors.hpp"
#include "prodrep/fixtures.hpp"
#include "prodrep/json_io.hpp"
#include "prodrep/reps.hpp"
#include "prodrep/rng.hpp"
#include "prodrep/tolerance.hpp"

namespace {

using namespace prodrep;
using algebra::IndexSet;
using io::Json;

struct Options {
  std::uint64_t seed = 0;
  std::string kind = "decomposable";
  std::size_t points = 3;
  std::size_t max_dim = 3;
  std::size_t max_support = 3;
  std::size_t max_mult = 3;
  double cond = 50.0;
  std::string index_set_path;  // for element fixtures
  std::optional<std::string> out;
  std::optional<std::string> truth;
};

Json truth_for(const fixtures::RandomDecomposable& fx, const IndexSet& is) {
  Json support = Json::array();
  Json mults = Json::object();
  for (std::size_t t = 0; t < fx.support.size(); ++t) {
    const std::string& label = is.universe().label(fx.support[t]);
    support.push_back(label);
    mults[label] = fx.mults[t];
  }
  return Json{{"support", std::move(support)},
              {"multiplicities", std::move(mults)}};
}

IndexSet index_set_for_elements(const Options& opt, Rng& rng, bool abelian) {
  if (!opt.index_set_path.empty()) {
    return io::index_set_from_json(io::load_json(opt.index_set_path));
  }
  return fixtures::random_index_set(rng, opt.points,
                                    abelian ? 1 : opt.max_dim);
}

int run(const Options& opt) {
  Rng rng(opt.seed);
  Json payload;
  Json truth;

  if (opt.kind == "index-set") {
    payload = io::index_set_to_json(
        fixtures::random_index_set(rng, opt.points, opt.max_dim));
  } else if (opt.kind == "decomposable" || opt.kind == "abelian") {
    IndexSet is = fixtures::random_index_set(
        rng, opt.points, opt.kind == "abelian" ? 1 : opt.max_dim);
    auto fx = fixtures::random_decomposable(rng, is, opt.max_support,
                                            opt.max_mult, opt.cond);
    payload = io::representation_to_json(fx.rep);
    truth = truth_for(fx, is);
  } else if (opt.kind == "irreducible") {
    IndexSet is = fixtures::random_index_set(rng, opt.points, opt.max_dim);
    const std::size_t x = rng.below(is.points());
    reps::Representation plain = reps::point_evaluation(is, x);
    reps::Representation rep = fixtures::conjugated(
        plain, fixtures::random_invertible(rng, plain.carrier_dim(), opt.cond),
        kDefaultTol);
    payload = io::representation_to_json(rep);
    truth = Json{{"kernel", Json::array({is.universe().label(x)})}};
  } else if (opt.kind == "element") {
    IndexSet is = index_set_for_elements(opt, rng, false);
    payload = io::element_to_json(fixtures::random_element(rng, is));
  } else if (opt.kind == "nonneg") {
    IndexSet is = index_set_for_elements(opt, rng, true);
    payload = io::element_to_json(fixtures::random_nonneg_element(rng, is));
  } else {
    throw DomainError(errc::invalid_input,
                      "unknown fixture kind '" + opt.kind + "'");
  }

  io::write_json(payload, opt.out);
  if (opt.truth.has_value()) {
    if (truth.is_null()) {
      throw DomainError(errc::invalid_input,
                        "fixture kind '" + opt.kind + "' has no truth data");
    }
    io::write_json(truth, opt.truth);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seeded random fixtures for the representation toolkit"};
  Options opt;
  app.add_option("--seed", opt.seed, "Seed fixing the whole fixture")
      ->required();
  app.add_option("--kind", opt.kind,
                 "decomposable | irreducible | abelian | element | nonneg | "
                 "index-set")
      ->capture_default_str();
  app.add_option("--points", opt.points, "Number of index set points")
      ->capture_default_str();
  app.add_option("--max-dim", opt.max_dim, "Largest factor dimension")
      ->capture_default_str();
  app.add_option("--max-support", opt.max_support,
                 "Largest number of supported points")
      ->capture_default_str();
  app.add_option("--max-mult", opt.max_mult, "Largest multiplicity")
      ->capture_default_str();
  app.add_option("--cond", opt.cond,
                 "Condition cap for the hidden conjugation")
      ->capture_default_str();
  app.add_option("--for-index-set", opt.index_set_path,
                 "Element fixtures: read the index set from this file");
  app.add_option("--out", opt.out, "Write the fixture here, not stdout");
  app.add_option("--truth", opt.truth,
                 "Also write the hidden structure to this sidecar file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run(opt);
  } catch (const SchemaError& e) {
    std::cerr << Json{{"error", e.code()}, {"detail", e.what()}}.dump()
              << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << Json{{"error", e.code()}, {"detail", e.what()}}.dump()
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "internal"}, {"detail", e.what()}}.dump()
              << "\n";
    return 1;
  }
}
