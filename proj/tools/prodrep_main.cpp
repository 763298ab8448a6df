// Command line front end. One subcommand per invocation; inputs and outputs
// are the JSON documents described in prodrep/json_io.hpp. Exit codes:
// 0 success, 1 domain error, 2 parse/schema/IO error. Errors are printed to
// stderr as {"error": code, "detail": message}.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prodrep/algebra.hpp"
#include "prodrep/errors.hpp"
#include "prodrep/filters.hpp"
#include "prodrep/fixtures.hpp"
#include "prodrep/json_io.hpp"
#include "prodrep/kernels.hpp"
#include "prodrep/reps.hpp"
#include "prodrep/rng.hpp"

namespace {

using namespace prodrep;
using algebra::AlgebraElement;
using algebra::Complex;
using algebra::ComplexMatrix;
using algebra::IndexSet;
using io::Json;

struct Options {
  double tol = 1e-8;
  std::optional<std::string> out;

  // one string per positional slot, filled by the chosen subcommand
  std::string input;
  std::string second;
  std::string basis;
  std::string rep_for_spectrum;
};

void require_positive_tol(double tol) {
  if (!(tol > 0.0)) {
    throw DomainError(errc::invalid_input, "tolerance must be positive");
  }
}

reps::Representation load_valid_representation(const std::string& path,
                                               double tol) {
  reps::Representation r = io::representation_from_json(io::load_json(path));
  reps::validate_representation(r, tol);
  return r;
}

int cmd_validate(const Options& opt) {
  reps::Representation r =
      io::representation_from_json(io::load_json(opt.input));
  auto report = reps::validate_representation(r, opt.tol);
  io::write_json(Json{{"valid", true},
                      {"worst_violation", report.worst_violation},
                      {"worst_relation", report.worst_relation}},
                 opt.out);
  return 0;
}

int cmd_decompose(const Options& opt) {
  reps::Representation r = load_valid_representation(opt.input, opt.tol);
  auto d = reps::decompose(r, opt.tol);
  io::write_json(io::decomposition_to_json(d, r.index_set()), opt.out);
  return 0;
}

int cmd_extract_filter(const Options& opt) {
  reps::Representation r = load_valid_representation(opt.input, opt.tol);
  io::write_json(io::filter_to_json(reps::extract_filter(r, opt.tol)),
                 opt.out);
  return 0;
}

int cmd_build_rep(const Options& opt) {
  filters::Filter f = io::filter_from_json(io::load_json(opt.input));
  IndexSet is = io::index_set_from_json(io::load_json(opt.second));
  std::map<std::string, ComplexMatrix> bases;
  const std::map<std::string, ComplexMatrix>* bases_ptr = nullptr;
  if (!opt.basis.empty()) {
    bases = io::bases_from_json(io::load_json(opt.basis));
    bases_ptr = &bases;
  }
  reps::Representation r = reps::build_from_filter(f, is, bases_ptr);
  io::write_json(io::representation_to_json(r), opt.out);
  return 0;
}

int cmd_check_equiv(const Options& opt) {
  reps::Representation r1 = load_valid_representation(opt.input, opt.tol);
  reps::Representation r2 = load_valid_representation(opt.second, opt.tol);
  auto cert = reps::equivalent(r1, r2, opt.tol);
  io::write_json(io::equivalence_to_json(cert), opt.out);
  return 0;
}

int cmd_spectrum(const Options& opt) {
  ComplexMatrix m(1, 1);
  if (!opt.rep_for_spectrum.empty()) {
    reps::Representation r =
        load_valid_representation(opt.rep_for_spectrum, opt.tol);
    AlgebraElement b =
        io::element_from_json(io::load_json(opt.input), r.index_set());
    m = reps::evaluate(r, b);
  } else {
    m = io::matrix_from_json(io::load_json(opt.input));
  }
  io::write_json(io::spectrum_to_json(algebra::spectrum(m)), opt.out);
  return 0;
}

int cmd_enumerate(const Options& opt) {
  IndexSet is = io::index_set_from_json(io::load_json(opt.input));
  Json out = Json::array();
  for (const reps::Representation& r : reps::enumerate_irreducibles(is)) {
    out.push_back(io::representation_to_json(r));
  }
  io::write_json(out, opt.out);
  return 0;
}

// Built-in regressions: the two-idempotent involution pair (valid, commutant
// dimension two, signed spectrum) and a build/extract/decompose round trip.
int cmd_selfcheck(const Options& opt) {
  Json checks = Json::array();
  bool all_pass = true;
  auto record = [&](const char* name, bool pass) {
    checks.push_back(Json{{"name", name}, {"pass", pass}});
    all_pass = all_pass && pass;
  };

  {
    reps::Representation r = fixtures::involution_pair_rep(Complex(2.0));
    auto report = reps::validate_representation(r, opt.tol);
    record("involution pair validates", report.worst_violation <= 1e-12);
    record("involution pair commutant dimension is 2",
           reps::commutant_dimension(r, opt.tol) == 2);

    bool idempotents_ok = true;
    for (std::size_t x = 0; x < 2; ++x) {
      auto idem =
          algebra::check_idempotent_spectrum(reps::projector_at(r, x), 1e-12);
      idempotents_ok = idempotents_ok && idem.ok && idem.nontrivial;
    }
    record("involution projectors are nontrivial idempotents", idempotents_ok);

    IndexSet is = fixtures::involution_index_set();
    AlgebraElement signer = algebra::add(
        algebra::indicator(is, filters::Subset::single(2, 0)),
        algebra::scale(-1.0,
                       algebra::indicator(is, filters::Subset::single(2, 1))));
    auto ev = algebra::spectrum(reps::evaluate(r, signer));
    record("involution difference has spectrum {-1, 1}",
           ev.size() == 2 && std::abs(ev[0] + Complex(1.0)) <= 1e-10 &&
               std::abs(ev[1] - Complex(1.0)) <= 1e-10);
  }

  {
    IndexSet is(filters::Universe({"x0", "x1", "x2"}), {1, 2, 3});
    bool round_trip = true;
    for (std::size_t x = 0; x < is.points(); ++x) {
      filters::Filter f(is.universe(),
                        filters::Subset::single(is.points(), x));
      filters::Filter back = reps::extract_filter(
          reps::build_from_filter(f, is), opt.tol);
      round_trip = round_trip && back == f;
    }
    record("ultrafilter build/extract round trip", round_trip);

    Rng rng(0x5e1fc8ec);
    auto fx = fixtures::random_decomposable(rng, is, 3, 2, 20.0);
    auto d = reps::decompose(fx.rep, opt.tol);
    record("random fixture decomposes to its hidden blocks",
           d.support == fx.support && d.multiplicities == fx.mults &&
               d.residual <= 1e-8);
  }

  io::write_json(Json{{"pass", all_pass}, {"checks", std::move(checks)}},
                 opt.out);
  if (!all_pass) {
    throw DomainError(errc::internal_consistency, "selfcheck failed");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite products of matrix algebras: validate, decompose and "
               "synthesize representations"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--tol", opt.tol,
                 "Relative tolerance for all numeric comparisons")
      ->capture_default_str();
  app.add_option("--out", opt.out, "Write the JSON result here, not stdout");

  CLI::App* validate =
      app.add_subcommand("validate", "Check the generator relations of a "
                                     "representation file");
  validate->add_option("representation", opt.input)->required();

  CLI::App* decompose = app.add_subcommand(
      "decompose", "Split a representation into factor blocks");
  decompose->add_option("representation", opt.input)->required();

  CLI::App* extract = app.add_subcommand(
      "extract-filter", "Ultrafilter of an irreducible representation");
  extract->add_option("representation", opt.input)->required();

  CLI::App* build = app.add_subcommand(
      "build-rep", "Representation induced by an ultrafilter");
  build->add_option("filter", opt.input)->required();
  build->add_option("index_set", opt.second)->required();
  build->add_option("--basis", opt.basis,
                    "Basis map file conjugating the kernel point images");

  CLI::App* equiv = app.add_subcommand(
      "check-equiv", "Decide unitary-free equivalence of two representations");
  equiv->add_option("first", opt.input)->required();
  equiv->add_option("second", opt.second)->required();

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "Sorted eigenvalues of a matrix file");
  spectrum->add_option("input", opt.input)->required();
  spectrum->add_option(
      "--rep", opt.rep_for_spectrum,
      "Treat the input as an algebra element and evaluate it here first");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "All irreducible classes of an index set, one per point");
  enumerate->add_option("index_set", opt.input)->required();

  CLI::App* selfcheck =
      app.add_subcommand("selfcheck", "Run the built-in regressions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    require_positive_tol(opt.tol);
    if (validate->parsed()) return cmd_validate(opt);
    if (decompose->parsed()) return cmd_decompose(opt);
    if (extract->parsed()) return cmd_extract_filter(opt);
    if (build->parsed()) return cmd_build_rep(opt);
    if (equiv->parsed()) return cmd_check_equiv(opt);
    if (spectrum->parsed()) return cmd_spectrum(opt);
    if (enumerate->parsed()) return cmd_enumerate(opt);
    if (selfcheck->parsed()) return cmd_selfcheck(opt);
    return 2;  // unreachable with require_subcommand(1)
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
