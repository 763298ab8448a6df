#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "prodrep/algebra.hpp"
#include "prodrep/filters.hpp"
#include "prodrep/reps.hpp"

// JSON forms of every exchanged object. Keys and layouts:
//   matrix           {"rows": r, "cols": c, "data": [[re, im], ...]} row major
//   index set        {"points": [{"label": s, "dim": n}, ...]}
//   algebra element  {"blocks": {label: matrix, ...}}
//   filter           {"universe": [labels], "kernel": [labels]}
//   partition        [[labels], [labels], ...]
//   representation   {"index_set": ..., "carrier_dim": m,
//                     "images": {"label:i:j": matrix, ...}} with 1-based i, j
//   decomposition    {"support": [labels], "multiplicities": {label: m},
//                     "intertwiner": matrix, "residual": r, "cond": c}
// Readers throw SchemaError for malformed documents; value-level violations
// (dimension zero, non-finite entries, ...) surface as DomainError from the
// constructors.

namespace prodrep::io {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const algebra::ComplexMatrix& m);
algebra::ComplexMatrix matrix_from_json(const Json& j);

Json index_set_to_json(const algebra::IndexSet& is);
algebra::IndexSet index_set_from_json(const Json& j);

Json element_to_json(const algebra::AlgebraElement& e);
algebra::AlgebraElement element_from_json(const Json& j,
                                          const algebra::IndexSet& is);

Json subset_to_json(const filters::Subset& s, const filters::Universe& u);
filters::Subset subset_from_json(const Json& j, const filters::Universe& u);

Json filter_to_json(const filters::Filter& f);
filters::Filter filter_from_json(const Json& j);

Json partition_to_json(const filters::Partition& p);
filters::Partition partition_from_json(const Json& j,
                                       const filters::Universe& u);

Json representation_to_json(const reps::Representation& r);
reps::Representation representation_from_json(const Json& j);

Json decomposition_to_json(const reps::DecompositionResult& d,
                           const algebra::IndexSet& is);
Json equivalence_to_json(const reps::EquivalenceCertificate& c);
Json spectrum_to_json(const std::vector<algebra::Complex>& ev);

// Basis maps for representation synthesis: {label: matrix, ...}.
std::map<std::string, algebra::ComplexMatrix> bases_from_json(const Json& j);

Json load_json(const std::string& path);
void write_json(const Json& j, const std::optional<std::string>& path);

}  // namespace prodrep::io
