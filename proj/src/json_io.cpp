#include "prodrep/json_io.hpp"

#include <fstream>
#include <iostream>

#include "prodrep/errors.hpp"

namespace prodrep::io {

namespace {

using algebra::Complex;
using algebra::ComplexMatrix;
using algebra::IndexSet;

// Translates nlohmann's exceptions (wrong type, missing key) into the
// library's schema error.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(e.what());
  }
}

void require_object_keys(const Json& j, std::initializer_list<const char*> keys,
                         const char* what) {
  if (!j.is_object()) {
    throw SchemaError(std::string(what) + " must be a JSON object");
  }
  for (const char* k : keys) {
    if (!j.contains(k)) {
      throw SchemaError(std::string(what) + " is missing key '" + k + "'");
    }
  }
  if (j.size() != keys.size()) {
    throw SchemaError(std::string(what) + " has unexpected extra keys");
  }
}

std::size_t read_count(const Json& j, const char* what) {
  return guarded([&]() -> std::size_t {
    if (!j.is_number_integer() && !j.is_number_unsigned()) {
      throw SchemaError(std::string(what) + " must be an integer");
    }
    const auto v = j.get<std::int64_t>();
    if (v < 0) {
      throw SchemaError(std::string(what) + " must be nonnegative");
    }
    return static_cast<std::size_t>(v);
  });
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw SchemaError("complex entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(const Complex& v) {
  return Json::array({v.real(), v.imag()});
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (const Complex& v : m.data()) data.push_back(complex_to_json(v));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  require_object_keys(j, {"rows", "cols", "data"}, "matrix");
  const std::size_t rows = read_count(j.at("rows"), "rows");
  const std::size_t cols = read_count(j.at("cols"), "cols");
  const Json& data = j.at("data");
  if (!data.is_array() || data.size() != rows * cols) {
    throw SchemaError("matrix data must hold rows*cols entries");
  }
  ComplexMatrix m(rows, cols);  // throws DomainError when a count is zero
  for (std::size_t t = 0; t < rows * cols; ++t) {
    m.data()[t] = complex_from_json(data[t]);
  }
  m.require_finite();
  return m;
}

Json index_set_to_json(const IndexSet& is) {
  Json points = Json::array();
  for (std::size_t i = 0; i < is.points(); ++i) {
    points.push_back(
        Json{{"label", is.universe().label(i)}, {"dim", is.dim(i)}});
  }
  return Json{{"points", std::move(points)}};
}

IndexSet index_set_from_json(const Json& j) {
  require_object_keys(j, {"points"}, "index set");
  const Json& points = j.at("points");
  if (!points.is_array()) {
    throw SchemaError("index set points must be an array");
  }
  std::vector<std::string> labels;
  std::vector<std::size_t> dims;
  for (const Json& p : points) {
    require_object_keys(p, {"label", "dim"}, "index set point");
    labels.push_back(guarded([&] { return p.at("label").get<std::string>(); }));
    dims.push_back(read_count(p.at("dim"), "dim"));
  }
  return IndexSet(filters::Universe(std::move(labels)), std::move(dims));
}

Json element_to_json(const algebra::AlgebraElement& e) {
  Json blocks = Json::object();
  const auto& u = e.index_set().universe();
  for (std::size_t i = 0; i < e.index_set().points(); ++i) {
    blocks[u.label(i)] = matrix_to_json(e.block(i));
  }
  return Json{{"blocks", std::move(blocks)}};
}

algebra::AlgebraElement element_from_json(const Json& j, const IndexSet& is) {
  require_object_keys(j, {"blocks"}, "algebra element");
  const Json& blocks = j.at("blocks");
  if (!blocks.is_object()) {
    throw SchemaError("element blocks must be an object");
  }
  if (blocks.size() != is.points()) {
    throw SchemaError("element must carry one block per point");
  }
  algebra::AlgebraElement e(is);
  for (std::size_t i = 0; i < is.points(); ++i) {
    const std::string& label = is.universe().label(i);
    if (!blocks.contains(label)) {
      throw SchemaError("element is missing the block for '" + label + "'");
    }
    e.set_block(i, matrix_from_json(blocks.at(label)));
  }
  return e;
}

Json subset_to_json(const filters::Subset& s, const filters::Universe& u) {
  Json out = Json::array();
  for (const std::string& l : s.to_labels(u)) out.push_back(l);
  return out;
}

filters::Subset subset_from_json(const Json& j, const filters::Universe& u) {
  if (!j.is_array()) {
    throw SchemaError("subset must be an array of labels");
  }
  std::vector<std::string> labels;
  for (const Json& l : j) {
    labels.push_back(guarded([&] { return l.get<std::string>(); }));
  }
  return filters::Subset::of_labels(u, labels);
}

Json filter_to_json(const filters::Filter& f) {
  Json universe = Json::array();
  for (const std::string& l : f.universe().labels()) universe.push_back(l);
  return Json{{"universe", std::move(universe)},
              {"kernel", subset_to_json(f.kernel(), f.universe())}};
}

filters::Filter filter_from_json(const Json& j) {
  require_object_keys(j, {"universe", "kernel"}, "filter");
  const Json& uj = j.at("universe");
  if (!uj.is_array()) {
    throw SchemaError("filter universe must be an array of labels");
  }
  std::vector<std::string> labels;
  for (const Json& l : uj) {
    labels.push_back(guarded([&] { return l.get<std::string>(); }));
  }
  filters::Universe u(std::move(labels));
  return filters::Filter(u, subset_from_json(j.at("kernel"), u));
}

Json partition_to_json(const filters::Partition& p) {
  Json out = Json::array();
  for (const filters::Subset& b : p.blocks()) {
    out.push_back(subset_to_json(b, p.universe()));
  }
  return out;
}

filters::Partition partition_from_json(const Json& j,
                                       const filters::Universe& u) {
  if (!j.is_array()) {
    throw SchemaError("partition must be an array of subsets");
  }
  std::vector<filters::Subset> blocks;
  for (const Json& b : j) blocks.push_back(subset_from_json(b, u));
  return filters::Partition(u, std::move(blocks));
}

Json representation_to_json(const reps::Representation& r) {
  Json images = Json::object();
  const IndexSet& is = r.index_set();
  for (std::size_t x = 0; x < is.points(); ++x) {
    const std::string& label = is.universe().label(x);
    const std::size_t n = is.dim(x);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        images[label + ":" + std::to_string(i) + ":" + std::to_string(j)] =
            matrix_to_json(r.image(x, i, j));
      }
    }
  }
  return Json{{"index_set", index_set_to_json(is)},
              {"carrier_dim", r.carrier_dim()},
              {"images", std::move(images)}};
}

reps::Representation representation_from_json(const Json& j) {
  require_object_keys(j, {"index_set", "carrier_dim", "images"},
                      "representation");
  IndexSet is = index_set_from_json(j.at("index_set"));
  const std::size_t m = read_count(j.at("carrier_dim"), "carrier_dim");
  const Json& images = j.at("images");
  if (!images.is_object()) {
    throw SchemaError("representation images must be an object");
  }

  std::vector<std::vector<ComplexMatrix>> per_point;
  std::size_t expected = 0;
  for (std::size_t x = 0; x < is.points(); ++x) {
    const std::string& label = is.universe().label(x);
    const std::size_t n = is.dim(x);
    std::vector<ComplexMatrix> pt;
    pt.reserve(n * n);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j_ = 1; j_ <= n; ++j_) {
        const std::string key =
            label + ":" + std::to_string(i) + ":" + std::to_string(j_);
        if (!images.contains(key)) {
          throw SchemaError("representation is missing image '" + key + "'");
        }
        pt.push_back(matrix_from_json(images.at(key)));
      }
    }
    expected += n * n;
    per_point.push_back(std::move(pt));
  }
  if (images.size() != expected) {
    throw SchemaError("representation has images for unknown matrix units");
  }
  return reps::Representation(std::move(is), m, std::move(per_point));
}

Json decomposition_to_json(const reps::DecompositionResult& d,
                           const IndexSet& is) {
  Json support = Json::array();
  Json mults = Json::object();
  for (std::size_t t = 0; t < d.support.size(); ++t) {
    const std::string& label = is.universe().label(d.support[t]);
    support.push_back(label);
    mults[label] = d.multiplicities[t];
  }
  return Json{{"support", std::move(support)},
              {"multiplicities", std::move(mults)},
              {"intertwiner", matrix_to_json(d.intertwiner)},
              {"residual", d.residual},
              {"cond", d.condition_number}};
}

Json equivalence_to_json(const reps::EquivalenceCertificate& c) {
  Json out{{"equivalent", c.equivalent}};
  if (c.intertwiner.has_value()) {
    out["intertwiner"] = matrix_to_json(*c.intertwiner);
    out["defect"] = c.defect;
  }
  return out;
}

Json spectrum_to_json(const std::vector<Complex>& ev) {
  Json vals = Json::array();
  for (const Complex& v : ev) vals.push_back(complex_to_json(v));
  return Json{{"eigenvalues", std::move(vals)}};
}

std::map<std::string, ComplexMatrix> bases_from_json(const Json& j) {
  if (!j.is_object()) {
    throw SchemaError("basis map must be an object of label: matrix");
  }
  std::map<std::string, ComplexMatrix> out;
  for (const auto& [key, value] : j.items()) {
    out.emplace(key, matrix_from_json(value));
  }
  return out;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw SchemaError("cannot read '" + path + "'");
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("parse error in '") + path + "': " +
                      e.what());
  }
}

void write_json(const Json& j, const std::optional<std::string>& path) {
  const std::string text = j.dump(2) + "\n";
  if (!path.has_value()) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path);
  if (!out) {
    throw SchemaError("cannot write '" + *path + "'");
  }
  out << text;
  if (!out) {
    throw SchemaError("failed while writing '" + *path + "'");
  }
}

}  // namespace prodrep::io
