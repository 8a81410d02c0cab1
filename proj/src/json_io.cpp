#include "latticemed/json_io.hpp"

#include <stdexcept>

namespace latmed {

namespace {

std::vector<int> matrix_from_json(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) throw std::invalid_argument(std::string(what) + ": bad row count");
  std::vector<int> flat;
  flat.reserve(n * n);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) throw std::invalid_argument(std::string(what) + ": bad row length");
    for (const auto& v : row) flat.push_back(v.get<int>());
  }
  return flat;
}

Json matrix_to_json(const std::vector<int>& flat, std::size_t n) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(flat[i * n + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json lattice_to_json(const FiniteLattice& lat) {
  const std::size_t n = static_cast<std::size_t>(lat.size());
  std::vector<int> meet_flat, join_flat;
  meet_flat.reserve(n * n);
  join_flat.reserve(n * n);
  for (int a = 0; a < lat.size(); ++a) {
    for (int b = 0; b < lat.size(); ++b) {
      meet_flat.push_back(lat.meet(a, b));
      join_flat.push_back(lat.join(a, b));
    }
  }
  Json j;
  j["elements"] = lat.names();
  j["meet"] = matrix_to_json(meet_flat, n);
  j["join"] = matrix_to_json(join_flat, n);
  j["bottom"] = lat.bottom() ? Json(*lat.bottom()) : Json(nullptr);
  j["top"] = lat.top() ? Json(*lat.top()) : Json(nullptr);
  return j;
}

FiniteLattice lattice_from_json(const Json& j) {
  const auto names = j.at("elements").get<std::vector<std::string>>();
  const std::size_t n = names.size();
  auto meet_flat = matrix_from_json(j.at("meet"), n, "lattice meet");
  auto join_flat = matrix_from_json(j.at("join"), n, "lattice join");
  std::optional<int> bottom, top;
  if (!j.at("bottom").is_null()) bottom = j.at("bottom").get<int>();
  if (!j.at("top").is_null()) top = j.at("top").get<int>();
  return FiniteLattice(names, std::move(meet_flat), std::move(join_flat), bottom, top);
}

Json poset_to_json(const FinitePoset& poset) {
  Json j;
  j["size"] = poset.size();
  Json covers = Json::array();
  for (const auto& [a, b] : poset.covers()) covers.push_back(Json::array({a, b}));
  j["covers"] = std::move(covers);
  return j;
}

FinitePoset poset_from_json(const Json& j) {
  const int size = j.at("size").get<int>();
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j.at("covers")) {
    covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  }
  return FinitePoset::from_covers(size, covers);
}

Json corpus_to_json(int max_poset) {
  Json posets = Json::array();
  Json lattices = Json::array();
  for (int p = 1; p <= max_poset; ++p) {
    for (const auto& poset : enumerate_posets(p)) {
      posets.push_back(poset_to_json(poset));
      lattices.push_back(lattice_to_json(downset_lattice(poset).lattice));
    }
  }
  Json j;
  j["posets"] = std::move(posets);
  j["lattices"] = std::move(lattices);
  return j;
}

Json ratvec_to_json(const RatVec& v) {
  Json coords = Json::array();
  for (const auto& x : v.coords()) {
    if (x.is_integer()) {
      coords.push_back(x.num());
    } else {
      coords.push_back(x.str());
    }
  }
  Json j;
  j["dim"] = v.dim();
  j["coords"] = std::move(coords);
  j["exact"] = true;
  return j;
}

Json realvec_to_json(const RealVec& v) {
  Json j;
  j["dim"] = v.dim();
  j["coords"] = v.coords();
  j["exact"] = false;
  return j;
}

RatVec ratvec_from_json(const Json& j) {
  std::vector<Rational> coords;
  for (const auto& c : j.at("coords")) {
    if (c.is_string()) {
      coords.push_back(Rational::parse(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coords.push_back(Rational(c.get<long long>()));
    } else {
      throw std::invalid_argument("exact tuple: coordinates must be integers or \"p/q\" strings");
    }
  }
  if (j.contains("dim") && j.at("dim").get<int>() != static_cast<int>(coords.size())) {
    throw std::invalid_argument("tuple: dim field disagrees with coordinate count");
  }
  return RatVec(std::move(coords));
}

RealVec realvec_from_json(const Json& j) {
  std::vector<double> coords;
  for (const auto& c : j.at("coords")) {
    if (c.is_string()) {
      coords.push_back(Rational::parse(c.get<std::string>()).to_double());
    } else {
      coords.push_back(c.get<double>());
    }
  }
  if (j.contains("dim") && j.at("dim").get<int>() != static_cast<int>(coords.size())) {
    throw std::invalid_argument("tuple: dim field disagrees with coordinate count");
  }
  return RealVec(std::move(coords));
}

VectorFile vectors_from_json(const Json& j) {
  const Json& arr = j.is_array() ? j : j.at("vectors");
  VectorFile out;
  out.exact = true;
  for (const auto& entry : arr) {
    if (entry.contains("exact") && !entry.at("exact").get<bool>()) out.exact = false;
  }
  for (const auto& entry : arr) {
    out.names.push_back(entry.value("name", std::string()));
    if (out.exact) {
      out.rat.push_back(ratvec_from_json(entry));
    } else {
      out.real.push_back(realvec_from_json(entry));
    }
  }
  return out;
}

Json tensor_to_json(const MultilinearMap& T) {
  Json entries = Json::array();
  std::vector<int> idx(static_cast<std::size_t>(T.order()));
  for (std::size_t flat = 0; flat < T.entry_count(); ++flat) {
    const RatVec& e = T.entry_flat(flat);
    bool zero = true;
    for (int c = 0; c < T.codim() && zero; ++c) zero = e[c].is_zero();
    if (zero) continue;
    T.index_of(flat, idx);
    Json entry;
    entry["index"] = idx;
    Json value = Json::array();
    for (int c = 0; c < T.codim(); ++c) {
      if (e[c].is_integer()) {
        value.push_back(e[c].num());
      } else {
        value.push_back(e[c].str());
      }
    }
    entry["value"] = std::move(value);
    entries.push_back(std::move(entry));
  }
  Json j;
  j["order"] = T.order();
  j["dim"] = T.dim();
  j["codim"] = T.codim();
  j["entries"] = std::move(entries);
  return j;
}

MultilinearMap tensor_from_json(const Json& j) {
  MultilinearMap T(j.at("order").get<int>(), j.at("dim").get<int>(), j.at("codim").get<int>());
  for (const auto& entry : j.at("entries")) {
    const auto idx = entry.at("index").get<std::vector<int>>();
    std::vector<Rational> value;
    for (const auto& v : entry.at("value")) {
      if (v.is_string()) {
        value.push_back(Rational::parse(v.get<std::string>()));
      } else {
        value.push_back(Rational(v.get<long long>()));
      }
    }
    T.set_entry(idx, RatVec(std::move(value)));
  }
  return T;
}

std::string canonical_dump(const Json& j) {
  // nlohmann objects iterate in key order already; dump() never emits CR.
  return j.dump(2) + "\n";
}

}  // namespace latmed
