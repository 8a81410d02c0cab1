#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "latticemed/coord.hpp"
#include "latticemed/lattice.hpp"
#include "latticemed/multilinear.hpp"
#include "latticemed/posets.hpp"

namespace latmed {

using Json = nlohmann::json;

/// {"elements": [names], "meet": n x n index matrix, "join": ...,
///  "bottom": index|null, "top": index|null}
Json lattice_to_json(const FiniteLattice& lat);
FiniteLattice lattice_from_json(const Json& j);

/// {"size": p, "covers": [[i, j], ...]}
Json poset_to_json(const FinitePoset& poset);
FinitePoset poset_from_json(const Json& j);

/// {"posets": [...], "lattices": [...]} for all posets with 1..max_poset
/// points and their downset lattices.
Json corpus_to_json(int max_poset);

/// {"dim": m, "coords": [...], "exact": bool}; exact tuples carry "p/q"
/// strings (integers stay plain numbers), inexact ones carry doubles.
Json ratvec_to_json(const RatVec& v);
Json realvec_to_json(const RealVec& v);
RatVec ratvec_from_json(const Json& j);
RealVec realvec_from_json(const Json& j);

/// A named, ordered collection of coordinate tuples; the `eval` CLI binds by
/// name, `orderize` consumes them in order.
struct VectorFile {
  std::vector<std::string> names;
  bool exact = true;
  std::vector<RatVec> rat;    // populated when exact
  std::vector<RealVec> real;  // populated otherwise
};
VectorFile vectors_from_json(const Json& j);

/// {"order": n, "dim": m, "codim": p, "entries": [{"index": [...],
///  "value": [...]}]}; omitted entries are zero.
Json tensor_to_json(const MultilinearMap& T);
MultilinearMap tensor_from_json(const Json& j);

/// Canonical serialization: sorted keys, two-space indent, LF line endings,
/// trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace latmed
