#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidrack/hurwitz.hpp"
#include "braidrack/nichols.hpp"
#include "braidrack/quotient.hpp"
#include "braidrack/rack.hpp"

namespace braidrack {

// {"size": d, "table": [[...], ...]} with 1-based entries.
std::string rack_to_json(const Rack& r);
Rack rack_from_json(std::string_view text);

// {"arity": n, "tuples": [[...]], "sigma1": [...], ...}; tuples 1-based, edges are tuple indices.
std::string orbit_to_json(const HurwitzOrbit& o);
HurwitzOrbit orbit_from_json(std::string_view text);

// Letters a, b, c, ... are elements 1, 2, 3, ...; "a^2b(ab)^3" expands powers and groups.
Tuple expand_word(std::string_view text);
std::string word_text(const Tuple& w);

// Cocycle file contents before the field is fixed.
struct CocycleSource {
  std::string rack;   // preset name or path of a rack file
  std::string field;  // field descriptor, e.g. "QQ"
  std::vector<std::vector<std::string>> values;
};
CocycleSource cocycle_source_from_json(std::string_view text);
template <class F>
Cocycle<F> cocycle_from_source(const CocycleSource& src, const Rack& r, const F& f);
template <class F>
std::string cocycle_to_json(const Cocycle<F>& c, const std::string& rack_name);

// Relation as text terms: (word, coefficient) with the file's degree.
struct RelationSpec {
  int degree = 0;
  std::vector<std::pair<std::string, std::string>> terms;
};
std::vector<RelationSpec> relations_from_json(std::string_view text);
std::string relations_to_json(const std::vector<RelationSpec>& rels);
template <class F>
std::vector<GradedVector<F>> build_relations(const std::vector<RelationSpec>& rels, const F& f, int d);

// Defining relations of the two presented examples: "d3char2" and "t-new".
std::vector<RelationSpec> relation_preset(const std::string& name);

struct IntegralSpec {
  std::string word;   // integral, as expandable word text
  std::string chain;  // derivation letters, rightmost applied first
  std::string value;  // expected scalar, empty when only nonvanishing is claimed
};
IntegralSpec integral_preset(const std::string& name);

std::string read_file(const std::string& path);

}  // namespace braidrack
