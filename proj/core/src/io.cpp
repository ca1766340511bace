#include "braidrack/io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "braidrack/error.hpp"
#include "json.hpp"

namespace braidrack {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(std::string_view text, const char* what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string(what) + ": " + e.what());
  }
}

template <class T>
T get(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string(what) + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string(what) + ": bad \"" + key + "\": " + e.what());
  }
}

}  // namespace

std::string rack_to_json(const Rack& r) {
  Json j;
  j["size"] = r.size();
  j["table"] = r.table();
  return j.dump();
}

Rack rack_from_json(std::string_view text) {
  Json j = parse_json(text, "rack");
  int d = get<int>(j, "size", "rack");
  auto table = get<std::vector<std::vector<int>>>(j, "table", "rack");
  if (static_cast<int>(table.size()) != d) throw Error(ErrorKind::ParseError, "rack: table has wrong size");
  return validate_rack(table);
}

std::string orbit_to_json(const HurwitzOrbit& o) {
  Json j;
  j["arity"] = o.arity();
  Json tuples = Json::array();
  for (const auto& t : o.tuples()) {
    Json row = Json::array();
    for (int x : t) row.push_back(x + 1);
    tuples.push_back(row);
  }
  j["tuples"] = tuples;
  for (int i = 1; i < o.arity(); ++i) j["sigma" + std::to_string(i)] = o.edges(i);
  return j.dump();
}

HurwitzOrbit orbit_from_json(std::string_view text) {
  Json j = parse_json(text, "orbit");
  int n = get<int>(j, "arity", "orbit");
  auto tuples = get<std::vector<Tuple>>(j, "tuples", "orbit");
  for (auto& t : tuples) {
    if (static_cast<int>(t.size()) != n) throw Error(ErrorKind::ParseError, "orbit: tuple of wrong arity");
    for (int& x : t) --x;
  }
  std::vector<std::vector<int>> edges;
  for (int i = 1; i < n; ++i) {
    std::string key = "sigma" + std::to_string(i);
    auto e = get<std::vector<int>>(j, key.c_str(), "orbit");
    if (e.size() != tuples.size()) throw Error(ErrorKind::ParseError, "orbit: edge array of wrong length");
    edges.push_back(std::move(e));
  }
  return HurwitzOrbit(n, std::move(tuples), std::move(edges));
}

Tuple expand_word(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, "word \"" + std::string(text) + "\": " + why);
  };
  auto exponent = [&]() {
    if (pos >= text.size() || text[pos] != '^') return 1;
    ++pos;
    bool braced = pos < text.size() && text[pos] == '{';
    if (braced) ++pos;
    int k = 0;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') k = k * 10 + (text[pos++] - '0');
    if (pos == start) fail("missing exponent");
    if (braced) {
      if (pos >= text.size() || text[pos] != '}') fail("unclosed exponent");
      ++pos;
    }
    return k;
  };
  std::function<Tuple()> group = [&]() {
    Tuple out;
    while (pos < text.size() && text[pos] != ')') {
      char ch = text[pos];
      Tuple atom;
      if (ch == ' ' || ch == '*') {
        ++pos;
        continue;
      }
      if (ch == '(') {
        ++pos;
        atom = group();
        if (pos >= text.size() || text[pos] != ')') fail("unbalanced parentheses");
        ++pos;
      } else if (ch >= 'a' && ch <= 'z') {
        atom = {ch - 'a'};
        ++pos;
      } else {
        fail(std::string("unexpected '") + ch + "'");
      }
      int k = exponent();
      for (int i = 0; i < k; ++i) out.insert(out.end(), atom.begin(), atom.end());
    }
    return out;
  };
  Tuple w = group();
  if (pos != text.size()) fail("unbalanced parentheses");
  return w;
}

std::string word_text(const Tuple& w) {
  std::string s;
  for (int x : w) s.push_back(static_cast<char>('a' + x));
  return s;
}

CocycleSource cocycle_source_from_json(std::string_view text) {
  Json j = parse_json(text, "cocycle");
  CocycleSource src;
  src.rack = get<std::string>(j, "rack", "cocycle");
  src.field = get<std::string>(j, "field", "cocycle");
  src.values = get<std::vector<std::vector<std::string>>>(j, "values", "cocycle");
  return src;
}

template <class F>
Cocycle<F> cocycle_from_source(const CocycleSource& src, const Rack& r, const F& f) {
  std::vector<std::vector<typename F::Element>> entries;
  for (const auto& row : src.values) {
    entries.emplace_back();
    for (const auto& v : row) entries.back().push_back(f.parse(v));
  }
  return table_cocycle(r, f, entries);
}

template <class F>
std::string cocycle_to_json(const Cocycle<F>& c, const std::string& rack_name) {
  Json j;
  j["rack"] = rack_name;
  j["field"] = c.field().spec();
  Json rows = Json::array();
  for (int x = 0; x < c.size(); ++x) {
    Json row = Json::array();
    for (int y = 0; y < c.size(); ++y) row.push_back(c.field().format(c.q(x, y)));
    rows.push_back(row);
  }
  j["values"] = rows;
  return j.dump();
}

std::vector<RelationSpec> relations_from_json(std::string_view text) {
  Json j = parse_json(text, "relations");
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "relations: expected a list");
  std::vector<RelationSpec> out;
  for (const auto& item : j) {
    RelationSpec r;
    r.degree = get<int>(item, "degree", "relations");
    if (!item.contains("terms") || !item["terms"].is_array()) throw Error(ErrorKind::ParseError, "relations: missing terms");
    for (const auto& t : item["terms"])
      r.terms.emplace_back(get<std::string>(t, "word", "relation term"), get<std::string>(t, "coeff", "relation term"));
    out.push_back(std::move(r));
  }
  return out;
}

std::string relations_to_json(const std::vector<RelationSpec>& rels) {
  Json j = Json::array();
  for (const auto& r : rels) {
    Json item;
    item["degree"] = r.degree;
    Json terms = Json::array();
    for (const auto& [w, c] : r.terms) {
      Json t;
      t["word"] = w;
      t["coeff"] = c;
      terms.push_back(t);
    }
    item["terms"] = terms;
    j.push_back(item);
  }
  return j.dump(2);
}

template <class F>
std::vector<GradedVector<F>> build_relations(const std::vector<RelationSpec>& rels, const F& f, int d) {
  std::vector<GradedVector<F>> out;
  for (const auto& r : rels) {
    std::vector<std::pair<Tuple, typename F::Element>> terms;
    for (const auto& [w, c] : r.terms) {
      Tuple word = expand_word(w);
      if (static_cast<int>(word.size()) != r.degree)
        throw Error(ErrorKind::NotHomogeneous, "term " + w + " does not have degree " + std::to_string(r.degree));
      terms.emplace_back(std::move(word), f.parse(c));
    }
    out.push_back(relation_from_terms(f, d, terms));
  }
  return out;
}

namespace {

RelationSpec rel(std::vector<std::pair<std::string, std::string>> terms) {
  RelationSpec r;
  r.degree = static_cast<int>(expand_word(terms.front().first).size());
  r.terms = std::move(terms);
  return r;
}

}  // namespace

std::vector<RelationSpec> relation_preset(const std::string& name) {
  if (name == "d3char2") {
    return {
        rel({{"ab", "1"}, {"bc", "q^2"}, {"ca", "q"}}),
        rel({{"ac", "1"}, {"cb", "q^2"}, {"ba", "q"}}),
        rel({{"a^3", "1"}}),
        rel({{"b^3", "1"}}),
        rel({{"c^3", "1"}}),
        rel({{"(a^2b^2)^3", "1"}, {"b(a^2b^2)^2a^2b", "1"}, {"b^2(a^2b^2)^2a^2", "1"}, {"ab^2(a^2b^2)^2a", "1"}}),
    };
  }
  if (name == "t-new") {
    return {
        rel({{"a^3", "1"}}),
        rel({{"b^3", "1"}}),
        rel({{"c^3", "1"}}),
        rel({{"d^3", "1"}}),
        rel({{"ab", "-q^2"}, {"bc", "-q"}, {"ca", "1"}}),
        rel({{"ac", "-q^2"}, {"cd", "-q"}, {"da", "1"}}),
        rel({{"ad", "q"}, {"ba", "-q^2"}, {"db", "1"}}),
        rel({{"bd", "q"}, {"cb", "q^2"}, {"dc", "1"}}),
        rel({{"a^2bcb^2", "1"},
             {"abcb^2a", "1"},
             {"bcb^2a^2", "1"},
             {"cb^2a^2b", "1"},
             {"b^2a^2bc", "1"},
             {"ba^2bcb", "1"},
             {"bcba^2c", "1"},
             {"cbabac", "1"},
             {"cb^2aca", "1"}}),
    };
  }
  throw Error(ErrorKind::UnknownPreset, "relations " + name);
}

IntegralSpec integral_preset(const std::string& name) {
  if (name == "d3char2") return {"a^2ba^2b(a^2b^2)^3c^2", "bbaaccaaccbbcbcbcbcc", ""};
  if (name == "t-new") return {"a^2ba^2ba^2b^2a^2cb^2a^2cb^2a^2d^2", "ccdccdccddccbbddbaddaabb", "-q^2"};
  throw Error(ErrorKind::UnknownPreset, "integral " + name);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

#define BRAIDRACK_INSTANTIATE(F)                                                                       \
  template Cocycle<F> cocycle_from_source<F>(const CocycleSource&, const Rack&, const F&);             \
  template std::string cocycle_to_json<F>(const Cocycle<F>&, const std::string&);                      \
  template std::vector<GradedVector<F>> build_relations<F>(const std::vector<RelationSpec>&, const F&, int);

BRAIDRACK_INSTANTIATE(PrimeField)
BRAIDRACK_INSTANTIATE(RationalField)
BRAIDRACK_INSTANTIATE(ExtPrime)
BRAIDRACK_INSTANTIATE(ExtRational)

#undef BRAIDRACK_INSTANTIATE

}  // namespace braidrack
