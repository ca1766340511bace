#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "braidrack/braiding.hpp"
#include "braidrack/classify.hpp"
#include "braidrack/error.hpp"
#include "braidrack/hurwitz.hpp"
#include "braidrack/io.hpp"
#include "braidrack/nichols.hpp"
#include "braidrack/parallel.hpp"
#include "braidrack/percolate.hpp"
#include "braidrack/quotient.hpp"
#include "braidrack/rack.hpp"
#include "json.hpp"
#include "verify.hpp"

namespace {

using namespace braidrack;
using Json = nlohmann::ordered_json;

// What a command prints: the JSON payload, and rows for csv/table output.
struct Output {
  Json json;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int exit_code = 0;
};

struct Globals {
  std::string format = "table";
  std::string field;
  unsigned threads = 0;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print(const Output& out, const std::string& format) {
  if (format == "json") {
    std::cout << out.json.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    auto line = [](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << csv_cell(cells[i]);
      std::cout << "\n";
    };
    line(out.header);
    for (const auto& r : out.rows) line(r);
    return;
  }
  std::vector<std::size_t> width(out.header.size(), 0);
  for (std::size_t i = 0; i < out.header.size(); ++i) width[i] = out.header[i].size();
  for (const auto& r : out.rows)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::cout << (i ? "  " : "") << std::left << std::setw(static_cast<int>(i + 1 < cells.size() ? width[i] : 0))
                << cells[i];
    }
    std::cout << "\n";
  };
  line(out.header);
  for (const auto& r : out.rows) line(r);
}

std::string yes(bool b) { return b ? "true" : "false"; }

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string one_based(const Tuple& t) {
  std::vector<int> v;
  for (int x : t) v.push_back(x + 1);
  return "(" + join(v) + ")";
}

bool is_file(const std::string& s) { return std::filesystem::is_regular_file(s); }

Rack load_rack(const std::string& arg) {
  if (is_file(arg)) return rack_from_json(read_file(arg));
  return preset(arg);
}

// ---------------------------------------------------------------------------
// rack

Output rack_info(const std::string& arg) {
  Rack r = load_rack(arg);
  RackInvariants inv = invariants(r);
  Output out;
  Json& j = out.json;
  j["size"] = inv.size;
  j["is_quandle"] = inv.is_quandle;
  j["is_braided"] = inv.is_braided;
  j["is_faithful"] = inv.is_faithful;
  j["is_indecomposable"] = inv.is_indecomposable;
  Json comps = Json::array();
  for (const auto& c : inv.components) {
    std::vector<int> v;
    for (int x : c) v.push_back(x + 1);
    comps.push_back(v);
  }
  j["components"] = comps;
  if (inv.inner_group_order)
    j["inner_group_order"] = *inv.inner_group_order;
  else
    j["inner_group_order"] = nullptr;
  if (inv.degree) {
    j["degree"] = *inv.degree;
    Json k = Json::object();
    for (auto [n, v] : inv.k) k[std::to_string(n)] = v;
    j["k"] = k;
    j["m"] = inv.m ? Json(*inv.m) : Json(nullptr);
    j["t"] = inv.t ? Json(*inv.t) : Json(nullptr);
  } else {
    j["degree"] = nullptr;
    j["undefined_reason"] = inv.undefined_reason;
  }
  out.header = {"invariant", "value"};
  for (auto it = j.begin(); it != j.end(); ++it)
    out.rows.push_back({it.key(), it.value().is_string() ? it.value().get<std::string>() : it.value().dump()});
  return out;
}

Output rack_iso(const std::string& a, const std::string& b) {
  IsoResult res = find_isomorphism(load_rack(a), load_rack(b));
  Output out;
  out.json["isomorphic"] = res.isomorphic;
  std::vector<int> map;
  for (int x : res.map) map.push_back(x + 1);
  out.json["map"] = map;
  out.header = {"isomorphic", "map"};
  out.rows.push_back({yes(res.isomorphic), join(map)});
  return out;
}

Output rack_preset_list() {
  Output out;
  out.json = Json::array();
  out.header = {"name", "size", "labeling"};
  for (const auto& name : preset_names()) {
    std::string labeling;
    Json item;
    item["name"] = name;
    if (name == "Aff(q,alpha)" || name == "trivial(n)") {
      labeling = name == "trivial(n)" ? "i > j = j" : "x > y = (1 - alpha) x + alpha y over F_q; label i is field code i-1";
      item["size"] = nullptr;
    } else {
      Rack r = preset(name);
      item["size"] = r.size();
      if (auto labels = preset_class_labels(name)) {
        std::vector<std::string> text;
        for (const auto& p : *labels) text.push_back(p.str());
        labeling = join(text, " ");
      } else {
        std::vector<std::string> phis;
        for (int x = 0; x < r.size(); ++x) phis.push_back(r.phi(x).str());
        labeling = "phi: " + join(phis, " ");
      }
    }
    item["labeling"] = labeling;
    out.rows.push_back({name, item["size"].is_null() ? "-" : item["size"].dump(), labeling});
    out.json.push_back(item);
  }
  return out;
}

// ---------------------------------------------------------------------------
// hurwitz, immunity

Output hurwitz_census(const std::string& arg, int n, unsigned threads) {
  Rack r = load_rack(arg);
  OrbitCensus c = census(r, n, threads);
  Output out;
  Json counts = Json::object();
  for (auto [size, k] : c.counts) counts[std::to_string(size)] = k;
  out.json["arity"] = c.arity;
  out.json["counts"] = counts;
  out.json["total"] = c.total;
  out.json["total_check"] = c.total_check;
  if (c.formula) {
    Json f = Json::object();
    for (auto [size, k] : *c.formula) f[std::to_string(size)] = k;
    out.json["formula"] = f;
    out.json["formula_agrees"] = c.formula_agrees;
  }
  out.header = {"orbit_size", "count", "formula"};
  for (auto [size, k] : c.counts) {
    std::string f = "-";
    if (c.formula) {
      auto it = c.formula->find(size);
      f = it == c.formula->end() ? "0" : std::to_string(it->second);
    }
    out.rows.push_back({std::to_string(size), std::to_string(k), f});
  }
  return out;
}

Output hurwitz_orbit(const std::string& arg, const std::vector<int>& seed, const std::string& save) {
  Rack r = load_rack(arg);
  Tuple t;
  for (int x : seed) {
    if (x < 1 || x > r.size()) throw Error(ErrorKind::InvalidArgument, "seed entry out of range");
    t.push_back(x - 1);
  }
  if (t.size() < 2) throw Error(ErrorKind::InvalidArgument, "seed needs at least two entries");
  HurwitzOrbit o = orbit(r, t);
  std::string text = orbit_to_json(o);
  if (!save.empty()) {
    std::ofstream f(save);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + save);
    f << text << "\n";
  }
  Output out;
  out.json = Json::parse(text);
  out.header = {"index", "tuple"};
  for (int i = 1; i < o.arity(); ++i) out.header.push_back("sigma" + std::to_string(i));
  for (std::size_t k = 0; k < o.size(); ++k) {
    std::vector<std::string> row{std::to_string(k), one_based(o.tuple(k))};
    for (int i = 1; i < o.arity(); ++i) row.push_back(std::to_string(o.step(i, k)));
    out.rows.push_back(row);
  }
  return out;
}

Output immunity(const std::string& arg, unsigned threads) {
  Rack r = load_rack(arg);
  auto table = immunity_table(r, threads);
  Output out;
  out.json = Json::array();
  out.header = {"orbit_size", "min_plague", "immunity", "witness"};
  for (const auto& [size, res] : table) {
    std::string imm = std::to_string(res.immunity_num) + (res.immunity_den == 1 ? "" : "/" + std::to_string(res.immunity_den));
    Json item;
    item["orbit_size"] = size;
    item["min_plague"] = res.min_size;
    item["immunity"] = imm;
    item["witness"] = res.witness;
    out.json.push_back(item);
    out.rows.push_back({std::to_string(size), std::to_string(res.min_size), imm, join(res.witness)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// nichols

// Rack, field descriptor and cocycle source resolved from the command line.
struct SpaceArgs {
  std::string rack;
  std::string cocycle = "minus1";
};

struct ResolvedSpace {
  Rack rack;
  std::string field;
  std::optional<CocycleSource> file;
  std::string preset_name;
};

ResolvedSpace resolve_space(const SpaceArgs& a, const Globals& g) {
  ResolvedSpace s{trivial_rack(1), "QQ", std::nullopt, ""};
  if (is_file(a.cocycle)) {
    s.file = cocycle_source_from_json(read_file(a.cocycle));
    s.rack = load_rack(a.rack.empty() ? s.file->rack : a.rack);
    s.field = s.file->field;
  } else {
    s.preset_name = a.cocycle;
    CocyclePresetInfo info = cocycle_preset_info(a.cocycle);
    std::string rack = a.rack.empty() ? info.rack : a.rack;
    if (rack.empty()) throw Error(ErrorKind::InvalidArgument, "cocycle " + a.cocycle + " needs a rack");
    s.rack = load_rack(rack);
    s.field = info.field;
  }
  if (!g.field.empty()) s.field = g.field;
  return s;
}

template <class F>
Cocycle<F> build_cocycle(const ResolvedSpace& s, const F& f) {
  if (s.file) return cocycle_from_source(*s.file, s.rack, f);
  return cocycle_preset(s.preset_name, s.rack, f);
}

template <class Fn>
auto with_field(const std::string& spec, Fn&& fn) {
  return std::visit([&](const auto& f) { return fn(f); }, parse_field(spec));
}

Json dims_json(const GradedDims& d) {
  Json j;
  j["field"] = d.field;
  j["dims"] = d.dims;
  j["method"] = d.method;
  j["probe_prime"] = d.probe_prime ? Json(*d.probe_prime) : Json(nullptr);
  j["block_diagonal"] = d.block_diagonal;
  return j;
}

Output nichols_dims(const SpaceArgs& a, int max_degree, bool probe, const Globals& g) {
  ResolvedSpace s = resolve_space(a, g);
  GradedDims d = with_field(s.field, [&](const auto& f) {
    DimsOptions o;
    o.max_degree = max_degree;
    o.threads = resolve_threads(g.threads);
    o.probe = probe;
    return graded_dims(build_cocycle(s, f), o);
  });
  Output out;
  out.json = dims_json(d);
  out.header = {"degree", "dim", "method"};
  for (std::size_t n = 0; n < d.dims.size(); ++n)
    out.rows.push_back({std::to_string(n), std::to_string(d.dims[n]), d.method[n]});
  return out;
}

Output nichols_cubic(const SpaceArgs& a, int hilbert_degree, const Globals& g) {
  ResolvedSpace s = resolve_space(a, g);
  ConditionReport rep = with_field(s.field, [&](const auto& f) {
    return check_conditions(build_cocycle(s, f), hilbert_degree, resolve_threads(g.threads));
  });
  Output out;
  Json blocks = Json::array();
  out.header = {"orbit_size", "seed", "kernel", "min_plague", "within_immunity", "optimal"};
  for (const auto& b : rep.cubic.blocks) {
    Json item;
    item["orbit_size"] = b.size;
    std::vector<int> seed;
    for (int x : b.seed) seed.push_back(x + 1);
    item["seed"] = seed;
    item["kernel"] = b.kernel;
    item["min_plague"] = b.min_plague;
    item["within_immunity"] = b.within_immunity;
    item["optimal"] = b.optimal;
    blocks.push_back(item);
    out.rows.push_back({std::to_string(b.size), one_based(b.seed), std::to_string(b.kernel), std::to_string(b.min_plague),
                        yes(b.within_immunity), yes(b.optimal)});
  }
  std::vector<std::string> factorizations;
  for (const auto& fs : rep.factorizations) factorizations.push_back(format_factors(fs));
  Json& j = out.json;
  j["field"] = rep.dims.field;
  j["dims"] = rep.dims.dims;
  j["cubic_kernel"] = rep.cubic.total;
  j["blocks"] = blocks;
  j["kernel_one_plus_c"] = rep.kernel_one_plus_c;
  j["kernel_s3"] = rep.kernel_s3;
  j["s3_bound"] = rep.s3_bound;
  j["cond1_truncated"] = rep.cond1_truncated;
  j["factorizations"] = factorizations;
  j["cond2"] = rep.cond2;
  j["cond3"] = rep.cond3;
  j["block_diagonal"] = rep.cubic.block_diagonal;
  j["immunity_bounds"] = rep.cubic.immunity_bounds;
  j["eight_orbit_bounds"] = rep.cubic.eight_orbit_bounds;
  out.rows.push_back({"total", "-", std::to_string(rep.cubic.total), "-", yes(rep.cubic.immunity_bounds), "-"});
  std::cerr << "dims " << join(rep.dims.dims) << "; cond1_truncated " << yes(rep.cond1_truncated) << " ("
            << join(factorizations, " ") << "); cond2 " << yes(rep.cond2) << "; cond3 " << yes(rep.cond3) << "\n";
  return out;
}

Output nichols_quotient(const std::string& rack_arg, const std::string& relations, const std::string& cocycle,
                        int max_degree, const Globals& g) {
  std::vector<RelationSpec> rels;
  SpaceArgs a;
  a.rack = rack_arg;
  if (is_file(relations)) {
    rels = relations_from_json(read_file(relations));
    if (!cocycle.empty()) a.cocycle = cocycle;
    else if (rack_arg.empty()) throw Error(ErrorKind::InvalidArgument, "a relations file needs a rack or a cocycle");
  } else {
    rels = relation_preset(relations);
    a.cocycle = cocycle.empty() ? relations : cocycle;
  }
  ResolvedSpace s = resolve_space(a, g);
  std::vector<bool> in_kernel;
  GradedDims d = with_field(s.field, [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    auto c = build_cocycle(s, f);
    auto built = build_relations(rels, f, s.rack.size());
    in_kernel = relations_in_kernel(c, built);
    QuotientOptions o;
    o.max_degree = max_degree;
    return quotient_dims(Presentation<F>{c, built}, o);
  });
  Output out;
  out.json = dims_json(d);
  out.json["relations_in_kernel"] = in_kernel;
  long long total = 0;
  for (long x : d.dims) total += x;
  out.json["total"] = total;
  out.header = {"degree", "dim"};
  for (std::size_t n = 0; n < d.dims.size(); ++n) out.rows.push_back({std::to_string(n), std::to_string(d.dims[n])});
  out.rows.push_back({"total", std::to_string(total)});
  return out;
}

Output nichols_integral(const std::string& name, const std::string& side_text, const Globals& g) {
  IntegralSpec spec = integral_preset(name);
  CocyclePresetInfo info = cocycle_preset_info(name);
  DerivationSide side = side_text == "right" ? DerivationSide::Right : DerivationSide::Left;
  std::string field = g.field.empty() ? info.field : g.field;
  Rack r = preset(info.rack);
  std::string value = with_field(field, [&](const auto& f) {
    auto c = cocycle_preset(name, r, f);
    auto v = derivation_chain(c, expand_word(spec.chain), word_vector(f, r.size(), expand_word(spec.word), f.one()), side);
    if (v.degree != 0 || is_zero(v)) return std::string("0");
    return f.format(v.terms.val.front());
  });
  Output out;
  out.json["preset"] = name;
  out.json["field"] = field;
  out.json["word"] = spec.word;
  out.json["chain"] = spec.chain;
  out.json["side"] = side == DerivationSide::Left ? "left" : "right";
  out.json["value"] = value;
  out.json["nonzero"] = value != "0";
  out.header = {"preset", "value", "nonzero"};
  out.rows.push_back({name, value, yes(value != "0")});
  return out;
}

// ---------------------------------------------------------------------------
// classify, verify-paper

Output classify(const SearchSpec& spec) {
  SearchResult res = search_racks(spec);
  Output out;
  Json racks = Json::array();
  out.header = {"size", "degree", "k3", "m", "preset", "table"};
  for (const Rack& r : res.racks) {
    RackInvariants inv = invariants(r);
    std::string name = "-";
    for (const auto& p : {"D3", "T", "A", "B", "C", "Aff(7,3)", "Aff(7,5)", "Aff(9,2)"})
      if (r.size() == preset(p).size() && is_isomorphic(r, preset(p))) name = p;
    Json item;
    item["size"] = r.size();
    item["degree"] = inv.degree ? Json(*inv.degree) : Json(nullptr);
    item["k3"] = inv.k_at(3);
    item["m"] = inv.m ? Json(*inv.m) : Json(nullptr);
    item["preset"] = name;
    item["table"] = r.table();
    racks.push_back(item);
    out.rows.push_back({std::to_string(r.size()), item["degree"].dump(), std::to_string(inv.k_at(3)), item["m"].dump(), name,
                        Json(r.table()).dump()});
  }
  out.json["racks"] = racks;
  out.json["branches"] = res.stats.branches;
  out.json["nodes"] = res.stats.nodes;
  return out;
}

Output run_verify(const report::VerifyOptions& opts) {
  report::Report rep = report::verify_paper(opts);
  Output out;
  Json crit = Json::array();
  out.header = {"criterion", "check", "expected", "computed", "match", "ms"};
  for (const auto& c : rep.criteria) {
    Json item;
    item["id"] = c.id;
    item["title"] = c.title;
    item["passed"] = c.passed();
    Json entries = Json::array();
    for (const auto& e : c.entries) {
      Json je;
      je["check"] = e.check;
      je["expected"] = e.expected;
      je["computed"] = e.computed;
      je["match"] = e.match;
      je["runtime_ms"] = e.runtime_ms;
      entries.push_back(je);
      std::ostringstream ms;
      ms << std::fixed << std::setprecision(1) << e.runtime_ms;
      out.rows.push_back({c.id, e.check, e.expected, e.computed, yes(e.match), ms.str()});
    }
    item["entries"] = entries;
    item["budget_ms"] = c.budget_ms;
    item["within_budget"] = c.within_budget;
    crit.push_back(item);
  }
  out.json["profile"] = opts.profile == report::Profile::Full ? "full" : "quick";
  out.json["criteria"] = crit;
  out.json["passed"] = rep.passed();
  out.exit_code = rep.passed() ? 0 : 1;
  for (const auto& c : rep.criteria)
    std::cerr << c.id << " " << (c.passed() ? "PASS" : "FAIL") << " " << c.title << " (" << std::fixed << std::setprecision(0)
              << c.elapsed_ms << " ms" << (c.within_budget ? "" : ", over budget") << ")\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Racks, Hurwitz orbits, immunity and Nichols algebra computations"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--field", g.field, "Coefficient field, e.g. QQ, Fp(7), QQ[t]/(t^2+t+1)");
  app.add_option("--threads", g.threads, "Worker threads (0: THREADS or all cores)");

  std::function<Output()> action;

  auto* rack = app.add_subcommand("rack", "Rack invariants and isomorphism");
  rack->require_subcommand(1);
  std::string rack_a, rack_b;
  auto* info = rack->add_subcommand("info", "Invariants of a preset or rack file");
  info->add_option("rack", rack_a)->required();
  info->callback([&] { action = [&] { return rack_info(rack_a); }; });
  auto* iso = rack->add_subcommand("iso", "Isomorphism test with a witness");
  iso->add_option("first", rack_a)->required();
  iso->add_option("second", rack_b)->required();
  iso->callback([&] { action = [&] { return rack_iso(rack_a, rack_b); }; });
  rack->add_subcommand("preset-list", "Preset racks and their labelings")->callback([&] {
    action = [] { return rack_preset_list(); };
  });

  auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz orbits");
  hurwitz->require_subcommand(1);
  int arity = 3;
  std::vector<int> seed;
  std::string save;
  auto* cen = hurwitz->add_subcommand("census", "Orbit sizes of X^n");
  cen->add_option("rack", rack_a)->required();
  cen->add_option("-n", arity, "Tuple length")->check(CLI::Range(2, 8));
  cen->callback([&] { action = [&] { return hurwitz_census(rack_a, arity, resolve_threads(g.threads)); }; });
  auto* orb = hurwitz->add_subcommand("orbit", "Orbit of one tuple");
  orb->add_option("rack", rack_a)->required();
  orb->add_option("--seed", seed, "1-based tuple, e.g. 1,1,2")->required()->delimiter(',');
  orb->add_option("--save", save, "Write the orbit JSON to a file");
  orb->callback([&] { action = [&] { return hurwitz_orbit(rack_a, seed, save); }; });

  auto* imm = app.add_subcommand("immunity", "Minimal plagues of the 3-orbits");
  imm->add_option("rack", rack_a)->required();
  imm->callback([&] { action = [&] { return immunity(rack_a, resolve_threads(g.threads)); }; });

  auto* nichols = app.add_subcommand("nichols", "Nichols algebra computations");
  nichols->require_subcommand(1);
  SpaceArgs space;
  int max_degree = 4, hilbert_degree = 4;
  bool probe = false;
  std::string relations, cocycle, preset_name, side = "left";
  auto* dims = nichols->add_subcommand("dims", "Graded dimensions via symmetrizer ranks");
  dims->add_option("rack", space.rack, "Preset or rack file (default: the cocycle's rack)");
  dims->add_option("--cocycle", space.cocycle, "Cocycle preset or file");
  dims->add_option("--max-degree", max_degree)->check(CLI::Range(1, 40));
  dims->add_flag("--probe", probe, "Cross-check ranks over a prime field image");
  dims->callback([&] { action = [&] { return nichols_dims(space, max_degree, probe, g); }; });
  auto* cubic = nichols->add_subcommand("cubic", "Cubic kernel per orbit and the three conditions");
  cubic->add_option("rack", space.rack);
  cubic->add_option("--cocycle", space.cocycle, "Cocycle preset or file");
  cubic->add_option("--hilbert-degree", hilbert_degree)->check(CLI::Range(3, 40));
  cubic->callback([&] { action = [&] { return nichols_cubic(space, hilbert_degree, g); }; });
  auto* quo = nichols->add_subcommand("quotient", "Dimensions of T(V)/(relations)");
  int quotient_degree = 30;
  quo->add_option("rack", space.rack);
  quo->add_option("--relations", relations, "Relations file or preset (d3char2, t-new)")->required();
  quo->add_option("--cocycle", cocycle, "Cocycle preset or file used for the kernel check");
  quo->add_option("--max-degree", quotient_degree)->check(CLI::Range(1, 40));
  quo->callback([&] { action = [&] { return nichols_quotient(space.rack, relations, cocycle, quotient_degree, g); }; });
  auto* integral = nichols->add_subcommand("integral", "Derivation chain applied to a stated integral");
  integral->add_option("--preset", preset_name)->required()->check(CLI::IsMember({"d3char2", "t-new"}));
  integral->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  integral->callback([&] { action = [&] { return nichols_integral(preset_name, side, g); }; });

  auto* cls = app.add_subcommand("classify", "Search for indecomposable braided racks");
  SearchSpec spec;
  bool decomposable = false;
  cls->add_option("--degree", spec.degrees, "Subset of 2,3,4,6")->delimiter(',');
  cls->add_option("--k3-max", spec.k3_max);
  cls->add_option("--size-max", spec.size_max);
  cls->add_option("--size-cap", spec.size_cap);
  cls->add_flag("--allow-decomposable", decomposable);
  cls->callback([&] {
    action = [&] {
      spec.require_indecomposable = !decomposable;
      spec.threads = g.threads;
      return classify(spec);
    };
  });

  auto* ver = app.add_subcommand("verify-paper", "Recompute the reference tables and examples");
  std::string profile = "quick";
  report::VerifyOptions vopts;
  ver->add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}));
  ver->add_option("--only", vopts.only, "Criterion ids, e.g. P1,P4")->delimiter(',');
  ver->add_flag("--inject-fault", vopts.inject_fault, "Corrupt the D3 table (self-test of the report)");
  ver->callback([&] {
    action = [&] {
      vopts.profile = profile == "full" ? report::Profile::Full : report::Profile::Quick;
      vopts.threads = g.threads;
      return run_verify(vopts);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    Output out = action();
    print(out, g.format);
    return out.exit_code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
