#include "braidrack/braiding.hpp"

#include <map>
#include <unordered_map>

#include "braidrack/error.hpp"

namespace braidrack {

namespace {

std::string triple_str(int x, int y, int z) {
  return "(" + std::to_string(x + 1) + "," + std::to_string(y + 1) + "," + std::to_string(z + 1) + ")";
}

}  // namespace

template <class F>
std::optional<std::array<int, 3>> cocycle_violation(const Rack& r, const F& f, const std::vector<typename F::Element>& q) {
  int d = r.size();
  auto at = [&](int x, int y) -> const typename F::Element& {
    return q[static_cast<std::size_t>(x) * static_cast<std::size_t>(d) + static_cast<std::size_t>(y)];
  };
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        auto lhs = f.mul(at(x, r.op(y, z)), at(y, z));
        auto rhs = f.mul(at(r.op(x, y), r.op(x, z)), at(x, z));
        if (!f.equal(lhs, rhs)) return std::array<int, 3>{x, y, z};
      }
  return std::nullopt;
}

template <class F>
Cocycle<F>::Cocycle(Rack rack, F field, std::vector<Element> values)
    : rack_(std::move(rack)), field_(std::move(field)), values_(std::move(values)) {
  std::size_t d = static_cast<std::size_t>(rack_.size());
  if (values_.size() != d * d) throw Error(ErrorKind::InvalidArgument, "cocycle needs d x d values");
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (field_.is_zero(values_[k]))
      throw Error(ErrorKind::ZeroScalar, "q(" + std::to_string(k / d + 1) + "," + std::to_string(k % d + 1) + ") = 0");
  if (auto bad = cocycle_violation(rack_, field_, values_))
    throw Error(ErrorKind::CocycleConditionFails, triple_str((*bad)[0], (*bad)[1], (*bad)[2]));
}

template <class F>
Cocycle<F> constant_cocycle(const Rack& r, const F& f, const typename F::Element& q) {
  if (f.is_zero(q)) throw Error(ErrorKind::ZeroScalar, "constant cocycle with q = 0");
  std::size_t d = static_cast<std::size_t>(r.size());
  return Cocycle<F>(r, f, std::vector<typename F::Element>(d * d, q));
}

template <class F>
Cocycle<F> table_cocycle(const Rack& r, const F& f, const std::vector<std::vector<typename F::Element>>& entries) {
  std::vector<typename F::Element> flat;
  if (entries.size() != static_cast<std::size_t>(r.size())) throw Error(ErrorKind::InvalidArgument, "cocycle table has wrong size");
  for (const auto& row : entries) {
    if (row.size() != entries.size()) throw Error(ErrorKind::InvalidArgument, "cocycle table has wrong size");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Cocycle<F>(r, f, std::move(flat));
}

template <class F>
Cocycle<F> coboundary_twist(const Cocycle<F>& c, const std::vector<typename F::Element>& fvals) {
  const F& f = c.field();
  int d = c.size();
  if (fvals.size() != static_cast<std::size_t>(d)) throw Error(ErrorKind::InvalidArgument, "twist needs d values");
  for (const auto& v : fvals)
    if (f.is_zero(v)) throw Error(ErrorKind::ZeroScalar, "twist value 0");
  std::vector<typename F::Element> out;
  out.reserve(static_cast<std::size_t>(d * d));
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      out.push_back(f.mul(f.mul(c.q(x, y), fvals[static_cast<std::size_t>(y)]),
                          f.inv(fvals[static_cast<std::size_t>(c.rack().op(x, y))])));
  return Cocycle<F>(c.rack(), f, std::move(out));
}

template <class F>
bool yang_baxter_holds(const Cocycle<F>& c) {
  const Rack& r = c.rack();
  const F& f = c.field();
  int d = r.size();
  using W = std::array<int, 3>;
  auto c12 = [&](W w, typename F::Element& s) {
    s = f.mul(s, c.q(w[0], w[1]));
    return W{r.op(w[0], w[1]), w[0], w[2]};
  };
  auto c23 = [&](W w, typename F::Element& s) {
    s = f.mul(s, c.q(w[1], w[2]));
    return W{w[0], r.op(w[1], w[2]), w[1]};
  };
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        auto s1 = f.one(), s2 = f.one();
        W a = c12(c23(c12(W{x, y, z}, s1), s1), s1);
        W b = c23(c12(c23(W{x, y, z}, s2), s2), s2);
        if (a != b || !f.equal(s1, s2)) return false;
      }
  return true;
}

namespace {

void fill_reps(GroupModel& m) {
  std::size_t d = m.labels.size();
  std::unordered_map<Perm, int, PermHash> index;
  for (std::size_t i = 0; i < d; ++i) index.emplace(m.labels[i], static_cast<int>(i));
  m.reps.assign(d, Perm());
  m.rep_length.assign(d, -1);
  std::size_t n = m.group.degree();
  m.reps[0] = Perm::identity(n);
  m.rep_length[0] = 0;
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t x = queue[head];
    for (const auto& s : m.group.generators()) {
      Perm y = s * m.labels[x] * s.inverse();
      auto it = index.find(y);
      if (it == index.end()) throw Error(ErrorKind::InvalidArgument, "labels are not a conjugacy class of the group");
      auto yi = static_cast<std::size_t>(it->second);
      if (m.rep_length[yi] >= 0) continue;
      m.reps[yi] = s * m.reps[x];
      m.rep_length[yi] = m.rep_length[x] + 1;
      queue.push_back(yi);
    }
  }
  for (std::size_t x = 0; x < d; ++x)
    if (m.rep_length[x] < 0) throw Error(ErrorKind::InvalidArgument, "labels are not a single conjugacy class");
}

}  // namespace

GroupModel make_group_model(const std::vector<Perm>& generators, const std::vector<Perm>& labels) {
  if (labels.empty()) throw Error(ErrorKind::InvalidArgument, "empty class");
  PermGroup group(generators);
  std::size_t n = group.degree();
  std::vector<Perm> ext;
  for (const auto& l : labels) {
    ext.push_back(l.extended(n));
    if (!group.contains(ext.back())) throw Error(ErrorKind::ElementNotInGroup, l.str());
  }
  ClassRack cr = class_rack_from_labels(ext);
  GroupModel m{group.generators(), cr.labels, cr.rack, std::move(group), {}, {}};
  fill_reps(m);
  return m;
}

GroupModel make_group_model(const std::vector<Perm>& generators, const Perm& g) {
  ClassRack cr = conjugacy_class_rack(generators, g);
  return make_group_model(generators, cr.labels);
}

GroupModel align_group_model(const GroupModel& model, const Rack& target) {
  IsoResult iso = find_isomorphism(model.rack, target);
  if (!iso.isomorphic) throw Error(ErrorKind::InvalidArgument, "class rack is not isomorphic to the target rack");
  std::vector<int> f = iso.map;
  if (f[0] != 0) {
    // Compose with an inner automorphism of the target moving f(0) to 0.
    int d = target.size();
    std::vector<std::optional<Perm>> reach(static_cast<std::size_t>(d));
    reach[static_cast<std::size_t>(f[0])] = Perm::identity(static_cast<std::size_t>(d));
    std::vector<int> queue{f[0]};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int y = queue[head];
      for (int x = 0; x < d; ++x) {
        int z = target.op(x, y);
        if (reach[static_cast<std::size_t>(z)]) continue;
        reach[static_cast<std::size_t>(z)] = target.phi(x) * *reach[static_cast<std::size_t>(y)];
        queue.push_back(z);
      }
    }
    if (reach[0]) {
      const Perm& w = *reach[0];
      for (auto& v : f) v = w(v);
    }
  }
  std::vector<Perm> labels(model.labels.size());
  for (std::size_t i = 0; i < f.size(); ++i) labels[static_cast<std::size_t>(f[i])] = model.labels[i];
  return make_group_model(model.generators, labels);
}

GroupModel enveloping_quotient_model(const Rack& r, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  int d = r.size();
  std::vector<Perm> gens;
  for (int x = 0; x < d; ++x) {
    std::vector<int> img(static_cast<std::size_t>(d * k));
    for (int y = 0; y < d; ++y)
      for (int i = 0; i < k; ++i) img[static_cast<std::size_t>(y * k + i)] = r.op(x, y) * k + (i + 1) % k;
    gens.push_back(Perm::from_images(img));
  }
  return make_group_model(gens, gens);
}

namespace {

// SL(2,3) on the 8 nonzero vectors of F_3^2, times Z_2 on two extra points.
std::vector<Perm> sl23_class_times_z2() {
  auto code = [](int a, int b) { return a * 3 + b - 1; };  // (a,b) != (0,0) -> 0..7
  auto matrix_perm = [&](int m00, int m01, int m10, int m11) {
    std::vector<int> img(10);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == 0 && b == 0) continue;
        int na = (m00 * a + m01 * b) % 3, nb = (m10 * a + m11 * b) % 3;
        img[static_cast<std::size_t>(code(a, b))] = code(na, nb);
      }
    img[8] = 8;
    img[9] = 9;
    return Perm::from_images(img);
  };
  Perm u = matrix_perm(1, 1, 0, 1);
  Perm l = matrix_perm(1, 0, 1, 1);
  ClassRack cls = conjugacy_class_rack({u, l}, u);
  Perm swap = Perm::parse("(9 10)", 10);
  std::vector<Perm> labels;
  for (const auto& p : cls.labels) labels.push_back(p * swap);
  return labels;
}

}  // namespace

GroupModel group_model_preset(const std::string& name) {
  if (name == "S4-transposition") {
    auto labels = *preset_class_labels("A");
    return make_group_model(labels, labels);
  }
  if (name == "S5-transposition") {
    auto labels = *preset_class_labels("C");
    return make_group_model(labels, labels);
  }
  if (name == "S4-4cycle") {
    GroupModel m = make_group_model({Perm::parse("(1 2)", 4), Perm::parse("(1 2 3 4)", 4)}, Perm::parse("(1 2 3 4)", 4));
    m = make_group_model(m.labels, m.labels);
    return align_group_model(m, preset("B"));
  }
  if (name == "A4") {
    GroupModel m = make_group_model({Perm::parse("(1 2 3)", 4), Perm::parse("(2 3 4)", 4)}, Perm::parse("(2 3 4)", 4));
    m = make_group_model(m.labels, m.labels);
    return align_group_model(m, preset("T"));
  }
  if (name == "SL23xZ2") {
    auto labels = sl23_class_times_z2();
    return align_group_model(make_group_model(labels, labels), preset("T"));
  }
  throw Error(ErrorKind::UnknownPreset, "group model " + name);
}

template <class F>
Cocycle<F> group_model_cocycle(const GroupModel& model, const F& f, const CharacterSpec<F>& rho) {
  const Perm& g = model.labels[0];
  std::size_t n = model.group.degree();
  std::vector<Perm> cent = model.group.centralizer(g);
  std::unordered_map<Perm, int, PermHash> in_cent;
  for (std::size_t i = 0; i < cent.size(); ++i) in_cent.emplace(cent[i], static_cast<int>(i));
  std::vector<std::pair<Perm, typename F::Element>> gens;
  for (const auto& [word, value] : rho.values) {
    Perm p = Perm::identity(n);
    std::string text;
    for (int x : word) {
      if (x < 0 || static_cast<std::size_t>(x) >= model.labels.size())
        throw Error(ErrorKind::InvalidArgument, "character word letter out of range");
      p = p * model.labels[static_cast<std::size_t>(x)];
      text += "x" + std::to_string(x + 1);
    }
    if (!in_cent.count(p)) throw Error(ErrorKind::NotInCentralizer, text + " = " + p.str());
    if (f.is_zero(value)) throw Error(ErrorKind::ZeroScalar, "character value at " + text);
    gens.emplace_back(p, value);
  }
  std::unordered_map<Perm, typename F::Element, PermHash> values;
  Perm id = Perm::identity(n);
  values.emplace(id, f.one());
  std::vector<Perm> queue{id};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Perm h = queue[head];
    auto hv = values.at(h);
    for (const auto& [p, v] : gens) {
      Perm next = p * h;
      auto nv = f.mul(v, hv);
      auto it = values.find(next);
      if (it == values.end()) {
        values.emplace(next, nv);
        queue.push_back(next);
      } else if (!f.equal(it->second, nv)) {
        throw Error(ErrorKind::CharacterInconsistent, "two values at " + next.str());
      }
    }
  }
  if (values.size() != cent.size())
    throw Error(ErrorKind::CentralizerNotGenerated, "words generate " + std::to_string(values.size()) + " of " +
                                                        std::to_string(cent.size()) + " centralizer elements");
  int d = model.rack.size();
  std::vector<typename F::Element> q;
  q.reserve(static_cast<std::size_t>(d * d));
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      int xy = model.rack.op(x, y);
      Perm elt = model.reps[static_cast<std::size_t>(xy)].inverse() * model.labels[static_cast<std::size_t>(x)] *
                 model.reps[static_cast<std::size_t>(y)];
      auto it = values.find(elt);
      if (it == values.end()) throw Error(ErrorKind::NotInCentralizer, "coset element " + elt.str());
      q.push_back(it->second);
    }
  return Cocycle<F>(model.rack, f, std::move(q));
}

CocyclePresetInfo cocycle_preset_info(const std::string& name) {
  if (name == "d3char2") return {"D3", "Fp(2)[t]/(t^2+t+1)"};
  if (name == "t-new") return {"T", "QQ[t]/(t^2+t+1)"};
  if (name == "A-sign" || name == "A-minus" || name == "transposition-sign(A)") return {"A", "QQ"};
  if (name == "C-plus" || name == "C-minus" || name == "transposition-sign(C)") return {"C", "QQ"};
  if (name == "B-minus" || name == "group(S4,(1234),-1)") return {"B", "QQ"};
  if (name == "minus1" || name == "one" || name.rfind("const(", 0) == 0) return {"", "QQ"};
  throw Error(ErrorKind::UnknownPreset, "cocycle " + name);
}

template <class F>
Cocycle<F> cocycle_preset(const std::string& name, const Rack& r, const F& f) {
  auto info = cocycle_preset_info(name);
  if (!info.rack.empty() && !(preset(info.rack) == r))
    throw Error(ErrorKind::InvalidArgument, "cocycle preset " + name + " is defined on rack " + info.rack);
  auto s = [&](const char* text) { return f.parse(text); };
  if (name == "minus1") return constant_cocycle(r, f, s("-1"));
  if (name == "one") return constant_cocycle(r, f, s("1"));
  if (name.rfind("const(", 0) == 0 && name.back() == ')')
    return constant_cocycle(r, f, f.parse(name.substr(6, name.size() - 7)));
  if (name == "d3char2") return constant_cocycle(r, f, s("t"));
  if (name == "t-new") {
    auto p = s("t"), m = f.neg(s("t"));
    return table_cocycle(r, f, {{p, p, p, p}, {p, p, m, m}, {p, m, p, m}, {p, m, m, p}});
  }
  if (name == "A-sign" || name == "transposition-sign(A)" || name == "A-minus") {
    auto sign = name == "A-minus" ? s("-1") : s("1");
    CharacterSpec<F> rho{{{{0}, s("-1")}, {{3}, sign}}};
    return group_model_cocycle(group_model_preset("S4-transposition"), f, rho);
  }
  if (name == "C-plus" || name == "transposition-sign(C)" || name == "C-minus") {
    auto sign = name == "C-minus" ? s("-1") : s("1");
    CharacterSpec<F> rho{{{{0}, s("-1")}, {{7}, sign}, {{8}, sign}}};
    return group_model_cocycle(group_model_preset("S5-transposition"), f, rho);
  }
  if (name == "B-minus" || name == "group(S4,(1234),-1)") {
    CharacterSpec<F> rho{{{{0}, s("-1")}}};
    return group_model_cocycle(group_model_preset("S4-4cycle"), f, rho);
  }
  throw Error(ErrorKind::UnknownPreset, "cocycle " + name);
}

#define BRAIDRACK_INSTANTIATE(F)                                                                               \
  template class Cocycle<F>;                                                                                   \
  template std::optional<std::array<int, 3>> cocycle_violation<F>(const Rack&, const F&,                      \
                                                                   const std::vector<F::Element>&);             \
  template Cocycle<F> constant_cocycle<F>(const Rack&, const F&, const F::Element&);                          \
  template Cocycle<F> table_cocycle<F>(const Rack&, const F&, const std::vector<std::vector<F::Element>>&);    \
  template Cocycle<F> coboundary_twist<F>(const Cocycle<F>&, const std::vector<F::Element>&);                 \
  template bool yang_baxter_holds<F>(const Cocycle<F>&);                                                       \
  template Cocycle<F> group_model_cocycle<F>(const GroupModel&, const F&, const CharacterSpec<F>&);           \
  template Cocycle<F> cocycle_preset<F>(const std::string&, const Rack&, const F&);

BRAIDRACK_INSTANTIATE(PrimeField)
BRAIDRACK_INSTANTIATE(RationalField)
BRAIDRACK_INSTANTIATE(ExtPrime)
BRAIDRACK_INSTANTIATE(ExtRational)

#undef BRAIDRACK_INSTANTIATE

}  // namespace braidrack
