#include "core/normed_set.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace f1an {

bool FiniteNormedSet::contains(const std::string& e) const {
  return e == basepoint || norms.count(e) > 0 ||
         std::find(elements.begin(), elements.end(), e) != elements.end();
}

NormValue FiniteNormedSet::norm(const std::string& e) const {
  if (e == basepoint) return NormValue::zero();
  auto it = norms.find(e);
  if (it == norms.end()) {
    if (std::find(elements.begin(), elements.end(), e) == elements.end())
      throw F1Error(Errc::InvalidElement, "no such element: " + e);
    return NormValue::zero();
  }
  return it->second;
}

bool FiniteNormedSet::is_normed() const {
  for (const auto& e : elements) {
    if (e == basepoint) continue;
    if (norm(e).is_zero()) return false;
  }
  return true;
}

FiniteNormedSet make_normed_set(const std::vector<std::string>& elements,
                                const std::string& basepoint,
                                const std::map<std::string, NormValue>& norms) {
  if (std::find(elements.begin(), elements.end(), basepoint) == elements.end())
    throw F1Error(Errc::InvalidElement, "basepoint not in carrier");
  for (const auto& [k, v] : norms) {
    if (std::find(elements.begin(), elements.end(), k) == elements.end())
      throw F1Error(Errc::InvalidElement, "norm on unknown element: " + k);
    if (k == basepoint && !v.is_zero())
      throw F1Error(Errc::InvalidNorm, "nonzero norm at basepoint");
  }
  FiniteNormedSet out;
  out.basepoint = basepoint;
  out.elements.push_back(basepoint);
  std::vector<std::string> rest;
  for (const auto& e : elements)
    if (e != basepoint) rest.push_back(e);
  std::sort(rest.begin(), rest.end());
  rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
  for (const auto& e : rest) {
    out.elements.push_back(e);
    auto it = norms.find(e);
    out.norms[e] = it == norms.end() ? NormValue::zero() : it->second;
  }
  return out;
}

PointedMap make_pointed_map(FiniteNormedSet source, FiniteNormedSet target,
                            std::map<std::string, std::string> assignment) {
  assignment[source.basepoint] = target.basepoint;
  for (const auto& e : source.elements) {
    auto it = assignment.find(e);
    if (it == assignment.end())
      throw F1Error(Errc::InvalidElement, "assignment missing element: " + e);
    if (!target.contains(it->second))
      throw F1Error(Errc::InvalidElement, "assignment target missing: " + it->second);
  }
  if (assignment.at(source.basepoint) != target.basepoint)
    throw F1Error(Errc::InvalidElement, "basepoint not preserved");
  return PointedMap{std::move(source), std::move(target), std::move(assignment)};
}

NormValue bound_constant(const PointedMap& f) {
  NormValue c = NormValue::zero();
  for (const auto& x : f.source.elements) {
    if (x == f.source.basepoint) continue;
    NormValue nx = f.source.norm(x);
    NormValue ny = f.target.norm(f.assignment.at(x));
    if (nx.is_zero()) {
      if (!ny.is_zero())
        throw F1Error(Errc::Unbounded, "element of norm 0 maps to norm " + ny.str());
      continue;
    }
    if (ny.is_zero()) continue;
    c = nv_max(c, ny * nx.inverse());
  }
  return c;
}

FiniteNormedSet separation(const FiniteNormedSet& x) {
  std::vector<std::string> elems{x.basepoint};
  std::map<std::string, NormValue> norms;
  for (const auto& e : x.elements) {
    if (e == x.basepoint) continue;
    NormValue n = x.norm(e);
    if (!n.is_zero()) {
      elems.push_back(e);
      norms[e] = n;
    }
  }
  return make_normed_set(elems, x.basepoint, norms);
}

std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

FiniteNormedSet product(const FiniteNormedSet& x, const FiniteNormedSet& y) {
  std::vector<std::string> elems;
  std::map<std::string, NormValue> norms;
  std::string bp = pair_name(x.basepoint, y.basepoint);
  for (const auto& a : x.elements)
    for (const auto& b : y.elements) {
      std::string n = pair_name(a, b);
      elems.push_back(n);
      if (n != bp) norms[n] = nv_max(x.norm(a), y.norm(b));
    }
  return make_normed_set(elems, bp, norms);
}

FiniteNormedSet coproduct(const FiniteNormedSet& x, const FiniteNormedSet& y) {
  bool collide = false;
  for (const auto& e : x.elements)
    if (e != x.basepoint)
      for (const auto& f : y.elements)
        if (f != y.basepoint && e == f) collide = true;
  auto tag = [&](const std::string& s, const char* pre) { return collide ? pre + s : s; };
  std::vector<std::string> elems{x.basepoint};
  std::map<std::string, NormValue> norms;
  for (const auto& e : x.elements)
    if (e != x.basepoint) {
      elems.push_back(tag(e, "l."));
      norms[tag(e, "l.")] = x.norm(e);
    }
  for (const auto& e : y.elements)
    if (e != y.basepoint) {
      elems.push_back(tag(e, "r."));
      norms[tag(e, "r.")] = y.norm(e);
    }
  return make_normed_set(elems, x.basepoint, norms);
}

namespace {

struct UnionFind {
  std::map<std::string, std::string> parent;
  const std::string& find(const std::string& a) {
    auto it = parent.find(a);
    if (it == parent.end() || it->second == a) {
      parent[a] = a;
      return parent[a];
    }
    const std::string r = find(it->second);
    parent[a] = r;
    return parent[a];
  }
  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra == rb) return;
    // deterministic: smaller name wins
    if (rb < ra) std::swap(ra, rb);
    parent[rb] = ra;
  }
};

}  // namespace

FiniteNormedSet coequalizer(const PointedMap& f, const PointedMap& g, bool separated) {
  if (f.source.elements != g.source.elements || f.target.elements != g.target.elements)
    throw F1Error(Errc::TagMismatch, "coequalizer maps must share source and target");
  UnionFind uf;
  for (const auto& e : f.target.elements) uf.find(e);
  for (const auto& x : f.source.elements) uf.unite(f.assignment.at(x), g.assignment.at(x));
  // class -> inf of member norms
  std::map<std::string, NormValue> class_norm;
  std::map<std::string, bool> seen;
  for (const auto& e : f.target.elements) {
    std::string r = uf.find(e);
    NormValue n = f.target.norm(e);
    if (!seen[r]) {
      class_norm[r] = n;
      seen[r] = true;
    } else {
      class_norm[r] = nv_min(class_norm[r], n);
    }
  }
  std::string bp = uf.find(f.target.basepoint);
  std::vector<std::string> elems;
  std::map<std::string, NormValue> norms;
  for (const auto& [r, n] : class_norm) {
    elems.push_back(r);
    if (r != bp) norms[r] = n;
  }
  FiniteNormedSet out = make_normed_set(elems, bp, norms);
  return separated ? separation(out) : out;
}

FiniteNormedSet smash_tensor(const FiniteNormedSet& x, const FiniteNormedSet& y) {
  std::vector<std::string> elems{"*"};
  std::map<std::string, NormValue> norms;
  for (const auto& a : x.elements) {
    if (a == x.basepoint) continue;
    for (const auto& b : y.elements) {
      if (b == y.basepoint) continue;
      std::string n = pair_name(a, b);
      elems.push_back(n);
      norms[n] = x.norm(a) * y.norm(b);
    }
  }
  return make_normed_set(elems, "*", norms);
}

std::string hom_elem_name(const PointedMap& f) {
  std::string out;
  for (const auto& x : f.source.elements) {
    if (x == f.source.basepoint) continue;
    if (f.assignment.at(x) == f.target.basepoint) continue;
    if (!out.empty()) out += ";";
    out += x + ">" + f.assignment.at(x);
  }
  return out.empty() ? "0" : out;
}

PointedMap hom_elem_map(const FiniteNormedSet& x, const FiniteNormedSet& y,
                        const std::string& name) {
  std::map<std::string, std::string> assign;
  for (const auto& e : x.elements) assign[e] = y.basepoint;
  if (name != "0") {
    std::size_t pos = 0;
    while (pos < name.size()) {
      std::size_t semi = name.find(';', pos);
      std::string item = name.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
      std::size_t gt = item.find('>');
      if (gt == std::string::npos) throw F1Error(Errc::ParseError, "bad hom element: " + name);
      assign[item.substr(0, gt)] = item.substr(gt + 1);
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
  }
  return make_pointed_map(x, y, std::move(assign));
}

FiniteNormedSet internal_hom(const FiniteNormedSet& x, const FiniteNormedSet& y,
                             std::size_t cap) {
  std::size_t free_elems = x.size() - 1;
  double count = 1;
  for (std::size_t i = 0; i < free_elems; ++i) {
    count *= static_cast<double>(y.size());
    if (count > static_cast<double>(cap))
      throw F1Error(Errc::TooLarge, "internal hom enumeration exceeds cap");
  }
  std::vector<std::string> domain;
  for (const auto& e : x.elements)
    if (e != x.basepoint) domain.push_back(e);

  std::vector<std::string> elems{"0"};
  std::map<std::string, NormValue> norms;
  std::vector<std::size_t> idx(domain.size(), 0);
  for (;;) {
    std::map<std::string, std::string> assign;
    assign[x.basepoint] = y.basepoint;
    for (std::size_t i = 0; i < domain.size(); ++i) assign[domain[i]] = y.elements[idx[i]];
    try {
      PointedMap f = make_pointed_map(x, y, assign);
      NormValue c = bound_constant(f);
      std::string name = hom_elem_name(f);
      if (name != "0") {
        elems.push_back(name);
        norms[name] = c;
      }
    } catch (const F1Error& e) {
      if (e.code() != Errc::Unbounded) throw;  // unbounded maps are not hom elements
    }
    std::size_t k = 0;
    for (; k < idx.size(); ++k) {
      if (++idx[k] < y.size()) break;
      idx[k] = 0;
    }
    if (k == idx.size()) break;
    if (domain.empty()) break;
  }
  return make_normed_set(elems, "0", norms);
}

MorphismClass classify_morphism(const PointedMap& f) {
  bound_constant(f);  // precondition: bounded
  MorphismClass out;
  std::set<std::string> image;
  bool injective = true;
  for (const auto& x : f.source.elements) {
    const std::string& y = f.assignment.at(x);
    if (!image.insert(y).second) injective = false;
  }
  out.mono = injective;
  out.epi = image.size() == f.target.size();

  // quotient (inf-fiber) norm on the image
  std::map<std::string, NormValue> qnorm;
  for (const auto& x : f.source.elements) {
    const std::string& y = f.assignment.at(x);
    NormValue nx = f.source.norm(x);
    auto it = qnorm.find(y);
    if (it == qnorm.end())
      qnorm[y] = nx;
    else
      it->second = nv_min(it->second, nx);
  }

  // Coim -> Im is an isomorphism of finite (semi-)normed sets iff the zero
  // sets of the quotient norm and the restricted target norm agree.
  bool coim_im_iso = true;
  for (const auto& y : image) {
    if (y == f.target.basepoint) continue;
    if (qnorm.at(y).is_zero() != f.target.norm(y).is_zero()) coim_im_iso = false;
  }
  out.strict = coim_im_iso;

  bool zero_compatible = true;
  for (const auto& x : f.source.elements) {
    if (x == f.source.basepoint) continue;
    if (f.source.norm(x).is_zero() != f.target.norm(f.assignment.at(x)).is_zero())
      zero_compatible = false;
  }
  out.strict_mono = injective && zero_compatible;
  out.strict_epi = out.epi && coim_im_iso;
  out.iso = out.mono && out.epi && out.strict;
  return out;
}

std::pair<NormValue, NormValue> equivalence_constants(const FiniteNormedSet& n1,
                                                      const FiniteNormedSet& n2) {
  if (n1.elements != n2.elements || n1.basepoint != n2.basepoint)
    throw F1Error(Errc::TagMismatch, "equivalence_constants needs a shared carrier");
  NormValue c1 = NormValue::zero(), c2 = NormValue::zero();
  for (const auto& e : n1.elements) {
    if (e == n1.basepoint) continue;
    NormValue a = n1.norm(e), b = n2.norm(e);
    if (a.is_zero() || b.is_zero())
      throw F1Error(Errc::InvalidNorm, "zero off-basepoint norm: " + e);
    c1 = nv_max(c1, a * b.inverse());
    c2 = nv_max(c2, b * a.inverse());
  }
  return {c1, c2};
}

}  // namespace f1an
