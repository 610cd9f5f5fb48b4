#include "kleinfour/groupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "kleinfour/classification.hpp"

namespace kleinfour {

SemidirectGroup::SemidirectGroup(const FqExt& ext, int nu) : ext_(&ext), nu_(nu) {
  if (nu < 0 || nu > 3) throw std::invalid_argument("SemidirectGroup: nu must be 0..3");
  if (nu == 1) {
    h_ = ext.punctured_axes();
  } else {
    for (std::uint64_t i = 1; i < ext.size(); ++i) h_.push_back(ext.element(i));
  }
}

std::vector<GroupElem> SemidirectGroup::elements() const {
  std::vector<GroupElem> out;
  out.reserve(order());
  for (int gal = 0; gal < 2; ++gal)
    for (const auto& a : h_) out.push_back({a, gal});
  return out;
}

GroupElem SemidirectGroup::mul(const GroupElem& g, const GroupElem& h) const {
  ExtElem<Fq> b = g.gal == 1 ? ext_->conj(h.a) : h.a;
  return {ext_->mul(g.a, b), (g.gal + h.gal) % 2};
}

GroupElem SemidirectGroup::inverse(const GroupElem& g) const {
  ExtElem<Fq> ai = ext_->inv(g.a);
  return {g.gal == 1 ? ext_->conj(ai) : ai, g.gal};
}

bool SemidirectGroup::verify_group_axioms() const {
  auto els = elements();
  GroupElem e = identity();
  for (const auto& g : els) {
    if (!eq(mul(e, g), g) || !eq(mul(g, e), g)) return false;
    if (!eq(mul(g, inverse(g)), e)) return false;
  }
  for (const auto& g : els)
    for (const auto& h : els)
      for (const auto& k : els)
        if (!eq(mul(mul(g, h), k), mul(g, mul(h, k)))) return false;
  return true;
}

FqTriple act(const FqExt& ext, const GroupElem& g, const FqTriple& c) {
  const Fq& F = ext.base();
  if (ext.is_zero(g.a)) throw std::domain_error("act: group element with a = 0");
  ExtElem<Fq> asq = ext.mul(g.a, g.a);
  if (!ext.in_base(asq)) {
    if (!F.is_zero(c.c2)) throw std::domain_error("act: a^2 outside k on a c2 != 0 triple");
    return {c.c1, c.c2, F.div(c.c3, ext.norm(g.a))};
  }
  return {c.c1, F.div(c.c2, asq.u), F.div(c.c3, ext.norm(g.a))};
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);  // keep the least index
  }
};

std::vector<ExtElem<Fq>> action_generators(const FqExt& ext, int nu) {
  // For nu = 1 the generators g (a primitive element of k*) and w generate
  // A*; for the other nu the full l* is needed, generated by any primitive
  // element of l*. Scanning the whole carrier is also fine at these sizes,
  // but generators keep the orbit graph readable.
  std::vector<ExtElem<Fq>> gens;
  const Fq& F = ext.base();
  if (nu == 1) {
    for (std::uint64_t i = 2; i < F.size(); ++i) {
      FqElem g = F.element(i);
      bool primitive = true;
      FqElem acc = g;
      for (std::uint64_t e = 1; e + 1 < F.size() - 1; ++e) {
        acc = F.mul(acc, g);
        if (F.eq(acc, F.one()) && e + 1 < F.size() - 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gens.push_back(ext.from_base(g));
        break;
      }
    }
    if (gens.empty()) gens.push_back(ext.from_base(F.neg(F.one())));  // q = 3: k* = {1, -1}
    gens.push_back(ext.imag_unit());
    return gens;
  }
  for (std::uint64_t i = 1; i < ext.size(); ++i) {
    ExtElem<Fq> g = ext.element(i);
    bool primitive = true;
    ExtElem<Fq> acc = g;
    std::uint64_t order = ext.size() - 1;
    for (std::uint64_t e = 1; e + 1 < order; ++e) {
      acc = ext.mul(acc, g);
      if (ext.eq(acc, ext.one())) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gens.push_back(g);
      break;
    }
  }
  return gens;
}

bool triple_less(const Fq& F, const FqTriple& a, const FqTriple& b) {
  return kernels::triple_index(F, a) < kernels::triple_index(F, b);
}

}  // namespace

OrbitPartition orbit_partition(const FqExt& ext, const std::vector<FqTriple>& objects, int nu) {
  const Fq& F = ext.base();
  OrbitPartition p;
  p.objects = objects;
  std::sort(p.objects.begin(), p.objects.end(),
            [&](const FqTriple& a, const FqTriple& b) { return triple_less(F, a, b); });
  std::map<std::uint64_t, std::size_t> pos;
  for (std::size_t i = 0; i < p.objects.size(); ++i)
    pos[kernels::triple_index(F, p.objects[i])] = i;

  UnionFind uf(p.objects.size());
  for (const auto& gen : action_generators(ext, nu)) {
    for (std::size_t i = 0; i < p.objects.size(); ++i) {
      FqTriple image = act(ext, {gen, 0}, p.objects[i]);
      auto it = pos.find(kernels::triple_index(F, image));
      if (it == pos.end())
        throw std::logic_error("orbit_partition: action left the object set");
      uf.unite(i, it->second);
    }
  }
  p.orbit_of.resize(p.objects.size());
  std::map<std::size_t, std::size_t> root_to_orbit;
  for (std::size_t i = 0; i < p.objects.size(); ++i) {
    std::size_t r = uf.find(i);
    auto [it, inserted] = root_to_orbit.emplace(r, p.representatives.size());
    if (inserted) p.representatives.push_back(p.objects[r]);  // roots are least indices
    p.orbit_of[i] = it->second;
  }
  return p;
}

GroupoidDescription build_description(const FqExt& ext, int nu, const kernels::Budget& budget,
                                      kernels::Exec exec) {
  const Fq& F = ext.base();
  std::uint64_t q = F.size();
  std::vector<FqTriple> admissible;
  for (std::uint64_t i = 0; i < q * q * q; ++i) {
    FqTriple c = kernels::triple_at(F, i);
    if (FqAlgebra(ext, c).is_admissible_closed_form()) admissible.push_back(c);
  }
  if (q <= budget.max_q_sweep) {
    auto flags = kernels::admissible_sweep(ext, exec, budget);
    for (std::uint64_t i = 0; i < flags.size(); ++i) {
      bool closed = FqAlgebra(ext, kernels::triple_at(F, i)).is_admissible_closed_form();
      if (closed != (flags[i] != 0))
        throw std::logic_error("build_description: closed form disagrees with brute force");
    }
  }
  std::vector<FqTriple> objects;
  for (const auto& c : admissible) {
    bool c2_zero = F.is_zero(c.c2);
    TripleType type = FqAlgebra(ext, c).triple_type();
    bool keep = false;
    switch (nu) {
      case 0: keep = c2_zero; break;
      case 1: keep = !c2_zero; break;
      case 2: keep = c2_zero && type == TripleType::N; break;
      case 3: keep = type == TripleType::S; break;
      default: throw std::invalid_argument("build_description: nu must be 0..3");
    }
    if (keep) objects.push_back(c);
  }
  SemidirectGroup group(ext, nu);
  OrbitPartition orbits = orbit_partition(ext, objects, nu);
  return {nu, orbits.objects, std::move(group), std::move(orbits), {}};
}

PropertyFlags check_description(GroupoidDescription& desc, const kernels::Budget& budget,
                                kernels::Exec exec) {
  const FqExt& ext = desc.group.ext();
  PropertyFlags flags;
  // Dense relative to the constructed family: every object is its own image
  // under F, so density holds by construction over the enumerated set.
  flags.dense = true;

  if (desc.objects.empty()) {
    flags.faithful = flags.quasi_full = flags.full = true;
    desc.flags = flags;
    return flags;
  }

  flags.faithful = true;
  flags.quasi_full = true;
  flags.full = desc.nu == 1 || desc.nu == 2;
  auto group_elements = desc.group.elements();
  for (const auto& c : desc.objects) {
    FqAlgebra A(ext, c);
    for (const auto& d : desc.objects) {
      FqAlgebra B(ext, d);
      // Hom-set in the action groupoid.
      std::vector<GroupElem> hom;
      for (const auto& g : group_elements) {
        FqTriple img = act(ext, g, c);
        if (ext.base().eq(img.c1, d.c1) && ext.base().eq(img.c2, d.c2) &&
            ext.base().eq(img.c3, d.c3))
          hom.push_back(g);
      }
      // Faithfulness: distinct group morphisms map to distinct linear maps.
      std::vector<Mat<Fq>> images;
      for (const auto& g : hom) {
        MorphismWitness<Fq> w = functor_image(ext, g, c, d);
        images.push_back(A.matrix_of([&](const AlgElem<Fq>& z) { return apply(ext, w, z); }));
      }
      for (std::size_t i = 0; i < images.size() && flags.faithful; ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
          if (images[i] == images[j]) {
            flags.faithful = false;
            break;
          }
      auto brute = kernels::brute_force_morphisms(A, B, exec, budget);
      if (!brute.empty() && hom.empty()) flags.quasi_full = false;
      if ((desc.nu == 1 || desc.nu == 2) && brute.size() != hom.size()) flags.full = false;
    }
  }
  desc.flags = flags;
  return flags;
}

MorphismWitness<Fq> functor_image(const FqExt& ext, const GroupElem& g, const FqTriple& c,
                                  const FqTriple& d) {
  const Fq& F = ext.base();
  FqTriple img = act(ext, g, c);
  if (!(F.eq(img.c1, d.c1) && F.eq(img.c2, d.c2) && F.eq(img.c3, d.c3)))
    throw std::domain_error("functor_image: g does not carry c to d");
  return {g.a, g.gal == 0 ? WitnessKind::phi : WitnessKind::psi};
}

AutStructureReport aut_structure_report(const FqAlgebra& A, const kernels::Budget& budget,
                                        kernels::Exec exec) {
  auto morphisms = kernels::brute_force_morphisms(A, A, exec, budget);
  AutStructureReport r;
  r.order = std::to_string(morphisms.size());
  // Over a finite field every division algebra here is type N with c2 != 0.
  TripleType type = A.triple_type();
  if (type != TripleType::N || A.base().is_zero(A.triple().c2) || morphisms.size() != 4)
    throw std::logic_error("aut_structure_report: unexpected finite-field structure");
  r.algebra_class = "N1";
  r.structure = "Klein four-group {phi_1, phi_-1, psi_1, psi_-1}";
  return r;
}

AutStructureReport aut_structure_report_rational(const QuadExt<RationalField>& ext,
                                                 const Triple<RationalField>& c) {
  Algebra<RationalField> A(ext, c);
  AutStructureReport r;
  switch (A.triple_type()) {
    case TripleType::S:
      r.algebra_class = "S";
      r.structure = "A*/k* (Skolem-Noether inner automorphisms)";
      r.order = "infinite";
      break;
    case TripleType::K:
      r.algebra_class = "K";
      r.structure = "Klein four-group (Galois group of the quartic extension)";
      r.order = "4";
      break;
    default:
      if (ext.base().is_zero(c.c2)) {
        r.algebra_class = "N0";
        r.structure = "S(l/k) x| C2, |S(l/k)| infinite";
        r.order = "infinite";
      } else {
        r.algebra_class = "N1";
        r.structure = "Klein four-group {phi_1, phi_-1, psi_1, psi_-1}";
        r.order = "4";
      }
  }
  return r;
}

nlohmann::json orbits_json(const FqExt& ext, const OrbitPartition& p) {
  const Fq& F = ext.base();
  auto triple_json = [&](const FqTriple& c) {
    return nlohmann::json::array({F.to_string(c.c1), F.to_string(c.c2), F.to_string(c.c3)});
  };
  nlohmann::json orbits = nlohmann::json::array();
  for (std::size_t k = 0; k < p.representatives.size(); ++k) {
    nlohmann::json members = nlohmann::json::array();
    for (std::size_t i = 0; i < p.objects.size(); ++i)
      if (p.orbit_of[i] == k) members.push_back(triple_json(p.objects[i]));
    orbits.push_back({{"representative", triple_json(p.representatives[k])}, {"members", members}});
  }
  return nlohmann::json{{"object_count", p.objects.size()},
                        {"orbit_count", p.representatives.size()},
                        {"orbits", orbits}};
}

std::string orbits_dot(const FqExt& ext, const OrbitPartition& p, int nu) {
  const Fq& F = ext.base();
  auto name = [&](const FqTriple& c) {
    return "\"(" + F.to_string(c.c1) + "," + F.to_string(c.c2) + "," + F.to_string(c.c3) + ")\"";
  };
  std::map<std::uint64_t, std::size_t> pos;
  for (std::size_t i = 0; i < p.objects.size(); ++i)
    pos[kernels::triple_index(F, p.objects[i])] = i;
  std::ostringstream os;
  os << "digraph orbits {\n";
  for (const auto& c : p.objects) os << "  " << name(c) << ";\n";
  for (const auto& gen : action_generators(ext, nu))
    for (const auto& c : p.objects) {
      FqTriple d = act(ext, {gen, 0}, c);
      os << "  " << name(c) << " -> " << name(d) << " [label=\"" << ext.to_string(gen) << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace kleinfour
