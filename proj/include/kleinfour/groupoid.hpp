#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "kleinfour/kernels.hpp"
#include "kleinfour/morphisms.hpp"
#include "kleinfour/report.hpp"

namespace kleinfour {

// (a, sigma^i), a in H, with product (a, s^i)(b, s^j) = (a s^i(b), s^{i+j}).
struct GroupElem {
  ExtElem<Fq> a;
  int gal = 0;  // 0 or 1
};

// H x| Gal(l/k) for H one of l* (nu = 0, 2, 3) or A* (nu = 1). The action on
// triples reads (a, s^i) . (c1, c2, c3) = (c1, c2/a^2, c3/(a conj a)); it is
// well defined on the object sets each nu carries (c2 = 0 for nu != 1, and
// a^2 central for a in A*).
class SemidirectGroup {
 public:
  SemidirectGroup(const FqExt& ext, int nu);

  int nu() const { return nu_; }
  const FqExt& ext() const { return *ext_; }
  std::uint64_t order() const { return 2 * h_.size(); }
  const std::vector<ExtElem<Fq>>& h_carrier() const { return h_; }
  std::vector<GroupElem> elements() const;

  GroupElem identity() const { return {ext_->one(), 0}; }
  GroupElem mul(const GroupElem& g, const GroupElem& h) const;
  GroupElem inverse(const GroupElem& g) const;
  bool eq(const GroupElem& g, const GroupElem& h) const {
    return g.gal == h.gal && ext_->eq(g.a, h.a);
  }

  // Exhaustive associativity / identity / inverse check on the carrier.
  bool verify_group_axioms() const;

 private:
  const FqExt* ext_;
  int nu_;
  std::vector<ExtElem<Fq>> h_;
};

FqTriple act(const FqExt& ext, const GroupElem& g, const FqTriple& c);

struct OrbitPartition {
  // orbit_of[i] indexes into representatives; objects[i] is the i-th triple.
  std::vector<FqTriple> objects;
  std::vector<std::size_t> orbit_of;
  std::vector<FqTriple> representatives;  // least triple of each orbit, ascending
};

// Union-find over generator actions; the representative of an orbit is its
// least member in triple order, independent of merge order.
OrbitPartition orbit_partition(const FqExt& ext, const std::vector<FqTriple>& objects, int nu);

struct PropertyFlags {
  bool dense = false, faithful = false, quasi_full = false, full = false;
  // Density is checked relative to the constructed family A(l, c), not the
  // abstract class of all algebras with the property; recorded so reports
  // state the weakening.
  bool density_relative_to_constructed = true;
};

struct GroupoidDescription {
  int nu = 0;
  std::vector<FqTriple> objects;  // C^nu, in triple order
  SemidirectGroup group;
  OrbitPartition orbits;
  PropertyFlags flags;
};

// Object sets: C^0 = {c2 = 0}, C^1 = {c2 != 0}, C^2 = C^N with c2 = 0,
// C^3 = C^S; over finite fields only C^1 is inhabited. Admissible triples
// come from the closed form, cross-checked by brute force within budget.
GroupoidDescription build_description(const FqExt& ext, int nu, const kernels::Budget& budget,
                                      kernels::Exec exec);

// dense / faithful / quasi-full / full, using the brute-force morphism scan
// as the oracle for hom-sets. Empty object sets pass vacuously.
PropertyFlags check_description(GroupoidDescription& desc, const kernels::Budget& budget,
                                kernels::Exec exec);

// F(g): phi_a for (a, e), psi_a for (a, sigma); defined when act(g, c) = d.
MorphismWitness<Fq> functor_image(const FqExt& ext, const GroupElem& g, const FqTriple& c,
                                  const FqTriple& d);

struct AutStructureReport {
  std::string algebra_class;  // "N0", "N1", "S", "K"
  std::string structure;
  std::string order;  // decimal or "infinite"
};

AutStructureReport aut_structure_report(const FqAlgebra& A, const kernels::Budget& budget,
                                        kernels::Exec exec);
AutStructureReport aut_structure_report_rational(const QuadExt<RationalField>& ext,
                                                 const Triple<RationalField>& c);

nlohmann::json orbits_json(const FqExt& ext, const OrbitPartition& p);
std::string orbits_dot(const FqExt& ext, const OrbitPartition& p, int nu);

}  // namespace kleinfour
