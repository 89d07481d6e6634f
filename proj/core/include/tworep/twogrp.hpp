#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tworep/cohom.hpp"

namespace tworep {

// The morphism (g, m): g -> g.
struct Arrow {
  int obj = 0;
  ModElem loop;
  friend bool operator==(const Arrow& a, const Arrow& b) { return a.obj == b.obj && a.loop == b.loop; }
  friend bool operator!=(const Arrow& a, const Arrow& b) { return !(a == b); }
};

class SpecialTwoGroup;
using TwoGroupPtr = std::shared_ptr<const SpecialTwoGroup>;

class SpecialTwoGroup {
 public:
  // validate=false keeps a non-cocycle alpha (for pentagon tests); throws InvalidTriple otherwise.
  static TwoGroupPtr create(GroupPtr g, ModulePtr m, Cochain alpha, bool validate = true, std::string name = "");
  static TwoGroupPtr split(GroupPtr g, ModulePtr m, std::string name = "");
  // G[0]: discrete 2-group, M = 0
  static TwoGroupPtr discrete(GroupPtr g, std::string name = "");
  // A[1]: one object, abelian group of loops with trivial action
  static TwoGroupPtr one_object(std::vector<long> factors, std::string name = "");

  const GroupPtr& G() const { return g_; }
  const ModulePtr& M() const { return m_; }
  const Cochain& alpha() const { return alpha_; }
  const std::string& name() const { return name_; }

  Arrow identity(int g) const { return Arrow{g, m_->zero()}; }
  Arrow compose(const Arrow& second, const Arrow& first) const;  // throws ObjectMismatch
  Arrow tensor(const Arrow& a, const Arrow& b) const;
  // a_{g1,g2,g3}: (g1 g2) g3 -> g1 (g2 g3)
  Arrow associator(int g1, int g2, int g3) const;
  Arrow inverse(const Arrow& a) const;
  Arrow gamma(int g, const ModElem& u) const { return Arrow{g, m_->reduce(u)}; }
  Arrow delta(int g, const ModElem& u) const { return Arrow{g, m_->act(g, u)}; }
  ModElem gamma_inv(const Arrow& a) const { return a.loop; }

  bool pentagon_check() const;
  // first failing quadruple, if any
  std::optional<std::vector<int>> pentagon_failure() const;

  std::vector<Arrow> arrows() const;

 private:
  SpecialTwoGroup(GroupPtr g, ModulePtr m, Cochain alpha, std::string name)
      : g_(std::move(g)), m_(std::move(m)), alpha_(std::move(alpha)), name_(std::move(name)) {}

  GroupPtr g_;
  ModulePtr m_;
  Cochain alpha_;
  std::string name_;
};

// ---------------------------------------------------------------- crossed modules

struct CrossedModule {
  GroupPtr E, N;
  std::vector<int> boundary;             // N -> E
  std::vector<std::vector<int>> action;  // action[e][n] = e |> n

  // empty string when valid, else the first failing condition
  std::string check() const;
  bool is_valid() const { return check().empty(); }
  static CrossedModule create(GroupPtr e, GroupPtr n, std::vector<int> boundary,
                              std::vector<std::vector<int>> action);  // throws InvalidCrossedModule
  // N normal in E with conjugation action and inclusion boundary
  static CrossedModule normal_subgroup(GroupPtr e, const std::vector<int>& subgroup);
};

// Strict 2-group given by finite tables; arrows indexed 0..arrow_count-1.
struct StrictTwoGroup {
  GroupPtr objects;
  int arrow_count = 0;
  std::vector<int> source, target;
  std::vector<int> identity;              // per object
  std::vector<std::vector<int>> compose;  // compose[second][first], -1 when not composable
  std::vector<std::vector<int>> tensor;

  int compose_checked(int second, int first) const;  // throws NotComposable
};

// arrows (e, n): e -> d(n) e at index e*|N| + n
StrictTwoGroup crossed_to_2group(const CrossedModule& cm);
CrossedModule strict_to_crossed(const StrictTwoGroup& s);

struct CrossedClassification {
  GroupPtr pi0;
  ModulePtr pi1;
  Cochain alpha;
  std::vector<int> section;      // pi0 -> E
  std::vector<int> coset_of;     // E -> pi0
  std::vector<int> kernel_basis; // N-elements generating pi1
};

CrossedClassification classify_crossed(const CrossedModule& cm,
                                       const std::optional<std::vector<int>>& section = std::nullopt);

// ---------------------------------------------------------------- morphisms

// (rho, beta, c) with beta: M -> rho^*M' and c a 2-cochain in rho^*M'.
struct MorphismTriple {
  Hom rho;
  ModuleMorphism beta;
  Cochain c;
};

class SpecialMorphism {
 public:
  SpecialMorphism(TwoGroupPtr src, TwoGroupPtr tgt, std::vector<int> objects, std::vector<Arrow> arrow_images,
                  std::vector<Arrow> f2);

  const TwoGroupPtr& source() const { return src_; }
  const TwoGroupPtr& target() const { return tgt_; }
  int on_object(int g) const { return obj_[g]; }
  Arrow on_arrow(const Arrow& a) const;
  // F_2(g1, g2): F(g1) (x) F(g2) -> F(g1 g2)
  Arrow f2(int g1, int g2) const;

  bool hexagon_check() const;
  bool functorial() const;  // preserves composition and identities
  bool natural_f2() const;  // F_2 natural in both arguments

 private:
  TwoGroupPtr src_, tgt_;
  std::vector<int> obj_;
  std::vector<Arrow> arr_;  // index g*|M| + u
  std::vector<Arrow> f2_;   // index g1*|G| + g2
};

// rho^*M' over the source group
ModulePtr pulled_target(const SpecialTwoGroup& src, const SpecialTwoGroup& tgt, const Hom& rho);
// d c - (beta o alpha - alpha' o rho^3)
Cochain triple_defect(const MorphismTriple& t, const SpecialTwoGroup& src, const SpecialTwoGroup& tgt);
// validate=false skips the dc condition (shape checks still apply).
SpecialMorphism triple_to_special_morphism(const MorphismTriple& t, TwoGroupPtr src, TwoGroupPtr tgt,
                                           bool validate = true);
MorphismTriple special_morphism_to_triple(const SpecialMorphism& f);
// All triples (every rho, beta, and every c in the solution coset, capped per (rho,beta)).
std::vector<MorphismTriple> enumerate_triples(const TwoGroupPtr& src, const TwoGroupPtr& tgt, std::size_t cap_per_pair);

// tau-bar with d(tau-bar) = c1 - c2 when rho and beta agree; components tau_g = (rho(g), tau-bar(g)).
std::optional<Cochain> monoidal_iso_witness(const SpecialMorphism& f1, const SpecialMorphism& f2);
// tau_{g1g2} o F1_2 = F2_2 o (tau_{g1} (x) tau_{g2}) and naturality
bool check_monoidal_iso(const SpecialMorphism& f1, const SpecialMorphism& f2, const Cochain& tau);

}  // namespace tworep
