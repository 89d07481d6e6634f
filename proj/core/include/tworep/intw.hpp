#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tworep/reps.hpp"

namespace tworep {

using RepPtr = std::shared_ptr<const RepQuadruple>;

bool same_quadruple(const RepQuadruple& a, const RepQuadruple& b);

struct OrbitData {
  Orbit orbit;                // points (i', i) of M(n', n)
  bool intertwining = false;  // every point has beta'_{i'} = beta_i
  ModulePtr module;           // functions O -> mu_N, (g.f)(p) = f(p.g)
  std::optional<Cochain> z;   // z_O(g1,g2)(i',i) = c'(g1,g2)_{i'} - c(g1,g2)_i, intertwining orbits only
};

// Orbits of M(n', n) under (i',i).g = (rho'(g)^-1 i', rho(g)^-1 i).
class IntertwinerSpace {
 public:
  IntertwinerSpace(RepPtr source, RepPtr target);

  const RepPtr& source() const { return src_; }
  const RepPtr& target() const { return tgt_; }
  const GroupPtr& group() const { return src_->c.group(); }
  const std::vector<OrbitData>& orbits() const { return orbits_; }
  int orbit_of(int ip, int i) const { return orbit_of_[ip * src_->n + i]; }
  bool intertwines(int ip, int i) const { return orbits_[orbit_of(ip, i)].intertwining; }
  // p.g on the grid
  std::pair<int, int> act(int ip, int i, int g) const;
  bool terminal() const;

 private:
  RepPtr src_, tgt_;
  std::vector<OrbitData> orbits_;
  std::vector<int> orbit_of_;
};

IntertwinerSpace build_space(const RepQuadruple& q, const RepQuadruple& qp);
// z_O for an orbit of M(n', n); the orbit need not be intertwining.
Cochain induced_cocycle(const RepQuadruple& q, const RepQuadruple& qp, const Orbit& orbit, const ModulePtr& module);

// (R, s, S): S[i'*n + i][g] has size R_{i'i} (0x0 off the support).
struct OneIntertwiner {
  RepPtr source, target;
  OneMorphism gauge;  // rank R (n' x n) and s
  std::vector<std::vector<CycloMatrix>> S;

  const RankMatrix& rank() const { return gauge.rank(); }
  const CycloMatrix& weak(int ip, int i, int g) const { return S[ip * source->n + i][g]; }
};

std::vector<std::string> validate_1intertwiner(const OneIntertwiner& xi, const IntertwinerSpace& space);
std::vector<std::string> validate_1intertwiner(const OneIntertwiner& xi);

// Phi(g): F'(g) o xi => xi o F(g), block (i', j) = S_{i', rho(g) j}(g)
TwoMorphism weakening_cell(const OneIntertwiner& xi, int g);
// The compatibility diagram with F_2, F'_2 and the unit, evaluated with 2Mat composition.
bool check_intertwiner_coherence(const OneIntertwiner& xi);

OneIntertwiner identity_intertwiner(const RepPtr& q);
// R = P(sigma), S_{i, sigma^-1(i)}(g) = zeta^{x(g)_i}
OneIntertwiner equivalence_intertwiner(const RepPtr& q, const RepPtr& qp, const EquivalenceWitness& w);

// xi2 o xi1. Throws RepMismatch.
OneIntertwiner compose_1intertwiners(const OneIntertwiner& xi2, const OneIntertwiner& xi1);
// Same rank, gauges equal on the probe box, equal S.
bool equal_intertwiners(const OneIntertwiner& a, const OneIntertwiner& b, int bound = kDefaultProbe);

// blocks T_{i',i} of size Rbar_{i'i} x R_{i'i}
struct TwoIntertwiner {
  std::size_t rows = 0, cols = 0;
  std::vector<CycloMatrix> blocks;
  const CycloMatrix& block(int ip, int i) const { return blocks[ip * cols + i]; }
};

TwoIntertwiner identity_2intertwiner(const OneIntertwiner& xi);
TwoIntertwiner zero_2intertwiner(const OneIntertwiner& xi, const OneIntertwiner& xibar);
std::vector<std::string> validate_2intertwiner(const TwoIntertwiner& t, const OneIntertwiner& xi,
                                               const OneIntertwiner& xibar);
// tbar . t. Throws NotComposable.
TwoIntertwiner vcompose_2intertwiners(const TwoIntertwiner& tbar, const TwoIntertwiner& t);
// t2 o t1 with t1: xi1 => xi1bar, t2: xi2 => xi2bar. Throws NotComposable.
TwoIntertwiner hcompose_2intertwiners(const TwoIntertwiner& t2, const OneIntertwiner& xi2,
                                      const OneIntertwiner& xi2bar, const TwoIntertwiner& t1,
                                      const OneIntertwiner& xi1, const OneIntertwiner& xi1bar);
TwoMorphism as_two_morphism(const TwoIntertwiner& t, const OneIntertwiner& xi, const OneIntertwiner& xibar);

// pi: stabilizer element -> r x r matrix (entries for non-stabilizer elements ignored).
// transversal[k] = t with p0.t = k-th orbit point; computed when empty. Throws InvalidStabilizerRep.
OneIntertwiner induce_intertwiner(const IntertwinerSpace& space, std::size_t orbit, std::size_t base_point, int r,
                                  const std::vector<CycloMatrix>& pi, std::vector<int> transversal = {});

struct OrbitSummary {
  std::vector<std::pair<int, int>> points;
  bool intertwining = false;
  std::vector<int> stabilizer;  // of the first point
  std::optional<Cochain> z;
  bool z_closed = false;
  bool z_trivial = false;  // [z_O] = 0
};
struct HomSummary {
  bool terminal = false;
  std::vector<OrbitSummary> orbits;
  std::string statement;
};
HomSummary hom_category_summary(const RepQuadruple& q, const RepQuadruple& qp);

// End(I_{beta,c}) -> Rep(G) with F_2 = s'(r): naturality, hexagon and units on random samples.
struct MonoidalReport {
  std::size_t samples = 0;
  std::size_t natural_ok = 0, hexagon_ok = 0, unit_ok = 0, intertwiner_ok = 0;
  bool ok() const {
    return natural_ok == samples && hexagon_ok == samples && unit_ok == samples && intertwiner_ok == samples;
  }
};
MonoidalReport check_monoidal_equivalence_end_trivial(const RepPtr& character, std::size_t samples,
                                                      std::mt19937_64& rng, int max_rank = 3);
// Random endo-intertwiner of a character: rank r, random tabulated gauge, S = permutation representation.
OneIntertwiner random_end_object(const RepPtr& character, int r, std::mt19937_64& rng);

// FinSets functor
RepQuadruple finset_rep(const SpecialTwoGroup& tg, const PermRep& rho, long order);
// f: {0..n-1} -> {0..n'-1}, equivariant. Throws NotEquivariant.
OneIntertwiner finset_map(const RepPtr& source, const RepPtr& target, const std::vector<int>& f);

}  // namespace tworep
