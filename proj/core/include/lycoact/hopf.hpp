#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lycoact/universal.hpp"

namespace lyc {

/// One generator of a truncated Hopf-envelope presentation.
struct HopfGenerator {
  enum class Kind { P, Q, ConvLR, ConvRL };
  Kind kind = Kind::P;
  int level = 0;  // P/Q: level of the lift; Conv*: lower level of the pair
  Idx4 idx{};     // P: (a,i,j,-1); Q: (a,i,j,k); Conv*: (i,j,-1,-1)
  Polynomial poly;

  std::string name() const;
};

/// Depth-truncated presentation of the free commutative Hopf algebra on
/// A(L): level-tagged variables x{0}..x{depth}, the P/Q relations lifted to
/// every level, and the convolution relations
///   sum_s x{l}[i,s] x{l+1}[s,j] = delta_ij = sum_s x{l+1}[i,s] x{l}[s,j].
/// Delta alternates: straight on even levels, reversed tensor order on odd.
/// The antipode shifts levels by one and is partial at the top level.
class HopfPresentation {
 public:
  static HopfPresentation build(const BialgebraPresentation& B, int depth);

  int depth() const { return depth_; }
  int dim() const { return n_; }
  MonomialOrder order() const { return order_; }
  const std::shared_ptr<const VarSet>& varset() const { return vars_; }
  const std::shared_ptr<const VarSet>& doubled_varset() const { return doubled_; }
  const std::vector<HopfGenerator>& generators() const { return gens_; }
  const Ideal& ideal() const { return ideal_; }

  int var(int level, int s, int i) const;
  /// Delta(x{l}[i,j]) over the doubled leveled variable set.
  Polynomial delta_of_var(int v) const;
  /// eps(x{l}[i,j]) = delta_ij at every level.
  Rational epsilon_of_var(int v) const;

  /// Level shift x{l} -> x{l+1}; nullopt when p touches the top level.
  std::optional<Polynomial> antipode_image(const Polynomial& p) const;
  /// Level shift x{l+2} -> x{l} for the optional S^2 stability check;
  /// identity on levels 0 and 1.
  Polynomial square_antipode_image(const Polynomial& p) const;

  /// The level-0 P/Q generators in the plain presentation's variable set
  /// (for slice-equality checks).
  std::vector<Polynomial> level0_slice() const;

 private:
  HopfPresentation() = default;
  int depth_ = 0, n_ = 0;
  MonomialOrder order_ = MonomialOrder::DegRevLex;
  std::shared_ptr<const VarSet> vars_;
  std::shared_ptr<const VarSet> doubled_;
  std::shared_ptr<const VarSet> base_vars_;
  std::vector<HopfGenerator> gens_;
  Ideal ideal_;
};

HopfPresentation hopf_envelope(const BialgebraPresentation& B, int depth);

struct CoactionReport {
  bool defects_match_level0 = false;
  std::vector<Containment> memberships;
  bool all_certified() const;
};

/// X_L: e_i |-> sum_s e_s (x) x{0}[s,i]; the morphism defects are the level-0
/// generators up to sign and reduce to zero in the envelope ideal.
CoactionReport universal_coaction(const LYAlgebra& L, const HopfPresentation& H, int degree_cap = -1);

struct AntipodeEntry {
  std::string generator;
  bool checkable = false;  // false when the image would need a level beyond depth
  Containment membership = Containment::Unknown;
};

struct AntipodeReport {
  std::vector<AntipodeEntry> entries;
  /// Every checkable entry certified, and at least one was checkable.
  bool all_certified() const;
  int unknown_count() const;
};

/// S(g) lies in the ideal for every generator whose image stays within the
/// truncation: the computable fragment of S(I) in I.
AntipodeReport antipode_check(const HopfPresentation& H, int degree_cap = -1);

/// Optional check that x{l+2} -> x{l} maps generators into the ideal
/// (S^2 = id is never assumed, only tested on request).
AntipodeReport square_antipode_check(const HopfPresentation& H, int degree_cap = -1);

}  // namespace lyc
