#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "lycoact/polynomial.hpp"

namespace lyc {

/// Remainder and quotients of multivariate division: p = sum q_i G_i + r,
/// no term of r divisible by any leading term of G.
struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& G);
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G);

struct GroebnerResult {
  std::vector<Polynomial> basis;  // inter-reduced, monic, sorted by leading monomial
  bool complete = false;          // false when the degree cap dropped S-pairs
  /// When representation tracking is on: basis[k] = sum_i representations[k][i] * gens[i].
  std::vector<std::vector<Polynomial>> representations;
};

/// Buchberger completion with the normal selection strategy (minimal lcm
/// degree first) and the coprimality / chain criteria. S-pairs whose lcm
/// degree exceeds `degree_cap` are dropped and flagged via `complete=false`.
/// Deterministic for fixed inputs.
GroebnerResult buchberger(const std::vector<Polynomial>& gens, MonomialOrder order, int degree_cap,
                          bool track_representations = false);

enum class Containment { Yes, No, Unknown };

std::string to_string(Containment c);

/// A polynomial ideal with a lazily computed, cached Groebner basis.
/// Immutable generator list; the cache is keyed by (order, cap).
class Ideal {
 public:
  Ideal() = default;
  Ideal(std::shared_ptr<const VarSet> vars, std::vector<Polynomial> gens,
        MonomialOrder order = MonomialOrder::DegRevLex);

  const std::shared_ptr<const VarSet>& varset() const { return vars_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  MonomialOrder order() const { return order_; }

  /// 2 * (max generator degree) + 2, at least 2.
  int default_degree_cap() const;

  /// Shared, cached basis for the given cap (recomputed if the cap changes).
  GroebnerResult groebner(int degree_cap = -1) const;

  /// Yes on reduction to zero (sound for any partial basis); No only when
  /// the basis is complete; Unknown otherwise.
  Containment contains(const Polynomial& p, int degree_cap = -1) const;

  /// Cofactors c_i with p = sum c_i * generators()[i], when contains == Yes.
  std::optional<std::vector<Polynomial>> contains_certificate(const Polynomial& p, int degree_cap = -1) const;

 private:
  std::shared_ptr<const VarSet> vars_;
  std::vector<Polynomial> gens_;
  MonomialOrder order_ = MonomialOrder::DegRevLex;

  struct Cache {
    int cap = -1;
    bool tracked = false;
    GroebnerResult result;
  };
  // Shared box keeps Ideal copyable/movable; copies share the cache, which is
  // sound because the generator list is immutable.
  struct CacheBox {
    std::mutex mu;
    std::shared_ptr<Cache> cache;
  };
  std::shared_ptr<CacheBox> box_ = std::make_shared<CacheBox>();

  std::shared_ptr<Cache> basis_for(int cap, bool tracked) const;
};

}  // namespace lyc
