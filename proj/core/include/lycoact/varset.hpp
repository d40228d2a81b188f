#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace lyc {

/// Side tag for variables living in a tensor square of a presentation ring.
enum class VarSide : uint8_t { None = 0, Left = 1, Right = 2 };

/// Descriptor of one generator variable x_{si}. `level` is -1 for plain
/// variables and >= 0 for the level-tagged variables of a Hopf presentation.
struct VarDescriptor {
  VarSide side = VarSide::None;
  int level = -1;
  int row = 0;  // s, 0-based
  int col = 0;  // i, 0-based

  auto operator<=>(const VarDescriptor&) const = default;
};

/// Immutable ordered set of variables; the creation order is the total order
/// used by all monomial orders. Shared between all polynomials over it.
class VarSet {
 public:
  /// x[s,i] for s in [0..rows), i in [0..cols), ordered row-major.
  static std::shared_ptr<const VarSet> rectangular(int rows, int cols);
  static std::shared_ptr<const VarSet> square(int n) { return rectangular(n, n); }
  /// One anonymous block of n plain variables x[1,1..n].
  static std::shared_ptr<const VarSet> plain(int n) { return rectangular(1, n); }
  /// Left copies of `base` followed by right copies (for A (x) A checks).
  static std::shared_ptr<const VarSet> doubled(const VarSet& base);
  /// Level blocks x{0}[s,i], ..., x{depth}[s,i], each rows x cols row-major.
  static std::shared_ptr<const VarSet> leveled(int rows, int cols, int depth);

  int size() const { return static_cast<int>(vars_.size()); }
  const VarDescriptor& desc(int v) const { return vars_[v]; }
  /// Display name, 1-based indices: "x[2,1]", "xL[1,1]", "x{1}[2,3]".
  std::string name(int v) const;
  /// CAS-safe name: "x_2_1", "xL_1_1", "x1_2_3".
  std::string cas_name(int v) const;
  int find(const VarDescriptor& d) const;  // -1 if absent
  int find(int row, int col, VarSide side = VarSide::None, int level = -1) const;

  bool operator==(const VarSet& o) const { return vars_ == o.vars_; }

 private:
  explicit VarSet(std::vector<VarDescriptor> vars);
  std::vector<VarDescriptor> vars_;
  std::map<VarDescriptor, int> index_;
};

}  // namespace lyc
