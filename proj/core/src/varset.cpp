#include "lycoact/varset.hpp"

#include <sstream>
#include <stdexcept>

namespace lyc {

VarSet::VarSet(std::vector<VarDescriptor> vars) : vars_(std::move(vars)) {
  for (int v = 0; v < static_cast<int>(vars_.size()); ++v) {
    auto [it, fresh] = index_.emplace(vars_[v], v);
    (void)it;
    if (!fresh) throw std::invalid_argument("VarSet: duplicate variable descriptor");
  }
}

std::shared_ptr<const VarSet> VarSet::rectangular(int rows, int cols) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("VarSet::rectangular: dims must be positive");
  std::vector<VarDescriptor> vars;
  vars.reserve(static_cast<size_t>(rows) * cols);
  for (int s = 0; s < rows; ++s)
    for (int i = 0; i < cols; ++i) vars.push_back({VarSide::None, -1, s, i});
  return std::shared_ptr<const VarSet>(new VarSet(std::move(vars)));
}

std::shared_ptr<const VarSet> VarSet::doubled(const VarSet& base) {
  std::vector<VarDescriptor> vars;
  vars.reserve(2 * base.vars_.size());
  for (const auto& d : base.vars_) {
    VarDescriptor l = d;
    l.side = VarSide::Left;
    vars.push_back(l);
  }
  for (const auto& d : base.vars_) {
    VarDescriptor r = d;
    r.side = VarSide::Right;
    vars.push_back(r);
  }
  return std::shared_ptr<const VarSet>(new VarSet(std::move(vars)));
}

std::shared_ptr<const VarSet> VarSet::leveled(int rows, int cols, int depth) {
  if (depth < 0) throw std::invalid_argument("VarSet::leveled: negative depth");
  std::vector<VarDescriptor> vars;
  for (int l = 0; l <= depth; ++l)
    for (int s = 0; s < rows; ++s)
      for (int i = 0; i < cols; ++i) vars.push_back({VarSide::None, l, s, i});
  return std::shared_ptr<const VarSet>(new VarSet(std::move(vars)));
}

std::string VarSet::name(int v) const {
  const VarDescriptor& d = vars_[v];
  std::ostringstream os;
  os << 'x';
  if (d.side == VarSide::Left) os << 'L';
  if (d.side == VarSide::Right) os << 'R';
  if (d.level >= 0) os << '{' << d.level << '}';
  os << '[' << d.row + 1 << ',' << d.col + 1 << ']';
  return os.str();
}

std::string VarSet::cas_name(int v) const {
  const VarDescriptor& d = vars_[v];
  std::ostringstream os;
  os << 'x';
  if (d.side == VarSide::Left) os << 'L';
  if (d.side == VarSide::Right) os << 'R';
  if (d.level >= 0) os << d.level;
  os << '_' << d.row + 1 << '_' << d.col + 1;
  return os.str();
}

int VarSet::find(const VarDescriptor& d) const {
  auto it = index_.find(d);
  return it == index_.end() ? -1 : it->second;
}

int VarSet::find(int row, int col, VarSide side, int level) const {
  return find(VarDescriptor{side, level, row, col});
}

}  // namespace lyc
