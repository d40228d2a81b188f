#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lyc {

/// Base for all structured errors; `witness()` carries the smallest failing
/// index tuple (1-based, as in the file formats) when one exists.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, std::vector<int> witness = {})
      : std::runtime_error(code + ": " + message), code_(std::move(code)), witness_(std::move(witness)) {}
  const std::string& code() const { return code_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::string code_;
  std::vector<int> witness_;
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& m, std::vector<int> w = {}) : Error("IndexOutOfRange", m, std::move(w)) {}
};
struct NotALieAlgebra : Error {
  explicit NotALieAlgebra(const std::string& m, std::vector<int> w = {}) : Error("NotALieAlgebra", m, std::move(w)) {}
};
struct NotALeibnizAlgebra : Error {
  explicit NotALeibnizAlgebra(const std::string& m, std::vector<int> w = {}) : Error("NotALeibnizAlgebra", m, std::move(w)) {}
};
struct NotAMalcevAlgebra : Error {
  explicit NotAMalcevAlgebra(const std::string& m, std::vector<int> w = {}) : Error("NotAMalcevAlgebra", m, std::move(w)) {}
};
struct InvalidAlgebra : Error {
  explicit InvalidAlgebra(const std::string& m, std::vector<int> w = {}) : Error("InvalidAlgebra", m, std::move(w)) {}
};
struct MixedVarSets : Error {
  explicit MixedVarSets(const std::string& m) : Error("MixedVarSets", m) {}
};
struct UnverifiedPoint : Error {
  explicit UnverifiedPoint(const std::string& m) : Error("UnverifiedPoint", m) {}
};
struct NotAMorphism : Error {
  explicit NotAMorphism(const std::string& m, std::vector<int> w = {}) : Error("NotAMorphism", m, std::move(w)) {}
};
struct FiniteTargetRequired : Error {
  explicit FiniteTargetRequired(const std::string& m) : Error("FiniteTargetRequired", m) {}
};
struct RelationViolated : Error {
  RelationViolated(const std::string& m, std::string generator)
      : Error("RelationViolated", m + " (generator " + generator + ")"), generator_(std::move(generator)) {}
  const std::string& generator() const { return generator_; }

 private:
  std::string generator_;
};
struct NonCommutingImages : Error {
  explicit NonCommutingImages(const std::string& m, std::vector<int> w = {}) : Error("NonCommutingImages", m, std::move(w)) {}
};
struct UnverifiedMatrixPoint : Error {
  explicit UnverifiedMatrixPoint(const std::string& m) : Error("UnverifiedMatrixPoint", m) {}
};
struct NotAModuleMorphism : Error {
  explicit NotAModuleMorphism(const std::string& m, std::vector<int> w = {}) : Error("NotAModuleMorphism", m, std::move(w)) {}
};
struct NotADecomposition : Error {
  explicit NotADecomposition(const std::string& m, std::vector<int> w = {}) : Error("NotADecomposition", m, std::move(w)) {}
};
struct NonInvertiblePoint : Error {
  explicit NonInvertiblePoint(const std::string& m) : Error("NonInvertiblePoint", m) {}
};
struct ComponentsDoNotSum : Error {
  explicit ComponentsDoNotSum(const std::string& m) : Error("ComponentsDoNotSum", m) {}
};
struct InputError : Error {
  explicit InputError(const std::string& m) : Error("InputError", m) {}
};

}  // namespace lyc
