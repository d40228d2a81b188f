#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>

#include "lycoact/hopf.hpp"
#include "lycoact/lya.hpp"
#include "lycoact/rep.hpp"
#include "lycoact/symmetry.hpp"
#include "lycoact/universal.hpp"

namespace lyc::io {

using nlohmann::json;

inline constexpr const char* kLibraryVersion = "0.1.0";

/// FNV-1a 64-bit over the raw file bytes, rendered as 16 hex digits.
std::string file_hash(const std::filesystem::path& path);

// All file formats use 1-based indices; scalars are strings ("num/den" or
// decimal) or plain JSON integers.

Rational scalar_from_json(const json& j);
json scalar_to_json(const Rational& r);

LYAlgebra algebra_from_json(const json& j);
json algebra_to_json(const LYAlgebra& L);
LYAlgebra load_algebra(const std::filesystem::path& path);

CommAlgebra comm_algebra_from_json(const json& j);
json comm_algebra_to_json(const CommAlgebra& A);
CommAlgebra load_comm_algebra(const std::filesystem::path& path);

QMatrix matrix_from_json(const json& j);  // {"entries": [[..],..]} or a bare 2D array
json matrix_to_json(const QMatrix& m);
QMatrix load_matrix(const std::filesystem::path& path);

/// Module file: {"over": <algebra file ref>, "dim": m,
///   "rho": [[i, matrix],...], "D": [[i,j,matrix],...], "theta": [[i,j,matrix],...]}.
/// The "over" path is resolved relative to the module file's directory.
LYModule module_from_json(const json& j, const std::filesystem::path& base_dir);
json module_to_json(const LYModule& M, const std::string& over_ref);
LYModule load_module(const std::filesystem::path& path);

/// Matrix point file: {"wdim": w, "images": [[s, i, matrix],...]};
/// missing (s,i) entries are zero matrices.
MatrixPoint matrix_point_from_json(const Presentation& pres, const json& j);

json grading_to_json(const Grading& g);

std::string presentation_text(const Presentation& pres);
json presentation_json(const Presentation& pres);
std::string hopf_text(const HopfPresentation& H);
json hopf_json(const HopfPresentation& H);
std::string module_presentation_text(const ModulePresentation& mp);
json module_presentation_json(const ModulePresentation& mp);

/// Input file for an external computer-algebra system: declares the ring and
/// the ideal, one generator per line (Singular syntax).
std::string cas_script(const Presentation& pres);
std::string cas_script(const HopfPresentation& H);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace lyc::io
