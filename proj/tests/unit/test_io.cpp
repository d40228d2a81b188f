#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "common/test_util.hpp"
#include "lycoact/io.hpp"

using namespace lyc;
using lyct::r;
namespace fs = std::filesystem;

namespace {

fs::path data_dir() {
  const char* env = std::getenv("LYCOACT_TEST_DATA");
  REQUIRE(env != nullptr);
  return fs::path(env);
}

}  // namespace

TEST_CASE("scalar json forms") {
  CHECK(io::scalar_from_json(nlohmann::json(3)) == r(3));
  CHECK(io::scalar_from_json(nlohmann::json("1/2")) == r(1, 2));
  CHECK(io::scalar_from_json(nlohmann::json("-0.25")) == r(-1, 4));
  CHECK_THROWS_AS(io::scalar_from_json(nlohmann::json(nullptr)), InputError);
  CHECK(io::scalar_to_json(r(-5, 3)) == nlohmann::json("-5/3"));
}

TEST_CASE("algebra json roundtrip") {
  for (const LYAlgebra& L : {heisenberg(1), heisenberg(2), lyct::sl2_lya(), abelian_lya(2)}) {
    LYAlgebra back = io::algebra_from_json(io::algebra_to_json(L));
    CHECK(back.dim() == L.dim());
    CHECK(back.tau() == L.tau());
    CHECK(back.omega() == L.omega());
    CHECK(back.labels() == L.labels());
  }
}

TEST_CASE("data files match the library constructors") {
  LYAlgebra h1 = io::load_algebra(data_dir() / "heisenberg1.json");
  CHECK(h1.tau() == heisenberg(1).tau());
  CHECK(h1.omega() == heisenberg(1).omega());
  LYAlgebra s = io::load_algebra(data_dir() / "sl2.json");
  CHECK(s.tau() == lyct::sl2_lya().tau());
  CHECK(s.omega() == lyct::sl2_lya().omega());
  CommAlgebra d = io::load_comm_algebra(data_dir() / "dual_numbers.json");
  d.validate();
  CHECK(d.dim() == 2);
}

TEST_CASE("malformed algebra files raise input errors") {
  CHECK_THROWS_AS(io::algebra_from_json(nlohmann::json::object()), InputError);
  nlohmann::json bad = {{"dim", 2}, {"tau", {{1, 2}}}};
  CHECK_THROWS_AS(io::algebra_from_json(bad), InputError);
  nlohmann::json out_of_range = {{"dim", 2}, {"tau", {{1, 5, 1, "1"}}}};
  CHECK_THROWS_AS(io::algebra_from_json(out_of_range), InputError);
}

TEST_CASE("matrix json accepts both layouts") {
  nlohmann::json bare = {{1, "1/2"}, {0, 3}};
  QMatrix m = io::matrix_from_json(bare);
  CHECK(m.at(0, 1) == r(1, 2));
  CHECK(m.at(1, 1) == r(3));
  nlohmann::json wrapped = {{"entries", bare}};
  CHECK(io::matrix_from_json(wrapped) == m);
  CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);
  nlohmann::json ragged = {{1, 2}, {3}};
  CHECK_THROWS_AS(io::matrix_from_json(ragged), InputError);
}

TEST_CASE("module file roundtrip through the self module") {
  LYModule m = io::load_module(data_dir() / "selfmod_h1.json");
  LYModule expect = self_module(heisenberg(1));
  CHECK(m.mdim() == expect.mdim());
  for (int i = 0; i < 3; ++i) CHECK(m.rho(i) == expect.rho(i));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(m.D(i, j) == expect.D(i, j));
      CHECK(m.theta(i, j) == expect.theta(i, j));
    }
  CHECK(validate_module(m).all_passed());
}

TEST_CASE("matrix point file verifies against the presentation") {
  Presentation pres = Presentation::square(heisenberg(1));
  nlohmann::json pj = nlohmann::json::parse(io::read_file(data_dir() / "swap_point.json"));
  MatrixPoint w = io::matrix_point_from_json(pres, pj);
  CHECK(w.wdim() == 1);
  CHECK(w.image(0, 0).at(0, 0) == r(-1));
  CHECK(w.image(1, 2).at(0, 0) == r(1));
}

TEST_CASE("presentation dump matches the frozen golden file") {
  Presentation pres = Presentation::square(heisenberg(1));
  std::string text = io::presentation_text(pres);
  CHECK(text == io::read_file(data_dir() / "golden" / "heisenberg1_presentation.txt"));
  std::string jtext = io::presentation_json(pres).dump(2) + "\n";
  CHECK(jtext == io::read_file(data_dir() / "golden" / "heisenberg1_presentation.json"));
}

TEST_CASE("sl2 presentation dump matches its frozen golden file") {
  Presentation pres = Presentation::square(lyct::sl2_lya());
  CHECK(io::presentation_text(pres) == io::read_file(data_dir() / "golden" / "sl2_presentation.txt"));
}

TEST_CASE("cas script matches the frozen golden file") {
  Presentation pres = Presentation::square(heisenberg(1));
  std::string script = io::cas_script(pres);
  CHECK(script == io::read_file(data_dir() / "golden" / "heisenberg1_cas.txt"));
  CHECK(script.substr(0, 9) == "ring R = ");
  // one generator per line between "ideal J =" and the terminating line
  size_t start = script.find("ideal J =\n");
  REQUIRE(start != std::string::npos);
  int lines = 0;
  for (size_t p = start; p < script.size(); ++p)
    if (script[p] == '\n') ++lines;
  CHECK(lines == 1 + 36 + 1);  // header + generators + trailing "J;"
}

TEST_CASE("grading json shape") {
  auto z2 = FiniteAbelianGroup::parse("2x2");
  Grading g = Grading::diagonal(z2, {0, 3});
  nlohmann::json j = io::grading_to_json(g);
  CHECK(j["group"] == nlohmann::json({2, 2}));
  CHECK(j["assignment"][0] == nlohmann::json({1, {0, 0}}));
  CHECK(j["assignment"][1] == nlohmann::json({2, {1, 1}}));
}

TEST_CASE("module presentation dump format") {
  LYAlgebra h = heisenberg(1);
  Presentation pres = Presentation::square(h);
  auto [mp, gamma] = universal_module_presentation(self_module(h), self_module(h), pres);
  (void)gamma;
  std::string text = io::module_presentation_text(mp);
  CHECK(text.find("Y[1,1]") != std::string::npos);
  CHECK(text.find(")*Y[") != std::string::npos);
  CHECK(text.find("relations (") != std::string::npos);

  auto [free_mp, g2] = universal_module_presentation(zero_module(h, 1), zero_module(h, 1), pres);
  (void)g2;
  CHECK(io::module_presentation_text(free_mp).find("free module of rank 1") != std::string::npos);
}

TEST_CASE("hopf dump mentions levels and delta") {
  BialgebraPresentation b = BialgebraPresentation::build(abelian_lya(1));
  HopfPresentation h = hopf_envelope(b, 1);
  std::string text = io::hopf_text(h);
  CHECK(text.find("x{0}[1,1]") != std::string::npos);
  CHECK(text.find("x{1}[1,1]") != std::string::npos);
  CHECK(text.find("conv{0,1}[1,1]") != std::string::npos);
  CHECK(text.find("Delta(x{0}[1,1]) = xL{0}[1,1]*xR{0}[1,1]") != std::string::npos);
}

TEST_CASE("file hash is stable") {
  std::string h1 = io::file_hash(data_dir() / "heisenberg1.json");
  CHECK(h1.size() == 16);
  CHECK(h1 == io::file_hash(data_dir() / "heisenberg1.json"));
  CHECK(h1 != io::file_hash(data_dir() / "sl2.json"));
}
