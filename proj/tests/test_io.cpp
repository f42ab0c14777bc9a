#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "bent/io.hpp"
#include "bent/state_zoo.hpp"

using namespace bent;

namespace {
struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("bent_io_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};
}  // namespace

TEST_CASE("format_float") {
  CHECK(format_float(0.5) == "0.5");
  CHECK(format_float(1.0 / 3.0) == "0.33333333333333331");
  CHECK(format_float(1.0) == "1");
  CHECK(format_float(-0.25, 12) == "-0.25");
  CHECK(format_float(1e-300) == "1e-300");
  // round-trips exactly at 17 significant digits
  for (double v : {M_PI, std::sqrt(2.0), 1.0 / 7.0, -1234.5678e9}) {
    CHECK(std::stod(format_float(v)) == v);
  }
}

TEST_CASE("pure state json round trip") {
  const PureState g = ghz(5, 0.7);
  const std::string text = state_to_json(g);
  const AnyState back = state_from_json(text);
  REQUIRE(std::holds_alternative<PureState>(back));
  const PureState& p = std::get<PureState>(back);
  CHECK(p.n_parties == 5);
  CHECK((p.amps - g.amps).norm() == 0.0);  // bit-exact through json
  // serialization is deterministic
  CHECK(state_to_json(g) == text);
}

TEST_CASE("density state json round trip") {
  const DensityMatrix s = dur(4, 0.35);
  const AnyState back = state_from_json(state_to_json(s));
  REQUIRE(std::holds_alternative<DensityMatrix>(back));
  const DensityMatrix& rho = std::get<DensityMatrix>(back);
  CHECK(rho.n_parties == 4);
  CHECK((rho.mat - s.mat).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("json errors") {
  CHECK_THROWS_AS(state_from_json("not json"), std::exception);
  CHECK_THROWS_AS(state_from_json(R"({"kind":"pure"})"), std::exception);
  CHECK_THROWS_AS(
      state_from_json(
          R"({"kind":"pure","n_parties":2,"re":[1,0],"im":[0,0]})"),
      std::exception);  // wrong amplitude count for 2 parties
  CHECK_THROWS_AS(
      state_from_json(
          R"({"kind":"banana","n_parties":1,"re":[1,0],"im":[0,0]})"),
      std::exception);
}

TEST_CASE("save and load files") {
  TempDir tmp;
  const auto path = (tmp.path / "state.json").string();
  save_state(smolin(), path);
  const AnyState back = load_state(path);
  REQUIRE(std::holds_alternative<DensityMatrix>(back));
  CHECK((std::get<DensityMatrix>(back).mat - smolin().mat)
            .cwiseAbs()
            .maxCoeff() == 0.0);
  // rewriting produces a byte-identical file
  std::ifstream f1(path);
  const std::string bytes1((std::istreambuf_iterator<char>(f1)), {});
  save_state(smolin(), path);
  std::ifstream f2(path);
  const std::string bytes2((std::istreambuf_iterator<char>(f2)), {});
  CHECK(bytes1 == bytes2);
  CHECK_THROWS_AS(load_state((tmp.path / "missing.json").string()),
                  std::exception);
}

TEST_CASE("decomposition json round trip") {
  const Decomposition dec = certificate_dur(4, 0.3);
  const std::string text = decomposition_to_json(dec);
  const Decomposition back = decomposition_from_json(text, 4);
  REQUIRE(back.weights.size() == dec.weights.size());
  CHECK((back.weights - dec.weights).cwiseAbs().maxCoeff() == 0.0);
  for (size_t k = 0; k < dec.states.size(); ++k)
    CHECK((back.states[k].amps - dec.states[k].amps).norm() == 0.0);
  REQUIRE(back.isometry.has_value());
  CHECK((*back.isometry - *dec.isometry).cwiseAbs().maxCoeff() == 0.0);
  CHECK(decomposition_to_json(back) == text);
}

TEST_CASE("parse_state_spec") {
  SUBCASE("valid specs") {
    CHECK(std::get<DensityMatrix>(parse_state_spec("smolin"))
              .mat.isApprox(smolin().mat));
    CHECK((std::get<PureState>(parse_state_spec("ghz:5")).amps -
           ghz(5).amps).norm() == 0.0);
    CHECK((std::get<PureState>(parse_state_spec("ghz:3:0.5")).amps -
           ghz(3, 0.5).amps).norm() == 0.0);
    CHECK(std::get<DensityMatrix>(parse_state_spec("dur:4:0.25"))
              .mat.isApprox(dur(4, 0.25).mat));
    CHECK((std::get<PureState>(parse_state_spec("bell:2")).amps -
           bell(2).amps).norm() == 0.0);
    CHECK((std::get<PureState>(parse_state_spec("x:3")).amps -
           x_state(3).amps).norm() == 0.0);
    CHECK((std::get<PureState>(parse_state_spec("u:4:2")).amps -
           u_state(4, 2).amps).norm() == 0.0);
    CHECK((std::get<PureState>(parse_state_spec("v:5:1")).amps -
           v_state(5, 1).amps).norm() == 0.0);
    CHECK((std::get<PureState>(parse_state_spec("psiy:4:0.3:+:u:1")).amps -
           psi_y(4, 0.3, PsiSign::plus, PsiType::u, 1).amps).norm() == 0.0);
    CHECK((std::get<PureState>(parse_state_spec("psiy:4:0.3:-:v:2")).amps -
           psi_y(4, 0.3, PsiSign::minus, PsiType::v, 2).amps).norm() == 0.0);
    CHECK(std::get<DensityMatrix>(parse_state_spec("sigma-smolin"))
              .mat.isApprox(sigma_smolin().mat));
    CHECK(std::get<DensityMatrix>(parse_state_spec("sigma-dur:5:0.4"))
              .mat.isApprox(sigma_dur(5, 0.4).mat));
  }
  SUBCASE("errors name the offending token") {
    CHECK_THROWS_WITH_AS(parse_state_spec("frobnicate"),
                         doctest::Contains("frobnicate"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_state_spec("ghz"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state_spec("ghz:abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state_spec("dur:4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state_spec("dur:4:1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state_spec("psiy:4:0.3:?:u:1"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_state_spec("bell:9"), std::invalid_argument);
  }
}
