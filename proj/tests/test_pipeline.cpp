#include <catch2/catch.hpp>

#include "naimark/pipeline.hpp"
#include "testutil.hpp"

using namespace naimark;
using testutil::max_abs_diff;

TEST_CASE("parse_pipeline: single and multi-element forms") {
  const PipelineAST one = parse_pipeline("phase(0.5)");
  REQUIRE(one.nodes.size() == 1);
  CHECK(one.nodes[0].name == "phase");
  CHECK(one.nodes[0].numbers == std::vector<double>{0.5});

  const PipelineAST two = parse_pipeline("rotate(45deg)|atten(0.2,0.0)");
  REQUIRE(two.nodes.size() == 2);
  CHECK(two.nodes[0].numbers[0] == Approx(M_PI / 4).epsilon(1e-15));
  CHECK(two.nodes[1].numbers == std::vector<double>{0.2, 0.0});

  const PipelineAST twins = parse_pipeline(" polarizer( x ) | polarizer(x)");
  REQUIRE(twins.nodes.size() == 2);
  CHECK(twins.nodes[0].axis == Axis::X);

  CHECK(parse_pipeline("").nodes.empty());
  CHECK(parse_pipeline("   \n  ").nodes.empty());
}

TEST_CASE("parse_pipeline: negative numbers, exponents, degree suffix") {
  const PipelineAST ast = parse_pipeline("phase(-90deg)|squeeze45(1.5e-1)");
  CHECK(ast.nodes[0].numbers[0] == Approx(-M_PI_2).epsilon(1e-15));
  CHECK(ast.nodes[1].numbers[0] == 0.15);
}

TEST_CASE("parse_pipeline: distinct machine-readable error codes") {
  auto code_of = [](const char* text) {
    try {
      parse_pipeline(text);
    } catch (const parse_error& e) {
      return e.parse_code();
    }
    throw std::logic_error("expected a parse error");
  };

  CHECK(code_of("phase(0.5") == parse_errc::syntax);
  CHECK(code_of("phase 0.5)") == parse_errc::syntax);
  CHECK(code_of("phase(0.5)|") == parse_errc::syntax);
  CHECK(code_of("phase(0.5)rotate(1)") == parse_errc::syntax);
  CHECK(code_of("polarizer(0.5)") == parse_errc::syntax);
  CHECK(code_of("rotate(x)") == parse_errc::syntax);
  CHECK(code_of("prism(0.5)") == parse_errc::unknown_element);
  CHECK(code_of("phase(0.5,0.6)") == parse_errc::arity_mismatch);
  CHECK(code_of("atten(0.2)") == parse_errc::arity_mismatch);
  CHECK(code_of("phase()") == parse_errc::arity_mismatch);
}

TEST_CASE("parse_pipeline: errors carry line and column") {
  try {
    parse_pipeline("phase(0.1)|\n  prism(2)");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.parse_code() == parse_errc::unknown_element);
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("serialize round-trips to an identical AST") {
  const char* texts[] = {
      "",
      "phase(0.5)",
      "rotate(45deg)|atten(0.2,0.0)|polarizer(y)",
      "squeeze45(-1.25e-1)|phase(-90deg)|polarizer(x)",
  };
  for (const char* text : texts) {
    const PipelineAST ast = parse_pipeline(text);
    CHECK(parse_pipeline(serialize(ast)) == ast);
  }
}

TEST_CASE("parse_generator_word maps onto the five generators") {
  const GeneratorWord word = parse_generator_word("z(90deg)|r(0.5)|b(-1)|s(0.25)|tri(2)");
  REQUIRE(word.size() == 5);
  CHECK(word[0].kind == Generator::Z);
  CHECK(word[0].parameter == Approx(M_PI_2).epsilon(1e-15));
  CHECK(word[1].kind == Generator::R);
  CHECK(word[2].kind == Generator::B);
  CHECK(word[3].kind == Generator::S);
  CHECK(word[4].kind == Generator::Triangular);
  CHECK_THROWS_AS(parse_generator_word("q(1)"), parse_error);
}

TEST_CASE("run_beam: empty pipeline reports the input beam only") {
  const auto stages = run_beam({1.0, 0.5, 0.2, 0.1}, parse_pipeline(""));
  REQUIRE(stages.size() == 1);
  CHECK(stages[0].element == "input");
  CHECK(stages[0].index == 0);
  CHECK(stages[0].f.has_value());
}

TEST_CASE("run_beam: quarter-wave phase circularizes a balanced coherent beam") {
  const auto stages = run_beam({1, 1, 0, 0}, parse_pipeline("phase(90deg)"));
  REQUIRE(stages.size() == 2);
  CHECK(max_abs_diff(stages.back().stokes, StokesVector{1, 0, 0, 1}) < 1e-12);
  CHECK(*stages.back().f == Approx(1.0).margin(1e-12));
}

TEST_CASE("run_beam: polarizer projects onto (1/2, 1/2, 0, 0) with f = 1") {
  const auto stages = run_beam({1, 1, 0, 0}, parse_pipeline("polarizer(x)"));
  CHECK(max_abs_diff(stages.back().stokes, StokesVector{0.5, 0.5, 0, 0}) == 0.0);
  CHECK(*stages.back().f == Approx(1.0).margin(1e-14));
  CHECK(*stages.back().chi == Approx(0.0).margin(1e-14));
}

TEST_CASE("run_beam: stage snapshots carry consistent derived quantities") {
  const BeamSpec beam = BeamSpec::from_chi(1.2, 0.8, 0.4, 0.9);
  const auto stages =
      run_beam(beam, parse_pipeline("rotate(30deg)|squeeze45(0.7)|phase(0.3)"));
  REQUIRE(stages.size() == 4);
  for (const auto& st : stages) {
    REQUIRE(st.f.has_value());
    CHECK(*st.f == Approx(degree_of_polarization(st.coherency)).margin(1e-14));
    CHECK(st.det_c == Approx(st.coherency.det()).margin(1e-14));
    CHECK(st.radii_v.r == Approx(st.stokes.radius()).margin(1e-13));
    CHECK(*st.entropy_nats == Approx(entropy(*st.f)).margin(1e-14));
  }
  // Input stage chi matches the beam's decoherence angle.
  CHECK(*stages[0].chi == Approx(beam.chi()).margin(1e-12));
}

TEST_CASE("run_beam: det is constant across transmission-preserving elements") {
  const BeamSpec beam = BeamSpec::from_chi(1.3, 0.7, 1.0, 0.6);
  const auto stages = run_beam(
      beam, parse_pipeline("phase(0.4)|rotate(1.1)|squeeze45(0.8)|atten(0.5,-0.5)|phase(2)"));
  const double det0 = stages[0].det_c;
  for (const auto& st : stages) CHECK(st.det_c == Approx(det0).margin(1e-10));
}

TEST_CASE("run_beam: annihilated beam is reported, not fatal") {
  const auto stages = run_beam({0.0, 1.0, 0.0, 0.0}, parse_pipeline("polarizer(x)|phase(1)"));
  REQUIRE(stages.size() == 3);
  CHECK_FALSE(stages[0].error.has_value());
  REQUIRE(stages[1].error.has_value());
  CHECK(*stages[1].error == "zero_beam");
  CHECK_FALSE(stages[1].f.has_value());
  CHECK(stages[1].det_c == 0.0);
  CHECK(*stages[2].error == "zero_beam");
}
