// Command-line front end: beam cascades through the optical-pipeline DSL,
// four-momentum classification, Poincare-sphere and entropy sweeps, the Monte
// Carlo coherency oracle, and 4x4 images of generator words.
//
// Output goes to stdout; under --json every record is one JSON object per
// line carrying a schema version field "v":1.  Diagnostics never touch the
// data stream.  Exit codes: 0 success, 2 parse error (DSL or command line),
// 3 domain error.

#include <cinttypes>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "naimark/naimark.hpp"

using json = nlohmann::json;
using namespace naimark;

namespace {

// Scalar with an optional attached "deg" suffix, e.g. "0.5" or "45deg".
double parse_angle(const std::string& text, const char* flag) {
  const bool deg = text.size() > 3 && text.substr(text.size() - 3) == "deg";
  const std::string body = deg ? text.substr(0, text.size() - 3) : text;
  try {
    std::size_t used = 0;
    const double v = std::stod(body, &used);
    if (used != body.size()) throw std::invalid_argument(body);
    return deg ? v * M_PI / 180.0 : v;
  } catch (const std::exception&) {
    throw parse_error(parse_errc::syntax, 1, 1,
                      std::string(flag) + ": expected a number with optional 'deg' suffix, got '" +
                          text + "'");
  }
}

json to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

json to_json(const HermitianMat2& h) {
  return json::array({json::array({to_json(cplx(h.d1)), to_json(h.off)}),
                      json::array({to_json(std::conj(h.off)), to_json(cplx(h.d2))})});
}

json to_json(const Mat2& m) {
  return json::array({json::array({to_json(m.e11), to_json(m.e12)}),
                      json::array({to_json(m.e21), to_json(m.e22)})});
}

json to_json(const Mat4& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < 4; ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const StokesVector& s) {
  return {{"s0", s.s0}, {"s3", s.s3}, {"s1", s.s1}, {"s2", s.s2}};
}

json stage_to_json(const StageReport& st) {
  json j{{"v", 1},
         {"kind", "stage"},
         {"stage", st.index},
         {"element", st.element},
         {"stokes", to_json(st.stokes)},
         {"det", st.det_c},
         {"radii", {{"s0", st.radii_v.s0}, {"r", st.radii_v.r}, {"s3", st.radii_v.s3}}}};
  j["f"] = st.f ? json(*st.f) : json(nullptr);
  j["chi"] = st.chi ? json(*st.chi) : json(nullptr);
  j["entropy"] = st.entropy_nats ? json(*st.entropy_nats) : json(nullptr);
  if (st.error) j["error"] = *st.error;
  return j;
}

void print_stage_table(const std::vector<StageReport>& stages) {
  std::printf("%-5s %-28s %10s %10s %10s %10s %8s %8s %8s %10s\n", "stage", "element", "S0",
              "S3", "S1", "S2", "f", "chi", "S", "det");
  for (const auto& st : stages) {
    std::printf("%-5zu %-28s %10.6f %10.6f %10.6f %10.6f", st.index, st.element.c_str(),
                st.stokes.s0, st.stokes.s3, st.stokes.s1, st.stokes.s2);
    if (st.f)
      std::printf(" %8.5f %8.5f %8.5f", *st.f, *st.chi, *st.entropy_nats);
    else
      std::printf(" %8s %8s %8s", "-", "-", "-");
    std::printf(" %10.3e", st.det_c);
    if (st.error) std::printf("  [%s]", st.error->c_str());
    std::printf("\n");
  }
}

struct BeamFlags {
  double a{1.0}, b{1.0};
  std::string delta{"0"}, sigma, chi;

  void attach(CLI::App* cmd, bool with_coherence = true) {
    cmd->add_option("--a", a, "x-component field amplitude (>= 0)");
    cmd->add_option("--b", b, "y-component field amplitude (>= 0)");
    cmd->add_option("--delta", delta, "relative phase, radians or e.g. 45deg");
    if (with_coherence) {
      auto* s = cmd->add_option("--sigma", sigma, "decoherence exponent (>= 0)");
      auto* c = cmd->add_option("--chi", chi, "decoherence angle, radians or e.g. 45deg");
      s->excludes(c);
      c->excludes(s);
    }
  }

  BeamSpec beam() const {
    const double d = parse_angle(delta, "--delta");
    if (!chi.empty()) return BeamSpec::from_chi(a, b, d, parse_angle(chi, "--chi"));
    if (!sigma.empty()) {
      try {
        std::size_t used = 0;
        const double s = std::stod(sigma, &used);
        if (used != sigma.size()) throw std::invalid_argument(sigma);
        return BeamSpec::from_sigma(a, b, d, s);
      } catch (const std::exception&) {
        throw parse_error(parse_errc::syntax, 1, 1,
                          "--sigma: expected a number, got '" + sigma + "'");
      }
    }
    return BeamSpec::from_sigma(a, b, d, 0.0);
  }
};

int cmd_beam(const BeamFlags& flags, const std::string& pipeline_text, bool as_json) {
  const PipelineAST ast = parse_pipeline(pipeline_text);
  const auto stages = run_beam(flags.beam(), ast);
  if (as_json) {
    for (const auto& st : stages) std::printf("%s\n", stage_to_json(st).dump().c_str());
  } else {
    if (!ast.nodes.empty()) std::printf("pipeline: %s\n", serialize(ast).c_str());
    print_stage_table(stages);
  }
  return 0;
}

int cmd_classify(const std::vector<double>& p4, bool as_json) {
  const MomentumMatrix p = MomentumMatrix::from_components(p4[0], p4[1], p4[2], p4[3]);
  const LittleGroupClass cls = classify(p);

  if (cls.kind == LittleGroupKind::Null) {
    if (as_json) {
      const json j{{"v", 1}, {"kind", "classify"}, {"class", "null"}, {"mass_squared", 0.0}};
      std::printf("%s\n", j.dump().c_str());
    } else {
      std::printf("class: null (zero momentum matrix; no canonical form)\n");
    }
    return 0;
  }

  const Canonicalization canon = canonicalize(p);
  const double sample_parameter = 0.5;
  const Stabilizer w = stabilizer_element(cls.kind, sample_parameter);
  const char* family = cls.kind == LittleGroupKind::Massive      ? "rotation"
                       : cls.kind == LittleGroupKind::Massless   ? "triangular"
                                                                 : "squeeze";
  if (as_json) {
    const json j{{"v", 1},
                 {"kind", "classify"},
                 {"class", little_group_name(cls.kind)},
                 {"mass_squared", cls.invariant_mass_squared},
                 {"momentum", {{"e", p4[0]}, {"pz", p4[1]}, {"px", p4[2]}, {"py", p4[3]}}},
                 {"canonical", to_json(canon.canonical.h)},
                 {"transform", to_json(canon.g.mat())},
                 {"stabilizer",
                  {{"family", family},
                   {"parameter", sample_parameter},
                   {"element", to_json(w.element.mat())}}}};
    std::printf("%s\n", j.dump().c_str());
    return 0;
  }
  const HermitianMat2& c = canon.canonical.h;
  std::printf("class:      %s\n", little_group_name(cls.kind));
  std::printf("m^2:        %.17g\n", cls.invariant_mass_squared);
  std::printf("canonical:  [[%.6g, 0], [0, %.6g]]\n", c.d1, c.d2);
  std::printf("stabilizer: %s family, e.g. parameter %.2g\n", family, sample_parameter);
  std::printf("phase Z(delta) stabilizes every canonical momentum\n");
  return 0;
}

int cmd_sphere(const BeamFlags& flags, int points, bool as_json) {
  if (points < 2) throw domain_error("sphere: need at least 2 grid points");
  const double d = parse_angle(flags.delta, "--delta");
  if (!as_json)
    std::printf("%10s %10s %10s %10s %10s %10s %10s %12s\n", "chi", "S0", "R", "S3", "f",
                "polar", "azimuth", "S0^2-R^2");
  for (int k = 0; k < points; ++k) {
    const double chi = M_PI_2 * static_cast<double>(k) / (points - 1);
    const BeamSpec beam = BeamSpec::from_chi(flags.a, flags.b, d, chi);
    const PoincareRadii rr = radii(beam);
    const SphereState state = sphere_state(stokes_from_coherency(coherency_from_beam(beam)));
    const double f = rr.s0 > 0.0 ? rr.r / rr.s0 : 0.0;
    const double invariant = lorentz_invariant(beam);
    if (as_json) {
      const json j{{"v", 1},        {"kind", "sphere"},        {"chi", chi},
                   {"s0", rr.s0},   {"r", rr.r},               {"s3", rr.s3},
                   {"f", f},        {"polar", state.polar},    {"azimuth", state.azimuth},
                   {"invariant", invariant}};
      std::printf("%s\n", j.dump().c_str());
    } else {
      std::printf("%10.6f %10.6f %10.6f %10.6f %10.6f %10.6f %10.6f %12.6e\n", chi, rr.s0,
                  rr.r, rr.s3, f, state.polar, state.azimuth, invariant);
    }
  }
  return 0;
}

int cmd_entropy(const BeamFlags& flags, int points, bool as_json) {
  if (points < 2) throw domain_error("entropy: need at least 2 grid points");
  if (!as_json)
    std::printf("%10s %10s %10s %10s %10s %12s %12s %12s\n", "chi", "f", "S", "f'", "S'",
                "det", "det'", "det+det'");
  for (int k = 0; k < points; ++k) {
    const double chi = M_PI_2 * static_cast<double>(k) / (points - 1);
    const TwoSphereSystem sys =
        second_sphere(BeamSpec::from_chi(flags.a, flags.b, 0.0, chi));
    if (as_json) {
      const json j{{"v", 1},
                   {"kind", "entropy"},
                   {"chi", chi},
                   {"f", sys.f},
                   {"entropy", sys.entropy_nats},
                   {"f_prime", sys.f_complement},
                   {"entropy_prime", sys.entropy_complement},
                   {"det", sys.det_c},
                   {"det_prime", sys.det_c_complement},
                   {"det_sum", sys.conserved()}};
      std::printf("%s\n", j.dump().c_str());
    } else {
      std::printf("%10.6f %10.6f %10.6f %10.6f %10.6f %12.6e %12.6e %12.6e\n", chi, sys.f,
                  sys.entropy_nats, sys.f_complement, sys.entropy_complement, sys.det_c,
                  sys.det_c_complement, sys.conserved());
    }
  }
  const double ab = flags.a * flags.b;
  if (as_json) {
    const json j{{"v", 1},
                 {"kind", "entropy_summary"},
                 {"max_entropy", max_entropy(flags.a, flags.b)},
                 {"ab_squared", ab * ab}};
    std::printf("%s\n", j.dump().c_str());
  } else {
    std::printf("max entropy at chi=90deg: %.12f nats; conserved det sum: %.12f\n",
                max_entropy(flags.a, flags.b), ab * ab);
  }
  return 0;
}

int cmd_oracle(const BeamFlags& flags, double sigma, std::uint64_t samples, std::uint64_t seed,
               bool as_json) {
  const double d = parse_angle(flags.delta, "--delta");
  const oracle::JitterModel model{2.0 * sigma, samples, seed};
  const CoherencyMatrix mc = oracle::mc_coherency(flags.a, flags.b, d, model);
  const double ab = flags.a * flags.b;
  const double expected = std::exp(-sigma);
  const double measured = ab > 0.0 ? std::abs(mc.s12()) / ab : 0.0;
  if (as_json) {
    const json j{{"v", 1},
                 {"kind", "oracle"},
                 {"seed", seed},
                 {"samples", samples},
                 {"sigma", sigma},
                 {"phase_variance", model.phase_variance},
                 {"expected_ratio", expected},
                 {"measured_ratio", measured},
                 {"abs_error", std::abs(measured - expected)},
                 {"coherency", to_json(mc.h)}};
    std::printf("%s\n", j.dump().c_str());
  } else {
    std::printf("samples: %" PRIu64 "   seed: %" PRIu64 "\n", samples, seed);
    std::printf("|S12|/(ab): measured %.9f, expected e^-sigma = %.9f, error %.3e\n", measured,
                expected, std::abs(measured - expected));
  }
  return 0;
}

int cmd_lorentz(const std::string& word_text, bool as_json) {
  const GeneratorWord word = parse_generator_word(word_text);
  const GroupElement g = compose(word);
  const LorentzMatrix4 lambda = to_four_by_four(g);
  if (as_json) {
    const json j{{"v", 1},
                 {"kind", "lorentz"},
                 {"word", word_text},
                 {"element", to_json(g.mat())},
                 {"matrix", to_json(lambda.mat())}};
    std::printf("%s\n", j.dump().c_str());
    return 0;
  }
  std::printf("2x2 element:\n");
  const Mat2& m = g.mat();
  std::printf("  [%12.8f%+12.8fi  %12.8f%+12.8fi]\n", m.e11.real(), m.e11.imag(), m.e12.real(),
              m.e12.imag());
  std::printf("  [%12.8f%+12.8fi  %12.8f%+12.8fi]\n", m.e21.real(), m.e21.imag(), m.e22.real(),
              m.e22.imag());
  std::printf("4x4 on (t, z, x, y):\n");
  for (std::size_t i = 0; i < 4; ++i)
    std::printf("  [%14.10f %14.10f %14.10f %14.10f]\n", lambda.at(i, 0), lambda.at(i, 1),
                lambda.at(i, 2), lambda.at(i, 3));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-by-two Lorentz group toolkit: little groups and polarization optics"};
  app.require_subcommand(1);
  // Subcommands hand --json back up to the parent.
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON Lines on stdout");

  auto* beam_cmd = app.add_subcommand("beam", "run a beam through an optical pipeline");
  BeamFlags beam_flags;
  beam_flags.attach(beam_cmd);
  std::string pipeline_text;
  beam_cmd->add_option("pipeline", pipeline_text,
                       "e.g. \"rotate(45deg)|atten(0.2,0)|polarizer(x)\"");

  auto* classify_cmd = app.add_subcommand("classify", "little-group class of a four-momentum");
  std::vector<double> p4;
  classify_cmd->add_option("momentum", p4, "four-momentum components E pz px py")
      ->expected(4)
      ->required();

  auto* sphere_cmd = app.add_subcommand("sphere", "radii and angles over a chi grid");
  BeamFlags sphere_flags;
  sphere_flags.attach(sphere_cmd, false);
  int sphere_points = 91;
  sphere_cmd->add_option("--points", sphere_points, "grid points on [0, 90deg]");

  auto* entropy_cmd = app.add_subcommand("entropy", "entropy of both spheres over a chi grid");
  BeamFlags entropy_flags;
  entropy_flags.attach(entropy_cmd, false);
  int entropy_points = 91;
  entropy_cmd->add_option("--points", entropy_points, "grid points on [0, 90deg]");

  auto* oracle_cmd = app.add_subcommand("oracle", "Monte Carlo coherency reproduction");
  BeamFlags oracle_flags;
  oracle_flags.attach(oracle_cmd, false);
  double oracle_sigma = std::log(2.0);
  std::uint64_t samples = 100000, seed = 1;
  oracle_cmd->add_option("--sigma", oracle_sigma, "decoherence exponent to reproduce");
  oracle_cmd->add_option("--samples", samples, "Monte Carlo samples");
  oracle_cmd->add_option("--seed", seed, "PRNG seed (results are bit-reproducible)");

  auto* lorentz_cmd = app.add_subcommand("lorentz", "4x4 image of a generator word");
  std::string word_text;
  lorentz_cmd->add_option("word", word_text, "e.g. \"z(90deg)|b(1.2)|s(-0.3)\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*beam_cmd) return cmd_beam(beam_flags, pipeline_text, as_json);
    if (*classify_cmd) return cmd_classify(p4, as_json);
    if (*sphere_cmd) return cmd_sphere(sphere_flags, sphere_points, as_json);
    if (*entropy_cmd) return cmd_entropy(entropy_flags, entropy_points, as_json);
    if (*oracle_cmd) return cmd_oracle(oracle_flags, oracle_sigma, samples, seed, as_json);
    if (*lorentz_cmd) return cmd_lorentz(word_text, as_json);
  } catch (const parse_error& e) {
    std::fprintf(stderr, "parse error [%s] %s\n", parse_errc_name(e.parse_code()), e.what());
    return 2;
  } catch (const error& e) {
    std::fprintf(stderr, "error [%s] %s\n", errc_name(e.code()), e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error %s\n", e.what());
    return 3;
  }
  return 0;
}
