// Send a partially coherent beam through a short element cascade and watch
// the Stokes vector move while det(C) stays put.

#include <cstdio>

#include "naimark/naimark.hpp"

using namespace naimark;

int main() {
  const BeamSpec beam = BeamSpec::from_chi(1.0, 0.8, 0.0, M_PI / 6);
  const PipelineAST pipeline =
      parse_pipeline("rotate(30deg)|phase(90deg)|squeeze45(0.4)|atten(0.3,-0.3)");

  std::printf("%-26s %9s %9s %9s %9s %9s %11s\n", "element", "S0", "S3", "S1", "S2", "f",
              "det(C)");
  for (const StageReport& st : run_beam(beam, pipeline)) {
    std::printf("%-26s %9.5f %9.5f %9.5f %9.5f %9.5f %11.3e\n", st.element.c_str(),
                st.stokes.s0, st.stokes.s3, st.stokes.s1, st.stokes.s2,
                st.f.value_or(0.0), st.det_c);
  }
  return 0;
}
