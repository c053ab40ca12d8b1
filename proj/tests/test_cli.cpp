// End-to-end tests of the command-line tool, driven through the real
// binary (path in SPLITCAT_BIN, set by the test harness).  Fixtures are
// produced with the library's own PNG writer and the shared synthetic
// chart.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "chart_fixture.hpp"
#include "splitcat/png_io.hpp"
#include "splitcat/rng.hpp"

using namespace splitcat;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string binary_path() {
  const char* env = std::getenv("SPLITCAT_BIN");
  REQUIRE_MESSAGE(env != nullptr,
                  "SPLITCAT_BIN must point at the splitcat binary");
  return env;
}

// Runs the tool with the given arguments, capturing stdout.
RunResult run(const std::string& args, bool keep_stderr = false) {
  const std::string cmd = binary_path() + " " + args +
                          (keep_stderr ? " 2>&1" : " 2>/dev/null");
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

const std::string kDir = "/tmp/splitcat_cli";

void ensure_dir() { std::filesystem::create_directories(kDir); }

}  // namespace

TEST_CASE("wb with the unit illuminant is an identity up to quantisation") {
  ensure_dir();
  Rng rng(701);
  Image img(20, 15);
  for (auto& p : img.pixels) {
    p = {rng.uniform(), rng.uniform(), rng.uniform()};
  }
  const std::string in = kDir + "/unit_in.png";
  const std::string out = kDir + "/unit_out.png";
  write_png(in, img, 8);

  for (const char* cat : {"split-hcv", "split-h1cv", "split-h2cv"}) {
    const RunResult r = run("wb " + in + " " + out + " --cat " + cat +
                            " --illuminant-hcv 0,0,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("wrote") != std::string::npos);

    const PngImage original = read_png(in);
    const PngImage balanced = read_png(out);
    REQUIRE(balanced.image.pixels.size() == original.image.pixels.size());
    CHECK(balanced.bit_depth == 8);
    for (size_t i = 0; i < original.image.pixels.size(); ++i) {
      // Differ by at most one 8-bit code value per channel.
      CHECK(std::abs(balanced.image.pixels[i].r -
                     original.image.pixels[i].r) <= 1.0 / 255.0 + 1e-12);
      CHECK(std::abs(balanced.image.pixels[i].g -
                     original.image.pixels[i].g) <= 1.0 / 255.0 + 1e-12);
      CHECK(std::abs(balanced.image.pixels[i].b -
                     original.image.pixels[i].b) <= 1.0 / 255.0 + 1e-12);
    }
  }
}

TEST_CASE("wb von Kries maps an illuminant-colored image to white") {
  ensure_dir();
  Image img(6, 4, {0.8, 0.6, 0.4});
  const std::string in = kDir + "/vk_in.png";
  const std::string out = kDir + "/vk_out.png";
  write_png(in, img, 16);

  const RunResult r = run("wb " + in + " " + out +
                          " --cat vonkries --illuminant-rgb 0.8,0.6,0.4"
                          " --assume-linear");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("gains:") != std::string::npos);

  const PngImage balanced = read_png(out);
  CHECK(balanced.bit_depth == 16);
  for (const auto& p : balanced.image.pixels) {
    CHECK(p.r == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(p.g == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(p.b == doctest::Approx(1.0).epsilon(1e-4));
  }
}

TEST_CASE("wb split transform prints the effect parameters") {
  ensure_dir();
  Image img(4, 4, {0.5, 0.4, 0.3});
  const std::string in = kDir + "/fx_in.png";
  write_png(in, img, 8);

  const RunResult r = run("wb " + in + " " + kDir + "/fx_out.png" +
                          " --cat split-hcv --illuminant-hcv 0.5,0.2,0.9");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("illuminant hcv: 0.500000 0.200000 0.900000") !=
        std::string::npos);
  CHECK(r.output.find("effect: e0=0.900000") != std::string::npos);
  CHECK(r.output.find("theta=") != std::string::npos);
}

TEST_CASE("wb estimates the illuminant from the chart's white patch") {
  ensure_dir();
  const RgbPixel cast{0.9, 0.7, 0.5};
  const Image chart = chart_fixture::apply_cast(chart_fixture::render(), cast);
  const std::string in = kDir + "/chart_cast.png";
  const std::string out = kDir + "/chart_wb.png";
  const std::string layout = kDir + "/layout.txt";
  write_png(in, chart, 16);
  chart_fixture::write_file(layout, chart_fixture::layout_text());

  const RunResult r = run("wb " + in + " " + out +
                          " --cat vonkries --layout " + layout +
                          " --assume-linear");
  CHECK(r.exit_code == 0);

  // The white patch of the corrected chart is back to neutral.
  const PngImage balanced = read_png(out);
  const Rect wp = chart_fixture::region(18);
  const RgbPixel& p = balanced.image.at(wp.x0 + 5, wp.y0 + 5);
  CHECK(p.r == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(p.g == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(p.b == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("wb failure modes exit nonzero") {
  ensure_dir();
  Image img(2, 2, {0.5, 0.5, 0.5});
  const std::string in = kDir + "/fail_in.png";
  write_png(in, img, 8);

  SUBCASE("degenerate illuminant") {
    const RunResult r = run("wb " + in + " " + kDir + "/fail_out.png" +
                                " --cat split-hcv --illuminant-hcv 0,0.95,0.95",
                            true);
    CHECK(r.exit_code != 0);
    CHECK(r.output.find("error:") != std::string::npos);
  }

  SUBCASE("missing input") {
    const RunResult r =
        run("wb " + kDir + "/no_such.png " + kDir + "/fail_out.png" +
                " --illuminant-hcv 0,0,1",
            true);
    CHECK(r.exit_code != 0);
  }

  SUBCASE("no illuminant source") {
    const RunResult r =
        run("wb " + in + " " + kDir + "/fail_out.png", true);
    CHECK(r.exit_code != 0);
  }

  SUBCASE("two illuminant sources") {
    const RunResult r = run(
        "wb " + in + " " + kDir +
            "/fail_out.png --illuminant-hcv 0,0,1 --illuminant-rgb 1,1,1",
        true);
    CHECK(r.exit_code != 0);
  }

  SUBCASE("unknown transform") {
    const RunResult r = run("wb " + in + " " + kDir +
                                "/fail_out.png --cat bradford "
                                "--illuminant-hcv 0,0,1",
                            true);
    CHECK(r.exit_code != 0);
  }
}

TEST_CASE("eval scores charts and reports deterministically") {
  ensure_dir();
  const std::string layout = kDir + "/eval_layout.txt";
  const std::string bench = kDir + "/eval_bench.txt";
  chart_fixture::write_file(layout, chart_fixture::layout_text());
  chart_fixture::write_file(bench, chart_fixture::benchmark_text());

  const std::string uncast = kDir + "/eval_uncast.png";
  const std::string cast = kDir + "/eval_cast.png";
  write_png(uncast, chart_fixture::render(), 16);
  write_png(cast,
            chart_fixture::apply_cast(chart_fixture::render(),
                                      {0.82, 0.93, 0.68}),
            16);

  const std::string args = "eval " + uncast + " " + cast + " --layout " +
                           layout + " --benchmark " + bench +
                           " --assume-linear";
  const RunResult r1 = run(args);
  CHECK(r1.exit_code == 0);

  // Shape: header, per-image tables, machine rows, averages.
  CHECK(r1.output.find("# benchmark") != std::string::npos);
  CHECK(r1.output.find("fnv1a64") != std::string::npos);
  CHECK(r1.output.find("image: " + uncast) != std::string::npos);
  CHECK(r1.output.find("image: " + cast) != std::string::npos);
  CHECK(r1.output.find(uncast + ",vonkries,cie94,") != std::string::npos);
  CHECK(r1.output.find(cast + ",split-h2cv,ciede2000,") !=
        std::string::npos);
  CHECK(r1.output.find("dataset averages over 2 image(s)") !=
        std::string::npos);

  // Byte-identical on a second run.
  const RunResult r2 = run(args);
  CHECK(r2.exit_code == 0);
  CHECK(r1.output == r2.output);

  // Restricting cats and metrics narrows the report.
  const RunResult r3 =
      run(args + " --cat vonkries --metrics ciede2000");
  CHECK(r3.exit_code == 0);
  CHECK(r3.output.find("split-hcv") == std::string::npos);
  CHECK(r3.output.find("cie94") == std::string::npos);
}

TEST_CASE("eval keeps going past a broken image") {
  ensure_dir();
  const std::string layout = kDir + "/pf_layout.txt";
  const std::string bench = kDir + "/pf_bench.txt";
  chart_fixture::write_file(layout, chart_fixture::layout_text());
  chart_fixture::write_file(bench, chart_fixture::benchmark_text());
  const std::string good = kDir + "/pf_good.png";
  write_png(good, chart_fixture::render(), 16);

  const RunResult r = run("eval " + kDir + "/pf_missing.png " + good +
                              " --layout " + layout + " --benchmark " +
                              bench + " --assume-linear",
                          true);
  CHECK(r.exit_code != 0);  // one image failed
  CHECK(r.output.find("image: " + good) != std::string::npos);  // partial
  CHECK(r.output.find("1 image(s) failed") != std::string::npos);
}

TEST_CASE("eval with a missing layout file exits nonzero") {
  ensure_dir();
  const std::string good = kDir + "/ml_good.png";
  write_png(good, chart_fixture::render(), 16);
  const RunResult r = run("eval " + good + " --layout " + kDir +
                              "/no_layout.txt --benchmark " + kDir +
                              "/no_bench.txt",
                          true);
  CHECK(r.exit_code != 0);
  CHECK(r.output.find("error:") != std::string::npos);
}

TEST_CASE("selftest is deterministic and fault-injectable") {
  const RunResult a = run("selftest --seed 777");
  const RunResult b = run("selftest --seed 777");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("selftest seed 777") != std::string::npos);
  CHECK(a.output.find("selftest: PASS") != std::string::npos);

  const RunResult c = run("selftest --seed 777 --perturb 1e-6");
  CHECK(c.exit_code != 0);
  CHECK(c.output.find("selftest: FAIL") != std::string::npos);
}
