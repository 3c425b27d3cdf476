#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "butkit/butkit.hpp"
#include "cli_runner.hpp"

using namespace butkit;

namespace {

PolyFunc first_two() {
  PolyFunc g;
  g.input_dim = 3;
  g.coordinates = {{{1.0, {1, 0, 0}}}, {{1.0, {0, 1, 0}}}};
  return g;
}

ManifoldSpec sphere2() {
  ManifoldSpec spec;
  spec.kind = ManifoldSpec::Kind::Sphere;
  spec.dim = 2;
  spec.reproject = true;
  return spec;
}

}  // namespace

TEST_CASE("complex JSON uses the documented field names and round-trips") {
  const EquivariantComplex octa = build_sphere(2);
  const json j = complex_to_json(octa);
  REQUIRE(j.contains("ambient_dim"));
  REQUIRE(j.contains("manifold_dim"));
  REQUIRE(j.contains("vertices"));
  REQUIRE(j.contains("simplices"));
  REQUIRE(j.contains("involution"));
  REQUIRE(j["ambient_dim"] == 3);
  REQUIRE(j["vertices"].size() == 6);
  REQUIRE(j["simplices"].size() == 8);

  const EquivariantComplex back = complex_from_json(j);
  REQUIRE(back.vertices == octa.vertices);
  REQUIRE(back.simplices == octa.simplices);
  REQUIRE(back.involution == octa.involution);
}

TEST_CASE("complex JSON sorts simplex vertex lists") {
  json j = complex_to_json(build_circle(2));
  j["simplices"][0] = {1, 0};
  const EquivariantComplex c = complex_from_json(j);
  REQUIRE(c.simplices(0, 0) == 0);
  REQUIRE(c.simplices(1, 0) == 1);
}

TEST_CASE("malformed complex JSON is rejected with context") {
  const json good = complex_to_json(build_circle(2));

  SECTION("missing field") {
    json j = good;
    j.erase("involution");
    REQUIRE_THROWS_AS(complex_from_json(j), Error);
  }
  SECTION("involution length") {
    json j = good;
    j["involution"] = {1, 0};
    REQUIRE_THROWS_AS(complex_from_json(j), Error);
  }
  SECTION("vertex index out of range") {
    json j = good;
    j["simplices"][0] = {0, 99};
    REQUIRE_THROWS_AS(complex_from_json(j), Error);
  }
  SECTION("ragged vertex rows") {
    json j = good;
    j["vertices"][1] = {1.0};
    REQUIRE_THROWS_AS(complex_from_json(j), Error);
  }
}

TEST_CASE("convex set JSON round-trips every kind") {
  Vec p(2);
  p << 0.5, -1.25;

  const ConvexSet s = Singleton{p};
  const ConvexSet s2 = convexset_from_json(convexset_to_json(s));
  REQUIRE(std::get<Singleton>(s2).point == p);

  const ConvexSet b = Ball{p, 0.75};
  const json bj = convexset_to_json(b);
  REQUIRE(bj["kind"] == "ball");
  const Ball b2 = std::get<Ball>(convexset_from_json(bj));
  REQUIRE(b2.center == p);
  REQUIRE(b2.radius == 0.75);

  Mat g(2, 3);
  g << 1, 0, -1, 0, 1, 2;
  const json vj = convexset_to_json(VPolytope{g});
  REQUIRE(vj["kind"] == "vpolytope");
  REQUIRE(std::get<VPolytope>(convexset_from_json(vj)).generators == g);

  json bad = bj;
  bad["kind"] = "halfspace";
  REQUIRE_THROWS_AS(convexset_from_json(bad), Error);
  bad = bj;
  bad["radius"] = -0.5;
  REQUIRE_THROWS_AS(convexset_from_json(bad), Error);
}

TEST_CASE("polynomial JSON round-trips and validates") {
  const PolyFunc g = first_two();
  const PolyFunc back = poly_from_json(poly_to_json(g));
  REQUIRE(back.input_dim == 3);
  REQUIRE(back.output_dim() == 2);
  REQUIRE(back.coordinates[0][0].coeff == 1.0);
  REQUIRE(back.coordinates[0][0].exponents == std::vector<int>{1, 0, 0});

  SECTION("a zero coordinate is an empty monomial list") {
    const PolyFunc z = poly_from_json(json::parse(R"([[], [{"c": 2.0, "e": [0, 1]}]])"));
    REQUIRE(z.input_dim == 2);
    Vec x(2);
    x << 5, 3;
    REQUIRE(eval_poly(z, x) == (Vec(2) << 0, 6).finished());
  }
  SECTION("no monomial anywhere leaves the input dimension unknown") {
    REQUIRE_THROWS_AS(poly_from_json(json::parse(R"([[], []])")), Error);
  }
  SECTION("inconsistent exponent lengths") {
    REQUIRE_THROWS_AS(poly_from_json(json::parse(R"([[{"c": 1.0, "e": [1]}, {"c": 1.0, "e": [1, 0]}]])")), Error);
  }
  SECTION("negative exponents") {
    REQUIRE_THROWS_AS(poly_from_json(json::parse(R"([[{"c": 1.0, "e": [-1]}]])")), Error);
  }
}

TEST_CASE("set-valued map JSON round-trips every kind") {
  const SetValuedMap ball = BallOf{first_two(), 0.3};
  const json j = setmap_to_json(ball);
  REQUIRE(j["kind"] == "ball");
  REQUIRE(j["radius"] == 0.3);
  const SetValuedMap back = setmap_from_json(j);
  REQUIRE(std::get<BallOf>(back).radius == 0.3);
  REQUIRE(input_dim(back) == 3);
  REQUIRE(output_dim(back) == 2);

  const SetValuedMap vp = VPolytopeOf{{first_two(), first_two()}};
  const SetValuedMap vp_back = setmap_from_json(setmap_to_json(vp));
  REQUIRE(std::get<VPolytopeOf>(vp_back).generators.size() == 2);

  SECTION("generator dimensions must agree") {
    json bad = setmap_to_json(vp);
    bad["generators"][1] = json::parse(R"([[{"c": 1.0, "e": [1, 0]}]])");
    REQUIRE_THROWS_AS(setmap_from_json(bad), Error);
  }
  SECTION("unknown kind") {
    json bad = j;
    bad["kind"] = "zonotope";
    REQUIRE_THROWS_AS(setmap_from_json(bad), Error);
  }
}

TEST_CASE("manifold spec JSON round-trips") {
  ManifoldSpec spec;
  spec.kind = ManifoldSpec::Kind::Circle;
  spec.segments = 12;
  spec.subdivisions = 2;
  spec.reproject = true;
  const ManifoldSpec back = manifold_spec_from_json(manifold_spec_to_json(spec));
  REQUIRE(back.kind == ManifoldSpec::Kind::Circle);
  REQUIRE(back.segments == 12);
  REQUIRE(back.subdivisions == 2);
  REQUIRE(back.reproject);
}

TEST_CASE("certificate JSON carries the documented fields") {
  const Mod4Certificate cert = certify_but(sample_plmap(build_sphere(2), first_two()));
  const json j = certificate_to_json(cert);
  REQUIRE(j["count"] == 2);
  REQUIRE(j["transversal"] == true);
  REQUIRE(j["verdict"] == "consistent-with-BUT");
  REQUIRE(j["zeros"].is_array());
  REQUIRE(j["zeros"].size() == 2);
  for (const json& z : j["zeros"]) {
    REQUIRE(z.contains("simplex"));
    REQUIRE(z.contains("weights"));
    REQUIRE(z.contains("point"));
    REQUIRE(z.contains("interior"));
    REQUIRE(z.contains("nondegenerate"));
  }
}

TEST_CASE("JSON serialization is byte-deterministic") {
  const json a = complex_to_json(realize(sphere2()));
  const json b = complex_to_json(realize(sphere2()));
  REQUIRE(a.dump(2) == b.dump(2));
}

TEST_CASE("file helpers wrap parse errors with the path") {
  const std::string path = clirun::temp_path("not_json.json");
  clirun::write_text(path, "{ this is not json");
  REQUIRE_THROWS_WITH(load_json(path), Catch::Matchers::ContainsSubstring("not_json.json"));
  REQUIRE_THROWS_AS(load_json(clirun::temp_path("missing_file.json")), Error);

  const std::string out = clirun::temp_path("roundtrip.json");
  save_json(out, json{{"x", 1}});
  REQUIRE(load_json(out) == json{{"x", 1}});
  REQUIRE(clirun::read_text(out).back() == '\n');
}

TEST_CASE("theorem reports round-trip and re-verify from JSON alone") {
  SolveOptions opts;
  opts.mesh_target = 0.3;
  const ManifoldSpec spec = sphere2();
  const SetValuedMap map = BallOf{first_two(), 0.3};
  const SolveReport report = solve_theorem(spec, map, opts);
  const json j = solve_report_to_json(report, spec, map, opts);

  SECTION("round trip preserves the numbers bitwise") {
    const SolveReport back = detail::solve_block_from_json(j);
    REQUIRE(back.x0 == report.x0);
    REQUIRE(back.weights == report.weights);
    REQUIRE(back.witnesses == report.witnesses);
    REQUIRE(back.rounds == report.rounds);
    REQUIRE(back.trace.size() == report.trace.size());
  }
  SECTION("an untampered report passes") {
    const CheckResult result = check_report_json(j);
    CAPTURE(result.failures);
    REQUIRE(result.pass);
  }
  SECTION("tampered weights fail") {
    json bad = j;
    bad["weights"][0] = -0.25;
    const CheckResult result = check_report_json(bad);
    REQUIRE_FALSE(result.pass);
    REQUIRE_THAT(result.failures.front(), Catch::Matchers::ContainsSubstring("weights"));
  }
  SECTION("tampered witnesses fail the combination or membership") {
    json bad = j;
    bad["witnesses"][0][0] = 5.0;
    REQUIRE_FALSE(check_report_json(bad).pass);
  }
  SECTION("tampered x0 fails the location check") {
    json bad = j;
    bad["x0"][0] = 0.5;
    const CheckResult result = check_report_json(bad);
    REQUIRE_FALSE(result.pass);
  }
  SECTION("a complete report must honor the mesh target") {
    json bad = j;
    bad["options"]["mesh_target"] = 1e-6;
    REQUIRE_FALSE(check_report_json(bad).pass);
  }
  SECTION("unknown report kinds are rejected") {
    json bad = j;
    bad["kind"] = "solve-unknown";
    REQUIRE_THROWS_AS(check_report_json(bad), Error);
  }
}

TEST_CASE("coincidence reports round-trip and re-verify from JSON alone") {
  PolyFunc c;
  c.input_dim = 3;
  c.coordinates = {{{1.0, {1, 0, 0}}, {1.0, {0, 0, 2}}}, {{1.0, {0, 1, 0}}}};
  SolveOptions opts;
  opts.mesh_target = 0.3;
  const ManifoldSpec spec = sphere2();
  const SetValuedMap map = SingletonOf{c};
  const CoincidenceReport report = solve_coincidence(spec, map, opts);
  const json j = coincidence_report_to_json(report, spec, map, opts);

  SECTION("an untampered report passes") {
    const CheckResult result = check_report_json(j);
    CAPTURE(result.failures);
    REQUIRE(result.pass);
  }
  SECTION("tampered ax0 fails") {
    json bad = j;
    bad["ax0"][2] = 0.0;
    const CheckResult result = check_report_json(bad);
    REQUIRE_FALSE(result.pass);
  }
  SECTION("a gap smaller than ||a - b|| fails") {
    json bad = j;
    bad["b"][0] = 2.0;
    REQUIRE_FALSE(check_report_json(bad).pass);
  }
}
