#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "cartinc/experiment.hpp"

using namespace cartinc;

namespace {

std::string slurp(const std::string& path) { return read_file(path); }

std::string strip_timestamp(std::string text) {
    auto pos = text.find("\"timestamp\"");
    if (pos == std::string::npos) return text;
    auto end = text.find('\n', pos);
    text.erase(pos, end - pos + 1);
    return text;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("io_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("instance json round trip") {
    Instance inst = generate_instance(SetKind::random, 7, 99, 4, 3);
    std::string text = instance_to_json_text(inst);
    Instance back = parse_instance_text(text);
    CHECK(back.name == inst.name);
    CHECK(back.seed == inst.seed);
    CHECK(back.points.A == inst.points.A);
    CHECK(back.points.B == inst.points.B);
    REQUIRE(back.curves.size() == inst.curves.size());
    for (std::size_t i = 0; i < inst.curves.size(); ++i) {
        CHECK(back.curves[i].label == inst.curves[i].label);
        CHECK(back.curves[i].poly == inst.curves[i].poly);
    }
    // Serialization is a fixed point.
    CHECK(instance_to_json_text(back) == text);
}

TEST_CASE("minimal valid instance") {
    Instance inst = parse_instance_text(
        R"({"A": ["0"], "B": ["0"],
            "curves": [{"label": "L", "terms": [{"i":0,"j":1,"c":"1"},{"i":1,"j":0,"c":"-1"}]}]})");
    CHECK(inst.points.point_count() == 1);
    CHECK(inst.curves.size() == 1);
    auto graph = build_incidence_graph(inst.points, inst.curves);
    CHECK(graph.edge_count() == 1);  // (0, 0) lies on y - x
}

TEST_CASE("instance parse errors carry locations") {
    auto code_of = [](const char* text) {
        try {
            parse_instance_text(text);
        } catch (const WorkbenchError& e) {
            return e.code();
        }
        return Err::IoError;
    };
    CHECK(code_of("{") == Err::ParseError);
    CHECK(code_of(R"({"A": ["0"], "B": ["x"]})") == Err::ParseError);
    CHECK(code_of(R"({"A": ["1/2", "2/4"], "B": ["0"]})") == Err::DuplicatePoint);
    CHECK(code_of(R"({"A": ["0"], "B": ["0"], "curves": [{"label": "Z", "terms": []}]})") ==
          Err::ZeroPolynomial);
    CHECK(code_of(R"({"A": ["0"], "B": ["0"], "curves": [{"label": "Z",
        "terms": [{"i":0,"j":0,"c":"0"}]}]})") == Err::ZeroPolynomial);
    CHECK(code_of(R"({"A": ["0"], "B": ["0"], "curves": [{"label": "Z",
        "terms": [{"i":0,"j":1,"c":"1"},{"i":0,"j":1,"c":"2"}]}]})") == Err::ParseError);

    try {
        parse_instance_text(R"({"A": ["1/2", "3", "2/4"], "B": ["0"]})");
        CHECK(false);
    } catch (const WorkbenchError& e) {
        CHECK(std::string(e.what()).find("A[2]") != std::string::npos);
        CHECK(std::string(e.what()).find("A[0]") != std::string::npos);
    }
}

TEST_CASE("generators are deterministic per seed") {
    for (auto kind : {SetKind::arithmetic, SetKind::geometric, SetKind::random}) {
        Instance a = generate_instance(kind, 5, 42, 3, 2);
        Instance b = generate_instance(kind, 5, 42, 3, 2);
        CHECK(instance_to_json_text(a) == instance_to_json_text(b));
    }
    Instance c = generate_instance(SetKind::random, 5, 42);
    Instance d = generate_instance(SetKind::random, 5, 43);
    CHECK(instance_to_json_text(c) != instance_to_json_text(d));

    Instance arith = generate_instance(SetKind::arithmetic, 3, 0);
    CHECK(arith.points.A == std::vector<GaussianRational>{GaussianRational(Rational(1)),
                                                          GaussianRational(Rational(2)),
                                                          GaussianRational(Rational(3))});
    Instance geo = generate_instance(SetKind::geometric, 3, 0);
    CHECK(geo.points.A == std::vector<GaussianRational>{GaussianRational(Rational(1)),
                                                        GaussianRational(Rational(2)),
                                                        GaussianRational(Rational(4))});
}

TEST_CASE("polynomial json io") {
    GaussianBiPoly f = poly_from_json_text(
        R"({"terms":[{"i":0,"j":1,"c":"1"},{"i":1,"j":0,"c":"-1"}]})");
    CHECK(f.degree() == 1);
    CHECK(poly_from_json_text(poly_to_json_text(f)) == f);
    CHECK_THROWS_AS(poly_from_json_text(R"({"terms": []})"), WorkbenchError);
}

TEST_CASE("run_experiment exit codes") {
    TempFile inst("inst.json");
    TempFile out("out.json");

    ExperimentConfig gen;
    gen.command = "gen";
    gen.set_kind = "arithmetic";
    gen.n_values = {4};
    gen.seed = 11;
    gen.gen_curves = 2;
    gen.out_path = inst.path;
    CHECK(run_experiment(gen) == 0);

    ExperimentConfig count;
    count.command = "count";
    count.in_path = inst.path;
    count.out_path = out.path;
    CHECK(run_experiment(count) == 0);

    ExperimentConfig missing = count;
    missing.in_path = "does_not_exist.json";
    CHECK(run_experiment(missing) == 1);

    ExperimentConfig empty_range;
    empty_range.command = "app:inversion";
    CHECK(run_experiment(empty_range) == 1);

    // Duplicated curve under two labels: K_{2,2} witness, exit 2.
    TempFile dup("dup.json");
    write_file_atomic(dup.path, R"({"A": ["0","1","2"], "B": ["0","1","2"],
      "curves": [{"label":"A","terms":[{"i":0,"j":1,"c":"1"},{"i":1,"j":0,"c":"-1"}]},
                 {"label":"B","terms":[{"i":0,"j":1,"c":"2"},{"i":1,"j":0,"c":"-2"}]}]})");
    ExperimentConfig kst;
    kst.command = "kst";
    kst.in_path = dup.path;
    kst.s = 2;
    kst.t = 2;
    kst.out_path = out.path;
    CHECK(run_experiment(kst) == 2);
    CHECK(slurp(out.path).find("\"pass\": false") != std::string::npos);

    // A blown search cap is an invariant-violation exit, not an input error.
    ExperimentConfig capped = kst;
    capped.t = 3;
    capped.cap = 1;
    CHECK(run_experiment(capped) == 2);
}

TEST_CASE("reports are byte-identical modulo timestamp") {
    TempFile inst("det_inst.json");
    TempFile out1("det1.json");
    TempFile out2("det2.json");

    ExperimentConfig gen;
    gen.command = "gen";
    gen.set_kind = "random";
    gen.n_values = {6};
    gen.seed = 2024;
    gen.gen_curves = 3;
    gen.out_path = inst.path;
    REQUIRE(run_experiment(gen) == 0);

    ExperimentConfig count;
    count.command = "count";
    count.in_path = inst.path;
    count.out_path = out1.path;
    REQUIRE(run_experiment(count) == 0);
    count.out_path = out2.path;
    REQUIRE(run_experiment(count) == 0);
    CHECK(strip_timestamp(slurp(out1.path)) == strip_timestamp(slurp(out2.path)));
    CHECK(slurp(out1.path).find("\"timestamp\"") != std::string::npos);
}

TEST_CASE("real projection of instances") {
    Instance inst = generate_instance(SetKind::arithmetic, 3, 0, 2);
    CHECK(inst.is_real());
    auto pts = inst.real_points();
    CHECK(pts.A.size() == 3);
    auto fam = inst.real_curves();
    CHECK(fam.size() == 2);

    Instance complex_inst = parse_instance_text(R"({"A": ["i"], "B": ["0"]})");
    CHECK(!complex_inst.is_real());
    CHECK_THROWS_AS(complex_inst.real_points(), WorkbenchError);
}
