#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "helpers.hpp"
#include "minsurf/bezier.hpp"
#include "minsurf/mesh.hpp"

using namespace minsurf;
using testing::tmp_path;

TEST_SUITE("surface-io") {

TEST_CASE("plane mesh") {
    const auto mesh = sample_chart([](double u, double v) { return Vec3d(u, v, 0); }, {}, 2, 2);
    CHECK(mesh.vertices.size() == 4);
    CHECK(mesh.shrink_steps == 0);
    const auto obj = parse_obj(obj_string(mesh));
    REQUIRE(obj.faces.size() == 1);
    CHECK(obj.faces[0] == std::array<int, 4>{1, 3, 4, 2});
    CHECK(obj.vertices[3] == Vec3d(1, 1, 0));
    CHECK_THROWS_AS(sample_chart([](double u, double v) { return Vec3d(u, v, 0); }, {}, 1, 5), DegenerateInputError);
}

TEST_CASE("Enneper mesh round trips through OBJ") {
    const auto chart = enneper_chart<double>();
    auto mesh = sample_chart([&](double u, double v) { return chart.eval(u, v); }, {}, 101, 101);
    CHECK(mesh.vertices.size() == 10201);
    CHECK(mesh.params[mesh.index(50, 50)].u == 0.0);
    CHECK(mesh.vertices[mesh.index(100, 100)] == chart.eval(1, 1));

    const std::string path = tmp_path("enneper.obj");
    export_obj(mesh, path);
    const auto back = read_obj(path);
    REQUIRE(back.vertices.size() == mesh.vertices.size());
    CHECK(back.faces.size() == 100u * 100u);
    double worst = 0;
    for (std::size_t k = 0; k < back.vertices.size(); ++k) worst = std::max(worst, max_abs(back.vertices[k] - mesh.vertices[k]));
    CHECK(worst <= 1e-15);
}

TEST_CASE("scalar field CSV") {
    const auto f = testing::dpoly({{1, 0}});
    const auto g = testing::dpoly({{0, 0}, {1, 0}});
    const auto chart = enneper_chart<double>();
    auto mesh = sample_chart([&](double u, double v) { return chart.eval(u, v); }, {}, 11, 11);
    attach_scalar(mesh, "nu", [&](double u, double v) { return normal_curvature_closed(f, g, u, v); });
    attach_scalar(mesh, "broken", [](double u, double) -> double {
        if (u > 0.5) throw Error("no value");
        return u;
    });
    CHECK(mesh.scalars.at("nu")[mesh.index(5, 5)] == doctest::Approx(4.0));
    CHECK(std::isnan(mesh.scalars.at("broken").back()));

    const std::string path = tmp_path("nu.csv");
    export_csv_field(mesh, "nu", path);
    CHECK(read_file(path).rfind("u,v,value\n", 0) == 0);
    const auto rows = read_csv_field(path);
    REQUIRE(rows.size() == mesh.vertices.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].u == mesh.params[k].u);
        CHECK(rows[k].v == mesh.params[k].v);
        CHECK(rows[k].value == mesh.scalars.at("nu")[k]);
    }
    CHECK_THROWS_AS(csv_field_string(mesh, "missing"), Error);
}

TEST_CASE("Bezier mesh matches direct evaluation") {
    const auto net = cast_grid<double>(reference_harmonic_net());
    const auto mesh = sample_chart([&](double u, double v) { return eval_bezier(net, u, v); }, {0, 1, 0, 1}, 21, 21);
    for (int r = 0; r < 21; ++r)
        for (int c = 0; c < 21; ++c) {
            const auto& p = mesh.params[mesh.index(r, c)];
            CHECK(mesh.vertices[mesh.index(r, c)] == eval_bezier(net, p.u, p.v));
        }
}

TEST_CASE("domain shrinks around failing evaluators") {
    const PointEvaluator edge_fails = [](double u, double v) {
        if (std::abs(u) > 0.95) throw BranchPointError("too close");
        return Vec3d(u, v, std::log(1.0 - std::abs(v)));
    };
    const auto mesh = sample_chart(edge_fails, {}, 9, 9);
    CHECK(mesh.shrink_steps >= 1);
    CHECK_FALSE(mesh.note.empty());
    CHECK(mesh.domain.u1 < 0.95);
    CHECK(mesh.domain.u0 == doctest::Approx(-mesh.domain.u1));

    const PointEvaluator always_fails = [](double, double) -> Vec3d { throw Error("nope"); };
    CHECK_THROWS_AS(sample_chart(always_fails, {}, 3, 3), DegenerateInputError);
}

TEST_CASE("files") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);

    const std::string path = tmp_path("atomic.txt");
    write_file_atomic(path, "first");
    write_file_atomic(path, "second");
    CHECK(read_file(path) == "second");
    for (const auto& entry : std::filesystem::directory_iterator(MINSURF_TEST_TMP)) {
        CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
    }
    CHECK_THROWS_AS(write_file_atomic(tmp_path("no/such/dir/x.txt"), "x"), IoError);
    CHECK_THROWS_AS(read_file(tmp_path("missing.txt")), IoError);
    CHECK_THROWS_AS(parse_obj("v 1 2\n"), FormatError);
    CHECK_THROWS_AS(parse_csv_field("u,v,value\n1,2\n"), FormatError);
}

}  // TEST_SUITE
