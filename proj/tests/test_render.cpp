#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nicegen/render.hpp"

using namespace nicegen;

namespace {

GenConfig config(std::size_t n, std::uint64_t seed) {
    GenConfig c;
    c.n = n;
    c.seed = seed;
    return c;
}

std::vector<ProblemBundle> sample_bundles() {
    std::vector<ProblemBundle> bundles;
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
        for (ProblemKind kind :
             {ProblemKind::lu_full, ProblemKind::lu_deficient, ProblemKind::unimodular_inverse,
              ProblemKind::qr, ProblemKind::system_unique, ProblemKind::system_infinite,
              ProblemKind::system_inconsistent}) {
            GenConfig cfg = config(3, seed * 1000 + static_cast<std::uint64_t>(kind));
            cfg.rational_mode = seed % 2 == 0;
            if (kind == ProblemKind::lu_deficient) cfg.rank = 1 + seed % 2;
            bundles.push_back(make_bundle(kind, cfg));
        }
    return bundles;
}

}  // namespace

TEST_CASE("json round trip is the identity") {
    for (const ProblemBundle& bundle : sample_bundles()) {
        const std::string text = to_json(bundle);
        const ProblemBundle back = from_json(text);
        INFO(to_string(bundle.kind));
        CHECK(back == bundle);
        CHECK(to_json(back) == text);
    }
}

TEST_CASE("rational JSON encoding") {
    const GenConfig cfg = config(3, 42);
    const LUPair pair = LUPair::from_factors(
        ExactMatrix{{1, 0}, {Rational(5, 2), 1}}, ExactMatrix{{2, 4}, {0, 1}});
    const ProblemBundle bundle{ProblemKind::lu_full, LUProblem{pair, 2, {}}, 42, cfg,
                               kSchemaVersion};
    const std::string text = to_json(bundle);
    CHECK(text.find("\"5/2\"") != std::string::npos);  // fraction as string
    CHECK(text.find("\"version\": \"nicegen/1\"") != std::string::npos);
    CHECK(from_json(text) == bundle);
}

TEST_CASE("reflection entries serialize as sevenths") {
    // Fixture triple built from v = [1,2,3]: Q carries denominator 7.
    const ExactMatrix u{{1, 2, 3}, {0, 4, 5}, {0, 0, 6}};
    const ExactMatrix v = ExactMatrix::column({Rational(1), Rational(2), Rational(3)});
    const ExactMatrix q = householder_from_vector(v);
    const ExactMatrix l = solve_lower_parameters(q, u);
    const IntegerScaleResult scaled = integer_scale(matmul(l, u));
    const QRTriple triple{scaled.scaled,
                          q,
                          matmul(q.transpose(), scaled.scaled),
                          v,
                          scaled.scale,
                          l,
                          u};
    const ProblemBundle bundle{ProblemKind::qr, triple, 0, config(3, 0), kSchemaVersion};
    const std::string text = to_json(bundle);
    CHECK(text.find("\"6/7\"") != std::string::npos);
    CHECK(text.find("\"-2/7\"") != std::string::npos);
    CHECK(text.find("\"-3/7\"") != std::string::npos);
    CHECK(from_json(text) == bundle);
}

TEST_CASE("trace chain ends in the reduced form") {
    // Hand-built infinite-system bundle on the reference matrix: the chain
    // with show_trace must end at its rref.
    const ExactMatrix a{{2, 4, 10}, {-2, -1, -4}, {4, 14, 32}};
    const ExactMatrix x = ExactMatrix::column({Rational(1), Rational(2), Rational(3)});
    const ExactMatrix b = matmul(a, x);
    RrefResult red = rref_with_trace(hconcat(a, b));
    const LinearSystemProblem problem{a,  b,  SystemKind::infinite, x, {{1, 2}},
                                      {}, red.rref, red.trace};
    const ProblemBundle bundle{ProblemKind::system_infinite, problem, 0, config(3, 0),
                               kSchemaVersion};
    const std::string tex = to_latex(bundle, {true, true, false});
    const std::string final_block =
        "1 & 0 & 1 & 4 \\\\\n0 & 1 & 2 & 8 \\\\\n0 & 0 & 0 & 0";
    const std::size_t pos = tex.rfind(final_block);
    REQUIRE(pos != std::string::npos);
    // Nothing but the closing of the chain and the conclusion follows it.
    CHECK(tex.find("\\sim", pos) == std::string::npos);
}

TEST_CASE("parse errors carry a position") {
    const std::string good = to_json(make_bundle(ProblemKind::lu_full, config(3, 1)));
    const std::string truncated = good.substr(0, good.size() / 2);
    CHECK_THROWS_AS(from_json(truncated), parse_error);
    try {
        from_json(truncated);
    } catch (const parse_error& e) {
        CHECK(e.position > 0);
    }

    CHECK_THROWS_AS(from_json("{\"version\": \"other/9\"}"), parse_error);
    CHECK_THROWS_AS(from_json("[1, 2"), parse_error);
}

TEST_CASE("rendering is deterministic") {
    const ProblemBundle bundle = make_bundle(ProblemKind::system_infinite, config(3, 7));
    const RenderOptions options{true, true, false};
    CHECK(to_latex(bundle, options) == to_latex(bundle, options));
    CHECK(to_text(bundle, options) == to_text(bundle, options));
    CHECK(to_json(bundle) == to_json(bundle));

    // Regenerating from (seed, config) reproduces the bundle bit for bit.
    const ProblemBundle again = make_bundle(ProblemKind::system_infinite, config(3, 7));
    CHECK(again == bundle);
    CHECK(to_json(again) == to_json(bundle));
}

TEST_CASE("latex output shape") {
    const ProblemBundle bundle = make_bundle(ProblemKind::system_unique, config(3, 3));
    const std::string statement = to_latex(bundle);
    CHECK(statement.find("\\begin{array}{ccc|c}") != std::string::npos);
    CHECK(statement.find("Solution") == std::string::npos);

    const std::string solved = to_latex(bundle, {true, true, false});
    CHECK(solved.find("\\sim") != std::string::npos);
    CHECK(solved.find("\\begin{align*}") != std::string::npos);
    CHECK(solved.find("unique solution") != std::string::npos);

    const std::string standalone = to_latex(bundle, {true, false, true});
    CHECK(standalone.find("\\documentclass") == 0);
    CHECK(standalone.find("\\end{document}") != std::string::npos);

    const ProblemBundle inverse = make_bundle(ProblemKind::unimodular_inverse, config(3, 3));
    const std::string inverse_tex = to_latex(inverse, {true, true, false});
    CHECK(inverse_tex.find("A^{-1}") != std::string::npos);
    CHECK(inverse_tex.find("\\begin{bmatrix}") != std::string::npos);
}

TEST_CASE("text output shape") {
    const LUPair id_pair =
        LUPair::from_factors(ExactMatrix::identity(3), ExactMatrix::identity(3));
    const ProblemBundle id_bundle{ProblemKind::lu_full, LUProblem{id_pair, 3, {}}, 0,
                                  config(3, 0), kSchemaVersion};
    const std::string text = to_text(id_bundle);
    CHECK(text.find("[ 1 0 0 ]") != std::string::npos);
    CHECK(text.find("problem: lu_full") != std::string::npos);

    // The fixture matrix renders as the exact integer grid.
    const LUPair def_pair = LUPair::from_factors(
        ExactMatrix{{1, 0, 0}, {-1, 1, 0}, {2, 2, 1}},
        ExactMatrix{{2, 4, 10}, {0, 3, 6}, {0, 0, 0}});
    const ProblemBundle def_bundle{ProblemKind::lu_deficient,
                                   LUProblem{def_pair, 2, {{1, 2}}}, 0, config(3, 0),
                                   kSchemaVersion};
    const std::string grid = to_text(def_bundle);
    CHECK(grid.find("[  2  4 10 ]") != std::string::npos);
    CHECK(grid.find("[ -2 -1 -4 ]") != std::string::npos);
    CHECK(grid.find("[  4 14 32 ]") != std::string::npos);
}

TEST_CASE("batch json holds every bundle") {
    std::vector<ProblemBundle> bundles;
    bundles.push_back(make_bundle(ProblemKind::lu_full, config(3, 1)));
    bundles.push_back(make_bundle(ProblemKind::qr, config(3, 2)));
    const std::string text = to_json_many(bundles);
    const std::vector<ProblemBundle> back = from_json_many(text);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == bundles[0]);
    CHECK(back[1] == bundles[1]);

    // A single-object document parses as a one-element batch.
    const std::vector<ProblemBundle> single = from_json_many(to_json(bundles[0]));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == bundles[0]);
}

TEST_CASE("config files parse with the bundle schema") {
    const GenConfig cfg = config_from_json_text(
        R"({"n": 4, "seed": 9, "max_coeff": 3, "rank": 2, "rational_mode": true,
            "dependence": [1, -2, 1], "max_retries": 16})");
    CHECK(cfg.n == 4);
    CHECK(cfg.seed == 9);
    CHECK(cfg.max_coeff == 3);
    CHECK(cfg.rank == 2);
    CHECK(cfg.rational_mode);
    REQUIRE(cfg.dependence.has_value());
    CHECK((*cfg.dependence == std::vector<std::int64_t>{1, -2, 1}));
    CHECK(cfg.max_retries == 16);
    CHECK_THROWS_AS(config_from_json_text("{\"n\": 3}"), parse_error);
}
