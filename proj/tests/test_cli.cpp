#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nicegen/cli.hpp"
#include "nicegen/render.hpp"
#include "nicegen/verify.hpp"

using namespace nicegen;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    explicit TempFile(const std::string& contents) {
        char name[] = "/tmp/nicegen_test_XXXXXX";
        const int fd = mkstemp(name);
        REQUIRE(fd != -1);
        close(fd);
        path = name;
        std::ofstream f(path, std::ios::binary);
        f << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
    std::string path;
};

}  // namespace

TEST_CASE("gen emits a bundle that verifies") {
    const CliResult r =
        run({"gen", "system", "--kind", "infinite", "--n", "3", "--seed", "7", "--format",
             "json"});
    REQUIRE(r.code == 0);
    const ProblemBundle bundle = from_json(r.out);
    CHECK(bundle.kind == ProblemKind::system_infinite);
    CHECK(bundle.seed == 7);
    CHECK(verify_bundle(bundle).passed);
}

TEST_CASE("identical invocations produce identical bytes") {
    const std::vector<std::string> argv{"gen", "qr", "--n", "3", "--seed", "1",
                                        "--format", "latex", "--show-solution"};
    const CliResult first = run(argv);
    const CliResult second = run(argv);
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);

    const CliResult json1 = run({"gen", "inverse", "--n", "3", "--seed", "5"});
    const CliResult json2 = run({"gen", "inverse", "--n", "3", "--seed", "5"});
    CHECK(json1.out == json2.out);
}

TEST_CASE("count batches derive per-index seeds deterministically") {
    const CliResult batch =
        run({"gen", "lu", "--n", "3", "--seed", "11", "--count", "3", "--format", "json"});
    REQUIRE(batch.code == 0);
    const std::vector<ProblemBundle> bundles = from_json_many(batch.out);
    REQUIRE(bundles.size() == 3);
    CHECK(bundles[0].seed != bundles[1].seed);
    for (const ProblemBundle& b : bundles) CHECK(verify_bundle(b).passed);

    // Each element matches a fresh single run with the derived seed.
    const CliResult single = run({"gen", "lu", "--n", "3", "--seed",
                                  std::to_string(bundles[1].seed), "--format", "json"});
    CHECK(from_json(single.out) == bundles[1]);

    const CliResult again =
        run({"gen", "lu", "--n", "3", "--seed", "11", "--count", "3", "--format", "json"});
    CHECK(again.out == batch.out);
}

TEST_CASE("exit codes") {
    CHECK(run({"gen", "lu", "--n", "3", "--seed", "1"}).code == 0);
    CHECK(run({"gen", "lu", "--bogus-flag"}).code == 2);
    CHECK(run({"gen", "system", "--kind", "sideways", "--n", "3", "--seed", "1"}).code == 2);
    CHECK(run({"gen", "lu", "--n", "1", "--seed", "1"}).code == 2);
    CHECK(run({"gen", "lu", "--n", "3"}).code == 2);  // seed required
    CHECK(run({"verify", "--input", "/nonexistent/x.json"}).code == 2);

    // With a retry budget of one, this seed's first reflection vector has
    // squared norm 2 and the sampler gives up.
    const CliResult exhausted = run(
        {"gen", "qr", "--n", "2", "--seed", "0", "--max-coeff", "1", "--max-retries", "1"});
    CHECK(exhausted.code == 1);
    CHECK(exhausted.err.find("generation failed") != std::string::npos);
}

TEST_CASE("gen lu picks the deficient kind when rank < n") {
    const CliResult full = run({"gen", "lu", "--n", "3", "--rank", "3", "--seed", "2"});
    REQUIRE(full.code == 0);
    CHECK(from_json(full.out).kind == ProblemKind::lu_full);

    const CliResult deficient = run({"gen", "lu", "--n", "3", "--rank", "2", "--seed", "2"});
    REQUIRE(deficient.code == 0);
    CHECK(from_json(deficient.out).kind == ProblemKind::lu_deficient);
}

TEST_CASE("dependence flag reaches the generator") {
    const CliResult r = run({"gen", "system", "--kind", "infinite", "--n", "3", "--seed", "4",
                             "--dependence", "1,2"});
    REQUIRE(r.code == 0);
    const ProblemBundle bundle = from_json(r.out);
    const auto& sys = std::get<LinearSystemProblem>(bundle.payload);
    REQUIRE(sys.dependence.size() == 1);
    CHECK((sys.dependence[0] == std::vector<std::int64_t>{1, 2}));
    CHECK(sys.rref_augmented(0, 2) == Rational(1));
    CHECK(sys.rref_augmented(1, 2) == Rational(2));
}

TEST_CASE("verify passes clean bundles and rejects corrupted ones") {
    const CliResult gen = run({"gen", "inverse", "--n", "3", "--seed", "9"});
    REQUIRE(gen.code == 0);

    {
        TempFile clean(gen.out);
        const CliResult v = run({"verify", "--input", clean.path});
        CHECK(v.code == 0);
        CHECK(v.out.find("verification: PASS") != std::string::npos);

        const CliResult as_json = run({"verify", "--input", clean.path, "--format", "json"});
        CHECK(as_json.code == 0);
        CHECK(as_json.out.find("\"passed\": true") != std::string::npos);
    }

    // Corrupt one digit of the inverse block: exit 3 with a FAIL line.
    std::string corrupted = gen.out;
    const std::size_t pos = corrupted.find("\"inverse\"");
    REQUIRE(pos != std::string::npos);
    const std::size_t digit = corrupted.find_first_of("0123456789", pos + 10);
    REQUIRE(digit != std::string::npos);
    corrupted[digit] = corrupted[digit] == '9' ? '8' : static_cast<char>(corrupted[digit] + 1);
    {
        TempFile bad(corrupted);
        const CliResult v = run({"verify", "--input", bad.path});
        CHECK(v.code == 3);
        CHECK(v.out.find("FAIL") != std::string::npos);
    }

    // Truncated input is a parse error, not a verification failure.
    {
        TempFile truncated(gen.out.substr(0, gen.out.size() / 3));
        const CliResult v = run({"verify", "--input", truncated.path});
        CHECK(v.code == 2);
    }
}

TEST_CASE("replay re-renders a stored bundle") {
    const CliResult gen =
        run({"gen", "system", "--kind", "none", "--n", "3", "--seed", "13"});
    REQUIRE(gen.code == 0);
    TempFile file(gen.out);

    const CliResult latex = run({"replay", "--input", file.path, "--format", "latex",
                                 "--show-solution", "--show-trace"});
    REQUIRE(latex.code == 0);
    const CliResult direct =
        run({"gen", "system", "--kind", "none", "--n", "3", "--seed", "13", "--format",
             "latex", "--show-solution", "--show-trace"});
    CHECK(latex.out == direct.out);

    const CliResult as_json = run({"replay", "--input", file.path, "--format", "json"});
    CHECK(as_json.out == gen.out);
}

TEST_CASE("config file supplies defaults and flags override") {
    TempFile cfg(R"({"n": 3, "seed": 21, "max_coeff": 4, "rational_mode": false,
                     "max_retries": 64})");
    const CliResult from_file = run({"gen", "lu", "--config", cfg.path});
    REQUIRE(from_file.code == 0);
    CHECK(from_json(from_file.out).seed == 21);

    const CliResult overridden = run({"gen", "lu", "--config", cfg.path, "--seed", "22"});
    REQUIRE(overridden.code == 0);
    CHECK(from_json(overridden.out).seed == 22);
}

TEST_CASE("help exits zero") {
    const CliResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gen") != std::string::npos);
}
