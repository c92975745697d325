#include "doctest.h"

#include "fixtures.hpp"

#include "dotseg/cli.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = dotseg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::filesystem::path& path, const std::string& data) {
    std::ofstream(path, std::ios::binary) << data;
}

const std::string kData = DOTSEG_TEST_DATA;
const std::string kGolden = DOTSEG_TEST_GOLDEN;

} // namespace

TEST_CASE("segment") {
    const std::string input = kData + "/two_topic.txt";
    auto r = run({"segment", input, "--mu", "3", "--sigma", "1", "--gamma", "0.5", "--r", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");

    r = run({"segment", input, "--mu", "3", "--sigma", "1", "--gamma", "0.5", "--r", "1", "--oracle", "--json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.at("boundaries") == json::array({0, 3, 6}));

    const auto dir = dotseg::test::temp_dir("cli-segment");
    spit(dir / "one.txt", "Just one sentence here.\n");
    r = run({"segment", (dir / "one.txt").string(), "--mu", "3", "--sigma", "1", "--gamma", "0.5", "--r", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "\n");

    r = run({"segment", (dir / "missing.txt").string(), "--mu", "3", "--sigma", "1", "--gamma", "0.5", "--r", "1"});
    CHECK(r.code != 0);
    CHECK(!r.err.empty());

    r = run({"segment", input, "--mu", "3", "--sigma", "1", "--gamma", "2", "--r", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.rfind("dotseg: ", 0) == 0);

    r = run({"segment", input, "--mu", "3", "--sigma", "1", "--gamma", "0.5"});
    CHECK(r.code != 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("evaluate") {
    const auto dir = dotseg::test::temp_dir("cli-evaluate");
    spit(dir / "ref.txt", "3 6\n");
    spit(dir / "hyp.txt", "3 7\n");
    spit(dir / "empty.txt", "");
    spit(dir / "five.txt", "5\n");

    auto r = run({"evaluate", (dir / "ref.txt").string(), (dir / "ref.txt").string(), "-T", "10"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("precision") == 1.0);
    CHECK(j.at("recall") == 1.0);
    CHECK(j.at("pk") == 0.0);
    CHECK(j.at("window_k") == 2);

    r = run({"evaluate", (dir / "ref.txt").string(), (dir / "hyp.txt").string(), "--sentences", "10"});
    j = json::parse(r.out);
    CHECK(j.at("precision") == 0.5);
    CHECK(j.at("recall") == 0.5);

    r = run({"evaluate", (dir / "five.txt").string(), (dir / "empty.txt").string(), "-T", "10", "--k", "3"});
    j = json::parse(r.out);
    CHECK(j.at("precision") == 0.0);
    CHECK(j.at("recall") == 0.0);
    CHECK(j.at("window_k") == 3);

    r = run({"evaluate", (dir / "ref.txt").string(), (dir / "hyp.txt").string(), "-T", "5"});
    CHECK(r.code == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("dotplot matches the golden image") {
    auto r = run({"dotplot", kData + "/two_topic.txt"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(kGolden + "/two_topic.pgm"));
}

TEST_CASE("generate, validate and experiment") {
    const auto dir = dotseg::test::temp_dir("cli-pipeline");
    dotseg::test::FixtureOptions options;
    options.sources_per_group = 4;
    options.min_sentences = 8;
    options.max_sentences = 12;
    dotseg::test::write_fixture(dotseg::test::make_fixture(options), dir / "sources");
    const auto sources = (dir / "sources").string();

    auto r = run({"generate", "--sources", sources, "--suite", "1", "--range", "3,5", "--texts", "4", "--seed", "9",
                  "--out", (dir / "train.json").string()});
    REQUIRE(r.code == 0);
    const auto train = json::parse(slurp(dir / "train.json"));
    CHECK(train.at("texts").size() == 4);

    r = run({"validate", (dir / "train.json").string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("gamma,r,mean_pk,mean_precision,mean_recall\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 81);

    r = run({"validate", (dir / "train.json").string(), "--json", "--mu", "4"});
    REQUIRE(r.code == 0);
    const auto v = json::parse(r.out);
    CHECK(v.at("rows").size() == 80);
    CHECK(v.at("mu") == 4.0);

    r = run({"generate", "--sources", sources, "--suite", "2", "--texts", "2", "--seed", "9"});
    CHECK(r.code == 0);
    r = run({"generate", "--sources", sources, "--suite", "2", "--range", "3,5"});
    CHECK(r.code == 1);
    r = run({"generate", "--sources", sources, "--suite", "1"});
    CHECK(r.code == 1);
    r = run({"generate", "--sources", sources, "--suite", "1", "--range", "5,3"});
    CHECK(r.code == 1);

    r = run({"experiment", "--sources", sources, "--suite", "1", "--range", "3,5", "--texts", "6", "--reps", "2",
             "--seed", "3", "--grid-csv", (dir / "grid.csv").string()});
    REQUIRE(r.code == 0);
    const auto report = json::parse(r.out);
    CHECK(report.at("repetitions").size() == 2);
    const auto csv = slurp(dir / "grid.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 81);

    r = run({"experiment", "--sources", sources, "--suite", "1", "--range", "3,5", "--texts", "5"});
    CHECK(r.code == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code != 0);
    CHECK(run({"frobnicate"}).code != 0);
    CHECK(run({"--help"}).code == 0);
}
