#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cnat/cli.hpp"
#include "cnat/records.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "cnat");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cnat::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct Workspace {
    fs::path dir;
    Workspace() {
        ::unsetenv("CNAT_CACHE");
        dir = fs::temp_directory_path() / ("cnat_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Workspace() { fs::remove_all(dir); }

    std::string file(const std::string& name, const std::string& contents) const {
        const auto p = dir / name;
        std::ofstream(p) << contents;
        return p.string();
    }
};

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("validate") {
    Workspace ws;
    auto ok = run({"validate", ws.file("g2", "XX\nX.")});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "valid, n=2, det=-1"));
    CHECK(contains(ok.out, "leaves: (1,2) (2,1)"));

    auto bad = run({"validate", ws.file("g3", "XX\n.X")});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "NotComplete"));

    CHECK(run({"validate", (ws.dir / "missing").string()}).code == 2);
    CHECK(run({"validate", ws.file("ragged", "XX\nX")}).code == 2);
}

TEST_CASE("count from each source") {
    Workspace ws;
    auto en = run({"count", "6", "--source", "enum"});
    CHECK(en.code == 0);
    CHECK(contains(en.out, "A_6 = 4728 [enumeration]"));
    CHECK(contains(en.out, "B_6 = 4732 [enumeration]"));

    auto rec = run({"count", "8", "--source", "rec"});
    CHECK(contains(rec.out, "T_8 = 10643745 [recurrence]"));
    CHECK(contains(rec.out, "D_8 = 33 [recurrence]"));

    auto closed = run({"count", "1", "--source", "closed"});
    CHECK(closed.out == "D_1 = 1 [closed_form]\n");
}

TEST_CASE("count output formats") {
    Workspace ws;
    auto csv = run({"count", "4", "--format", "csv"});
    CHECK(csv.out ==
          "n,quantity,value,source\n4,T,33,recurrence\n4,A,17,recurrence\n4,B,16,recurrence\n4,D,1,recurrence\n");

    auto json = run({"count", "4", "--format", "json", "--source", "enum"});
    const auto recs = cnat::records_from_json(json.out);
    REQUIRE(recs.size() == 4);
    CHECK(recs[1].quantity == cnat::Quantity::A);
    CHECK(recs[1].values.at(0) == 17);
    CHECK(recs[1].source == cnat::Source::Enumeration);
}

TEST_CASE("enumeration limit") {
    Workspace ws;
    auto r = run({"count", "9", "--source", "enum"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "limit of 8"));
    CHECK(run({"enumerate", "9"}).code == 2);
    CHECK(run({"count", "30", "--source", "rec"}).code == 0);
    CHECK(run({"count", "0"}).code == 2);
}

TEST_CASE("table and eo") {
    Workspace ws;
    auto t = run({"table", "--max-n", "3", "--format", "csv"});
    CHECK(t.code == 0);
    CHECK(contains(t.out, "3,D,0,recurrence\n"));

    auto eo = run({"eo", "5"});
    CHECK(contains(eo.out, "e/o(5,2) = 4, 6 [recurrence]"));
    CHECK(contains(eo.out, "e-o(5,2) = -2 [closed_form]"));
}

TEST_CASE("enumerate") {
    Workspace ws;
    CHECK(run({"enumerate", "2"}).out == "XX\nX.\n");

    auto three = run({"enumerate", "3"});
    CHECK(three.code == 0);
    std::size_t blocks = 1, pos = 0;
    while ((pos = three.out.find("\n\n", pos)) != std::string::npos) {
        ++blocks;
        pos += 2;
    }
    CHECK(blocks == 4);

    const auto j = nlohmann::json::parse(run({"enumerate", "3", "--format", "json"}).out);
    CHECK(j.size() == 4);
    CHECK(j[0] == "XX.\nX.X\nX..\n");

    CHECK(run({"enumerate", "4", "--naive"}).out.size() == run({"enumerate", "4"}).out.size());
    CHECK(run({"enumerate", "6", "--naive"}).code == 2);
}

TEST_CASE("decompose and render") {
    Workspace ws;
    const auto g2 = ws.file("g2", "XX\nX.\n");
    auto d = run({"decompose", g2});
    CHECK(d.code == 0);
    CHECK(d.out == "k=1 rows={1} cols={2}\nM:\nX\nM':\nX\n");
    CHECK(run({"decompose", ws.file("g1", "X")}).code == 1);

    CHECK(run({"render", g2}).out == "● ○\n○ ·\n");
    auto svg = run({"render", g2, "--svg"});
    CHECK(contains(svg.out, "<svg"));
    CHECK(contains(svg.out, "fill=\"#1f6fd0\""));
    CHECK(run({"render", ws.file("bad", "XX\nXX")}).code == 1);
}

TEST_CASE("verify") {
    Workspace ws;
    auto r = run({"verify", "--max-n", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "D_3: enum 0, rec 0, closed 0 PASS"));
    CHECK_FALSE(contains(r.out, "FAIL"));

    auto full = run({"verify", "--max-n", "7"});
    CHECK(full.code == 0);
    CHECK(contains(full.out, "D_7: enum 0, rec 0, closed 0 PASS"));
    CHECK(contains(full.out, "oracle n=4: naive 33, enum 33, same set PASS"));
    CHECK(contains(full.out, "det bridge n=6: 9460 CNATs"));
}

TEST_CASE("verify with cache: cold and warm reports match, corruption is attributed") {
    Workspace ws;
    const auto cache = (ws.dir / "counts.json").string();
    auto cold = run({"verify", "--max-n", "5", "--cache", cache});
    auto warm = run({"verify", "--max-n", "5", "--cache", cache});
    CHECK(cold.code == 0);
    CHECK(cold.out == warm.out);

    // env var supplies the default path
    ::setenv("CNAT_CACHE", cache.c_str(), 1);
    CHECK(run({"verify", "--max-n", "5"}).out == cold.out);
    ::unsetenv("CNAT_CACHE");

    auto j = nlohmann::json::parse(std::ifstream(cache));
    for (auto& e : j["entries"])
        if (e["quantity"] == "A" && e["n"] == 4) e["value"] = "18";
    std::ofstream(cache) << j.dump();

    auto bad = run({"verify", "--max-n", "5", "--cache", cache});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "A_4: enum 18, rec 17 FAIL"));
    CHECK(contains(bad.out, "T_4: enum 34, rec 33 FAIL"));
    CHECK(contains(bad.out, "D_4: enum 2, rec 1, closed 1 FAIL"));
    CHECK(contains(bad.out, "checks FAILED"));

    std::ofstream(cache) << "garbage";
    CHECK(run({"verify", "--max-n", "3", "--cache", cache}).code == 2);
}

TEST_CASE("usage errors") {
    Workspace ws;
    CHECK(run({}).code == 2);
    CHECK(run({"count"}).code == 2);
    CHECK(run({"count", "3", "--source", "oracle"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
