#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "udm/cli.hpp"
#include "udm/io.hpp"

using namespace udm;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("udm_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(file(name)) << text;
        return file(name);
    }

private:
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("construct reproduces the example family") {
    TempDir dir;
    const auto r = run({"construct", "--L", "4", "--N", "3", "--K", "3", "--q", "3", "--alpha", "2", "--out", dir.file("ex.udm")});
    CHECK(r.code == 0);
    const Family fam = parse_family(slurp(dir.file("ex.udm")));
    CHECK(fam == test::example_433());
    // stdout when --out is absent
    CHECK(run({"construct", "--L", "4", "--N", "3", "--K", "3", "--q", "3", "--alpha", "2"}).out == slurp(dir.file("ex.udm")));
}

TEST_CASE("construct errors") {
    const auto r = run({"construct", "--L", "5", "--N", "2", "--K", "2", "--q", "3"});
    CHECK(r.code != 0);
    CHECK(r.err.find("L ≤ q+1") != std::string::npos);
    CHECK(run({"construct", "--L", "3", "--N", "2", "--q", "6"}).code == 2);
    CHECK(run({"construct", "--q", "3"}).code == 2);
    CHECK(run({"construct", "--L", "3", "--N", "2", "--q", "3", "--variant", "bogus"}).code == 2);
}

TEST_CASE("construct q+2 variant") {
    const auto r = run({"construct", "--variant", "qplus2", "--q", "4"});
    CHECK(r.code == 0);
    const Family fam = parse_family(r.out);
    CHECK(fam.L() == 6);
    CHECK(fam.K() == 3);
}

TEST_CASE("verify") {
    TempDir dir;
    const auto good = dir.write("good.udm", write_family(test::example_433()));
    const auto r = run({"verify", good});
    CHECK(r.code == 0);
    CHECK(r.out == "PASS 20 patterns\n");
    CHECK(run({"verify", good, "--jobs", "4", "--mode", "atleast"}).code == 0);

    std::string text = write_family(test::example_433());
    text.replace(text.find("1 1 1\n0 1 2"), 1, "0");
    const auto bad = dir.write("bad.udm", text);
    const auto f = run({"verify", bad});
    CHECK(f.code == 1);
    CHECK(f.out.rfind("FAIL at (0,0,1,2)\n", 0) == 0);

    const auto empty = dir.write("empty.udm", "");
    const auto e = run({"verify", empty});
    CHECK(e.code == 2);
    CHECK(e.err.find("line") != std::string::npos);
    CHECK(run({"verify", dir.file("missing.udm")}).code == 2);
}

TEST_CASE("bounds and mds-check") {
    CHECK(run({"bounds", "--N", "3", "--K", "3", "--q", "3"}).out.rfind("L <= 4", 0) == 0);
    CHECK(run({"bounds", "--N", "2", "--K", "5", "--q", "4"}).out.rfind("L <= 6", 0) == 0);
    CHECK(run({"bounds", "--N", "1", "--K", "1", "--q", "2"}).out.rfind("UNBOUNDED", 0) == 0);
    CHECK(run({"bounds", "--N", "2", "--K", "7", "--q", "4"}).out.rfind("UNKNOWN", 0) == 0);
    TempDir dir;
    const auto q2 = dir.write("q2.udm", write_family(construct_q_plus_2(Field::create(4))));
    CHECK(run({"mds-check", q2}).out == "MDS\n");
}

TEST_CASE("transform") {
    TempDir dir;
    const auto ex = dir.write("ex.udm", write_family(test::example_433()));
    const auto t = run({"transform", ex, "--op", "tensor", "--power", "2"});
    CHECK(t.code == 0);
    const Family sq = parse_family(t.out);
    CHECK(sq.N() == 9);
    CHECK(sq == construct_pascal(4, 9, 9, 3));

    const auto mixed = run({"transform", ex, "--op", "col", "--matrix", "1 1 0; 0 1 0; 2 0 1", "--out", dir.file("m.udm")});
    CHECK(mixed.code == 0);
    const auto n = run({"transform", dir.file("m.udm"), "--op", "normalize"});
    CHECK(n.code == 0);
    CHECK(parse_family(n.out) == test::example_433());

    CHECK(run({"transform", ex, "--op", "reduce"}).code == 0);
    CHECK(run({"transform", ex, "--op", "permute", "--perm", "3,2,1,0"}).code == 0);
    CHECK(run({"transform", ex, "--op", "pair-reversal"}).code == 0);
    CHECK(run({"transform", ex, "--op", "row", "--index", "2", "--matrix", "2 0 0; 1 1 0; 0 0 1"}).code == 0);
    CHECK(run({"transform", ex, "--op", "row", "--index", "2", "--matrix", "0 0 0; 1 1 0; 0 0 1"}).code == 2);
    CHECK(run({"transform", ex, "--op", "permute", "--perm", "0,1,2"}).code == 2);
    CHECK(run({"transform", dir.file("m.udm"), "--op", "reduce"}).code == 1);
}

TEST_CASE("encode and decode") {
    TempDir dir;
    const auto fam = dir.write("f.udm", write_family(construct_pascal(5, 3, 4, 4)));
    const auto e = run({"encode", "--family", fam, "--u", "3,1,0,2", "--pattern", "1,0,2,0,1", "--out", dir.file("rx.txt")});
    CHECK(e.code == 0);
    CHECK(slurp(dir.file("rx.txt")).rfind("RX 5 3 4 4\n", 0) == 0);
    CHECK(run({"decode", "--family", fam, "--rx", dir.file("rx.txt")}).out == "3 1 0 2\n");
    CHECK(run({"decode", "--family", fam, "--rx", dir.file("rx.txt"), "--decoder", "newton"}).out == "3 1 0 2\n");
    CHECK(run({"encode", "--family", fam, "--u", "3,1,0,2", "--taylor"}).out ==
          run({"encode", "--family", fam, "--u", "3,1,0,2"}).out);

    run({"encode", "--family", fam, "--u", "3,1,0,2", "--pattern", "1,0,2,0,0", "--out", dir.file("short.txt")});
    const auto d = run({"decode", "--family", fam, "--rx", dir.file("short.txt")});
    CHECK(d.code == 1);
    CHECK(d.err.find("insufficient") != std::string::npos);
    CHECK(run({"encode", "--family", fam, "--u", "3,1,0"}).code == 2);
    CHECK(run({"encode", "--family", fam, "--u", "3,1,0,9"}).code == 2);

    const auto plain = dir.write("plain.udm", write_family(test::example_433()));
    run({"encode", "--family", plain, "--u", "1,2,0", "--out", dir.file("p.txt")});
    const auto nn = run({"decode", "--family", plain, "--rx", dir.file("p.txt"), "--decoder", "newton"});
    CHECK(nn.code == 2);
    CHECK(nn.err.find("Pascal") != std::string::npos);
    CHECK(run({"decode", "--family", fam, "--rx", dir.file("p.txt")}).code == 2);
}

TEST_CASE("simulate") {
    TempDir dir;
    const auto fam = dir.write("f.udm", write_family(construct_pascal(4, 3, 3, 3)));
    const auto r = run({"simulate", "--family", fam, "--trials", "1000", "--seed", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gaussian  1.000000") != std::string::npos);
    CHECK(r.out.find("newton    1.000000") != std::string::npos);
    CHECK(r.out.find("cross-decoder mismatches: 0") != std::string::npos);
    CHECK(run({"simulate", "--family", fam, "--trials", "1000", "--seed", "5"}).out == r.out);
    CHECK(run({"simulate", "--family", fam, "--trials", "1000", "--seed", "5", "--jobs", "4"}).out == r.out);
    CHECK(run({"simulate", "--family", fam, "--trials", "300", "--pattern-mode", "atleast"}).code == 0);

    std::string text = write_family(test::example_433());
    text.replace(text.find("1 1 1\n0 1 2"), 1, "0");
    const auto bad = dir.write("bad.udm", text);
    const auto b = run({"simulate", "--family", bad, "--trials", "500", "--decoder", "gaussian"});
    CHECK(b.code == 1);
    std::istringstream lines(b.out);
    std::string line;
    bool saw = false;
    while (std::getline(lines, line)) {
        if (line.rfind("gaussian", 0) != 0) continue;
        std::istringstream f(line);
        std::string name;
        double rate;
        std::size_t wrong, singular;
        f >> name >> rate >> wrong >> singular;
        CHECK(rate < 1.0);
        CHECK(singular > 0);
        saw = true;
    }
    CHECK(saw);
    CHECK(run({"simulate", "--family", bad, "--decoder", "newton"}).code == 2);
}

TEST_CASE("bench") {
    const auto r = run({"bench", "--K", "4,8", "--trials", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("multiplications+inversions") != std::string::npos);
    CHECK(r.out.find("\n4 ") != std::string::npos);
}

TEST_CASE("usage") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    const auto h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("construct") != std::string::npos);
}
