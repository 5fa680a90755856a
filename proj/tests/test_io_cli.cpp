#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "triplekit/fixtures.hpp"
#include "triplekit/io.hpp"

using namespace triplekit;

namespace {

const std::array<const char*, 8> kFixtureNames = {"zero2",  "fkts-b", "osp",     "jts",
                                                  "sp2",    "osp-jt", "dic-sp2", "sl2"};

std::string fixture_path(const std::string& name) {
    return std::string(TRIPLEKIT_FIXTURE_DIR) + "/" + name + ".json";
}

/// Run the command line binary; returns the exit code, fills `out` with stdout.
int run_cli(const std::string& args, std::string* out = nullptr) {
    std::string cmd = std::string(TRIPLEKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string captured;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) captured.append(buf, got);
    int status = pclose(pipe);
    if (out) *out = std::move(captured);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path =
        (std::filesystem::temp_directory_path() / ("triplekit_io_test_" + name)).string();
    write_text_file(path, content);
    return path;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("scalar serialization round trips") {
    CHECK(rational_from_json(Json("3/4"), "t") == Rational(3, 4));
    CHECK(scalar_to_json(Rational(-7, 2)) == Json("-7/2"));

    // plain string and {a, b} object forms
    CHECK(cyc_from_json(Json("5"), "t") == Cyc(Rational(5)));
    Json obj = Json{{"a", "1/2"}, {"b", "-3"}};
    CHECK(cyc_from_json(obj, "t") == Cyc(Rational(1, 2), Rational(-3)));
    CHECK(scalar_to_json(Cyc(Rational(1, 2), Rational(-3))) == obj);
    // rational values of the quadratic field collapse to the string form
    CHECK(scalar_to_json(Cyc(Rational(4))) == Json("4"));

    CHECK_THROWS_AS(rational_from_json(Json("1/0"), "t"), ParseError);
    CHECK_THROWS_AS(rational_from_json(Json(2), "t"), ParseError);
    CHECK_THROWS_AS(cyc_from_json(Json{{"a", "1"}, {"c", "2"}}, "t"), ParseError);
}

TEST_CASE("tensor serialization omits zeros and restores them") {
    BasedSpace s(2);
    BilinearTensor<Rational> t(s, s, s);
    t.at(0, 1, 0) = Rational(5, 3);
    Json j = bilinear_to_json(t);
    REQUIRE(j.size() == 1);
    CHECK(j[0] == Json::array({0, 1, 0, "5/3"}));
    auto back = bilinear_from_json<Rational>(j, s, s, s, "t");
    CHECK(back.same_coefficients(t));

    CHECK_THROWS_AS(bilinear_from_json<Rational>(Json::array({Json::array({0, 1, 2, "1"})}), s, s,
                                                 s, "t"),
                    ParseError); // output index out of range
}

TEST_CASE("parse errors carry a dotted location") {
    Json doc = load_json_file(fixture_path("sp2"));
    doc["tensors"]["triple"][0][4] = "1/0";
    try {
        jternary_from_json<Rational>(doc);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("jternary.tensors.triple[0]") != std::string::npos);
        CHECK(msg.find("1/0") != std::string::npos);
    }

    Json bad = load_json_file(fixture_path("fkts-b"));
    bad.erase("epsilon");
    CHECK_THROWS_AS(fkts_from_json<Rational>(bad), ParseError);
}

TEST_CASE("every fixture file reparses to the identical document") {
    for (const char* name : kFixtureNames) {
        CAPTURE(name);
        Json doc = load_json_file(fixture_path(name));
        Json again;
        switch (file_kind(doc)) {
            case AlgebraKind::Fkts: again = to_json(fkts_from_json<Rational>(doc)); break;
            case AlgebraKind::JTernary: again = to_json(jternary_from_json<Rational>(doc)); break;
            case AlgebraKind::Dicyclic: again = to_json(dicyclic_from_json<Rational>(doc)); break;
            case AlgebraKind::Lie: again = to_json(lie_from_json<Rational>(doc)); break;
        }
        CHECK(dump_json(doc, true) == dump_json(again, true));
    }
}

TEST_CASE("fixture files equal the built-in emitters byte for byte") {
    for (const char* name : kFixtureNames) {
        CAPTURE(name);
        std::string out;
        REQUIRE(run_cli(std::string("fixtures emit ") + name, &out) == 0);
        CHECK(out == read_file(fixture_path(name)));
    }
}

TEST_CASE("fixtures list prints the catalogue") {
    std::string out;
    REQUIRE(run_cli("fixtures list", &out) == 0);
    for (const char* name : kFixtureNames) {
        CAPTURE(name);
        CHECK(out.find(name) != std::string::npos);
    }
    CHECK(run_cli("fixtures emit no-such-fixture") == 2);
}

TEST_CASE("verify exits 0 on every valid fixture") {
    for (const char* name : kFixtureNames) {
        CAPTURE(name);
        std::string out;
        CHECK(run_cli("verify " + fixture_path(name), &out) == 0);
        CHECK(Json::parse(out)["ok"] == true);
    }
}

TEST_CASE("verify exits 1 on a mutated fixture") {
    Json doc = load_json_file(fixture_path("fkts-b"));
    doc["tensors"]["triple"][0][4] = "7"; // wrong structure constant
    std::string path = temp_file("mutated_fkts.json", dump_json(doc, true));
    std::string out;
    CHECK(run_cli("verify " + path, &out) == 1);
    Json rep = Json::parse(out);
    CHECK(rep["ok"] == false);
    // the failing check names the basis tuple it broke on
    bool has_ce = false;
    for (const auto& c : rep["checks"])
        if (c["status"] == "fail" && c.contains("counterexample")) has_ce = true;
    CHECK(has_ce);

    Json lie = load_json_file(fixture_path("sl2"));
    lie["tensors"]["bracket"][0][3] = "3";
    std::string lpath = temp_file("mutated_sl2.json", dump_json(lie, true));
    CHECK(run_cli("verify " + lpath) == 1);
}

TEST_CASE("verify exits 2 on malformed input") {
    CHECK(run_cli("verify /nonexistent/file.json") == 2);
    CHECK(run_cli("verify " + temp_file("not_json.json", "{ nope")) == 2);

    Json doc = load_json_file(fixture_path("sp2"));
    doc["tensors"]["triple"][0][4] = "1/0";
    CHECK(run_cli("verify " + temp_file("div0.json", dump_json(doc, true))) == 2);

    Json oob = load_json_file(fixture_path("sl2"));
    oob["tensors"]["bracket"][0][0] = 17; // index out of range
    CHECK(run_cli("verify " + temp_file("oob.json", dump_json(oob, true))) == 2);

    Json badkind = load_json_file(fixture_path("sl2"));
    badkind["kind"] = "frobnicator";
    CHECK(run_cli("verify " + temp_file("badkind.json", dump_json(badkind, true))) == 2);

    // --kind override forces the wrong schema onto a valid file
    CHECK(run_cli("verify " + fixture_path("sl2") + " --kind fkts") == 2);
    CHECK(run_cli("verify") == 2); // missing argument
}

TEST_CASE("constructed outputs are written, valid, and reread identically") {
    struct Case {
        const char* fixture;
        const char* target;
        const char* extra;
    };
    const Case cases[] = {
        {"sp2", "g-jt", ""},
        {"osp-jt", "g-jt", ""},
        {"fkts-b", "g-u", ""},
        {"osp", "g-u", ""},
        {"dic-sp2", "g-a", ""},
        {"sp2", "dic-from-jt", ""},
        {"fkts-b", "dic-from-fkts", ""},
        {"fkts-b", "jt-from-fkts", ""},
        {"sp2", "fkts-from-jt", ""},
        {"dic-sp2", "jt-from-dic", " --unit 1,0,0"},
    };
    for (const auto& c : cases) {
        CAPTURE(c.fixture); CAPTURE(c.target);
        std::string path = (std::filesystem::temp_directory_path() /
                            (std::string("triplekit_io_test_out_") + c.fixture + "_" + c.target +
                             ".json"))
                               .string();
        std::string out;
        REQUIRE(run_cli("construct " + fixture_path(c.fixture) + " --target " + c.target +
                            c.extra + " --out " + path,
                        &out) == 0);
        CHECK(Json::parse(out)["ok"] == true);

        CHECK(run_cli("verify " + path) == 0);

        // write-read idempotence: reparse and redump byte-identically
        Json doc = load_json_file(path);
        Json again;
        bool over_omega = file_scalar_kind(doc) == ScalarKind::QOmega;
        switch (file_kind(doc)) {
            case AlgebraKind::Fkts:
                again = over_omega ? to_json(fkts_from_json<Cyc>(doc))
                                   : to_json(fkts_from_json<Rational>(doc));
                break;
            case AlgebraKind::JTernary:
                again = over_omega ? to_json(jternary_from_json<Cyc>(doc))
                                   : to_json(jternary_from_json<Rational>(doc));
                break;
            case AlgebraKind::Dicyclic:
                again = over_omega ? to_json(dicyclic_from_json<Cyc>(doc))
                                   : to_json(dicyclic_from_json<Rational>(doc));
                break;
            case AlgebraKind::Lie:
                again = over_omega ? to_json(lie_from_json<Cyc>(doc))
                                   : to_json(lie_from_json<Rational>(doc));
                break;
        }
        CHECK(dump_json(doc, true) == dump_json(again, true));
    }
}

TEST_CASE("construct argument validation") {
    CHECK(run_cli("construct " + fixture_path("dic-sp2") + " --target jt-from-dic") == 2);
    CHECK(run_cli("construct " + fixture_path("sp2") + " --target no-such-target") == 2);
    CHECK(run_cli("construct " + fixture_path("sl2") + " --target g-jt") == 2);
    // unit of the wrong dimension
    CHECK(run_cli("construct " + fixture_path("dic-sp2") + " --target jt-from-dic --unit 1,0") ==
          2);
    // find-unit on an algebra with a unit works end to end
    CHECK(run_cli("construct " + fixture_path("dic-sp2") +
                  " --target jt-from-dic --find-unit-from-basis") == 0);
}

TEST_CASE("roundtrip command covers the three cycles") {
    CHECK(run_cli("roundtrip " + fixture_path("sp2") + " --cycle jt-fkts") == 0);
    CHECK(run_cli("roundtrip " + fixture_path("osp-jt") + " --cycle jt-fkts") == 0);
    CHECK(run_cli("roundtrip " + fixture_path("sp2") + " --cycle jt-dic") == 0);
    CHECK(run_cli("roundtrip " + fixture_path("fkts-b") + " --cycle fkts-dic-lie") == 0);
    CHECK(run_cli("roundtrip " + fixture_path("sp2") + " --cycle no-such-cycle") == 2);
    // the direct dicyclic comparison needs eps = delta = 1
    CHECK(run_cli("roundtrip " + fixture_path("osp") + " --cycle fkts-dic-lie") == 2);
}

TEST_CASE("decompose command reports multiplicities and frame errors") {
    std::string gpath =
        (std::filesystem::temp_directory_path() / "triplekit_io_test_gsp2.json").string();
    REQUIRE(run_cli("construct " + fixture_path("sp2") + " --target g-jt --out " + gpath) == 0);

    std::string out;
    CHECK(run_cli("decompose " + gpath, &out) == 0);
    Json rep = Json::parse(out);
    CHECK(rep["facts"]["mult_adjoint"] == "1");
    CHECK(rep["facts"]["mult_natural"] == "2");
    CHECK(rep["facts"]["mult_trivial"] == "3");

    CHECK(run_cli("decompose " + fixture_path("sl2")) == 0);

    // an explicit frame that fails the bracket relations is an input error
    CHECK(run_cli("decompose " + fixture_path("sl2") + " --frame \"0,0,0;0,0,0;0,0,0\"") == 2);

    // a lie file without any frame cannot be decomposed
    std::string upath =
        (std::filesystem::temp_directory_path() / "triplekit_io_test_gu.json").string();
    REQUIRE(run_cli("construct " + fixture_path("fkts-b") + " --target g-u --out " + upath) == 0);
    CHECK(run_cli("decompose " + upath) == 2);
    // wrong file kind entirely
    CHECK(run_cli("decompose " + fixture_path("sp2")) == 2);
}

TEST_CASE("thread cap variable is accepted") {
    std::string out;
    std::string cmd = std::string("TRIPLEKIT_THREADS=1 ") + TRIPLEKIT_CLI_PATH + " verify " +
                      fixture_path("fkts-b") + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(Json::parse(out)["ok"] == true);
}
