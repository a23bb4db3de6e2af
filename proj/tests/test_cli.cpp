#include <catch2/catch_amalgamated.hpp>

#include <regex>
#include <sstream>

#include "cartan/cli.hpp"

using namespace cartan;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<double> numbers_in(const std::string& text) {
    static const std::regex number(R"([-+]?\d+(\.\d+)?([eE][-+]?\d+)?)");
    std::vector<double> out;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), number);
         it != std::sregex_iterator(); ++it)
        out.push_back(std::stod(it->str()));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("parse_group: classification table fixtures") {
    struct Fixture {
        const char* name;
        DynkinType type;
        long long lattice_order;
    };
    const long long full_a3 = 4;
    std::vector<Fixture> fixtures = {
        {"SU(2)", DynkinType{Family::A, 1}, 2},
        {"SU(4)", DynkinType{Family::A, 3}, full_a3},
        {"Spin(3)", DynkinType{Family::A, 1}, 2},
        {"Spin(5)", DynkinType{Family::B, 2}, 2},
        {"Spin(6)", DynkinType{Family::A, 3}, 4},
        {"Spin(7)", DynkinType{Family::B, 3}, 2},
        {"Spin(8)", DynkinType{Family::D, 4}, 4},
        {"Sp(1)", DynkinType{Family::A, 1}, 2},
        {"Sp(2)", DynkinType{Family::B, 2}, 2},
        {"Sp(3)", DynkinType{Family::C, 3}, 2},
        {"SO(3)", DynkinType{Family::A, 1}, 1},
        {"SO(5)", DynkinType{Family::B, 2}, 1},
        {"SO(7)", DynkinType{Family::B, 3}, 1},
        {"SO(6)", DynkinType{Family::A, 3}, 2},
        {"SO(8)", DynkinType{Family::D, 4}, 2},
        {"PSU(3)", DynkinType{Family::A, 2}, 1},
        {"PSU(2)", DynkinType{Family::A, 1}, 1},
        {"A3", DynkinType{Family::A, 3}, 4},
        {"G2", DynkinType{Family::G, 2}, 1},
        {"E8", DynkinType{Family::E, 8}, 1},
        {"F4", DynkinType{Family::F, 4}, 1},
    };
    for (const Fixture& f : fixtures) {
        INFO(f.name);
        GroupSpec spec = parse_group(f.name);
        CHECK(spec.type == f.type);
        CHECK(spec.lattice.order == f.lattice_order);
    }
}

TEST_CASE("parse_group: rejections name the reason") {
    CHECK_THROWS_WITH(parse_group("SO(4)"), Catch::Matchers::ContainsSubstring("not simple"));
    CHECK_THROWS_WITH(parse_group("Spin(4)"), Catch::Matchers::ContainsSubstring("not simple"));
    CHECK_THROWS_WITH(parse_group("U(3)"), Catch::Matchers::ContainsSubstring("harmonic"));
    CHECK_THROWS_AS(parse_group("SO(2)"), ParseError);
    CHECK_THROWS_AS(parse_group("SU(1)"), ParseError);
    CHECK_THROWS_AS(parse_group("E5"), ParseError);
    CHECK_THROWS_AS(parse_group("H3"), ParseError);
    CHECK_THROWS_AS(parse_group("SU(4"), ParseError);
    CHECK_THROWS_AS(parse_group("SU(4)x"), ParseError);
    CHECK_THROWS_AS(parse_group(""), ParseError);
    CHECK_THROWS_AS(parse_group("D2"), ParseError);
}

TEST_CASE("parsed lattices are genuine character lattices") {
    for (const char* name : {"SU(4)", "SO(3)", "SO(6)", "SO(8)", "Spin(8)", "PSU(4)", "Sp(3)"}) {
        GroupSpec spec = parse_group(name);
        RootSystem rs = build_root_system(spec.type);
        bool found = false;
        for (const LatticeClass& lc : enumerate_character_lattices(rs))
            if (lc.elements == spec.lattice.elements) found = true;
        INFO(name);
        CHECK(found);
    }
}

TEST_CASE("canonical names round trip") {
    for (const char* name : {"SU(2)", "SU(4)", "Spin(5)", "Spin(7)", "Spin(8)", "Sp(3)", "SO(3)",
                             "SO(5)", "SO(6)", "SO(8)", "PSU(3)", "A3", "G2", "E6", "B4", "B1",
                             "C2", "D3"}) {
        GroupSpec spec = parse_group(name);
        std::string canon = canonical_name(spec);
        INFO(name << " -> " << canon);
        GroupSpec again = parse_group(canon);
        CHECK(again.type == spec.type);
        CHECK(again.lattice.elements == spec.lattice.elements);
        CHECK(canonical_name(again) == canon);
    }
}

TEST_CASE("parse_weight accepts bracket syntax and rejects malformed input") {
    CHECK(parse_weight("[0]") == Weight{0});
    CHECK(parse_weight("[1,1]") == Weight{1, 1});
    CHECK(parse_weight("[1, 0, 2]") == Weight{1, 0, 2});
    CHECK(parse_weight(" [ -3 , 4 ] ") == Weight{-3, 4});
    CHECK_THROWS_AS(parse_weight("1,2"), ParseError);
    CHECK_THROWS_AS(parse_weight("[1 2]"), ParseError);
    CHECK_THROWS_AS(parse_weight("[a]"), ParseError);
    CHECK_THROWS_AS(parse_weight("[]"), ParseError);
    CHECK_THROWS_AS(parse_weight("[1,2"), ParseError);
    CHECK_THROWS_AS(parse_weight("[1,2]f"), ParseError);
}

TEST_CASE("parse_angles") {
    auto a = parse_angles("[0.5, -1.25e1, 3]");
    REQUIRE(a.size() == 3);
    CHECK(a[0] == 0.5);
    CHECK(a[1] == -12.5);
    CHECK(a[2] == 3.0);
    CHECK_THROWS_AS(parse_angles("[1;2]"), ParseError);
    CHECK_THROWS_AS(parse_angles("0.5"), ParseError);
}

TEST_CASE("cli: dim fixtures and exit codes") {
    RunResult r = run({"dim", "SU(2)", "[4]"});
    CHECK(r.code == 0);
    CHECK(r.out.find("5") != std::string::npos);

    // Pi_1 does not factor through SO(3)
    RunResult rejected = run({"dim", "SO(3)", "[1]"});
    CHECK(rejected.code == 2);
    CHECK(rejected.err.find("character lattice") != std::string::npos);

    RunResult even = run({"dim", "SO(3)", "[2]"});
    CHECK(even.code == 0);
    CHECK(even.out.find("3") != std::string::npos);

    // spinor weight is fine on Spin(5) but not on SO(5)
    CHECK(run({"dim", "Spin(5)", "[0,1]"}).code == 0);
    CHECK(run({"dim", "SO(5)", "[0,1]"}).code == 2);
    CHECK(run({"dim", "SO(5)", "[1,0]"}).code == 0);

    // parse errors
    CHECK(run({"dim", "SO(4)", "[1]"}).code == 1);
    CHECK(run({"dim", "SU(2)", "oops"}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"dim", "SU(2)"}).code == 1);
    CHECK(run({"dim", "SU(2)", "[1]", "--format", "yaml"}).code == 1);

    // domain errors
    CHECK(run({"dim", "SU(2)", "[-1]"}).code == 2);
    CHECK(run({"dim", "SU(3)", "[1]"}).code == 2);  // wrong rank

    // resource cap
    CHECK(run({"weights", "SU(2)", "[99]", "--cap", "50"}).code == 3);
    CHECK(run({"weyl-order", "E8", "--cap", "10000"}).code == 3);
}

TEST_CASE("cli: center and lattices") {
    RunResult r = run({"center", "SU(4)"});
    CHECK(r.code == 0);
    CHECK(r.out == "center = Z4\n");
    CHECK(run({"center", "E8"}).out == "center = trivial\n");
    CHECK(run({"center", "Spin(8)"}).out == "center = Z2 x Z2\n");
    CHECK(run({"center", "SU(4)", "--format", "machine"}).out == "center 4\n");
    CHECK(run({"center", "G2", "--format", "machine"}).out == "center\n");

    RunResult l = run({"lattices", "SU(4)"});
    CHECK(l.code == 0);
    CHECK(l.out.find("3 character lattice(s)") != std::string::npos);
}

TEST_CASE("cli: weights output formats carry the same payload") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"weights", "SU(3)", "[1,1]"},
             {"dim", "Spin(5)", "[0,1]"},
             {"tensor", "SU(2)", "[3]", "[2]"},
             {"weyl-order", "F4"},
             {"center", "SU(4)"},
             {"roots", "G2"},
             {"char-eval", "SU(2)", "[2]", "[0.5]"},
             {"lattices", "Spin(8)"},
             {"lattices", "SU(4)"},
         }) {
        RunResult text = run(args);
        auto margs = args;
        margs.push_back("--format");
        margs.push_back("machine");
        RunResult machine = run(margs);
        REQUIRE(text.code == 0);
        REQUIRE(machine.code == 0);
        auto tn = numbers_in(text.out);
        auto mn = numbers_in(machine.out);
        // every number in the machine payload appears in the text payload
        for (double v : mn) {
            bool found = false;
            for (double w : tn)
                if (std::abs(v - w) < 1e-12 * std::max(1.0, std::abs(v))) {
                    found = true;
                    break;
                }
            INFO(args[0] << " machine value " << v);
            CHECK(found);
        }
    }
}

TEST_CASE("cli: weights of Pi_3 in machine form") {
    RunResult r = run({"weights", "SU(2)", "[3]", "--format", "machine"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "weights 4 4\n"
          "w 1 -3\n"
          "w 1 -1\n"
          "w 1 1\n"
          "w 1 3\n");
}

TEST_CASE("cli: char-eval agrees between methods") {
    RunResult ws = run({"char-eval", "SU(3)", "[1,1]", "[0.4,1.3]", "--format", "machine"});
    RunResult wq = run({"char-eval", "SU(3)", "[1,1]", "[0.4,1.3]", "--format", "machine",
                        "--method", "weyl-quotient"});
    REQUIRE(ws.code == 0);
    REQUIRE(wq.code == 0);
    std::istringstream a(ws.out), b(wq.out);
    std::string tag;
    double re1, im1, re2, im2;
    a >> tag >> re1 >> im1;
    b >> tag >> re2 >> im2;
    CHECK(std::abs(re1 - re2) < 1e-10);
    CHECK(std::abs(im1 - im2) < 1e-10);

    CHECK(run({"char-eval", "SU(2)", "[2]", "[0]", "--method", "weyl-quotient"}).code == 2);
    CHECK(run({"char-eval", "SU(2)", "[2]", "[0,1]"}).code == 2);
}

TEST_CASE("cli: tensor fixture") {
    RunResult r = run({"tensor", "SU(3)", "[1,0]", "[0,1]", "--format", "machine"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "tensor 2\n"
          "w 1 0 0\n"
          "w 1 1 1\n");
    CHECK(run({"tensor", "SO(3)", "[2]", "[1]"}).code == 2);
}

TEST_CASE("cli: help and usage") {
    RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("usage: cartan") != std::string::npos);
    RunResult bare = run({});
    CHECK(bare.code == 1);
    CHECK(bare.out.find("usage: cartan") != std::string::npos);
}

TEST_CASE("cli: verify-harmonic smoke run at low resolution") {
    RunResult r = run({"verify-harmonic", "--resolution", "12", "--format", "machine"});
    CHECK(r.code == 0);
    CHECK(r.out.find("result") != std::string::npos);
}
