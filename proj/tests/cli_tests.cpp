// End-to-end tests of the command-line tool: exact output bytes, exit
// codes and golden files. The binary under test and the golden
// directory arrive as --cli=<path> and --golden=<dir>.

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string g_cli;
std::string g_golden;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

}  // namespace

TEST_CASE("add and solve print digit text") {
    CHECK(run("add \"b=2 comp=3,2,1,1,1\" 11011101 10110110").output == "00000011\n");
    CHECK(run("add \"b=2 comp=1,1\" 10 10").output == "00\n");
    CHECK(run("add \"b=2 comp=2 twist=3\" 10 10").output == "01\n");
    CHECK(run("solve \"b=2 comp=2 twist=3\" 01 10").output == "10\n");

    const auto ok = run("add \"b=2 comp=1,1\" 10 10");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("exit codes separate usage from domain errors") {
    CHECK(run("add \"b=2 comp=1,1\" 10").exit_code == 2);   // missing operand
    CHECK(run("frobnicate").exit_code == 2);                // unknown subcommand
    CHECK(run("").exit_code == 2);                          // missing subcommand
    CHECK(run("count 2 8").exit_code == 2);                 // missing --what flag

    CHECK(run("add \"b=2 camp=3\" 1 1").exit_code == 1);    // bad token
    CHECK(run("add \"b=2 comp=3,2 twist=2,1\" 10110 10110").exit_code == 1);
    CHECK(run("add \"b=2 comp=1,1\" 12 10").exit_code == 1);  // digit out of range
    CHECK(run("add \"b=2 comp=3\" 10 10").exit_code == 1);    // length mismatch
    CHECK(run("verify \"b=2 comp=13\"").exit_code == 1);      // cap exceeded
    CHECK(run("derive 00 2 8").exit_code == 1);               // key too short
    CHECK(run("derive 0f0 2 4").exit_code == 1);              // odd hex
}

TEST_CASE("count output is plain decimal") {
    CHECK(run("count 2 8 --compositions").output == "128\n");
    CHECK(run("count 2 8 --partitions").output == "22\n");
    CHECK(run("count 2 8 --schemes").output == "2187\n");
    CHECK(run("count 6 2 --schemes").output == "16\n");
    CHECK(run("count 2 130 --compositions").output ==
          "680564733841876926926749214863536422912\n");  // 2^129
}

TEST_CASE("verify reports in fixed field order") {
    CHECK(run("verify \"b=2 comp=3,2,1,1,1\"").output ==
          "ELEMENTS: 256\n"
          "LATIN_SQUARE: yes\n"
          "COMMUTATIVE: yes\n"
          "ASSOCIATIVE: yes\n"
          "IDENTITY: 0\n"
          "INVERSES: yes\n"
          "GROUP: yes\n");
    CHECK(run("verify \"b=2 comp=2 twist=3\"").output ==
          "ELEMENTS: 4\n"
          "LATIN_SQUARE: yes\n"
          "COMMUTATIVE: yes\n"
          "ASSOCIATIVE: no (counterexample (0,0,1))\n"
          "IDENTITY: none\n"
          "INVERSES: no\n"
          "GROUP: no\n");
}

TEST_CASE("table prints the Cayley table row-major") {
    CHECK(run("table \"b=2 comp=2\"").output == "0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n");
    CHECK(run("table \"b=2 comp=1,1\"").output == "0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n");
}

TEST_CASE("census output matches the golden reports") {
    CHECK(run("census 2 3").output ==
          "census base=2 m=3 twists=no cap=4096\n"
          "schemes=4 distinct=4 expected=4\n"
          "expected_untwisted=4 expected_with_twists=9\n"
          "axioms latin=4 commutative=4 associative=4 identity=4 inverses=4 group=4\n");
    CHECK(run("census 2 1").output.find("schemes=1 distinct=1 expected=1\n") !=
          std::string::npos);

    for (const std::string name : {"census_b2_m1_twists", "census_b2_m2_twists",
                                   "census_b2_m3_twists", "census_b3_m1_twists",
                                   "census_b3_m2_twists", "census_b3_m3_twists"}) {
        const std::string base = name.substr(8, 1);
        const std::string m = name.substr(11, 1);
        const auto result = run("census " + base + " " + m + " --twists");
        CHECK(result.exit_code == 0);
        CHECK(result.output == read_file(g_golden + "/" + name + ".txt"));
    }
}

TEST_CASE("census runs are reproducible byte for byte") {
    const std::string first = run("census 3 3 --twists").output;
    const std::string second = run("census 3 3 --twists").output;
    CHECK(first == second);
    CHECK_FALSE(first.empty());
}

TEST_CASE("classify lists partitions with their compositions") {
    CHECK(run("classify 2 3").output ==
          "partition=3 compositions=(3)\n"
          "partition=2+1 compositions=(2,1),(1,2)\n"
          "partition=1+1+1 compositions=(1,1,1)\n"
          "classes=3 expected_partitions=3 profiles=checked\n");
}

TEST_CASE("list subcommands") {
    CHECK(run("list-compositions 3").output == "1,1,1\n2,1\n1,2\n3\n");
    CHECK(run("list-units 2 3").output == "1 3 5 7\n");
    CHECK(run("list-units 3 2").output == "1 2 4 5 7 8\n");
}

TEST_CASE("derive prints the scheme line or the transcript") {
    CHECK(run("derive d00000000000000000000000000000000000000000 2 8").output ==
          "b=2 comp=3,2,1,1,1\n");
    CHECK(run("derive 0000000000000000000000000000000000000000000000000000000000000000"
              "00 2 8").output == "b=2 comp=1,1,1,1,1,1,1,1\n");
    const auto transcript =
        run("derive d000000007000000000000000000000000000000000f 2 8 --transcript");
    CHECK(transcript.output ==
          "base=2 m=8\n"
          "bits=1101000\n"
          "comp=3,2,1,1,1\n"
          "twist[1]: t=3 bytes=00000007 value=7 phi=4 index=3 unit=7\n"
          "twist[2]: t=2 bytes=00000000 value=0 phi=2 index=0 unit=1\n"
          "twist[3]: t=1 bytes=00000000 value=0 phi=1 index=0 unit=1\n"
          "twist[4]: t=1 bytes=00000000 value=0 phi=1 index=0 unit=1\n"
          "twist[5]: t=1 bytes=00000000 value=0 phi=1 index=0 unit=1\n"
          "scheme=b=2 comp=3,2,1,1,1 twist=7,1,1,1,1\n");
}

TEST_CASE("encrypt and decrypt round trip through files") {
    const std::string dir = "cli_test_tmp";
    REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
    const std::string key = "d000000007000000000000000000000000000000000f";

    SUBCASE("digit text mode") {
        write_file(dir + "/plain.txt", "1101110100110101");
        write_file(dir + "/pad.txt", "1011011011100001");
        CHECK(run("encrypt " + key + " 2 8 " + dir + "/plain.txt " + dir + "/pad.txt -o " +
                  dir + "/cipher.txt").exit_code == 0);
        const auto back = run("decrypt " + key + " 2 8 " + dir + "/cipher.txt " + dir +
                              "/pad.txt");
        CHECK(back.exit_code == 0);
        CHECK(back.output == "1101110100110101");
        CHECK(read_file(dir + "/cipher.txt") != "1101110100110101");
    }

    SUBCASE("raw byte mode") {
        const std::string plain = "raw byte mode, 8-bit blocks";
        std::string pad;
        for (std::size_t i = 0; i < plain.size(); ++i) {
            pad += static_cast<char>((i * 89 + 17) & 0xFF);
        }
        write_file(dir + "/plain.bin", plain);
        write_file(dir + "/pad.bin", pad);
        CHECK(run("encrypt " + key + " 2 8 " + dir + "/plain.bin " + dir +
                  "/pad.bin --format bytes -o " + dir + "/cipher.bin").exit_code == 0);
        const auto back = run("decrypt " + key + " 2 8 " + dir + "/cipher.bin " + dir +
                              "/pad.bin --format bytes");
        CHECK(back.output == plain);
    }

    SUBCASE("format and length errors") {
        write_file(dir + "/short.txt", "110");
        write_file(dir + "/pad.txt", "1011011011100001");
        CHECK(run("encrypt " + key + " 2 8 " + dir + "/short.txt " + dir + "/pad.txt")
                  .exit_code == 1);
        CHECK(run("encrypt " + key + " 3 8 x y --format bytes").exit_code == 1);
        CHECK(run("encrypt " + key + " 2 8 " + dir + "/missing.txt " + dir + "/pad.txt")
                  .exit_code == 1);
    }
}

int main(int argc, char** argv) {
    doctest::Context context;
    std::vector<const char*> forwarded;
    for (int i = 0; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg.rfind("--cli=", 0) == 0) {
            g_cli = arg.substr(6);
        } else if (arg.rfind("--golden=", 0) == 0) {
            g_golden = arg.substr(9);
        } else {
            forwarded.push_back(argv[i]);
        }
    }
    if (g_cli.empty() || g_golden.empty()) {
        std::fprintf(stderr, "usage: cli_tests --cli=<binary> --golden=<dir> [doctest args]\n");
        return 1;
    }
    context.applyCommandLine(static_cast<int>(forwarded.size()), forwarded.data());
    return context.run();
}
