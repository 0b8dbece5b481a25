#include <doctest.h>

#include <fstream>
#include <string>

#include "cli_harness.hpp"
#include "test_util.hpp"

namespace {

const std::string kCli = BNUM_CLI_PATH;

std::string workdir_with_m1() {
    const std::string dir = clitest::make_temp_dir();
    std::ofstream out(dir + "/m1.tm", std::ios::binary);
    out << testutil::read_file(testutil::data_path("m1.tm"));
    return dir;
}

}  // namespace

TEST_CASE("cli: success paths produce the documented lines") {
    using clitest::run_command;
    CHECK(run_command(kCli + " encode --value 5 --scheme binary --sign normal")
              .output == "101|1\n");
    CHECK(run_command(kCli + " encode --value 5 --scheme binary --sign flipped")
              .output == "010|0\n");
    CHECK(run_command(kCli + " encode --value 3 --scheme length --sign normal")
              .output == "000|1\n");
    CHECK(run_command(kCli + " decode --bits '101|1' --scheme binary").output ==
          "5\n");
    CHECK(run_command(kCli + " decode --bits '010|1' --scheme length").output ==
          "3\n");
    CHECK(run_command(kCli + " bounds --b 3").output ==
          "lower=0.811278124 upper=0.918295834\n");
    CHECK(run_command(kCli + " entropy --p 0.5").output == "1\n");
    CHECK(run_command(kCli + " entropy --inverse 0.5").output == "0.110027864\n");
    CHECK(run_command(kCli + " vonneumann --n 2").output ==
          "{∅,{∅}}\n");
    CHECK(run_command(kCli + " vonneumann --n 3 --ascii").output ==
          "{{},{{}},{{},{{}}}}\n");
}

TEST_CASE("cli: reduce and invert are inverse operations") {
    using clitest::run_command;
    const auto padded =
        run_command(kCli + " reduce --bits '101|1' --epsilon 'I(1/9)'");
    CHECK(padded.exit_code == 0);
    CHECK(padded.output ==
          "0000000000000000000000000000001110100000|1\n");
    std::string padded_text = padded.output;
    padded_text.pop_back();
    const auto original =
        run_command(kCli + " invert --bits '" + padded_text + "'");
    CHECK(original.output == "101|1\n");
}

TEST_CASE("cli: machine subcommands") {
    using clitest::run_command;
    const std::string dir = workdir_with_m1();
    CHECK(run_command(kCli + " simulate --machine m1.tm --input 101", dir)
              .output == "verdict=Accept steps=5 tape=101\n");
    CHECK(run_command(kCli + " worst-case --machine m1.tm --n 2", dir).output ==
          "t_max=4 witness=00\n");
    CHECK(run_command(kCli + " worst-case --machine m1.tm --n 2 --parallel", dir)
              .output == "t_max=4 witness=00\n");
}

TEST_CASE("cli: experiment emits canonical csv files") {
    using clitest::run_command;
    const std::string dir = clitest::make_temp_dir();
    const auto summary = run_command(
        kCli + " experiment --theorem 4 --max-b 10 --out theorem4.csv", dir);
    CHECK(summary.exit_code == 0);
    CHECK(summary.output == "growth=Exponential ratio→2\n");
    const std::string first = testutil::read_file(dir + "/theorem4.csv");
    CHECK(first ==
          testutil::read_file(testutil::golden_path("theorem4_max10.csv")));

    // byte-identical on a second run
    run_command(kCli + " experiment --theorem 4 --max-b 10 --out theorem4.csv",
                dir);
    CHECK(testutil::read_file(dir + "/theorem4.csv") == first);

    const auto t3 = run_command(
        kCli + " experiment --theorem 3 --max-n 64 --out-dir .", dir);
    CHECK(t3.exit_code == 0);
    CHECK(t3.output ==
          "efficient growth=Polynomial max_padding=0\n"
          "length growth=Exponential max_padding=57\n");
    CHECK(testutil::read_file(dir + "/theorem3_efficient.csv") ==
          testutil::read_file(testutil::golden_path("theorem3_efficient_max64.csv")));
    CHECK(testutil::read_file(dir + "/theorem3_length.csv") ==
          testutil::read_file(testutil::golden_path("theorem3_length_max64.csv")));

    // '-' streams the csv to stdout
    const auto streamed = run_command(
        kCli + " experiment --theorem 4 --max-b 10 --out -", dir);
    CHECK(streamed.output == first);
}

TEST_CASE("cli: exit codes follow the 0/1/2 contract") {
    using clitest::run_command;
    CHECK(run_command(kCli + " bounds --b 3").exit_code == 0);
    CHECK(run_command(kCli + " bounds --b 0").exit_code == 1);       // domain
    CHECK(run_command(kCli + " decode --bits '12|1'").exit_code == 1);
    CHECK(run_command(kCli + " reduce --bits '1|1' --epsilon 0").exit_code == 1);
    CHECK(run_command(kCli + " vonneumann --n 99").exit_code == 1);  // cap
    CHECK(run_command(kCli + " bounds --wat 3").exit_code == 2);     // unknown flag
    CHECK(run_command(kCli + " bounds").exit_code == 2);             // missing
    CHECK(run_command(kCli + " nosuchcommand").exit_code == 2);
    CHECK(run_command(kCli + " encode --value 5 --scheme bogus").exit_code == 2);
    CHECK(run_command(kCli + " entropy").exit_code == 2);
    CHECK(run_command(kCli + " reduce --bits '1|1' --epsilon 'I(2/3)'")
              .exit_code == 2);
    CHECK(run_command(kCli + " --help").exit_code == 0);
}

TEST_CASE("cli: every documented example reproduces its output") {
    const auto examples = clitest::readme_examples();
    CHECK(examples.size() >= 8);  // the README carries a real example set
    const std::string dir = workdir_with_m1();
    for (const auto& example : examples) {
        CAPTURE(example.command);
        const auto first = clitest::run_command(example.command, dir);
        CHECK(first.exit_code == 0);
        CHECK(first.output == example.expected_output);
        const auto second = clitest::run_command(example.command, dir);
        CHECK(second.output == example.expected_output);
    }
}
