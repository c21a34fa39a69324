#include "doctest.h"

#include <string>

#include <nlohmann/json.hpp>

#include "test_util.hpp"

using nlohmann::json;
using testutil::run_cmd;
using testutil::write_tmp;

namespace {

const std::string kBin = ALCS_CLI_PATH;

json parse_output(const std::string& text) {
    return json::parse(text);
}

} // namespace

TEST_CASE("command line solves the four-string sample end to end") {
    const auto input =
        write_tmp("cli_four.txt", "aabcf\nfabcd\ndgiabc\nahabch\n");
    const auto r = run_cmd(kBin + " --input " + input +
                           " --problem rkt-lcs --metric hamming --k 2 --t 3"
                           " --output json");
    REQUIRE(r.exit_code == 0);
    const json j = parse_output(r.output);
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("solved") == true);
    CHECK(j.at("result").at("length") == 5);
    CHECK(j.at("result").at("answers") == json::array({"aabcf"}));
    CHECK(j.at("result").at("witnesses").size() == 3);
}

TEST_CASE("an unsolvable run exits with the no-solution status") {
    const auto input = write_tmp("cli_disjoint.txt", "aa\nbb\n");
    const auto r = run_cmd(kBin + " --input " + input +
                           " --problem rk-lcs --metric hamming --k 0"
                           " --output json");
    CHECK(r.exit_code == 3);
    const json j = parse_output(r.output);
    CHECK(j.at("solved") == false);
    CHECK_FALSE(j.contains("result"));
}

TEST_CASE("usage mistakes exit with the usage status") {
    CHECK(run_cmd(kBin + " --problem rk-lcs").exit_code == 2); // no input
    const auto input = write_tmp("cli_ok.txt", "ab\nba\n");
    CHECK(run_cmd(kBin + " --input " + input + " --problem bogus").exit_code ==
          2);
    CHECK(run_cmd(kBin + " --input " + input + " --metric weighted").exit_code ==
          2); // weighted needs a cost table
    CHECK(run_cmd(kBin + " gen-gadget rklcs --M 2 --d 0 --nv 1 --out /tmp/x")
              .exit_code == 2);
    CHECK(run_cmd(kBin + " --help").exit_code == 0);
    CHECK(run_cmd(kBin + " --help").output.find("gen-gadget") !=
          std::string::npos);
}

TEST_CASE("reference and table solvers report the same length") {
    const auto input =
        write_tmp("cli_pair.txt", "gtacaat\ncttgta\nttgac\n");
    const auto fast = run_cmd(kBin + " --input " + input +
                              " --problem rkt-lcs --metric hamming --k 1"
                              " --t 2 --solver lengthstat --output json");
    const auto slow = run_cmd(kBin + " --input " + input +
                              " --problem rkt-lcs --metric hamming --k 1"
                              " --t 2 --solver oracle --output json");
    REQUIRE(fast.exit_code == 0);
    REQUIRE(slow.exit_code == 0);
    const json a = parse_output(fast.output);
    const json b = parse_output(slow.output);
    CHECK(a.at("result").at("length") == b.at("result").at("length"));
    CHECK(b.at("solver") == "oracle");
}

TEST_CASE("generated mismatch-budget encodings solve above their threshold") {
    const auto out = testutil::tmp_file("gadget_rklcs.txt").string();
    const auto gen = run_cmd(kBin + " gen-gadget rklcs --M 2 --d 2 --nv 2"
                                    " --q 1 --plant --seed 5 --out " +
                             out);
    REQUIRE(gen.exit_code == 0);
    CHECK(testutil::run_cmd("wc -l < " + out).output == "3\n");

    const json side = parse_output(run_cmd("cat " + out + ".json").output);
    CHECK(side.at("schema_version") == 1);
    CHECK(side.at("kind") == "rklcs");
    CHECK(side.at("sets") == 2);
    CHECK(side.at("vectors_per_set") == 2);
    CHECK(side.at("dim") == 2);
    CHECK(side.at("q") == 1);
    CHECK(side.at("planted") == true);
    CHECK(side.at("m") == 3);
    CHECK(side.at("k") == 2);
    CHECK(side.at("threshold_yes_at_least") == 42);
    CHECK(side.at("threshold_no_below") == 42);
    CHECK(side.at("threshold") == 42);
    CHECK(side.at("strings_file") == out);

    const auto solve = run_cmd(kBin + " --input " + out +
                               " --problem rk-lcs --metric hamming --k 2"
                               " --solver maxlcp --output json");
    REQUIRE(solve.exit_code == 0);
    CHECK(parse_output(solve.output).at("result").at("length") >= 42);
}

TEST_CASE("generated equal-length encodings carry their budget and threshold") {
    const auto out = testutil::tmp_file("gadget_rklcss.txt").string();
    const auto side_path = testutil::tmp_file("gadget_rklcss.meta").string();
    const auto gen = run_cmd(kBin + " gen-gadget rklcss --m 2 --d 1 --nv 2"
                                    " --seed 9 --plant --out " +
                             out + " --sidecar " + side_path);
    REQUIRE(gen.exit_code == 0);
    CHECK(testutil::run_cmd("wc -l < " + out).output == "2\n");

    const json side = parse_output(run_cmd("cat " + side_path).output);
    CHECK(side.at("kind") == "rklcss");
    CHECK(side.at("k") == 3);
    CHECK(side.at("threshold") == 33);
    CHECK(side.at("total_length") == 110);

    const auto solve = run_cmd(kBin + " --input " + out +
                               " --problem rk-lcss --metric hamming --k 3"
                               " --output json");
    REQUIRE(solve.exit_code == 0);
    const json j = parse_output(solve.output);
    CHECK(j.at("result").at("length") >= 33);
    CHECK(j.at("result").at("answers").size() == 2);
}

TEST_CASE("degenerate-code inputs solve as letter-set strings") {
    const auto input = write_tmp("cli_iupac.txt", "AST\nACT\nAGT\n");
    const auto r = run_cmd(kBin + " --input " + input +
                           " --indeterminate --problem elcs --output json");
    REQUIRE(r.exit_code == 0);
    const json j = parse_output(r.output);
    CHECK(j.at("result").at("length") == 3);
    CHECK(j.at("result").at("answers") == json::array({"a[cg]t"}));
    CHECK(j.at("result").at("support") == 3);
}

TEST_CASE("record-format inputs keep their names in the report") {
    const auto input = write_tmp("cli_records.fa",
                                 ">left side\nACGTA\nCGT\n>right\nTTACGG\n");
    const auto r = run_cmd(kBin + " --input " + input +
                           " --format fasta --problem rk-lcs --metric hamming"
                           " --k 0 --output json");
    REQUIRE(r.exit_code == 0);
    const json j = parse_output(r.output);
    CHECK(j.at("m") == 2);
    CHECK(j.at("string_names") == json::array({"left side", "right"}));
    CHECK(j.at("result").at("length") == 4);
    CHECK(j.at("result").at("answers") == json::array({"tacg"}));
}

TEST_CASE("other report styles and budget overrides reach the process edge") {
    const auto input = write_tmp("cli_styles.txt", "abab\nbab\n");
    const auto tsv = run_cmd(kBin + " --input " + input +
                             " --problem rk-lcs --metric hamming --k 0"
                             " --output tsv");
    REQUIRE(tsv.exit_code == 0);
    CHECK(tsv.output.find("length\t3") != std::string::npos);
    CHECK(tsv.output.find("answer\tbab") != std::string::npos);

    const auto human = run_cmd(kBin + " --input " + input +
                               " --problem rk-lcs --metric hamming --k 0");
    REQUIRE(human.exit_code == 0);
    CHECK(human.output.find("length 3") != std::string::npos);

    const auto capped = run_cmd("ALCS_ORACLE_MAX_ELL=2 " + kBin + " --input " +
                                input +
                                " --problem rkt-lcs --metric hamming --k 0"
                                " --solver oracle");
    CHECK(capped.exit_code == 2);

    const auto costs = write_tmp("cli_costs.tsv", "sub\ta\tb\t2\n");
    const auto weighted = run_cmd(kBin + " --input " + input +
                                  " --problem rkt-lcs --metric weighted"
                                  " --costs " + costs +
                                  " --k 1 --t 2 --output json");
    REQUIRE(weighted.exit_code == 0);
    CHECK(parse_output(weighted.output).at("metric") == "weighted");
}
