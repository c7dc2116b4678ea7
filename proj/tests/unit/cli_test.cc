// Copyright 2026 The t2t Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "t2t/embedding.h"

#ifndef T2T_TEST_DATA_DIR
#error "T2T_TEST_DATA_DIR must be defined"
#endif

namespace t2t::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "t2t");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = dispatch(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("t2t_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    write("vocab.tsv",
          "<pad>\t0\n</s>\t0\n<unk>\t0\n\xE2\x96\x81\t-3\n\xE2\x96\x81kot\t-1\n"
          "k\t-4\no\t-4\nt\t-4\na\t-4\n<extra_id_2>\t0\n<extra_id_1>\t0\n"
          "<extra_id_0>\t0\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, ParamsReport) {
  const Outcome r = run({"params", "--family", "small", "--vocab", "50000"});
  ASSERT_EQ(kExitOk, r.code) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ("t2t.params/1", j["schema"]);
  EXPECT_NEAR(95e6, j["total"].get<double>(), 95e6 * 0.03);
  EXPECT_EQ(10u, j["terms"].size());

  write("cfg.json", R"({"num_layers":1,"num_heads":2,"d_model":4,"d_ff":8,"d_kv":3,)"
                    R"("vocab_size":10,"relative_attention_buckets":5})");
  const Outcome c = run({"params", "--config", path("cfg.json")});
  ASSERT_EQ(kExitOk, c.code) << c.err;
  EXPECT_EQ(608, json::parse(c.out)["total"].get<int>());
}

TEST_F(CliTest, UsageErrors) {
  Outcome r = run({"params", "--bogus"});
  EXPECT_EQ(kExitUsage, r.code);
  EXPECT_TRUE(r.out.empty());
  r = run({"frobnicate"});
  EXPECT_EQ(kExitUsage, r.code);
  EXPECT_TRUE(r.out.empty());
  r = run({});
  EXPECT_EQ(kExitUsage, r.code);
  r = run({"--help"});
  EXPECT_EQ(kExitOk, r.code);
  EXPECT_NE(std::string::npos, r.out.find("lrsearch"));
  r = run({"evaluate", "--metric", "meteor", "--preds", path("vocab.tsv")});
  EXPECT_EQ(kExitUsage, r.code);
}

TEST_F(CliTest, DataErrors) {
  write("bad.tsv", "<pad>\t0\n</s>\t0\n");
  Outcome r = run({"tok", "encode", "--vocab", path("bad.tsv")}, "kot\n");
  EXPECT_EQ(kExitData, r.code);
  EXPECT_NE(std::string::npos, r.err.find("error"));
  r = run({"corrupt", "--vocab", path("vocab.tsv")}, "{\"ids\": [4, 5,\n");
  EXPECT_EQ(kExitData, r.code);
  write("p.txt", "a\nb\n");
  write("r.txt", "a\n");
  r = run({"evaluate", "--metric", "accuracy", "--preds", path("p.txt"), "--refs",
           path("r.txt")});
  EXPECT_EQ(kExitData, r.code);
}

TEST_F(CliTest, TokRoundTrip) {
  Outcome r = run({"tok", "encode", "--vocab", path("vocab.tsv")}, "kot kota\n\n");
  ASSERT_EQ(kExitOk, r.code) << r.err;
  EXPECT_EQ("4 4 8\n\n", r.out);
  r = run({"tok", "encode", "--vocab", path("vocab.tsv"), "--pieces"}, "kot\n");
  EXPECT_EQ("\xE2\x96\x81kot\n", r.out);
  r = run({"--json", "tok", "encode", "--vocab", path("vocab.tsv")}, "kot\n");
  EXPECT_EQ("{\"ids\":[4]}\n", r.out);
  r = run({"tok", "decode", "--vocab", path("vocab.tsv")}, "4 4 8\n{\"ids\":[4,11,1]}\n");
  ASSERT_EQ(kExitOk, r.code) << r.err;
  EXPECT_EQ("kot kota\nkot<extra_id_0>\n", r.out);
  r = run({"tok", "decode", "--vocab", path("vocab.tsv")}, "4 99\n");
  EXPECT_EQ(kExitData, r.code);
}

TEST_F(CliTest, Transfer) {
  write("tgt.tsv", "<pad>\t0\n</s>\t0\n<unk>\t0\n\xE2\x96\x81kota\t-1\n\xC5\xBC\t-1\n");
  std::vector<float> data;
  for (int i = 0; i < 12 * 2; ++i) data.push_back(static_cast<float>(i));
  write_matrix(EmbeddingMatrix(12, 2, data), fs::path(path("src.emb")));
  const Outcome r = run({"transfer", "--src-vocab", path("vocab.tsv"), "--src-emb",
                     path("src.emb"), "--tgt-vocab", path("tgt.tsv"), "--out",
                     path("tgt.emb"), "--report", path("report.json")});
  ASSERT_EQ(kExitOk, r.code) << r.err;
  const json summary = json::parse(r.out);
  EXPECT_EQ(3, summary["copied"]);
  EXPECT_EQ(1, summary["averaged"]);
  EXPECT_EQ(1, summary["fallback"]);
  const EmbeddingMatrix out = read_matrix(fs::path(path("tgt.emb")));
  EXPECT_EQ(5u, out.rows());
  // ▁kota = mean(▁kot, a) = mean([8,9], [16,17])
  EXPECT_EQ(12.0f, out.row(3)[0]);
  std::ifstream in(path("report.json"));
  const json report = json::parse(in);
  EXPECT_EQ("averaged", report["pieces"][3]["provenance"]);
  EXPECT_EQ("fallback", report["pieces"][4]["provenance"]);
}

TEST_F(CliTest, CorruptDeterministic) {
  std::string input;
  for (int d = 0; d < 5; ++d) {
    json ids = json::array();
    for (int i = 0; i < 12; ++i) ids.push_back(4 + (i + d) % 5);
    input += json{{"ids", ids}}.dump() + "\n";
  }
  input += "{\"ids\":[4]}\n";
  const std::vector<std::string> args = {"corrupt", "--vocab", path("vocab.tsv"),
                                         "--rate", "0.3", "--mean-span", "2",
                                         "--seed", "17"};
  const Outcome a = run(args, input);
  const Outcome b = run(args, input);
  ASSERT_EQ(kExitOk, a.code) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(std::string::npos, a.err.find("skipped"));
  std::istringstream lines(a.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const json j = json::parse(line);
    EXPECT_TRUE(j.contains("input"));
    EXPECT_EQ(1, j["target"].back());
    ++count;
  }
  EXPECT_EQ(5, count);
  auto other = args;
  other.back() = "18";
  EXPECT_NE(a.out, run(other, input).out);
  EXPECT_TRUE(run({"--quiet", "corrupt", "--vocab", path("vocab.tsv")}, "{\"ids\":[4]}\n")
                  .err.empty());
}

TEST_F(CliTest, Tasks) {
  Outcome r = run({"tasks", "dump-specs", "--format", "tsv"});
  ASSERT_EQ(kExitOk, r.code);
  std::ifstream in(T2T_TEST_DATA_DIR "/table2.tsv", std::ios::binary);
  std::stringstream want;
  want << in.rdbuf();
  EXPECT_EQ(want.str(), r.out);

  r = run({"tasks", "dump-specs"});
  const json specs = json::parse(r.out)["specs"];
  EXPECT_EQ(11u, specs.size());
  EXPECT_EQ("NKJP-NER", specs[0]["name"]);

  r = run({"tasks", "format"},
          R"({"task":"CDSC-E","text1":"Kot śpi.","text2":"Zwierzę śpi.","target":"wynikanie"})"
          "\n");
  ASSERT_EQ(kExitOk, r.code) << r.err;
  EXPECT_EQ(R"({"source":"zdanie 1: Kot śpi. zdanie 2: Zwierzę śpi.","target":"wynikanie"})"
            "\n",
            r.out);
  r = run({"tasks", "format", "--task", "CBD", "--decoder-only"},
          R"({"text1":"x","text2":null,"target":"przemoc"})" "\n");
  EXPECT_EQ(R"({"source":"zdanie: x [SEP]","target":"przemoc"})" "\n", r.out);
  r = run({"tasks", "format", "--task", "CBD"}, R"({"text1":"x","target":"hejt"})" "\n");
  EXPECT_EQ(kExitData, r.code);

  r = run({"tasks", "decode-label", "--task", "Czy wiesz?"}, " prawda\nprawdа\n");
  EXPECT_EQ("{\"generated\":\" prawda\",\"label\":\"prawda\"}\n"
            "{\"generated\":\"prawdа\",\"label\":null}\n",
            r.out);
  r = run({"tasks", "max-target-len", "--task", "CBD", "--vocab", path("vocab.tsv")});
  ASSERT_EQ(kExitOk, r.code) << r.err;
  EXPECT_TRUE(json::parse(r.out)["max_target_length"].is_number());
}

TEST_F(CliTest, Evaluate) {
  write("a.txt", "Ala ma kota.\nkot\n");
  Outcome r = run({"evaluate", "--metric", "rouge", "--preds", path("a.txt"), "--refs",
               path("a.txt"), "--per-example"});
  ASSERT_EQ(kExitOk, r.code) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(1.0, j["aggregate"]);
  EXPECT_EQ(2, j["n"]);
  EXPECT_EQ(2u, j["per_example"].size());
  r = run({"evaluate", "--metric", "bleu", "--preds", path("a.txt"), "--refs", path("a.txt")});
  EXPECT_DOUBLE_EQ(100.0, json::parse(r.out)["aggregate"].get<double>());

  write("m.jsonl", "{\"references\":[\"x\",\"Ala ma kota.\"]}\n[\"kot\"]\n");
  r = run({"evaluate", "--metric", "rouge", "--preds", path("a.txt"), "--multi-ref",
           path("m.jsonl")});
  ASSERT_EQ(kExitOk, r.code) << r.err;
  EXPECT_EQ(1.0, json::parse(r.out)["aggregate"]);

  write("p.txt", "pos\nneg\nneg\n");
  write("g.txt", "pos\npos\nneg\n");
  r = run({"evaluate", "--metric", "f1", "--positive", "pos", "--preds", path("p.txt"),
           "--refs", path("g.txt")});
  EXPECT_DOUBLE_EQ(2.0 / 3, json::parse(r.out)["aggregate"].get<double>());
  r = run({"evaluate", "--metric", "accuracy", "--preds", path("p.txt"), "--refs",
           path("g.txt")});
  EXPECT_DOUBLE_EQ(2.0 / 3, json::parse(r.out)["aggregate"].get<double>());
  write("ap.txt", "3.0\n");
  write("ag.txt", "1.0\n");
  r = run({"evaluate", "--metric", "ar", "--preds", path("ap.txt"), "--refs", path("ag.txt")});
  EXPECT_DOUBLE_EQ(-1.0, json::parse(r.out)["aggregate"].get<double>());
  r = run({"evaluate", "--metric", "f1", "--preds", path("p.txt"), "--refs", path("g.txt")});
  EXPECT_EQ(kExitUsage, r.code);
}

TEST_F(CliTest, Summ) {
  write("groups.jsonl",
        R"({"id":"1","source":"Ala ma kota. Kot ma Alę. Pies śpi.","references":[)"
        R"({"text":"Ala ma kota.","ratio":"5%","kind":"extract"},)"
        R"({"text":"Ala ma kota.","ratio":"10%"}]})" "\n"
        R"({"id":2,"source":"Dom stoi. Drzewo rośnie.","references":[{"text":"Dom stoi."}]})"
        "\n");
  Outcome r = run({"summ", "upperbound", "--input", path("groups.jsonl"), "--tsv",
               path("ub.tsv")});
  ASSERT_EQ(kExitOk, r.code) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(1, j["skipped_groups"]);
  EXPECT_EQ(2, j["pairs"]);
  EXPECT_EQ(1.0, j["rouge"]["mean_f"]);
  EXPECT_NE(std::string::npos, r.err.find("skipped"));
  std::ifstream tsv(path("ub.tsv"));
  std::stringstream t;
  t << tsv.rdbuf();
  EXPECT_EQ("Model\tROUGE-1\tROUGE-2\tROUGE-L\tROUGE\nhuman upper bound\t100.0\t100.0\t100.0\t100.0\n",
            t.str());
  r = run({"summ", "upperbound", "--input", path("groups.jsonl"), "--same-ratio"});
  EXPECT_EQ(kExitData, r.code);

  r = run({"summ", "baseline", "--input", path("groups.jsonl"), "--n", "1"});
  ASSERT_EQ(kExitOk, r.code) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(1.0, j["lead"]["rouge"]["mean_f"]);
  EXPECT_EQ(3, j["pairs"]);

  r = run({"summ", "stats", "--input", path("groups.jsonl"), "--vocab", path("vocab.tsv"),
           "--limit", "4"});
  ASSERT_EQ(kExitOk, r.code) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(0.0, j["abstractedness"]["1-grams"]);
  EXPECT_TRUE(j["trimming"]["coverage"].is_number());

  write("broken.jsonl", "{\"id\":1,\"source\":\"x\"}\n");
  EXPECT_EQ(kExitData, run({"summ", "stats", "--input", path("broken.jsonl")}).code);
}

TEST_F(CliTest, LrSearch) {
  // peak at 1.6e-3: score = -|log2(lr / 1.6e-3)|
  const std::string cmd =
      "awk -v lr={lr} 'BEGIN { x = log(lr / 0.0016) / log(2); "
      "if (x < 0) x = -x; print \"noise\"; print -x }'";
  const Outcome r = run({"lrsearch", "--cmd", cmd});
  ASSERT_EQ(kExitOk, r.code) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["converged"].get<bool>());
  EXPECT_NEAR(1.6e-3, j["best_value"].get<double>(), 1e-12);
  EXPECT_EQ(5u, j["probes"].size());

  const Outcome env = run({"lrsearch", "--max-probes", "3", "--cmd",
                       "echo \"$T2T_LR\" | awk '{ print -$1 }'"});
  ASSERT_EQ(kExitOk, env.code) << env.err;
  EXPECT_DOUBLE_EQ(2e-4, json::parse(env.out)["best_value"].get<double>());

  EXPECT_EQ(kExitData, run({"lrsearch", "--cmd", "echo nope"}).code);
  EXPECT_EQ(kExitData, run({"lrsearch", "--cmd", "exit 3"}).code);
}

}  // namespace
}  // namespace t2t::cli
