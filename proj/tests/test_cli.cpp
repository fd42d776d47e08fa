#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

const std::string kCli = SISA_CLI_PATH;
const std::string kSrc = SISA_SOURCE_DIR;
const std::string kFix = kSrc + "/data/fixtures/";
const std::string kEngine =
    " --lexicon " + kFix + "lexicon.tsv --rules " + kSrc + "/rules/sisa_default.rules --lists " + kFix + "lists";

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  FILE* pipe = ::popen((kCli + " " + args + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("classify") {
  auto r = run("classify" + kEngine + " --input " + kFix + "muy_grande.conllu");
  CHECK(r.code == 0);
  CHECK(r.out == "muy_grande\t2.3375\tpositive\n");

  r = run("classify --lexicon " + kFix + "lexicon.tsv --input " + kFix + "muy_grande.conllu");
  CHECK(r.out == "muy_grande\t1.87\tpositive\n");

  r = run("classify" + kEngine + " --input " + kFix + "no_es_bonito.conllu --input " + kFix +
          "bueno_pero_caro.conllu --granularity sentence");
  CHECK(r.out == "no_es_bonito#1\t-0.5\tnegative\nbueno_pero_caro#1\t-0.5\tnegative\n");

  r = run("classify" + kEngine + " --input - < " + kFix + "no_funciona.conllu");
  CHECK(r.out == "stdin\t-4\tnegative\n");
}

TEST_CASE("classify exit codes") {
  CHECK(run("classify" + kEngine + " --input /nonexistent.conllu").code == 2);
  CHECK(run("classify --lexicon /nonexistent.tsv --input " + kFix + "muy_grande.conllu").code == 2);
  CHECK(run("classify" + kEngine + " --input " + kFix + "lexicon.tsv").code == 3);
  CHECK(run("classify --input " + kFix + "muy_grande.conllu").code == 4);
  CHECK(run("bogus").code == 4);
}

TEST_CASE("merge-lexicon") {
  auto r = run("merge-lexicon --lexicon " + kFix + "abandonat_senticon.tsv --lexicon " + kFix + "abandonat_sfu.tsv");
  CHECK(r.code == 0);
  CHECK(r.out.find("abandonat\tADJ\t-2.4375\n") != std::string::npos);

  r = run("merge-lexicon --lexicon " + kFix + "abandonat_sfu.tsv --lexicon " + kFix + "abandonat_senticon_raw.tsv");
  CHECK(r.code == 4);

  r = run("merge-lexicon --scale --lexicon " + kFix + "abandonat_sfu.tsv --lexicon " + kFix +
          "abandonat_senticon_raw.tsv");
  CHECK(r.code == 0);
  CHECK(r.out.find("abandonat\tADJ\t-2.4375\n") != std::string::npos);

  r = run("merge-lexicon --lexicon " + kFix + "lexicon.tsv");
  CHECK(r.out == "# scale: sfu\nbonito\tADJ\t3.5\nbueno\tADJ\t2\ncaro\tADJ\t-2\ngrande\tADJ\t1.87\n");
}

TEST_CASE("scale-senticon") {
  auto r = run("scale-senticon -- -0.21875 1");
  CHECK(r.code == 0);
  CHECK(r.out == "-0.21875\t-1.875\n1\t5\n");
  r = run("scale-senticon --lexicon " + kFix + "abandonat_senticon_raw.tsv");
  CHECK(r.out == "# scale: sfu\nabandonat\tADJ\t-1.875\n");
  CHECK(run("scale-senticon -- 0").code == 3);
}

TEST_CASE("trace") {
  auto r = run("trace" + kEngine + " --input " + kFix + "no_es_bonito.conllu");
  CHECK(r.code == 0);
  CHECK(r.out.find("trigger negation@1 remaining 1") != std::string::npos);
  CHECK(r.out.find("arrive negation@1 remaining 1->0") != std::string::npos);
  CHECK(r.out.find("apply negation@1 scope target_node node 3 3.5 -> -0.5") != std::string::npos);
  CHECK(r.out.find("sentence_so -0.5") != std::string::npos);

  r = run("trace" + kEngine + " --input " + kFix + "el_coche_es_caro.conllu");
  CHECK(r.out.find("trigger") == std::string::npos);
  CHECK(r.out.find("apply") == std::string::npos);

  r = run("trace" + kEngine + " --input " + kFix + "no_funciona.conllu");
  CHECK(r.out.find("scope all [backoff]") != std::string::npos);
}

TEST_CASE("evaluate") {
  const std::string base = "evaluate --corpus " + kFix + "corpus.tsv --lexicon " + kFix + "lexicon.tsv --lexicon " +
                           kFix + "lexicon_ml.tsv --rules " + kSrc + "/rules/sisa_default.rules --lists " + kFix +
                           "lists";
  const auto a = run(base);
  CHECK(a.code == 0);
  CHECK(a.out.find("config\tcorrect\ttotal\taccuracy\n") == 0);
  CHECK(a.out.find("O(SL)\tO(ML)\tML(-O)\tML(+O)\n") != std::string::npos);
  const auto b = run(base);
  CHECK(a.out == b.out);
  CHECK(run("evaluate --corpus /nonexistent.tsv --lexicon " + kFix + "lexicon.tsv").code == 2);
}
