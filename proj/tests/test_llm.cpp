// Copyright 2026 The toxtrig Authors
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

#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "toxtrig/completion_client.hpp"
#include "toxtrig/corpus.hpp"
#include "toxtrig/errors.hpp"
#include "toxtrig/io_util.hpp"
#include "toxtrig/llm_extractor.hpp"
#include "toxtrig/prompt.hpp"

using namespace toxtrig;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path kE2eDir = fs::path(TOXTRIG_FIXTURE_DIR) / "e2e";

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / ("toxtrig_llm_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

PhraseSet sample_phrases() {
  PhraseSet ps;
  ps.of(TriggerType::Tobacco).push_back("fumador");
  ps.of(TriggerType::Cannabis).push_back("hachís");
  ps.of(TriggerType::Drug).push_back("cocaína");
  return ps;
}

// Serves one canned payload for every request.
class StubClient : public CompletionClient {
 public:
  explicit StubClient(std::string payload) : payload_(std::move(payload)) {}
  std::string complete(const ChatRequest&) override { return payload_; }

 private:
  std::string payload_;
};

}  // namespace

TEST_CASE("phrase payload parsing accepts the documented shape") {
  const PhraseSet ps = parse_phrase_set_payload(
      R"({"tobacco":["fumador"],"alcohol":[],"cannabis":["hachís"],"drug":["cocaína"]})",
      false);
  CHECK(ps == sample_phrases());
}

TEST_CASE("phrase payloads missing a list are rejected") {
  CHECK_THROWS_AS(parse_phrase_set_payload(
                      R"({"tobacco":[],"alcohol":[],"drug":[]})", false),
                  ParseError);
  CHECK_THROWS_AS(parse_phrase_set_payload("not json", false), ParseError);
  CHECK_THROWS_AS(parse_phrase_set_payload("[1,2]", false), ParseError);
  CHECK_THROWS_AS(
      parse_phrase_set_payload(
          R"({"tobacco":[1],"alcohol":[],"cannabis":[],"drug":[]})", false),
      ParseError);
}

TEST_CASE("phrases are trimmed and empties dropped") {
  const PhraseSet ps = parse_phrase_set_payload(
      R"({"tobacco":["  fumaba mucho ","   "],"alcohol":[],"cannabis":[],"drug":[]})",
      false);
  CHECK(ps.of(TriggerType::Tobacco) ==
        std::vector<std::string>{"fumaba mucho"});
  CHECK(ps.total() == 1);
}

TEST_CASE("assertion payloads parse and drop the labels") {
  const PhraseSet ps = parse_phrase_set_payload(
      R"({"tobacco":[{"phrase":"No fumador","assertion":"negated"}],)"
      R"("alcohol":[],"cannabis":[],"drug":[]})",
      true);
  CHECK(ps.of(TriggerType::Tobacco) ==
        std::vector<std::string>{"No fumador"});
  CHECK_THROWS_AS(
      parse_phrase_set_payload(
          R"({"tobacco":["plain"],"alcohol":[],"cannabis":[],"drug":[]})",
          true),
      ParseError);
}

TEST_CASE("parse of serialize is identity") {
  const PhraseSet ps = sample_phrases();
  CHECK(parse_phrase_set_payload(serialize_phrase_set(ps), false) == ps);
}

TEST_CASE("example sampling is deterministic and validates k") {
  const Corpus train = load_corpus(kE2eDir / "train", true);
  const auto a = sample_examples(train, 5, 42);
  const auto b = sample_examples(train, 5, 42);
  CHECK(a == b);
  CHECK(a.size() == 5);
  CHECK(sample_examples(train, 0, 42).empty());
  for (std::size_t k : {3, 5, 6}) CHECK(sample_examples(train, k, 7).size() == k);
  CHECK_THROWS_AS(sample_examples(train, 7, 42), Error);  // only 6 eligible
  CHECK(sample_examples(train, 5, 43) != a);

  for (const FewShotExample& ex : a) {
    CHECK(!ex.gold.empty());
    for (TriggerType t : kAllTriggerTypes)
      for (const std::string& phrase : ex.gold.of(t))
        CHECK(ex.text.find(phrase) != std::string::npos);
  }
}

TEST_CASE("long documents fall back to a mention-bearing section") {
  Corpus train;
  train.has_gold = true;
  const std::string filler(60, 'x');
  const std::string text = filler + "\n\nFumador activo.\n\n" + filler;
  train.documents.push_back({"t0", text});
  train.gold["t0"] = {{"t0", TriggerType::Tobacco, 62, 69, "Fumador"}};
  const auto examples = sample_examples(train, 1, 1, /*char_budget=*/40);
  REQUIRE(examples.size() == 1);
  CHECK(examples[0].text == "Fumador activo.");
  CHECK(examples[0].gold.of(TriggerType::Tobacco) ==
        std::vector<std::string>{"Fumador"});
}

TEST_CASE("zero-shot prompts are system plus one user message") {
  const auto prompt = PromptTemplate::standard();
  const Section target{0, 15, "Fumador activo."};
  const auto messages = render_prompt(prompt, {}, target);
  REQUIRE(messages.size() == 2);
  CHECK(messages[0].role == "system");
  CHECK(messages[1].role == "user");
  CHECK(messages[1].content.find("Fumador activo.") != std::string::npos);
  for (TriggerType t : kAllTriggerTypes)
    CHECK(messages[0].content.find(std::string(to_json_key(t))) !=
          std::string::npos);
}

TEST_CASE("few-shot prompts interleave demonstrations") {
  const Corpus train = load_corpus(kE2eDir / "train", true);
  const auto examples = sample_examples(train, 5, 42);
  const auto messages = render_prompt(PromptTemplate::standard(), examples,
                                      Section{0, 4, "Hola"});
  REQUIRE(messages.size() == 12);  // system + 5 pairs + target
  for (std::size_t i = 1; i < 11; i += 2) {
    CHECK(messages[i].role == "user");
    CHECK(messages[i + 1].role == "assistant");
    CHECK_NOTHROW(parse_phrase_set_payload(messages[i + 1].content, false));
  }
  CHECK(messages.back().role == "user");
}

TEST_CASE("assertion-variant prompts carry labeled demonstrations") {
  PromptTemplate prompt = PromptTemplate::standard(/*assertion_variant=*/true);
  FewShotExample ex;
  ex.text = "No fumador. Consumo de cocaína.";
  ex.gold.of(TriggerType::Tobacco).push_back("fumador");
  ex.gold.of(TriggerType::Drug).push_back("cocaína");
  const auto messages =
      render_prompt(prompt, std::vector<FewShotExample>{ex},
                    Section{0, 4, "Hola"});
  const std::string& demo = messages[2].content;
  const json parsed = json::parse(demo);
  CHECK(parsed["tobacco"][0]["assertion"] == "negated");
  CHECK(parsed["drug"][0]["assertion"] == "present");
}

TEST_CASE("templates without the placeholder are rejected") {
  PromptTemplate broken = PromptTemplate::standard();
  broken.example_format = "sin marcador";
  CHECK_THROWS_AS(render_prompt(broken, {}, Section{0, 1, "x"}), ConfigError);
}

TEST_CASE("response schema matches the variant") {
  const json plain = build_response_schema(false);
  CHECK(plain["properties"]["drug"]["items"]["type"] == "string");
  const json asserted = build_response_schema(true);
  CHECK(asserted["properties"]["drug"]["items"]["required"] ==
        json({"phrase", "assertion"}));
}

TEST_CASE("prompt hashes are stable and content-sensitive") {
  const std::vector<ChatMessage> messages{{"system", "a"}, {"user", "b"}};
  const std::string h = prompt_hash(messages);
  CHECK(h == prompt_hash(messages));
  CHECK(h.size() == 16);
  const std::vector<ChatMessage> other{{"system", "a"}, {"user", "c"}};
  CHECK(h != prompt_hash(other));
}

TEST_CASE("replay clients serve recorded payloads and fail loudly on misses") {
  TempDir dir("replay");
  ChatRequest req;
  req.messages = {{"system", "s"}, {"user", "u"}};
  const std::string hash = prompt_hash(req.messages);
  std::map<std::string, std::string> fixture{{hash, R"({"tobacco":[]})"}};
  write_file(dir.path / "fixture.rpl",
             ReplayCompletionClient::render_fixture_file(fixture));

  ReplayCompletionClient client(dir.path / "fixture.rpl");
  CHECK(client.size() == 1);
  CHECK(client.complete(req) == R"({"tobacco":[]})");

  ChatRequest other = req;
  other.messages[1].content = "different";
  try {
    client.complete(other);
    FAIL("expected ClientError");
  } catch (const ClientError& e) {
    CHECK(std::string(e.what()).find(prompt_hash(other.messages)) !=
          std::string::npos);
  }
}

TEST_CASE("recording wraps a client and replays byte-identically") {
  TempDir dir("record");
  StubClient stub(R"({"tobacco":["fumador"],"alcohol":[],"cannabis":[],"drug":[]})");
  ChatRequest req;
  req.messages = {{"system", "s"}, {"user", "texto con ñ"}};
  {
    RecordingCompletionClient recorder(stub, dir.path / "rec.rpl");
    CHECK(recorder.complete(req) == stub.complete(req));
  }  // destructor flushes
  ReplayCompletionClient replay(dir.path / "rec.rpl");
  CHECK(replay.complete(req) == stub.complete(req));
}

TEST_CASE("malformed replay fixtures are rejected") {
  TempDir dir("bad_replay");
  write_file(dir.path / "bad.rpl", "deadbeef no tab\n");
  CHECK_THROWS_AS(ReplayCompletionClient(dir.path / "bad.rpl"), ParseError);
  write_file(dir.path / "bad2.rpl", "deadbeef\t{\"k\":1}\n");
  CHECK_THROWS_AS(ReplayCompletionClient(dir.path / "bad2.rpl"), ParseError);
}

TEST_CASE("chat request bodies carry the documented fields") {
  ChatRequest req;
  req.model = "gpt-4.1";
  req.messages = {{"system", "s"}, {"user", "u"}};
  req.response_schema = build_response_schema(false);
  const json body = chat_request_body(req);
  CHECK(body["model"] == "gpt-4.1");
  CHECK(body["temperature"] == 0.0);
  CHECK(body["top_p"] == 1.0);
  CHECK(body["max_tokens"] == 4000);
  CHECK(body["messages"].size() == 2);
  CHECK(body["response_format"]["type"] == "json_schema");
  CHECK(body["response_format"]["json_schema"]["schema"]["required"].size() ==
        4);
}

TEST_CASE("http client speaks the wire protocol and retries 429s") {
  httplib::Server server;
  std::atomic<int> hits{0};
  std::string seen_auth;
  json seen_body;
  server.Post("/v1/chat/completions",
              [&](const httplib::Request& req, httplib::Response& res) {
                const int n = ++hits;
                seen_auth = req.get_header_value("Authorization");
                seen_body = json::parse(req.body);
                if (n == 1) {  // first attempt throttled
                  res.status = 429;
                  return;
                }
                res.set_content(
                    json{{"choices",
                          {{{"message",
                             {{"content", R"({"tobacco":[]})"}}}}}}}
                        .dump(),
                    "application/json");
              });

  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread server_thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  HttpCompletionClient client("http://127.0.0.1:" + std::to_string(port),
                              "/v1/chat/completions", "sk-test", 2);
  ChatRequest req;
  req.model = "gpt-4.1";
  req.messages = {{"system", "s"}, {"user", "u"}};
  req.response_schema = build_response_schema(false);
  CHECK(client.complete(req) == R"({"tobacco":[]})");
  CHECK(hits == 2);
  CHECK(seen_auth == "Bearer sk-test");
  CHECK(seen_body["model"] == "gpt-4.1");
  CHECK(seen_body["max_tokens"] == 4000);

  server.stop();
  server_thread.join();
}

TEST_CASE("http client gives up after bounded retries") {
  httplib::Server server;
  std::atomic<int> hits{0};
  server.Post("/v1/chat/completions",
              [&](const httplib::Request&, httplib::Response& res) {
                ++hits;
                res.status = 429;
              });
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread server_thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  HttpCompletionClient client("http://127.0.0.1:" + std::to_string(port),
                              "/v1/chat/completions", "", 2);
  ChatRequest req;
  req.messages = {{"user", "u"}};
  CHECK_THROWS_AS(client.complete(req), ClientError);
  CHECK(hits == 3);  // initial attempt + 2 retries

  server.stop();
  server_thread.join();
}

TEST_CASE("document extraction asks once per section, in order") {
  const Document doc{"d", "Anamnesis.\n\nFumador activo."};
  const auto prompt = PromptTemplate::standard();
  LlmRequestConfig cfg;

  // Record the two section prompts into a replay fixture, then re-run
  // against it.
  std::map<std::string, std::string> fixture;
  for (const Section& sec : segment_sections(doc.text)) {
    const auto messages = render_prompt(prompt, {}, sec);
    const std::string payload =
        sec.start == 0
            ? R"({"tobacco":[],"alcohol":[],"cannabis":[],"drug":[]})"
            : R"({"tobacco":["Fumador"],"alcohol":[],"cannabis":[],"drug":[]})";
    fixture[prompt_hash(messages)] = payload;
  }
  TempDir dir("extract");
  write_file(dir.path / "fixture.rpl",
             ReplayCompletionClient::render_fixture_file(fixture));
  ReplayCompletionClient client(dir.path / "fixture.rpl");

  const auto results = llm_extract_document(doc, cfg, prompt, {}, client);
  REQUIRE(results.size() == 2);
  CHECK(results[0].ok());
  CHECK(results[0].phrases.empty());
  CHECK(results[1].ok());
  CHECK(results[1].phrases.of(TriggerType::Tobacco) ==
        std::vector<std::string>{"Fumador"});

  // unchanged across a second run
  const auto again = llm_extract_document(doc, cfg, prompt, {}, client);
  CHECK(again.size() == results.size());
  for (std::size_t i = 0; i < results.size(); ++i)
    CHECK(again[i].phrases == results[i].phrases);
}

TEST_CASE("failed sections record errors and keep the run alive") {
  const Document doc{"d", "Anamnesis.\n\nFumador activo."};
  const auto prompt = PromptTemplate::standard();
  LlmRequestConfig cfg;

  // Fixture only covers the second section; the first misses.
  std::map<std::string, std::string> fixture;
  const auto sections = segment_sections(doc.text);
  fixture[prompt_hash(render_prompt(prompt, {}, sections[1]))] =
      R"({"tobacco":["Fumador"],"alcohol":[],"cannabis":[],"drug":[]})";
  TempDir dir("partial");
  write_file(dir.path / "fixture.rpl",
             ReplayCompletionClient::render_fixture_file(fixture));
  ReplayCompletionClient client(dir.path / "fixture.rpl");

  const auto results = llm_extract_document(doc, cfg, prompt, {}, client);
  REQUIRE(results.size() == 2);
  CHECK(!results[0].ok());
  CHECK(results[0].phrases.empty());
  CHECK(results[0].error.find("replay miss") != std::string::npos);
  CHECK(results[1].ok());
}

TEST_CASE("empty documents need no requests") {
  StubClient stub("{}");
  CHECK(llm_extract_document(Document{"d", ""}, {}, PromptTemplate::standard(),
                             {}, stub)
            .empty());
}

TEST_CASE("bundled fixture sections never split a gold mention") {
  for (const char* part : {"train", "dev"}) {
    const Corpus corpus = load_corpus(kE2eDir / part, true);
    for (const Document& doc : corpus.documents) {
      const auto sections = segment_sections(doc.text);
      for (const Mention& m : corpus.gold.at(doc.id)) {
        bool inside_one = false;
        for (const Section& s : sections)
          if (m.start >= s.start && m.end <= s.end) inside_one = true;
        CHECK(inside_one);
      }
    }
  }
}
