// Copyright 2026 The QFSum Authors.
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

#include "qfsum/lexicon.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "qfsum/error.hpp"
#include "qfsum/text.hpp"

namespace qfsum {
namespace {

using nlohmann::json;

const LexEntry kEmptyEntry{};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> string_array(const json& j, const char* key) {
  std::vector<std::string> out;
  auto it = j.find(key);
  if (it == j.end()) return out;
  for (const auto& v : *it) out.push_back(lower(v.get<std::string>()));
  return out;
}

json parse_json_line(const std::string& line, const std::string& path, std::size_t lineno) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw Error(ErrorCode::kParse,
                path + ":" + std::to_string(lineno) + ": malformed JSON record");
  return j;
}

}  // namespace

void Lexicon::add(const std::string& word, LexEntry entry) {
  entries_[lower(word)] = std::move(entry);
}

const LexEntry& Lexicon::lookup(std::string_view word) const {
  auto it = entries_.find(std::string(word));
  if (it != entries_.end()) return it->second;
  std::string stemmed = porter_stem(word);
  if (stemmed != word) {
    it = entries_.find(stemmed);
    if (it != entries_.end()) return it->second;
  }
  return kEmptyEntry;
}

Lexicon Lexicon::load_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open lexicon file: " + path);
  Lexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = parse_json_line(line, path, lineno);
    if (!j.contains("word"))
      throw Error(ErrorCode::kParse, path + ":" + std::to_string(lineno) + ": missing \"word\"");
    LexEntry entry;
    entry.pos = lower(j.value("pos", std::string()));
    entry.synonyms = string_array(j, "synonyms");
    entry.hypernyms = string_array(j, "hypernyms");
    entry.hyponyms = string_array(j, "hyponyms");
    entry.gloss = string_array(j, "gloss");
    lex.add(j["word"].get<std::string>(), std::move(entry));
  }
  return lex;
}

void Thesaurus::add(const std::string& word, std::vector<SenseCluster> clusters) {
  entries_[lower(word)] = std::move(clusters);
}

const std::vector<Thesaurus::SenseCluster>* Thesaurus::clusters_for(std::string_view word) const {
  auto it = entries_.find(std::string(word));
  if (it != entries_.end()) return &it->second;
  std::string stemmed = porter_stem(word);
  if (stemmed != word) {
    it = entries_.find(stemmed);
    if (it != entries_.end()) return &it->second;
  }
  return nullptr;
}

Thesaurus Thesaurus::load_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open thesaurus file: " + path);
  Thesaurus th;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = parse_json_line(line, path, lineno);
    if (!j.contains("word"))
      throw Error(ErrorCode::kParse, path + ":" + std::to_string(lineno) + ": missing \"word\"");
    std::vector<SenseCluster> clusters;
    for (const auto& jc : j.value("clusters", json::array())) {
      SenseCluster cluster;
      for (const auto& jm : jc) {
        Member m;
        m.word = porter_stem(lower(jm.at("w").get<std::string>()));
        m.score = jm.value("score", 0.0);
        cluster.push_back(std::move(m));
      }
      if (cluster.empty())
        throw Error(ErrorCode::kParse,
                    path + ":" + std::to_string(lineno) + ": empty sense cluster");
      clusters.push_back(std::move(cluster));
    }
    th.add(j["word"].get<std::string>(), std::move(clusters));
  }
  return th;
}

}  // namespace qfsum
