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

#include "qfsum/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>

#include <json.hpp>

#include "qfsum/error.hpp"

namespace qfsum {
namespace {

using nlohmann::json;

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t") == std::string::npos; }

std::vector<DepTriple> parse_dep_line(const std::string& line, const std::string& where) {
  std::vector<DepTriple> triples;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t next = line.find(";;", pos);
    std::string segment =
        next == std::string::npos ? line.substr(pos) : line.substr(pos, next - pos);
    if (!blank(segment)) {
      std::size_t t1 = segment.find('\t');
      std::size_t t2 = t1 == std::string::npos ? std::string::npos : segment.find('\t', t1 + 1);
      if (t1 == std::string::npos || t2 == std::string::npos)
        throw Error(ErrorCode::kParse, where + ": dependency triple needs 3 tab-separated fields");
      DepTriple t{segment.substr(0, t1), segment.substr(t1 + 1, t2 - t1 - 1),
                  segment.substr(t2 + 1)};
      if (t.head.empty() || t.modifier.empty() || t.relation.empty())
        throw Error(ErrorCode::kParse, where + ": dependency triple has an empty field");
      triples.push_back(std::move(t));
    }
    if (next == std::string::npos) break;
    pos = next + 2;
  }
  return triples;
}

TokenSpan parse_span(const json& j, int token_count, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw Error(ErrorCode::kParse, where + ": span must be [begin, end)");
  TokenSpan span{j[0].get<int>(), j[1].get<int>()};
  if (span.begin < 0 || span.end <= span.begin || span.end > token_count)
    throw Error(ErrorCode::kParse, where + ": span out of range");
  return span;
}

std::vector<RoleFrame> parse_srl_line(const std::string& line, int token_count,
                                      const std::string& where) {
  if (blank(line)) return {};
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_array())
    throw Error(ErrorCode::kParse, where + ": expected a JSON array of role frames");
  std::vector<RoleFrame> frames;
  for (const auto& jf : j) {
    RoleFrame frame;
    if (!jf.contains("predicate"))
      throw Error(ErrorCode::kParse, where + ": role frame missing predicate");
    frame.predicate = parse_span(jf["predicate"], token_count, where);
    for (const auto& ja : jf.value("args", json::array())) {
      RoleArg arg;
      arg.label = ja.at("label").get<std::string>();
      arg.span = parse_span(ja.at("span"), token_count, where);
      frame.args.push_back(std::move(arg));
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

struct AnnotationFiles {
  std::optional<std::vector<std::string>> parse_lines;
  std::optional<std::vector<std::string>> dep_lines;
  std::optional<std::vector<std::string>> srl_lines;
};

void check_aligned(const std::optional<std::vector<std::string>>& lines, std::size_t expected,
                   const std::string& path) {
  if (lines && lines->size() != expected)
    throw Error(ErrorCode::kParse, path + ": expected " + std::to_string(expected) +
                                       " lines aligned with the text, got " +
                                       std::to_string(lines->size()));
}

void attach_annotations(Sentence& s, std::size_t line_index, const AnnotationFiles& ann,
                        const StopwordSet& stopwords, const std::string& doc_label) {
  std::string where = doc_label + " line " + std::to_string(line_index + 1);
  if (ann.parse_lines) {
    const std::string& line = (*ann.parse_lines)[line_index];
    if (!blank(line)) attach_parse(s, parse_bracketed_tree(line), stopwords);
  }
  if (ann.dep_lines) s.dep_triples = parse_dep_line((*ann.dep_lines)[line_index], where);
  if (ann.srl_lines)
    s.role_frames =
        parse_srl_line((*ann.srl_lines)[line_index], static_cast<int>(s.tokens.size()), where);
}

std::string resolve(const std::filesystem::path& base, const std::string& rel) {
  std::filesystem::path p(rel);
  if (p.is_absolute()) return p.string();
  return (base / p).string();
}

}  // namespace

bool content_pos(std::string_view tag) {
  if (tag.empty()) return false;
  char c = tag[0];
  if (c == 'N' || c == 'V') return true;                      // nouns, verbs
  if (c == 'J' || tag.substr(0, 3) == "ADJ") return true;     // adjectives
  if (tag.substr(0, 2) == "RB" || tag == "R" || tag == "ADV") return true;  // adverbs
  return false;
}

std::optional<Sentence> tokenize_and_stem(std::string_view raw_sentence,
                                          const StopwordSet& stopwords) {
  Sentence s;
  s.raw = std::string(raw_sentence);
  for (auto& word : tokenize_words(raw_sentence)) {
    Token t;
    t.stem = porter_stem(word);
    t.is_content = !stopwords.contains(t.stem);
    t.surface = std::move(word);
    s.tokens.push_back(std::move(t));
  }
  if (s.tokens.empty()) return std::nullopt;
  return s;
}

void attach_parse(Sentence& sentence, ParseTree tree, const StopwordSet& stopwords) {
  std::vector<std::string> tags = preterminal_labels(tree);
  if (tags.size() == sentence.tokens.size()) {
    for (std::size_t i = 0; i < tags.size(); ++i) {
      Token& t = sentence.tokens[i];
      t.pos = tags[i];
      t.is_content = !stopwords.contains(t.stem) && content_pos(t.pos);
    }
  }
  // A pre-terminal/token count mismatch (foreign tokenization) keeps the
  // tree for the kernels but leaves the stopword-only content flags.
  sentence.parse = std::move(tree);
}

std::set<std::string> query_related_words(const std::vector<Sentence>& query,
                                          const Lexicon& lexicon) {
  std::set<std::string> qrw;
  for (const Sentence& sentence : query) {
    for (const Token& token : sentence.tokens) {
      if (!token.is_content) continue;
      qrw.insert(token.stem);
      const LexEntry& entry = lexicon.lookup(token.surface);
      insert_stemmed_parts(qrw, entry.synonyms);
      bool is_noun = token.pos.empty() ? entry.is_noun() : token.pos[0] == 'N';
      if (is_noun) {
        insert_stemmed_parts(qrw, entry.hypernyms);
        insert_stemmed_parts(qrw, entry.hyponyms);
        insert_stemmed_parts(qrw, entry.gloss);
      }
    }
  }
  return qrw;
}

std::vector<std::string> stem_sequence(const Sentence& sentence) {
  std::vector<std::string> stems;
  stems.reserve(sentence.tokens.size());
  for (const Token& t : sentence.tokens) stems.push_back(t.stem);
  return stems;
}

std::vector<std::vector<std::string>> build_pool(const Sentence& sentence,
                                                 const Lexicon& lexicon) {
  std::vector<std::vector<std::string>> pool;
  std::vector<std::string> base = stem_sequence(sentence);
  pool.push_back(base);
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const Token& token = sentence.tokens[i];
    if (!token.is_content) continue;
    const LexEntry& entry = lexicon.lookup(token.surface);
    if (entry.synonyms.empty()) continue;
    std::vector<std::string> replacement;
    for (const auto& part : split_compound_word(entry.synonyms.front()))
      replacement.push_back(porter_stem(part));
    if (replacement.empty()) continue;
    std::vector<std::string> variant;
    variant.reserve(base.size() - 1 + replacement.size());
    variant.insert(variant.end(), base.begin(), base.begin() + static_cast<long>(i));
    variant.insert(variant.end(), replacement.begin(), replacement.end());
    variant.insert(variant.end(), base.begin() + static_cast<long>(i) + 1, base.end());
    pool.push_back(std::move(variant));
  }
  return pool;
}

std::size_t Cluster::sentence_count() const {
  std::size_t n = 0;
  for (const auto& d : documents) n += d.sentences.size();
  return n;
}

std::vector<std::size_t> Cluster::documents_by_recency() const {
  std::vector<std::size_t> order(documents.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Document& da = documents[a];
    const Document& db = documents[b];
    if (da.date != db.date) return da.date > db.date;
    return da.id > db.id;
  });
  return order;
}

Cluster load_cluster(const std::string& manifest_path, const StopwordSet& stopwords) {
  std::ifstream in(manifest_path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open manifest: " + manifest_path);
  json manifest = json::parse(in, nullptr, false);
  if (manifest.is_discarded() || !manifest.is_object())
    throw Error(ErrorCode::kParse, manifest_path + ": malformed manifest JSON");

  const std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();
  Cluster cluster;
  cluster.topic_id = manifest.value("topic_id", std::string());
  if (cluster.topic_id.empty())
    throw Error(ErrorCode::kParse, manifest_path + ": manifest needs a nonempty topic_id");

  if (!manifest.contains("query") || !manifest["query"].is_array())
    throw Error(ErrorCode::kParse, manifest_path + ": manifest needs a query array");

  AnnotationFiles query_ann;
  if (manifest.contains("query_parse_file"))
    query_ann.parse_lines = read_lines(resolve(base, manifest["query_parse_file"]));
  if (manifest.contains("query_dep_file"))
    query_ann.dep_lines = read_lines(resolve(base, manifest["query_dep_file"]));
  if (manifest.contains("query_srl_file"))
    query_ann.srl_lines = read_lines(resolve(base, manifest["query_srl_file"]));
  std::size_t query_size = manifest["query"].size();
  check_aligned(query_ann.parse_lines, query_size, "query_parse_file");
  check_aligned(query_ann.dep_lines, query_size, "query_dep_file");
  check_aligned(query_ann.srl_lines, query_size, "query_srl_file");

  std::size_t qline = 0;
  for (const auto& jq : manifest["query"]) {
    auto sentence = tokenize_and_stem(jq.get<std::string>(), stopwords);
    if (sentence) {
      sentence->doc_id = "query";
      sentence->ordinal = static_cast<int>(qline);
      attach_annotations(*sentence, qline, query_ann, stopwords, "query");
      cluster.query.push_back(std::move(*sentence));
    }
    qline++;
  }
  if (cluster.query.empty())
    throw Error(ErrorCode::kInvalidArgument,
                manifest_path + ": query has no usable sentences");

  if (!manifest.contains("documents") || !manifest["documents"].is_array() ||
      manifest["documents"].empty())
    throw Error(ErrorCode::kInvalidArgument, manifest_path + ": manifest needs >=1 document");

  for (const auto& jd : manifest["documents"]) {
    Document doc;
    doc.id = jd.value("id", std::string());
    doc.date = jd.value("date", std::string());
    if (doc.id.empty() || doc.date.empty())
      throw Error(ErrorCode::kParse, manifest_path + ": document needs id and date");
    if (!jd.contains("text_file"))
      throw Error(ErrorCode::kParse, manifest_path + ": document " + doc.id + " needs text_file");

    std::vector<std::string> text_lines = read_lines(resolve(base, jd["text_file"]));
    AnnotationFiles ann;
    if (jd.contains("parse_file")) ann.parse_lines = read_lines(resolve(base, jd["parse_file"]));
    if (jd.contains("dep_file")) ann.dep_lines = read_lines(resolve(base, jd["dep_file"]));
    if (jd.contains("srl_file")) ann.srl_lines = read_lines(resolve(base, jd["srl_file"]));
    check_aligned(ann.parse_lines, text_lines.size(), std::string(jd.value("parse_file", "")));
    check_aligned(ann.dep_lines, text_lines.size(), std::string(jd.value("dep_file", "")));
    check_aligned(ann.srl_lines, text_lines.size(), std::string(jd.value("srl_file", "")));

    for (std::size_t i = 0; i < text_lines.size(); ++i) {
      auto sentence = tokenize_and_stem(text_lines[i], stopwords);
      if (!sentence) continue;  // degenerate line: skip, annotations stay aligned by index
      sentence->doc_id = doc.id;
      sentence->ordinal = static_cast<int>(i);
      attach_annotations(*sentence, i, ann, stopwords, doc.id);
      doc.sentences.push_back(std::move(*sentence));
    }
    cluster.documents.push_back(std::move(doc));
  }
  return cluster;
}

}  // namespace qfsum
