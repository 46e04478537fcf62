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

#ifndef QFSUM_CORPUS_HPP_
#define QFSUM_CORPUS_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qfsum/lexicon.hpp"
#include "qfsum/text.hpp"
#include "qfsum/tree.hpp"

namespace qfsum {

struct Token {
  std::string surface;  // lowercased
  std::string stem;
  std::string pos;  // pre-terminal label when a parse is attached, else empty
  bool is_content = false;
};

struct DepTriple {
  std::string head;
  std::string modifier;
  std::string relation;
};

/// Token span [begin, end) within the owning sentence.
struct TokenSpan {
  int begin = 0;
  int end = 0;

  bool contains(int index) const { return index >= begin && index < end; }
  int width() const { return end - begin; }
  bool operator==(const TokenSpan&) const = default;
};

struct RoleArg {
  std::string label;  // ARG0, ARG1, ..., ARGM-LOC, ...
  TokenSpan span;
  bool operator==(const RoleArg&) const = default;
};

/// One predicate-argument frame; exactly one predicate (TARGET) per frame.
struct RoleFrame {
  TokenSpan predicate;
  std::vector<RoleArg> args;
  bool operator==(const RoleFrame&) const = default;
};

struct Sentence {
  std::string doc_id;
  int ordinal = 0;  // 0-based line number within the document
  std::string raw;
  std::vector<Token> tokens;
  std::optional<ParseTree> parse;
  std::optional<std::vector<DepTriple>> dep_triples;
  std::optional<std::vector<RoleFrame>> role_frames;

  bool has_parse() const { return parse.has_value(); }
  bool has_deps() const { return dep_triples.has_value(); }
  bool has_frames() const { return role_frames.has_value(); }
};

struct Document {
  std::string id;
  std::string date;  // ISO-8601; lexicographic order is chronological
  std::vector<Sentence> sentences;
};

struct Cluster {
  std::string topic_id;
  std::vector<Sentence> query;
  std::vector<Document> documents;  // manifest order

  std::size_t sentence_count() const;
  // Indices of `documents` sorted most recent first: (date, id) descending.
  std::vector<std::size_t> documents_by_recency() const;
};

// Tokenizes, lowercases, stems and flags content words. Returns nullopt for
// input that is empty after tokenization (degenerate sentence: caller skips
// it). POS tags are attached later, when a parse tree is ingested.
std::optional<Sentence> tokenize_and_stem(std::string_view raw_sentence,
                                          const StopwordSet& stopwords);

// Re-derives is_content and pos for each token from a parse tree whose
// pre-terminal count matches the token count. A token is content iff its
// stem is outside the stopword set and, when a tag is available, the tag is
// noun/verb/adjective/adverb.
void attach_parse(Sentence& sentence, ParseTree tree, const StopwordSet& stopwords);

// True for Penn-style noun/verb/adjective/adverb tags (N*, V*, J*, RB*).
bool content_pos(std::string_view tag);

// Query-related words: stemmed query content words, their first-sense
// synonyms, and the hypernyms/hyponyms/gloss content words of the query
// nouns. A word counts as a noun when its POS tag says so, or, without a
// tag, when its lexicon entry is marked "n".
std::set<std::string> query_related_words(const std::vector<Sentence>& query,
                                          const Lexicon& lexicon);

// Sentence pool: the original stem sequence first, then one variant per
// content word that has a first-sense synonym, with that single word
// replaced by the synonym's stem(s). Multi-word synonyms ('_' or space
// separated) expand to multiple tokens.
std::vector<std::vector<std::string>> build_pool(const Sentence& sentence,
                                                 const Lexicon& lexicon);

// Stem sequence of a sentence.
std::vector<std::string> stem_sequence(const Sentence& sentence);

/// Manifest-driven cluster loader. See README for the file formats:
/// manifest JSON, sentence-per-line text, aligned bracketed parses, aligned
/// `head<TAB>modifier<TAB>relation` triples joined by ";;", and JSON-lines
/// role frames. Relative paths resolve against the manifest directory.
Cluster load_cluster(const std::string& manifest_path, const StopwordSet& stopwords);

}  // namespace qfsum

#endif  // QFSUM_CORPUS_HPP_
