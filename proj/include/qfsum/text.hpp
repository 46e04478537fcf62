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

#ifndef QFSUM_TEXT_HPP_
#define QFSUM_TEXT_HPP_

#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace qfsum {

// Iterated suffix-stripping stemmer (Porter's algorithm, reference variant).
// Input must already be lowercased; tokens that are not purely ASCII letters
// are returned unchanged. Words of length <= 2 are left alone.
std::string porter_stem(std::string_view word);

// Splits raw text into lowercased word tokens. A token is a maximal run of
// alphanumeric characters; an apostrophe or period joins a token when
// flanked by alphanumerics on both sides ("ain't", "u.s"). Bytes >= 0x80 are
// kept verbatim as word constituents. Hyphens and all other punctuation
// separate tokens.
std::vector<std::string> tokenize_words(std::string_view raw);

// Splits a lexicon compound ("verse_form", "domestic dog") into lowercased
// single words.
std::vector<std::string> split_compound_word(std::string_view word);

// Inserts the stem of every single word of every (possibly compound) entry.
void insert_stemmed_parts(std::set<std::string>& out, const std::vector<std::string>& words);

/// Stopword set keyed on lowercase surface forms. Stems of every entry are
/// inserted alongside the entries themselves so that membership can be
/// tested on stems directly.
class StopwordSet {
 public:
  StopwordSet() = default;

  // The list bundled with the library (Appendix-style newswire list,
  // identical to data/stopwords.txt in the source tree).
  static StopwordSet builtin();

  // One word per line; '#' comments and blank lines skipped.
  static StopwordSet load_file(const std::string& path);

  static StopwordSet from_words(const std::vector<std::string>& words);

  bool contains(std::string_view word_or_stem) const {
    return words_.count(std::string(word_or_stem)) > 0;
  }

  std::size_t size() const { return words_.size(); }

 private:
  void insert(const std::string& word);

  std::unordered_set<std::string> words_;
};

}  // namespace qfsum

#endif  // QFSUM_TEXT_HPP_
