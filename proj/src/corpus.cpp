// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

#include "skewpbw/corpus.hpp"

#include <map>
#include <string>

#include "skewpbw/presentio.hpp"

namespace skewpbw {

namespace {

// Generated from corpus/*.pres at configure time.
constexpr CorpusEntry kCorpus[] = {
#include "corpus_data.inc"
};

}  // namespace

std::span<const CorpusEntry> builtin_corpus() { return kCorpus; }

std::optional<CorpusEntry> find_corpus_entry(std::string_view name) {
  for (const auto& e : kCorpus) {
    if (e.name == name) return e;
  }
  return std::nullopt;
}

std::optional<std::string_view> corpus_name_for_digest(std::string_view digest) {
  static const std::map<std::string, std::string_view, std::less<>> digests = [] {
    std::map<std::string, std::string_view, std::less<>> out;
    for (const auto& e : kCorpus) {
      try {
        out.emplace(presentation_digest(parse_presentation(e.text)), e.name);
      } catch (const std::exception&) {
        // Deliberately invalid corpus files have no digest.
      }
    }
    return out;
  }();
  auto it = digests.find(digest);
  if (it == digests.end()) return std::nullopt;
  return it->second;
}

}  // namespace skewpbw
