// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace skewpbw {

/// A presentation shipped in corpus/, compiled into the library.
struct CorpusEntry {
  std::string_view name;  // file stem, e.g. "dispin"
  std::string_view text;
};

std::span<const CorpusEntry> builtin_corpus();

std::optional<CorpusEntry> find_corpus_entry(std::string_view name);

/// Corpus entry whose canonical digest equals `digest`.
std::optional<std::string_view> corpus_name_for_digest(std::string_view digest);

}  // namespace skewpbw
