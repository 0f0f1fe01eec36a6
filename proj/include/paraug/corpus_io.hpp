// Copyright 2026 The Paraug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// File ingestion and serialization for the formats the toolkit speaks:
// line-aligned parallel text, Pharaoh "i-j" alignments, bilingual dictionary
// TSV, and word2vec-text embeddings. All inputs must be valid UTF-8; invalid
// bytes are hard errors, never lossy replacements.

#ifndef PARAUG_CORPUS_IO_HPP_
#define PARAUG_CORPUS_IO_HPP_

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "paraug/corpus.hpp"
#include "paraug/errors.hpp"

namespace paraug {

namespace detail {

// Returns the byte offset of the first invalid UTF-8 sequence, or npos if
// the whole buffer is well-formed. Rejects overlongs, surrogates, and code
// points above U+10FFFF.
inline std::size_t find_invalid_utf8(std::string_view s) {
  const auto* p = reinterpret_cast<const unsigned char*>(s.data());
  std::size_t i = 0;
  const std::size_t n = s.size();
  auto cont = [&](std::size_t k, unsigned char lo, unsigned char hi) {
    return k < n && p[k] >= lo && p[k] <= hi;
  };
  while (i < n) {
    const unsigned char b = p[i];
    if (b < 0x80) {
      i += 1;
    } else if (b >= 0xC2 && b <= 0xDF) {
      if (!cont(i + 1, 0x80, 0xBF)) return i;
      i += 2;
    } else if (b == 0xE0) {
      if (!cont(i + 1, 0xA0, 0xBF) || !cont(i + 2, 0x80, 0xBF)) return i;
      i += 3;
    } else if (b >= 0xE1 && b <= 0xEC) {
      if (!cont(i + 1, 0x80, 0xBF) || !cont(i + 2, 0x80, 0xBF)) return i;
      i += 3;
    } else if (b == 0xED) {
      if (!cont(i + 1, 0x80, 0x9F) || !cont(i + 2, 0x80, 0xBF)) return i;
      i += 3;
    } else if (b >= 0xEE && b <= 0xEF) {
      if (!cont(i + 1, 0x80, 0xBF) || !cont(i + 2, 0x80, 0xBF)) return i;
      i += 3;
    } else if (b == 0xF0) {
      if (!cont(i + 1, 0x90, 0xBF) || !cont(i + 2, 0x80, 0xBF) ||
          !cont(i + 3, 0x80, 0xBF))
        return i;
      i += 4;
    } else if (b >= 0xF1 && b <= 0xF3) {
      if (!cont(i + 1, 0x80, 0xBF) || !cont(i + 2, 0x80, 0xBF) ||
          !cont(i + 3, 0x80, 0xBF))
        return i;
      i += 4;
    } else if (b == 0xF4) {
      if (!cont(i + 1, 0x80, 0x8F) || !cont(i + 2, 0x80, 0xBF) ||
          !cont(i + 3, 0x80, 0xBF))
        return i;
      i += 4;
    } else {
      return i;
    }
  }
  return std::string_view::npos;
}

}  // namespace detail

/// Reads a whole file and validates it as UTF-8.
inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failure on " + path.string());
  const std::size_t bad = detail::find_invalid_utf8(content);
  if (bad != std::string_view::npos) {
    throw EncodingError(path.string() + ": invalid UTF-8 at byte offset " +
                        std::to_string(bad));
  }
  return content;
}

/// Splits file content into lines. A trailing newline does not create an
/// extra empty line; lone trailing '\r' bytes (CRLF input) are stripped.
inline std::vector<std::string> split_lines(std::string_view content) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = end + 1;
  }
  return lines;
}

namespace detail {

// Writes content to "<path>.tmp" and returns that temp path; the caller
// renames it into place once every sibling file has been staged too.
inline std::filesystem::path stage_temp(const std::filesystem::path& path,
                                        std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) {
    out.close();
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw IoError("write failure on " + tmp.string());
  }
  return tmp;
}

inline void commit_temp(const std::filesystem::path& tmp,
                        const std::filesystem::path& path) {
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename " + tmp.string() + " to " + path.string());
  }
}

}  // namespace detail

/// Writes content to path via a temporary file in the same directory plus an
/// atomic rename, so an interrupted run never leaves a partial file behind.
inline void write_text_file_atomic(const std::filesystem::path& path,
                                   std::string_view content) {
  detail::commit_temp(detail::stage_temp(path, content), path);
}

/// Loads two line-aligned UTF-8 files into a corpus; line k of each file
/// becomes pair k. Differing line counts signal a corrupt corpus.
inline ParallelCorpus load_parallel(const std::filesystem::path& source_path,
                                    const std::filesystem::path& target_path,
                                    std::string source_tag,
                                    std::string target_tag) {
  const auto source_lines = split_lines(read_text_file(source_path));
  const auto target_lines = split_lines(read_text_file(target_path));
  if (source_lines.size() != target_lines.size()) {
    throw LineCountMismatchError(
        source_path.string() + " has " + std::to_string(source_lines.size()) +
        " lines but " + target_path.string() + " has " +
        std::to_string(target_lines.size()));
  }
  ParallelCorpus corpus;
  corpus.source_tag = std::move(source_tag);
  corpus.target_tag = std::move(target_tag);
  corpus.pairs.reserve(source_lines.size());
  for (std::size_t k = 0; k < source_lines.size(); ++k) {
    corpus.add_pair(tokenize(source_lines[k]), tokenize(target_lines[k]));
  }
  return corpus;
}

/// Writes one detokenized line per pair, LF-terminated. Both sides are
/// staged to temp files first and renamed together, so a failure never
/// leaves one side updated without the other.
inline void save_parallel(const ParallelCorpus& corpus,
                          const std::filesystem::path& source_path,
                          const std::filesystem::path& target_path) {
  std::string source_content;
  std::string target_content;
  for (const auto& pair : corpus.pairs) {
    source_content += detokenize(pair.source);
    source_content += '\n';
    target_content += detokenize(pair.target);
    target_content += '\n';
  }
  const std::filesystem::path source_tmp =
      detail::stage_temp(source_path, source_content);
  std::filesystem::path target_tmp;
  try {
    target_tmp = detail::stage_temp(target_path, target_content);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(source_tmp, ec);
    throw;
  }
  detail::commit_temp(source_tmp, source_path);
  detail::commit_temp(target_tmp, target_path);
}

namespace detail {

inline bool parse_size(std::string_view text, std::size_t& value) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

}  // namespace detail

/// Parses a Pharaoh alignment file: one line per corpus pair, each line a
/// whitespace-separated list of "i-j" items (decimal, 0-based). Every link
/// is validated against the referenced pair's sentence lengths.
inline AlignmentSet load_alignments(const std::filesystem::path& path,
                                    const ParallelCorpus& corpus) {
  const auto lines = split_lines(read_text_file(path));
  if (lines.size() != corpus.size()) {
    throw LineCountMismatchError(
        path.string() + " has " + std::to_string(lines.size()) +
        " lines for a corpus of " + std::to_string(corpus.size()) + " pairs");
  }
  AlignmentSet alignments;
  alignments.links.resize(corpus.size());
  for (std::size_t k = 0; k < lines.size(); ++k) {
    for (const Token& item : tokenize(lines[k])) {
      const std::size_t dash = item.find('-');
      std::size_t src_idx = 0;
      std::size_t tgt_idx = 0;
      if (dash == std::string::npos ||
          !detail::parse_size(std::string_view(item).substr(0, dash),
                              src_idx) ||
          !detail::parse_size(std::string_view(item).substr(dash + 1),
                              tgt_idx)) {
        throw MalformedLinkError(path.string() + ":" + std::to_string(k + 1) +
                                 ": malformed link \"" + item + "\"");
      }
      const SentencePair& pair = corpus.pairs[k];
      if (src_idx >= pair.source.size() || tgt_idx >= pair.target.size()) {
        throw OutOfRangeLinkError(
            path.string() + ":" + std::to_string(k + 1) + ": link " + item +
            " out of range for sentence lengths " +
            std::to_string(pair.source.size()) + "/" +
            std::to_string(pair.target.size()));
      }
      alignments.links[k].emplace(src_idx, tgt_idx);
    }
  }
  return alignments;
}

/// Loads a bilingual dictionary from UTF-8 TSV with exactly two columns,
/// source_phrase TAB target_phrase. Phrases are tokenized and may be
/// multi-token; an empty side is a malformed row.
inline BilingualDictionary load_dictionary(const std::filesystem::path& path) {
  BilingualDictionary dictionary;
  const auto lines = split_lines(read_text_file(path));
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::string& line = lines[k];
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw MalformedRowError(path.string() + ":" + std::to_string(k + 1) +
                              ": expected exactly two TAB-separated columns");
    }
    DictionaryEntry entry;
    entry.source_phrase = tokenize(std::string_view(line).substr(0, tab));
    entry.target_phrase = tokenize(std::string_view(line).substr(tab + 1));
    if (entry.source_phrase.empty() || entry.target_phrase.empty()) {
      throw MalformedRowError(path.string() + ":" + std::to_string(k + 1) +
                              ": empty dictionary column");
    }
    dictionary.entries.push_back(std::move(entry));
  }
  return dictionary;
}

/// Loads embeddings in word2vec text format: a "V D" header line followed by
/// V rows of "word c1 ... cD". The declared counts must agree with the body
/// and keys must be unique.
inline EmbeddingTable load_embeddings(const std::filesystem::path& path) {
  const auto lines = split_lines(read_text_file(path));
  if (lines.empty()) {
    throw HeaderMismatchError(path.string() + ": missing \"V D\" header line");
  }
  const Sentence header = tokenize(lines[0]);
  std::size_t declared_count = 0;
  std::size_t dimension = 0;
  if (header.size() != 2 || !detail::parse_size(header[0], declared_count) ||
      !detail::parse_size(header[1], dimension) || dimension == 0) {
    throw HeaderMismatchError(path.string() +
                              ": malformed \"V D\" header line");
  }
  if (lines.size() - 1 != declared_count) {
    throw HeaderMismatchError(
        path.string() + ": header declares " + std::to_string(declared_count) +
        " vectors but file has " + std::to_string(lines.size() - 1) + " rows");
  }
  EmbeddingTable table;
  table.dimension = dimension;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Sentence row = tokenize(lines[k]);
    if (row.size() != dimension + 1) {
      throw MalformedVectorError(
          path.string() + ":" + std::to_string(k + 1) + ": expected " +
          std::to_string(dimension) + " components, found " +
          std::to_string(row.empty() ? 0 : row.size() - 1));
    }
    std::vector<double> vec(dimension);
    for (std::size_t d = 0; d < dimension; ++d) {
      const std::string& component = row[d + 1];
      const char* first = component.data();
      const char* last = first + component.size();
      auto [ptr, ec] = std::from_chars(first, last, vec[d]);
      if (ec != std::errc() || ptr != last) {
        throw MalformedVectorError(path.string() + ":" +
                                   std::to_string(k + 1) +
                                   ": non-numeric component \"" + component +
                                   "\"");
      }
    }
    if (!table.vectors.emplace(row[0], std::move(vec)).second) {
      throw HeaderMismatchError(path.string() + ":" + std::to_string(k + 1) +
                                ": duplicate key \"" + row[0] + "\"");
    }
  }
  return table;
}

}  // namespace paraug

#endif  // PARAUG_CORPUS_IO_HPP_
