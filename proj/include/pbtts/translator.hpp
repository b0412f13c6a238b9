// Copyright 2026 The pbtts Authors
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pbtts/error.hpp"
#include "pbtts/lexicon.hpp"
#include "pbtts/text.hpp"

namespace pbtts {

// Role of a translated chunk: the candidate's role tag, plus OOV for
// untranslated words and NUM for number words already in Punjabi.
enum class ChunkRole : std::uint8_t { Wh, Verb, Pronoun, Noun, Object, Punct, Oov, Num };

inline constexpr std::size_t kChunkRoleCount = 8;

inline std::string_view to_string(ChunkRole r) {
  switch (r) {
    case ChunkRole::Wh: return "WH";
    case ChunkRole::Verb: return "VERB";
    case ChunkRole::Pronoun: return "PRONOUN";
    case ChunkRole::Noun: return "NOUN";
    case ChunkRole::Object: return "OBJECT";
    case ChunkRole::Punct: return "PUNCT";
    case ChunkRole::Oov: return "OOV";
    case ChunkRole::Num: return "NUM";
  }
  return "?";
}

inline std::optional<ChunkRole> parse_chunk_role(std::string_view s) {
  for (std::size_t i = 0; i < kChunkRoleCount; ++i) {
    const auto r = static_cast<ChunkRole>(i);
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

inline ChunkRole chunk_role(Role r) {
  switch (r) {
    case Role::Wh: return ChunkRole::Wh;
    case Role::Verb: return ChunkRole::Verb;
    case Role::Pronoun: return ChunkRole::Pronoun;
    case Role::Noun: return ChunkRole::Noun;
    case Role::Object: return ChunkRole::Object;
    case Role::Punct: return ChunkRole::Punct;
  }
  return ChunkRole::Oov;
}

struct Chunk {
  Token source;
  std::string gurmukhi;
  ChunkRole role = ChunkRole::Oov;
  bool oov = false;

  bool operator==(const Chunk&) const = default;
};

// ---------------------------------------------------------------------------
// Reorder rules
// ---------------------------------------------------------------------------

// Set of chunk roles one pattern position accepts.
class PatternSlot {
 public:
  constexpr PatternSlot() = default;
  static constexpr PatternSlot any() { return PatternSlot((1u << kChunkRoleCount) - 1); }
  static constexpr PatternSlot of(ChunkRole r) { return PatternSlot(1u << static_cast<unsigned>(r)); }

  constexpr PatternSlot operator|(PatternSlot other) const { return PatternSlot(mask_ | other.mask_); }
  constexpr bool accepts(ChunkRole r) const { return mask_ & (1u << static_cast<unsigned>(r)); }
  constexpr bool operator==(const PatternSlot&) const = default;

  // "*" or a '|'-separated list of role names, e.g. "OBJECT|OOV".
  static PatternSlot parse(std::string_view text) {
    if (text == "*") return any();
    PatternSlot slot;
    std::size_t start = 0;
    for (;;) {
      const std::size_t bar = text.find('|', start);
      const auto name = text.substr(start, bar == std::string_view::npos ? text.npos : bar - start);
      const auto role = parse_chunk_role(name);
      if (!role) throw ValidationError("unknown role '" + std::string(name) + "' in pattern");
      slot = slot | of(*role);
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
    return slot;
  }

  std::string to_string() const {
    if (*this == any()) return "*";
    std::string out;
    for (std::size_t i = 0; i < kChunkRoleCount; ++i) {
      if (!accepts(static_cast<ChunkRole>(i))) continue;
      if (!out.empty()) out += '|';
      out += pbtts::to_string(static_cast<ChunkRole>(i));
    }
    return out;
  }

 private:
  constexpr explicit PatternSlot(unsigned mask) : mask_(mask) {}
  unsigned mask_ = 0;
};

// A role pattern plus the permutation applied when it matches. A rule
// matches a sentence whose chunks fit the pattern position by position,
// followed by nothing but PUNCT chunks; those trailing marks stay put.
class ReorderRule {
 public:
  // Throws ValidationError unless pattern has >= 2 slots and permutation is
  // a permutation of 0..pattern.size()-1.
  ReorderRule(std::string name, std::vector<PatternSlot> pattern,
              std::vector<std::size_t> permutation)
      : name_(std::move(name)), pattern_(std::move(pattern)), permutation_(std::move(permutation)) {
    if (name_.empty()) throw ValidationError("rule without a name");
    if (pattern_.size() < 2) throw ValidationError("rule '" + name_ + "': pattern shorter than 2");
    if (permutation_.size() != pattern_.size()) {
      throw ValidationError("rule '" + name_ + "': permutation length differs from pattern");
    }
    std::vector<bool> seen(pattern_.size(), false);
    for (std::size_t p : permutation_) {
      if (p >= seen.size() || seen[p]) {
        throw ValidationError("rule '" + name_ + "': not a permutation");
      }
      seen[p] = true;
    }
  }

  const std::string& name() const { return name_; }
  const std::vector<PatternSlot>& pattern() const { return pattern_; }
  const std::vector<std::size_t>& permutation() const { return permutation_; }

  bool matches(std::span<const Chunk> chunks) const {
    if (chunks.size() < pattern_.size()) return false;
    for (std::size_t i = 0; i < pattern_.size(); ++i) {
      if (!pattern_[i].accepts(chunks[i].role)) return false;
    }
    return std::all_of(chunks.begin() + static_cast<std::ptrdiff_t>(pattern_.size()), chunks.end(),
                       [](const Chunk& c) { return c.role == ChunkRole::Punct; });
  }

  bool operator==(const ReorderRule&) const = default;

 private:
  std::string name_;
  std::vector<PatternSlot> pattern_;
  std::vector<std::size_t> permutation_;
};

// Rule file: `name<TAB>pattern<TAB>permutation` per line, both lists
// comma separated; `#` comments and blank lines ignored.
inline std::vector<ReorderRule> load_rules(std::istream& in) {
  std::vector<ReorderRule> rules;
  std::set<std::string, std::less<>> names;
  std::string line;
  std::size_t line_no = 0;
  const auto split = [](std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
      const std::size_t at = s.find(sep, start);
      parts.push_back(s.substr(start, at == s.npos ? s.npos : at - start));
      if (at == s.npos) return parts;
      start = at + 1;
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::is_blank(line) || line.front() == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 3) {
      throw LoadError("expected 3 tab-separated fields, found " + std::to_string(fields.size()),
                      line_no);
    }
    try {
      std::vector<PatternSlot> pattern;
      for (auto slot : split(fields[1], ',')) pattern.push_back(PatternSlot::parse(slot));
      std::vector<std::size_t> permutation;
      for (auto index : split(fields[2], ',')) {
        const auto value = detail::parse_u32(index);
        if (!value) throw ValidationError("bad permutation index '" + std::string(index) + "'");
        permutation.push_back(*value);
      }
      if (names.contains(fields[0])) {
        throw ValidationError("duplicate rule name '" + std::string(fields[0]) + "'");
      }
      rules.emplace_back(std::string(fields[0]), std::move(pattern), std::move(permutation));
      names.emplace(fields[0]);
    } catch (const ValidationError& e) {
      throw LoadError(e.what(), line_no);
    }
  }
  return rules;
}

inline std::vector<ReorderRule> load_rules(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_rules(in);
}

inline std::vector<ReorderRule> load_rules_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open rule file '" + path + "'", 0);
  return load_rules(in);
}

// ---------------------------------------------------------------------------
// Candidate selection
// ---------------------------------------------------------------------------

// Tunable inputs to context inference.
struct ContextPolicy {
  std::set<std::string, std::less<>> plural_cues{"all", "both"};
  SpeechRegister default_register = SpeechRegister::Formal;
};

// Features the sentence implies for `token`: number=PLURAL when another
// token is a plural cue or a lexicon noun tagged plural; register from the
// policy default. Sentence-final "?" has no effect.
inline FeatureSet infer_context(const Token& token, std::span<const Token> context,
                                const Lexicon& lexicon, const ContextPolicy& policy) {
  FeatureSet wanted;
  wanted.speech_register = policy.default_register;
  for (const Token& other : context) {
    if (other.index == token.index || other.kind != TokenKind::Word) continue;
    const std::string folded = fold_headword(other.surface);
    bool plural = policy.plural_cues.contains(folded);
    if (!plural) {
      const auto cands = lexicon.lookup(folded);
      plural = !cands.empty() && cands.front().features.role == Role::Noun &&
               cands.front().features.number == GrammaticalNumber::Plural;
    }
    if (plural) {
      wanted.number = GrammaticalNumber::Plural;
      break;
    }
  }
  return wanted;
}

// A candidate is consistent when it does not contradict any dimension the
// context specifies. Role is never constrained by context.
inline bool consistent(const FeatureSet& candidate, const FeatureSet& wanted) {
  const auto ok = [](const auto& have, const auto& want) { return !have || !want || *have == *want; };
  return ok(candidate.number, wanted.number) &&
         ok(candidate.speech_register, wanted.speech_register) &&
         ok(candidate.person, wanted.person);
}

// First consistent candidate in priority order, else the first one.
// `candidates` must be non-empty.
inline const Candidate& select_candidate(std::span<const Candidate> candidates,
                                         const FeatureSet& wanted) {
  for (const Candidate& c : candidates) {
    if (consistent(c.features, wanted)) return c;
  }
  return candidates.front();
}

inline const Candidate& select_candidate(const Token& token, std::span<const Candidate> candidates,
                                         std::span<const Token> context, const Lexicon& lexicon,
                                         const ContextPolicy& policy = {}) {
  return select_candidate(candidates, infer_context(token, context, lexicon, policy));
}

// ---------------------------------------------------------------------------
// Translation
// ---------------------------------------------------------------------------

// One chunk per token in source order; no reordering.
inline std::vector<Chunk> substitute(const std::vector<Token>& tokens, const Lexicon& lexicon,
                                     const ContextPolicy& policy = {}) {
  std::vector<Chunk> chunks;
  chunks.reserve(tokens.size());
  for (const Token& t : tokens) {
    Chunk c{t, t.surface, ChunkRole::Oov, false};
    if (t.kind == TokenKind::Punct) {
      c.role = ChunkRole::Punct;
    } else if (t.script == Script::Gurmukhi) {
      c.role = ChunkRole::Num;
    } else if (const auto cands = lexicon.lookup(t.surface); !cands.empty()) {
      const Candidate& pick = select_candidate(t, cands, tokens, lexicon, policy);
      c.gurmukhi = pick.gurmukhi;
      c.role = chunk_role(*pick.features.role);
    } else {
      c.oov = true;
    }
    chunks.push_back(std::move(c));
  }
  return chunks;
}

struct ReorderResult {
  std::vector<Chunk> chunks;
  std::vector<std::string> applied_rules;
};

// Applies the first matching rule once; unchanged when none matches.
inline ReorderResult reorder(std::vector<Chunk> chunks, std::span<const ReorderRule> rules) {
  for (const ReorderRule& rule : rules) {
    if (!rule.matches(chunks)) continue;
    const auto& perm = rule.permutation();
    std::vector<Chunk> out;
    out.reserve(chunks.size());
    for (std::size_t p : perm) out.push_back(chunks[p]);
    for (std::size_t i = perm.size(); i < chunks.size(); ++i) out.push_back(std::move(chunks[i]));
    return {std::move(out), {rule.name()}};
  }
  return {std::move(chunks), {}};
}

// Single spaces between chunks, none before punctuation.
inline std::string assemble(std::span<const Chunk> chunks) {
  std::string out;
  for (const Chunk& c : chunks) {
    if (!out.empty() && c.role != ChunkRole::Punct) out += ' ';
    out += c.gurmukhi;
  }
  return out;
}

struct TranslationResult {
  std::vector<Chunk> chunks;
  std::string text;
  std::vector<std::string> applied_rules;
  std::size_t oov_count = 0;

  bool operator==(const TranslationResult&) const = default;
};

// English sentence -> Punjabi. Throws UnsupportedDirection for Gurmukhi or
// mixed-script input.
inline TranslationResult translate_sentence(std::string_view text, const Lexicon& lexicon,
                                            std::span<const ReorderRule> rules,
                                            const ContextPolicy& policy = {}) {
  const Script script = detect_script(text);
  if (script != Script::Latin && script != Script::Neutral) {
    throw UnsupportedDirection("only English to Punjabi is supported; input script is " +
                               std::string(to_string(script)));
  }
  const auto tokens = normalize(tokenize(text), Script::Gurmukhi);
  auto [chunks, applied] = reorder(substitute(tokens, lexicon, policy), rules);
  TranslationResult result;
  result.text = assemble(chunks);
  result.oov_count = static_cast<std::size_t>(
      std::count_if(chunks.begin(), chunks.end(), [](const Chunk& c) { return c.oov; }));
  result.chunks = std::move(chunks);
  result.applied_rules = std::move(applied);
  return result;
}

}  // namespace pbtts
