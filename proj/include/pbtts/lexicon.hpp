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
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pbtts/error.hpp"
#include "pbtts/utf8.hpp"

namespace pbtts {

// ---------------------------------------------------------------------------
// Feature tags
// ---------------------------------------------------------------------------

enum class Role { Wh, Verb, Pronoun, Noun, Object, Punct };
enum class GrammaticalNumber { Singular, Plural };
enum class SpeechRegister { Formal, Informal };
enum class Person { First, Second, Third };

inline std::string_view to_string(Role r) {
  switch (r) {
    case Role::Wh: return "WH";
    case Role::Verb: return "VERB";
    case Role::Pronoun: return "PRONOUN";
    case Role::Noun: return "NOUN";
    case Role::Object: return "OBJECT";
    case Role::Punct: return "PUNCT";
  }
  return "?";
}
inline std::string_view to_string(GrammaticalNumber n) {
  return n == GrammaticalNumber::Singular ? "SINGULAR" : "PLURAL";
}
inline std::string_view to_string(SpeechRegister r) {
  return r == SpeechRegister::Formal ? "FORMAL" : "INFORMAL";
}
inline std::string_view to_string(Person p) {
  switch (p) {
    case Person::First: return "FIRST";
    case Person::Second: return "SECOND";
    case Person::Third: return "THIRD";
  }
  return "?";
}

inline std::optional<Role> parse_role(std::string_view s) {
  for (Role r : {Role::Wh, Role::Verb, Role::Pronoun, Role::Noun, Role::Object, Role::Punct}) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

// A candidate's tags: at most one value per dimension.
struct FeatureSet {
  std::optional<Role> role;
  std::optional<GrammaticalNumber> number;
  std::optional<SpeechRegister> speech_register;
  std::optional<Person> person;

  bool empty() const {
    return !role && !number && !speech_register && !person;
  }
  auto operator<=>(const FeatureSet&) const = default;
};

// Canonical form: role, number, register, person; comma separated.
inline std::string to_string(const FeatureSet& f) {
  std::string out;
  const auto add = [&](std::string_view dim, std::string_view value) {
    if (!out.empty()) out += ',';
    out.append(dim).append("=").append(value);
  };
  if (f.role) add("role", to_string(*f.role));
  if (f.number) add("number", to_string(*f.number));
  if (f.speech_register) add("register", to_string(*f.speech_register));
  if (f.person) add("person", to_string(*f.person));
  return out;
}

// Parses a comma-separated tag list. Throws ValidationError on unknown or
// repeated dimensions and unknown values.
inline FeatureSet parse_features(std::string_view text) {
  FeatureSet f;
  if (text.empty()) return f;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view tag = text.substr(start, comma - start);
    const std::size_t eq = tag.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("malformed feature tag '" + std::string(tag) + "'");
    }
    const std::string_view dim = tag.substr(0, eq);
    const std::string_view value = tag.substr(eq + 1);
    const auto unknown = [&] {
      return ValidationError("unknown feature tag '" + std::string(tag) + "'");
    };
    const auto repeated = [&] {
      return ValidationError("feature dimension '" + std::string(dim) + "' given twice");
    };
    if (dim == "role") {
      if (f.role) throw repeated();
      f.role = parse_role(value);
      if (!f.role) throw unknown();
    } else if (dim == "number") {
      if (f.number) throw repeated();
      if (value == "SINGULAR") f.number = GrammaticalNumber::Singular;
      else if (value == "PLURAL") f.number = GrammaticalNumber::Plural;
      else throw unknown();
    } else if (dim == "register") {
      if (f.speech_register) throw repeated();
      if (value == "FORMAL") f.speech_register = SpeechRegister::Formal;
      else if (value == "INFORMAL") f.speech_register = SpeechRegister::Informal;
      else throw unknown();
    } else if (dim == "person") {
      if (f.person) throw repeated();
      if (value == "FIRST") f.person = Person::First;
      else if (value == "SECOND") f.person = Person::Second;
      else if (value == "THIRD") f.person = Person::Third;
      else throw unknown();
    } else {
      throw unknown();
    }
    start = comma + 1;
  }
  return f;
}

// ---------------------------------------------------------------------------
// Entries
// ---------------------------------------------------------------------------

struct Candidate {
  std::string gurmukhi;
  FeatureSet features;
  std::uint32_t priority = 0;

  bool same_target(const Candidate& other) const {
    return gurmukhi == other.gurmukhi && features == other.features;
  }
  bool operator==(const Candidate&) const = default;
};

struct LexiconEntry {
  std::string headword;
  std::vector<Candidate> candidates;  // ascending priority

  bool operator==(const LexiconEntry&) const = default;
};

// True when every letter of `text` is Gurmukhi; non-letters (spaces,
// punctuation, joiners) are allowed, control characters are not.
inline bool is_gurmukhi_text(std::string_view text) {
  bool any = false;
  for (char32_t cp : utf8::decode(text)) {
    if (cp == utf8::kReplacement) return false;
    if (cp < 0x20 || cp == 0x7F) return false;
    if (utf8::is_letter(cp) && !utf8::in_gurmukhi_block(cp)) return false;
    if (!utf8::is_space(cp)) any = true;
  }
  return any;
}

inline std::string fold_headword(std::string_view word) { return utf8::lower_ascii(word); }

inline void validate_headword(std::string_view headword) {
  if (headword.empty()) throw ValidationError("empty headword");
  for (char32_t cp : utf8::decode(headword)) {
    if (utf8::is_space(cp) || cp < 0x20) {
      throw ValidationError("headword '" + std::string(headword) + "' contains whitespace");
    }
  }
}

inline void validate_candidate(const Candidate& c) {
  if (c.gurmukhi.empty()) throw ValidationError("candidate has empty Gurmukhi text");
  if (!is_gurmukhi_text(c.gurmukhi)) {
    throw ValidationError("candidate '" + c.gurmukhi + "' has non-Gurmukhi letters");
  }
  if (!c.features.role) {
    throw ValidationError("candidate '" + c.gurmukhi + "' carries no role tag");
  }
}

// ---------------------------------------------------------------------------
// Lexicon
// ---------------------------------------------------------------------------

// English -> Punjabi candidate dictionary. Immutable once built; share freely.
class Lexicon {
 public:
  using EntryMap = std::map<std::string, LexiconEntry, std::less<>>;

  static constexpr std::string_view kHeaderPrefix = "#punjabi-lexicon ";
  static constexpr std::string_view kVersion = "v1";

  // Candidates for the case-folded surface, in priority order.
  std::span<const Candidate> lookup(std::string_view surface) const {
    const auto it = entries_.find(fold_headword(surface));
    if (it == entries_.end()) return {};
    return it->second.candidates;
  }

  bool contains(std::string_view surface) const {
    return entries_.contains(fold_headword(surface));
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const EntryMap& entries() const { return entries_; }
  const std::string& version() const { return version_; }

  bool operator==(const Lexicon&) const = default;

 private:
  friend Lexicon load_lexicon(std::istream& in);
  friend Lexicon add_entry(const Lexicon& lexicon, std::string_view headword,
                           Candidate candidate);

  EntryMap entries_;
  std::string version_{kVersion};
};

namespace detail {

inline void insert_sorted(std::vector<Candidate>& list, Candidate c) {
  const auto pos = std::upper_bound(
      list.begin(), list.end(), c.priority,
      [](std::uint32_t p, const Candidate& x) { return p < x.priority; });
  list.insert(pos, std::move(c));
}

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

inline std::optional<std::uint32_t> parse_u32(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint32_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

inline bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace detail

// Reads the tab-separated lexicon format. The first line must be the
// `#punjabi-lexicon v1` header unless the stream holds nothing at all.
inline Lexicon load_lexicon(std::istream& in) {
  Lexicon lex;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header_seen) {
      if (detail::is_blank(line)) continue;
      if (!line.starts_with(Lexicon::kHeaderPrefix)) {
        throw LoadError("missing '#punjabi-lexicon v1' header", line_no);
      }
      const std::string_view version = std::string_view(line).substr(Lexicon::kHeaderPrefix.size());
      if (version != Lexicon::kVersion) {
        throw LoadError("unsupported lexicon version '" + std::string(version) + "'", line_no);
      }
      header_seen = true;
      continue;
    }
    if (detail::is_blank(line) || line.front() == '#') continue;

    const auto fields = detail::split_tabs(line);
    if (fields.size() != 4) {
      throw LoadError("expected 4 tab-separated fields, found " + std::to_string(fields.size()),
                      line_no);
    }
    Candidate cand;
    std::string headword;
    try {
      validate_headword(fields[0]);
      headword = fold_headword(fields[0]);
      cand.gurmukhi = std::string(fields[1]);
      const auto priority = detail::parse_u32(fields[2]);
      if (!priority) throw ValidationError("invalid priority '" + std::string(fields[2]) + "'");
      cand.priority = *priority;
      cand.features = parse_features(fields[3]);
      validate_candidate(cand);
    } catch (const ValidationError& e) {
      throw LoadError(e.what(), line_no);
    }

    auto& entry = lex.entries_[headword];
    entry.headword = headword;
    bool duplicate = false;
    for (const Candidate& existing : entry.candidates) {
      if (existing.same_target(cand)) {
        if (existing.priority != cand.priority) {
          throw LoadError("conflicting priority for '" + headword + "' -> '" + cand.gurmukhi + "'",
                          line_no);
        }
        duplicate = true;
        break;
      }
      if (existing.priority == cand.priority) {
        throw LoadError("priority " + std::to_string(cand.priority) + " used twice for '" +
                            headword + "'",
                        line_no);
      }
    }
    if (!duplicate) detail::insert_sorted(entry.candidates, std::move(cand));
  }
  return lex;
}

inline Lexicon load_lexicon(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_lexicon(in);
}

inline Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open lexicon file '" + path + "'", 0);
  return load_lexicon(in);
}

inline void serialize_lexicon(const Lexicon& lex, std::ostream& out) {
  out << Lexicon::kHeaderPrefix << lex.version() << '\n';
  for (const auto& [headword, entry] : lex.entries()) {
    for (const Candidate& c : entry.candidates) {
      out << headword << '\t' << c.gurmukhi << '\t' << c.priority << '\t'
          << to_string(c.features) << '\n';
    }
  }
}

inline std::string serialize_lexicon(const Lexicon& lex) {
  std::ostringstream out;
  serialize_lexicon(lex, out);
  return out.str();
}

// Returns a copy of `lexicon` with `candidate` filed under the folded
// headword. Re-adding a known (gurmukhi, features) pair is a no-op; a
// priority already taken in the entry moves the newcomer to max+1.
inline Lexicon add_entry(const Lexicon& lexicon, std::string_view headword, Candidate candidate) {
  validate_headword(headword);
  validate_candidate(candidate);
  Lexicon out = lexicon;
  const std::string key = fold_headword(headword);
  auto& entry = out.entries_[key];
  entry.headword = key;
  std::uint32_t max_priority = 0;
  bool collision = false;
  for (const Candidate& existing : entry.candidates) {
    if (existing.same_target(candidate)) return out;
    max_priority = std::max(max_priority, existing.priority);
    collision = collision || existing.priority == candidate.priority;
  }
  if (collision) {
    if (max_priority == UINT32_MAX) throw ValidationError("priority space exhausted for '" + key + "'");
    candidate.priority = max_priority + 1;
  }
  detail::insert_sorted(entry.candidates, std::move(candidate));
  return out;
}

}  // namespace pbtts
