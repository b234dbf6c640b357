#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trope::embedding {

// Semantic tags for the builtin lexical models. Each tag owns a base
// direction plus warmth/competence components (stereotype-content priors:
// machines read cold and capable, helpers warm, knowledge cold-capable)
// and an animacy value used by the builtin masked LM.
enum Tag : uint32_t {
  kWarmPos = 1u << 0,
  kWarmNeg = 1u << 1,
  kCompPos = 1u << 2,
  kCompNeg = 1u << 3,
  kHuman = 1u << 4,
  kMachine = 1u << 5,
  kAnimal = 1u << 6,
  kNature = 1u << 7,
  kObject = 1u << 8,
  kKnowledge = 1u << 9,
  kHelp = 1u << 10,
  kDanger = 1u << 11,
  kDeception = 1u << 12,
  kMystery = 1u << 13,
  kGrowth = 1u << 14,
  kImitation = 1u << 15,
  kEmotion = 1u << 16,
};

struct TagInfo {
  Tag tag;
  const char* name;
  double warmth;
  double competence;
  double animacy;  // +1 human .. -1 inanimate; 0 = no evidence
};

const std::vector<TagInfo>& tag_table();

// 0 when the token (tried verbatim, stemmed, and stemmed+'e') is unknown.
uint32_t lookup_tags(const std::string& token);

size_t builtin_vocabulary_size();

bool is_stopword(const std::string& token);
bool is_negator(const std::string& token);

// Finite-verb test for the noun-phrase heuristic: closed-class finite
// forms, or a known verb base in bare/-s/-ed form ( -ing participles do
// not count; they are legal inside noun phrases).
bool is_finite_verb(const std::string& token);

// Tokens that cannot begin a bare noun phrase (pronouns, conjunctions,
// prepositions such as "like").
bool blocks_noun_phrase_start(const std::string& token);

}  // namespace trope::embedding
