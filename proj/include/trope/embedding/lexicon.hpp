#pragma once

#include <string>
#include <vector>

#include "trope/embedding/embedder.hpp"

namespace trope::embedding {

enum class Dimension { kWarmth, kCompetence };

std::string to_string(Dimension d);

// Bipolar anchor word lists for one perception dimension.
struct Lexicon {
  Dimension dimension = Dimension::kWarmth;
  std::vector<std::string> positive_words;
  std::vector<std::string> negative_words;

  // Throws ValidationError if either list is empty or the lists overlap.
  void validate() const;
};

// CSV columns: word, dimension ("warmth"|"competence"),
// polarity ("positive"|"negative").
std::vector<Lexicon> load_lexicons(const std::string& csv_path);

struct SemanticAxis {
  Dimension dimension = Dimension::kWarmth;
  Eigen::VectorXd direction;  // unnormalized; cosine projection handles scale
};

// direction = mean(embed(w) : positive) - mean(embed(w') : negative).
SemanticAxis build_axis(const Lexicon& lexicon, Embedder& embedder);

// Cosine of the vector with the axis direction, in [-1, 1].
// Throws ValidationError on zero vectors or dimension mismatch.
double project(const EmbeddingVector& vector, const SemanticAxis& axis);

// Both axes applied to the raw metaphor text.
class WarmthCompetenceScorer {
 public:
  WarmthCompetenceScorer(SemanticAxis warmth, SemanticAxis competence,
                         Embedder& embedder);

  struct Scores {
    double warmth = 0.0;
    double competence = 0.0;
  };
  Scores score(const std::string& text);
  std::vector<Scores> score_batch(const std::vector<std::string>& texts);

  const SemanticAxis& warmth_axis() const { return warmth_; }
  const SemanticAxis& competence_axis() const { return competence_; }

 private:
  SemanticAxis warmth_;
  SemanticAxis competence_;
  Embedder& embedder_;
};

}  // namespace trope::embedding
