#include "trope/embedding/lexicon.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "trope/util/csv.hpp"
#include "trope/util/errors.hpp"
#include "trope/util/text.hpp"

namespace trope::embedding {

std::string to_string(Dimension d) {
  return d == Dimension::kWarmth ? "warmth" : "competence";
}

void Lexicon::validate() const {
  if (positive_words.empty() || negative_words.empty())
    throw ValidationError("lexicon for " + to_string(dimension) +
                          " has an empty pole");
  std::set<std::string> pos(positive_words.begin(), positive_words.end());
  for (const auto& w : negative_words) {
    if (pos.count(w))
      throw ValidationError("lexicon word on both poles: " + w);
  }
}

std::vector<Lexicon> load_lexicons(const std::string& csv_path) {
  std::ifstream in(csv_path, std::ios::binary);
  if (!in) throw UserError("cannot open lexicon file: " + csv_path);
  CsvReader reader(in);
  for (const char* col : {"word", "dimension", "polarity"}) {
    if (!reader.has_column(col))
      throw UserError("lexicon file missing column '" + std::string(col) +
                      "': " + csv_path);
  }
  Lexicon warmth{Dimension::kWarmth, {}, {}};
  Lexicon competence{Dimension::kCompetence, {}, {}};
  std::vector<std::string> fields;
  size_t line = 1;
  while (reader.next_row(fields)) {
    ++line;
    std::string word = clean_whitespace(*reader.field(fields, "word"));
    std::string dim = to_lower_ascii(*reader.field(fields, "dimension"));
    std::string pol = to_lower_ascii(*reader.field(fields, "polarity"));
    if (word.empty()) continue;
    Lexicon* target = nullptr;
    if (dim == "warmth") target = &warmth;
    else if (dim == "competence") target = &competence;
    else
      throw UserError("lexicon line " + std::to_string(line) +
                      ": unknown dimension '" + dim + "'");
    if (pol == "positive") target->positive_words.push_back(word);
    else if (pol == "negative") target->negative_words.push_back(word);
    else
      throw UserError("lexicon line " + std::to_string(line) +
                      ": unknown polarity '" + pol + "'");
  }
  warmth.validate();
  competence.validate();
  return {warmth, competence};
}

SemanticAxis build_axis(const Lexicon& lexicon, Embedder& embedder) {
  lexicon.validate();
  auto mean_of = [&](const std::vector<std::string>& words) {
    std::vector<EmbeddingVector> vecs;
    std::vector<std::string> failed;
    try {
      vecs = embedder.embed_batch(words);
    } catch (const std::exception&) {
      // Retry one by one so the error can name the offending words.
      for (const auto& w : words) {
        try {
          vecs.push_back(embedder.embed(w));
        } catch (const std::exception&) {
          failed.push_back(w);
        }
      }
      if (!failed.empty()) {
        std::ostringstream os;
        os << "failed to embed lexicon words:";
        for (const auto& w : failed) os << ' ' << w;
        throw UserError(os.str());
      }
    }
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(embedder.dimension());
    for (const auto& v : vecs) sum += v.values;
    return Eigen::VectorXd(sum / static_cast<double>(vecs.size()));
  };
  SemanticAxis axis;
  axis.dimension = lexicon.dimension;
  axis.direction = mean_of(lexicon.positive_words) - mean_of(lexicon.negative_words);
  if (axis.direction.norm() == 0.0)
    throw ValidationError("degenerate axis: poles have identical means");
  return axis;
}

double cosine_similarity(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0)
    throw ValidationError("cosine undefined for zero vector");
  double c = a.dot(b) / (na * nb);
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return c;
}

double project(const EmbeddingVector& vector, const SemanticAxis& axis) {
  if (vector.values.size() != axis.direction.size())
    throw ValidationError("dimension mismatch: vector " +
                          std::to_string(vector.values.size()) + " vs axis " +
                          std::to_string(axis.direction.size()));
  return cosine_similarity(vector.values, axis.direction);
}

WarmthCompetenceScorer::WarmthCompetenceScorer(SemanticAxis warmth,
                                               SemanticAxis competence,
                                               Embedder& embedder)
    : warmth_(std::move(warmth)),
      competence_(std::move(competence)),
      embedder_(embedder) {}

WarmthCompetenceScorer::Scores WarmthCompetenceScorer::score(
    const std::string& text) {
  return score_batch({text}).front();
}

std::vector<WarmthCompetenceScorer::Scores>
WarmthCompetenceScorer::score_batch(const std::vector<std::string>& texts) {
  auto vecs = embedder_.embed_batch(texts);
  std::vector<Scores> out;
  out.reserve(vecs.size());
  for (const auto& v : vecs) {
    out.push_back(Scores{project(v, warmth_), project(v, competence_)});
  }
  return out;
}

}  // namespace trope::embedding
