#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace trope::embedding {

struct EmbeddingVector {
  Eigen::VectorXd values;
  std::string model_tag;
};

// Text embedding provider. Implementations must be deterministic for a
// fixed model_tag: the same text always yields the same vector.
class Embedder {
 public:
  virtual ~Embedder() = default;

  virtual std::string model_tag() const = 0;
  virtual int dimension() const = 0;

  // Rejects empty texts (ValidationError). Order-preserving.
  virtual std::vector<EmbeddingVector> embed_batch(
      const std::vector<std::string>& texts) = 0;

  EmbeddingVector embed(const std::string& text) {
    return embed_batch({text}).front();
  }
};

double cosine_similarity(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

}  // namespace trope::embedding
