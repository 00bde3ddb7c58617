#pragma once

#include <memory>
#include <span>
#include <vector>

#include "wasd/types.hpp"

namespace wasd {

// A deterministic next-token model exposing clampable scalar activations.
// Implementations are immutable after construction; forward() must be safe
// to call concurrently on the same instance.
class Model {
 public:
  virtual ~Model() = default;

  virtual int vocab_size() const = 0;
  virtual int max_context() const = 0;

  // Full forward pass. Reports the logit vector, the argmax token (ties to
  // the lowest id) and every clampable activation for this prompt length,
  // with clamp values substituted before downstream layers consume them.
  virtual ModelOutput forward(const Prompt& x,
                              std::span<const Intervention> interventions
                                  = {}) const = 0;

  // Clampable sites for a given prompt length, sorted by
  // (layer, pos_from_end, channel), duplicate-free.
  virtual std::vector<NeuronRef> neurons(int prompt_length) const = 0;

  // Fast path used by the samplers: next token only, no activation map.
  // The default delegates to forward().
  virtual TokenId next_token(const Prompt& x,
                             std::span<const Intervention> interventions
                                 = {}) const {
    return forward(x, interventions).next_token;
  }

  // Fast path for attribution: one logit, no activation map.
  virtual Scalar logit_of(const Prompt& x, TokenId token,
                          std::span<const Intervention> interventions
                              = {}) const {
    return forward(x, interventions).logits[token];
  }
};

// Throws unless the prompt is non-empty, within context, all tokens are in
// the vocabulary, and intervention targets are distinct and on the grid.
void validate_call(const Model& model, const Prompt& x,
                   std::span<const Intervention> interventions);

inline ModelOutput forward(const Model& model, const Prompt& x,
                           std::span<const Intervention> interventions = {}) {
  return model.forward(x, interventions);
}

inline std::vector<NeuronRef> enumerate_neurons(const Model& model,
                                                int prompt_length) {
  return model.neurons(prompt_length);
}

}  // namespace wasd
