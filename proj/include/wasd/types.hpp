#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wasd/linalg.hpp"
#include "wasd/rng.hpp"

namespace wasd {

using TokenId = std::int32_t;

// A non-empty token sequence. Validity against a vocabulary is checked by
// the model consuming the prompt, not here.
struct Prompt {
  std::vector<TokenId> tokens;

  Prompt() = default;
  explicit Prompt(std::vector<TokenId> t) : tokens(std::move(t)) {}

  int size() const { return static_cast<int>(tokens.size()); }
  bool empty() const { return tokens.empty(); }

  friend bool operator==(const Prompt&, const Prompt&) = default;
  friend auto operator<=>(const Prompt& a, const Prompt& b) {
    return a.tokens <=> b.tokens;
  }
};

inline std::uint64_t hash_of(const Prompt& x) {
  std::uint64_t h = 0x243F6A8885A308D3ull;
  for (TokenId t : x.tokens) {
    h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(t)));
  }
  return h;
}

// Identity of one clampable scalar activation site. Positions are counted
// from the end of the prompt (0 = final token) so that prefix perturbations
// leave final-token neuron identities stable.
struct NeuronRef {
  std::int32_t layer = 0;
  std::int32_t channel = 0;
  std::int32_t pos_from_end = 0;

  friend bool operator==(const NeuronRef&, const NeuronRef&) = default;

  // Total order: layer, then pos_from_end, then channel. This is the
  // enumeration order and every deterministic tie-break in the library.
  friend std::strong_ordering operator<=>(const NeuronRef& a,
                                          const NeuronRef& b) {
    if (auto c = a.layer <=> b.layer; c != 0) return c;
    if (auto c = a.pos_from_end <=> b.pos_from_end; c != 0) return c;
    return a.channel <=> b.channel;
  }
};

struct Intervention {
  NeuronRef target;
  Scalar value = 0.0;
};

struct ModelOutput {
  TokenId next_token = 0;
  Vec logits;
  std::map<NeuronRef, Scalar> activations;
};

// Argmax with ties broken toward the lowest token id.
inline TokenId argmax_token(const Vec& logits) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < logits.size(); ++i) {
    if (logits[i] > logits[best]) best = i;
  }
  return static_cast<TokenId>(best);
}

struct ContextOverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownNeuronError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConflictingInterventionsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnumerationBoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NeutralPrefixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wasd
