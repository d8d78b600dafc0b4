#pragma once

#include <string>
#include <vector>

#include "ise/corpus.hpp"
#include "ise/senses.hpp"

namespace ise {

// Weighted bipartite edge list with per-side summed degrees. Edges are
// aggregated (no duplicate pairs) and kept sorted by (source, target) so
// construction is deterministic and order-invariant in the input documents.
struct BipartiteNetwork {
  struct Edge {
    int source;
    int target;
    double weight;
  };

  std::vector<Edge> edges;
  std::vector<double> source_degrees;
  std::vector<double> target_degrees;
  std::string source_kind;  // "sense"
  std::string target_kind;  // "word" or "identity"

  double total_weight() const;
};

// Word-context network: for each token with sense s at position p, every
// other position q in the same document with |p - q| <= window contributes
// weight 1 to edge (s, word_at_q). The context side ignores identities.
// Windows truncate at document boundaries.
BipartiteNetwork build_word_context_network(const LabeledCorpus& corpus,
                                            const SenseRegistry& registry, int window);

// Word-identity network: edge ((w,i), i) weighted by the number of tokens of
// word w labeled i. Each sense node touches exactly one identity node.
BipartiteNetwork build_word_identity_network(const LabeledCorpus& corpus,
                                             const SenseRegistry& registry);

// TSV serialization: "source<TAB>target<TAB>weight", sense nodes rendered as
// "word#identityId". Round-trips bit-exactly.
void save_network(const BipartiteNetwork& net, const SenseRegistry& registry,
                  const Vocabulary& vocab, const std::string& path);
BipartiteNetwork load_network(const std::string& path, const SenseRegistry& registry,
                              const Vocabulary& vocab, const std::string& target_kind);

}  // namespace ise
