#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "authlab/corpus.hpp"
#include "authlab/textproc.hpp"

namespace authlab {

struct LdaParams {
  int k = 48;
  double alpha = 0.0;  // <= 0 means the 50/K convention
  double beta = 0.01;
  int iterations = 500;
  std::uint64_t seed = 7;
  // Treat each account's concatenated posts as one document instead of one
  // document per post.
  bool account_documents = false;
  int min_term_freq = 1;

  double resolved_alpha() const { return alpha > 0.0 ? alpha : 50.0 / k; }
};

struct TopicModel {
  int k = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::uint64_t seed = 0;
  int iterations = 0;
  std::vector<std::string> vocab;         // index -> term, sorted
  std::map<std::string, int> term_index;  // term -> index
  std::vector<double> term_topic;         // k x V row-major, rows sum to 1
  // Final-state diagnostics; used by the token-conservation checks.
  std::vector<std::int64_t> topic_token_counts;
  std::int64_t total_tokens = 0;

  double phi(int topic, int term) const {
    return term_topic[static_cast<std::size_t>(topic) * vocab.size() +
                      static_cast<std::size_t>(term)];
  }
};

struct PostTopicDistribution {
  PostId post_id;
  std::vector<double> probs;  // length k, sums to 1
};

struct AccountTopicVector {
  AccountId account_id;
  std::vector<double> probs;  // length k, sums to 1
};

// Collapsed Gibbs sampling over the normalized corpus. Deterministic for a
// fixed seed. Throws DataError when no post survives normalization with at
// least one token; warns and proceeds when k exceeds the vocabulary size.
TopicModel fit_lda(const Dataset& d, const NormalizedCorpus& corpus,
                   const LdaParams& params);

// Fold-in Gibbs sampling with the term-topic rows held fixed. A post with no
// in-vocabulary token gets the uniform distribution.
PostTopicDistribution infer_post_topics(const TopicModel& m,
                                        const NormalizedPost& p,
                                        int fold_in_iterations,
                                        std::uint64_t seed);

// Distributions for every post; per-post seeds are derived from `seed` and
// the post id so the result is identical at any thread count.
std::map<PostId, PostTopicDistribution> infer_all_posts(
    const TopicModel& m, const NormalizedCorpus& corpus,
    int fold_in_iterations, std::uint64_t seed, int threads = 1);

// Unweighted mean of the account's post distributions. Accounts without
// posts are an error; filter the dataset first.
AccountTopicVector account_topic_vector(
    const Dataset& d, const std::map<PostId, PostTopicDistribution>& dists,
    int k, const AccountId& x);

void save_topic_model(const TopicModel& m, const std::string& path,
                      std::uint64_t config_hash);
// Returns false on missing/corrupt/mismatched file (caller refits).
bool load_topic_model(const std::string& path, std::uint64_t expected_hash,
                      TopicModel* out);

}  // namespace authlab
