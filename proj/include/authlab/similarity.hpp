#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "authlab/corpus.hpp"
#include "authlab/textproc.hpp"

namespace authlab {

enum class SimilarityKind {
  CommonPosts,
  BagOfWords,
  TopicDistr,
  ProfileProp,
  BehaviorProp
};

std::string kind_to_string(SimilarityKind kind);
SimilarityKind kind_from_string(const std::string& s);
const std::vector<SimilarityKind>& all_similarity_kinds();

// Jaccard coefficient over sorted, deduplicated term vectors; 0/0 -> 0.
double jaccard(const std::vector<std::string>& a,
               const std::vector<std::string>& b);

// Cosine similarity clamped to [0,1]; any zero vector -> 0.
double cosine_clamped(const std::vector<double>& a,
                      const std::vector<double>& b);

// Per-account inputs for the five functions, computed once per corpus.
// Entries are present only when the prerequisite artifacts were supplied.
struct AccountSignatures {
  // Distinct normalized-post equivalence classes (sorted canonical keys).
  std::map<AccountId, std::vector<std::string>> post_classes;
  // Sorted vocabularies W(x).
  std::map<AccountId, std::vector<std::string>> vocabularies;
  std::map<AccountId, std::vector<double>> topic_vectors;
  std::map<AccountId, std::vector<double>> profile_vectors;
  std::map<AccountId, std::vector<double>> behavior_vectors;

  double similarity(SimilarityKind kind, const AccountId& x,
                    const AccountId& y) const;
};

std::vector<std::string> account_post_classes(const Dataset& d,
                                              const NormalizedCorpus& corpus,
                                              const AccountId& x);

// The five scalar functions.
double common_posts(const std::vector<std::string>& x_classes,
                    const std::vector<std::string>& y_classes);
double bag_of_words(const std::vector<std::string>& x_vocab,
                    const std::vector<std::string>& y_vocab);
double topic_distr(const std::vector<double>& x_vec,
                   const std::vector<double>& y_vec);
double profile_prop(const std::vector<double>& x_vec,
                    const std::vector<double>& y_vec);
double behavior_prop(const std::vector<double>& x_vec,
                     const std::vector<double>& y_vec);

struct SimilarityMatrix {
  SimilarityKind kind = SimilarityKind::BagOfWords;
  std::vector<AccountId> ids;  // sorted
  std::unordered_map<AccountId, std::size_t> index;
  std::vector<double> values;  // dense n x n, symmetric

  double at(const AccountId& x, const AccountId& y) const;
  double at_index(std::size_t i, std::size_t j) const {
    return values[i * ids.size() + j];
  }
  std::size_t size() const { return ids.size(); }
};

// Full symmetric matrix over `ids`; fill is parallel over the upper
// triangle. Missing signatures raise ConfigError naming the kind.
SimilarityMatrix pairwise_matrix(const AccountSignatures& sig,
                                 SimilarityKind kind,
                                 const std::vector<AccountId>& ids,
                                 int threads = 1);

void save_similarity_matrix(const SimilarityMatrix& m, const std::string& path,
                            std::uint64_t config_hash);
std::optional<SimilarityMatrix> load_similarity_matrix(
    const std::string& path, std::uint64_t expected_hash);

}  // namespace authlab
