#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "authlab/corpus.hpp"

namespace authlab {

// Hashtags, URLs and mentions found by scanning raw post text; used at load
// time when the input records omit the explicit entity arrays.
struct EntityScan {
  std::vector<std::string> hashtags;
  std::vector<std::string> urls;
  std::vector<std::string> mentions;
};

EntityScan scan_entities(const std::string& text);

struct TextprocConfig {
  std::set<std::string> stopwords;      // defaults to the bundled English list
  std::string stemmer = "english";      // "english" | "none"
  bool strip_retweet_marker = true;     // drop a leading "RT @user:"
  bool keep_mentions = false;           // mentions are addressing, not vocabulary

  std::string cache_key() const;
};

// Bundled English stop-word list (~180 entries).
const std::set<std::string>& builtin_stopwords();
std::set<std::string> load_stopwords_file(const std::string& path);
TextprocConfig default_textproc_config();

struct NormalizedPost {
  PostId post_id;
  // Ordered content tokens: stemmed words plus verbatim hashtags/URLs.
  // Stop words and mentions never appear here.
  std::vector<std::string> tokens;
  // Distinct terms; this is the account-vocabulary contribution W(p).
  std::set<std::string> terms;
  // Injective encoding of the sorted token multiset. Two posts are equal
  // exactly when their keys compare equal.
  std::string canonical_key;
};

struct Vocabulary {
  AccountId account_id;
  std::set<std::string> terms;
};

NormalizedPost normalize_post(const Post& p, const TextprocConfig& config);

bool posts_equal(const NormalizedPost& a, const NormalizedPost& b);

// Every post of the dataset, normalized. Parallel across posts.
struct NormalizedCorpus {
  std::map<PostId, NormalizedPost> posts;

  const NormalizedPost& post(const PostId& id) const;
};

NormalizedCorpus normalize_dataset(const Dataset& d, const TextprocConfig& config,
                                   int threads = 1);

Vocabulary vocabulary_of(const Dataset& d, const NormalizedCorpus& corpus,
                         const AccountId& x);

std::string canonical_key_of(const std::vector<std::string>& tokens);

}  // namespace authlab
