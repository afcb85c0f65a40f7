#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace authlab {

using AccountId = std::string;
using PostId = std::string;

enum class Label { Abuser, Legitimate, Unlabeled };

std::string label_to_string(Label label);
// Accepts "abuser" | "legitimate" | "unlabeled"; throws DataError otherwise.
Label label_from_string(const std::string& s);

struct ProfileRaw {
  std::int64_t age_days = 0;
  std::int64_t followers = 0;
  std::int64_t friends = 0;
  std::int64_t statuses_total = 0;
  bool default_profile = false;
  bool default_image = false;
  std::int64_t listed_count = 0;
  bool verified = false;
  std::int64_t screen_name_length = 0;
};

struct Account {
  AccountId id;
  Label label = Label::Unlabeled;
  ProfileRaw profile;
};

struct Post {
  PostId id;
  AccountId author_id;
  std::string text;
  std::int64_t timestamp = 0;  // UTC epoch seconds
  bool is_retweet = false;
  std::int64_t retweet_count = 0;
  std::vector<std::string> hashtags;  // '#'-prefixed
  std::vector<std::string> urls;
  std::vector<std::string> mentions;  // '@'-prefixed
};

struct LoadManifest {
  std::string accounts_path;
  std::string posts_path;
  std::size_t n_accounts = 0;
  std::size_t n_posts = 0;
  std::size_t n_skipped_unknown_author = 0;
  std::size_t n_missing_timestamp = 0;
};

// Immutable after load; ordered maps keep every iteration deterministic.
struct Dataset {
  std::map<AccountId, Account> accounts;
  std::map<PostId, Post> posts;
  // Post ids per author, ordered by (timestamp, post id) ascending.
  std::map<AccountId, std::vector<PostId>> posts_by_author;
  LoadManifest manifest;

  const Account& account(const AccountId& id) const;
  const Post& post(const PostId& id) const;
};

// Reads accounts.jsonl and posts.jsonl (one object per line). Malformed lines
// and duplicate ids are hard errors naming the line/id; posts whose author is
// unknown are skipped and counted. Prints a one-line load report.
Dataset load_dataset(const std::string& accounts_path,
                     const std::string& posts_path);

// Posts authored by x, timestamp-ascending. Unknown id throws NotFoundError.
std::vector<const Post*> posts_of(const Dataset& d, const AccountId& x);

// The unique author of p. Unknown id throws NotFoundError.
const Account& author_of(const Dataset& d, const PostId& p);

// New dataset keeping only accounts with >= min_posts posts (and their posts).
Dataset filter_min_posts(const Dataset& d, std::size_t min_posts);

// Labeled account ids (Abuser or Legitimate), sorted.
std::vector<AccountId> labeled_ids(const Dataset& d);

void save_dataset_jsonl(const Dataset& d, const std::string& accounts_path,
                        const std::string& posts_path);

}  // namespace authlab
