#include "authlab/features.hpp"

#include <algorithm>
#include <set>

#include "authlab/errors.hpp"

namespace authlab {

const std::array<const char*, kProfileFeatureCount>& profile_feature_names() {
  static const std::array<const char*, kProfileFeatureCount> names = {
      "age_days",
      "followers",
      "friends",
      "friend_follower_ratio",
      "statuses_total",
      "default_profile",
      "default_image",
      "listed_count",
      "verified",
      "screen_name_length",
      "avg_minutes_between_posts",
      "avg_posts_per_lifetime_day",
      "avg_posts_per_active_day",
      "retweets_received"};
  return names;
}

const std::array<const char*, kBehaviorFeatureCount>& behavior_feature_names() {
  static const std::array<const char*, kBehaviorFeatureCount> names = {
      "total_retweets", "avg_retweets",      "avg_hashtags",
      "avg_hyperlinks", "avg_user_mentions", "avg_post_length"};
  return names;
}

namespace {

// UTC day index; timestamps may predate the epoch in odd fixtures.
std::int64_t day_of(std::int64_t timestamp) {
  if (timestamp >= 0) return timestamp / 86400;
  return (timestamp - 86399) / 86400;
}

std::size_t codepoint_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

}  // namespace

ProfileFeatureVector extract_profile_features(
    const Account& a, const std::vector<const Post*>& posts) {
  const ProfileRaw& p = a.profile;
  ProfileFeatureVector v{};
  v[0] = static_cast<double>(p.age_days);
  v[1] = static_cast<double>(p.followers);
  v[2] = static_cast<double>(p.friends);
  v[3] = safe_div(static_cast<double>(p.friends),
                  static_cast<double>(p.followers));
  v[4] = static_cast<double>(p.statuses_total);
  v[5] = p.default_profile ? 1.0 : 0.0;
  v[6] = p.default_image ? 1.0 : 0.0;
  v[7] = static_cast<double>(p.listed_count);
  v[8] = p.verified ? 1.0 : 0.0;
  v[9] = static_cast<double>(p.screen_name_length);

  // Gaps between consecutive posts; posts arrive timestamp-sorted.
  if (posts.size() >= 2) {
    double total_gap_seconds = 0.0;
    for (std::size_t i = 1; i < posts.size(); ++i) {
      total_gap_seconds +=
          static_cast<double>(posts[i]->timestamp - posts[i - 1]->timestamp);
    }
    v[10] = total_gap_seconds / static_cast<double>(posts.size() - 1) / 60.0;
  } else {
    v[10] = 0.0;
  }

  const double n_posts = static_cast<double>(posts.size());
  v[11] = n_posts / static_cast<double>(std::max<std::int64_t>(p.age_days, 1));

  if (!posts.empty()) {
    std::set<std::int64_t> active_days;
    for (const Post* post : posts) active_days.insert(day_of(post->timestamp));
    v[12] = n_posts / static_cast<double>(active_days.size());
  } else {
    v[12] = 0.0;
  }

  double retweets_received = 0.0;
  for (const Post* post : posts) {
    retweets_received += static_cast<double>(post->retweet_count);
  }
  v[13] = retweets_received;
  return v;
}

BehaviorFeatureVector extract_behavior_features(
    const Account&, const std::vector<const Post*>& posts) {
  BehaviorFeatureVector v{};
  if (posts.empty()) return v;

  double retweet_posts = 0.0;
  double hashtags = 0.0;
  double urls = 0.0;
  double mentions = 0.0;
  double length = 0.0;
  for (const Post* post : posts) {
    if (post->is_retweet) retweet_posts += 1.0;
    hashtags += static_cast<double>(post->hashtags.size());
    urls += static_cast<double>(post->urls.size());
    mentions += static_cast<double>(post->mentions.size());
    length += static_cast<double>(codepoint_count(post->text));
  }
  const double n = static_cast<double>(posts.size());
  v[0] = retweet_posts;
  v[1] = retweet_posts / n;
  v[2] = hashtags / n;
  v[3] = urls / n;
  v[4] = mentions / n;
  v[5] = length / n;
  return v;
}

MinMaxNormalizer MinMaxNormalizer::fit(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw DataError("normalizer: need at least one vector");
  const std::size_t dims = rows[0].size();
  MinMaxNormalizer n;
  n.min_ = rows[0];
  n.max_ = rows[0];
  for (const auto& row : rows) {
    if (row.size() != dims) {
      throw DataError("normalizer: inconsistent vector dimensions");
    }
    for (std::size_t i = 0; i < dims; ++i) {
      n.min_[i] = std::min(n.min_[i], row[i]);
      n.max_[i] = std::max(n.max_[i], row[i]);
    }
  }
  return n;
}

std::vector<double> MinMaxNormalizer::apply(
    const std::vector<double>& v) const {
  if (v.size() != min_.size()) {
    throw DataError("normalizer: dimension mismatch");
  }
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double span = max_[i] - min_[i];
    if (span == 0.0) {
      out[i] = 0.0;
    } else {
      out[i] = std::clamp((v[i] - min_[i]) / span, 0.0, 1.0);
    }
  }
  return out;
}

}  // namespace authlab
