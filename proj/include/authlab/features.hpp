#pragma once

#include <array>
#include <string>
#include <vector>

#include "authlab/corpus.hpp"

namespace authlab {

inline constexpr std::size_t kProfileFeatureCount = 14;
inline constexpr std::size_t kBehaviorFeatureCount = 6;

// Fixed orders; serialization and normalization rely on them.
using ProfileFeatureVector = std::array<double, kProfileFeatureCount>;
using BehaviorFeatureVector = std::array<double, kBehaviorFeatureCount>;

const std::array<const char*, kProfileFeatureCount>& profile_feature_names();
const std::array<const char*, kBehaviorFeatureCount>& behavior_feature_names();

// Denominator 0 counts as 1 so no extractor ever emits NaN or Inf.
inline double safe_div(double num, double den) {
  return den == 0.0 ? num : num / den;
}

// Order: age_days, followers, friends, friend_follower_ratio,
// statuses_total, default_profile, default_image, listed_count, verified,
// screen_name_length, avg_minutes_between_posts, avg_posts_per_lifetime_day,
// avg_posts_per_active_day, retweets_received.
ProfileFeatureVector extract_profile_features(
    const Account& a, const std::vector<const Post*>& posts);

// Order: total_retweets, avg_retweets, avg_hashtags, avg_hyperlinks,
// avg_user_mentions, avg_post_length. Retweet counts here describe the
// account's own retweeting activity (posts flagged is_retweet), as opposed
// to the profile vector's retweets_received.
BehaviorFeatureVector extract_behavior_features(
    const Account& a, const std::vector<const Post*>& posts);

// Per-dimension min-max scaling to [0,1]; constant dimensions map to 0.
// apply() clamps, so vectors outside the fitted span stay in range.
class MinMaxNormalizer {
 public:
  static MinMaxNormalizer fit(const std::vector<std::vector<double>>& rows);
  std::vector<double> apply(const std::vector<double>& v) const;
  std::size_t dims() const { return min_.size(); }

 private:
  std::vector<double> min_;
  std::vector<double> max_;
};

}  // namespace authlab
