#include "authlab/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "authlab/errors.hpp"
#include "authlab/log.hpp"
#include "authlab/textproc.hpp"

namespace authlab {

using nlohmann::json;

std::string label_to_string(Label label) {
  switch (label) {
    case Label::Abuser:
      return "abuser";
    case Label::Legitimate:
      return "legitimate";
    case Label::Unlabeled:
      return "unlabeled";
  }
  return "unlabeled";
}

Label label_from_string(const std::string& s) {
  if (s == "abuser") return Label::Abuser;
  if (s == "legitimate") return Label::Legitimate;
  if (s == "unlabeled") return Label::Unlabeled;
  throw DataError("unknown label: '" + s + "'");
}

const Account& Dataset::account(const AccountId& id) const {
  auto it = accounts.find(id);
  if (it == accounts.end()) throw NotFoundError("unknown account id: " + id);
  return it->second;
}

const Post& Dataset::post(const PostId& id) const {
  auto it = posts.find(id);
  if (it == posts.end()) throw NotFoundError("unknown post id: " + id);
  return it->second;
}

namespace {

std::int64_t get_count(const json& obj, const char* key, std::size_t line_no,
                       const std::string& path) {
  if (!obj.contains(key)) {
    throw DataError(path + ":" + std::to_string(line_no) + ": missing key '" +
                    key + "'");
  }
  std::int64_t v = obj.at(key).get<std::int64_t>();
  if (v < 0) {
    throw DataError(path + ":" + std::to_string(line_no) + ": key '" + key +
                    "' must be >= 0");
  }
  return v;
}

Account parse_account(const json& obj, std::size_t line_no,
                      const std::string& path) {
  Account a;
  if (!obj.contains("id") || !obj.at("id").is_string()) {
    throw DataError(path + ":" + std::to_string(line_no) +
                    ": account record needs a string 'id'");
  }
  a.id = obj.at("id").get<std::string>();
  a.label = obj.contains("label")
                ? label_from_string(obj.at("label").get<std::string>())
                : Label::Unlabeled;
  a.profile.age_days = get_count(obj, "age_days", line_no, path);
  a.profile.followers = get_count(obj, "followers", line_no, path);
  a.profile.friends = get_count(obj, "friends", line_no, path);
  a.profile.statuses_total = get_count(obj, "statuses_total", line_no, path);
  a.profile.default_profile = obj.value("default_profile", false);
  a.profile.default_image = obj.value("default_image", false);
  a.profile.listed_count = get_count(obj, "listed_count", line_no, path);
  a.profile.verified = obj.value("verified", false);
  a.profile.screen_name_length =
      get_count(obj, "screen_name_length", line_no, path);
  return a;
}

std::vector<std::string> get_string_array(const json& obj, const char* key) {
  std::vector<std::string> out;
  if (!obj.contains(key)) return out;
  for (const auto& item : obj.at(key)) out.push_back(item.get<std::string>());
  return out;
}

Post parse_post(const json& obj, std::size_t line_no, const std::string& path,
                std::size_t* missing_timestamp) {
  Post p;
  if (!obj.contains("id") || !obj.at("id").is_string()) {
    throw DataError(path + ":" + std::to_string(line_no) +
                    ": post record needs a string 'id'");
  }
  p.id = obj.at("id").get<std::string>();
  if (!obj.contains("author_id") || !obj.at("author_id").is_string()) {
    throw DataError(path + ":" + std::to_string(line_no) +
                    ": post record needs a string 'author_id'");
  }
  p.author_id = obj.at("author_id").get<std::string>();
  p.text = obj.value("text", std::string());
  if (obj.contains("timestamp")) {
    p.timestamp = obj.at("timestamp").get<std::int64_t>();
  } else {
    p.timestamp = 0;
    ++*missing_timestamp;
  }
  p.is_retweet = obj.value("is_retweet", false);
  p.retweet_count = obj.contains("retweet_count")
                        ? get_count(obj, "retweet_count", line_no, path)
                        : 0;
  const bool has_entities = obj.contains("hashtags") || obj.contains("urls") ||
                            obj.contains("mentions");
  if (has_entities) {
    p.hashtags = get_string_array(obj, "hashtags");
    p.urls = get_string_array(obj, "urls");
    p.mentions = get_string_array(obj, "mentions");
    for (auto& h : p.hashtags) {
      if (h.empty() || h[0] != '#') h = "#" + h;
    }
    for (auto& m : p.mentions) {
      if (m.empty() || m[0] != '@') m = "@" + m;
    }
  } else {
    const EntityScan scan = scan_entities(p.text);
    p.hashtags = scan.hashtags;
    p.urls = scan.urls;
    p.mentions = scan.mentions;
  }
  return p;
}

// Parses one jsonl file, invoking handler(obj, line_no) per non-empty line.
template <typename Handler>
void for_each_record(const std::string& path, Handler&& handler) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": malformed JSON: " + e.what());
    }
    if (!obj.is_object()) {
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": expected a JSON object");
    }
    handler(obj, line_no);
  }
}

void sort_author_index(Dataset& d) {
  for (auto& [id, post_ids] : d.posts_by_author) {
    std::sort(post_ids.begin(), post_ids.end(),
              [&](const PostId& a, const PostId& b) {
                const Post& pa = d.posts.at(a);
                const Post& pb = d.posts.at(b);
                if (pa.timestamp != pb.timestamp)
                  return pa.timestamp < pb.timestamp;
                return a < b;
              });
  }
}

}  // namespace

Dataset load_dataset(const std::string& accounts_path,
                     const std::string& posts_path) {
  Dataset d;
  d.manifest.accounts_path = accounts_path;
  d.manifest.posts_path = posts_path;

  for_each_record(accounts_path, [&](const json& obj, std::size_t line_no) {
    Account a = parse_account(obj, line_no, accounts_path);
    if (d.accounts.count(a.id)) {
      throw DataError(accounts_path + ":" + std::to_string(line_no) +
                      ": duplicate account id '" + a.id + "'");
    }
    d.posts_by_author[a.id] = {};
    d.accounts.emplace(a.id, std::move(a));
  });

  for_each_record(posts_path, [&](const json& obj, std::size_t line_no) {
    Post p = parse_post(obj, line_no, posts_path,
                        &d.manifest.n_missing_timestamp);
    if (d.posts.count(p.id)) {
      throw DataError(posts_path + ":" + std::to_string(line_no) +
                      ": duplicate post id '" + p.id + "'");
    }
    if (!d.accounts.count(p.author_id)) {
      ++d.manifest.n_skipped_unknown_author;
      log_warn(posts_path + ":" + std::to_string(line_no) + ": post '" + p.id +
               "' references unknown account '" + p.author_id + "', skipped");
      return;
    }
    d.posts_by_author[p.author_id].push_back(p.id);
    d.posts.emplace(p.id, std::move(p));
  });

  sort_author_index(d);
  d.manifest.n_accounts = d.accounts.size();
  d.manifest.n_posts = d.posts.size();
  if (d.manifest.n_missing_timestamp > 0) {
    log_warn(std::to_string(d.manifest.n_missing_timestamp) +
             " posts had no timestamp; defaulted to 0");
  }
  std::ostringstream report;
  report << "loaded " << d.manifest.n_accounts << " accounts, "
         << d.manifest.n_posts << " posts, skipped "
         << d.manifest.n_skipped_unknown_author << " records";
  log_info(report.str());
  return d;
}

std::vector<const Post*> posts_of(const Dataset& d, const AccountId& x) {
  auto it = d.posts_by_author.find(x);
  if (it == d.posts_by_author.end()) {
    throw NotFoundError("unknown account id: " + x);
  }
  std::vector<const Post*> out;
  out.reserve(it->second.size());
  for (const PostId& pid : it->second) out.push_back(&d.posts.at(pid));
  return out;
}

const Account& author_of(const Dataset& d, const PostId& p) {
  return d.account(d.post(p).author_id);
}

Dataset filter_min_posts(const Dataset& d, std::size_t min_posts) {
  Dataset out;
  out.manifest = d.manifest;
  for (const auto& [id, account] : d.accounts) {
    const auto& post_ids = d.posts_by_author.at(id);
    if (post_ids.size() < min_posts) continue;
    out.accounts.emplace(id, account);
    out.posts_by_author[id] = post_ids;
    for (const PostId& pid : post_ids) out.posts.emplace(pid, d.posts.at(pid));
  }
  out.manifest.n_accounts = out.accounts.size();
  out.manifest.n_posts = out.posts.size();
  return out;
}

std::vector<AccountId> labeled_ids(const Dataset& d) {
  std::vector<AccountId> out;
  for (const auto& [id, account] : d.accounts) {
    if (account.label != Label::Unlabeled) out.push_back(id);
  }
  return out;
}

void save_dataset_jsonl(const Dataset& d, const std::string& accounts_path,
                        const std::string& posts_path) {
  std::ofstream acc(accounts_path);
  if (!acc) throw DataError("cannot write " + accounts_path);
  for (const auto& [id, a] : d.accounts) {
    json obj{{"id", a.id},
             {"label", label_to_string(a.label)},
             {"age_days", a.profile.age_days},
             {"followers", a.profile.followers},
             {"friends", a.profile.friends},
             {"statuses_total", a.profile.statuses_total},
             {"default_profile", a.profile.default_profile},
             {"default_image", a.profile.default_image},
             {"listed_count", a.profile.listed_count},
             {"verified", a.profile.verified},
             {"screen_name_length", a.profile.screen_name_length}};
    acc << obj.dump() << "\n";
  }
  std::ofstream posts(posts_path);
  if (!posts) throw DataError("cannot write " + posts_path);
  for (const auto& [id, p] : d.posts) {
    json obj{{"id", p.id},
             {"author_id", p.author_id},
             {"text", p.text},
             {"timestamp", p.timestamp},
             {"is_retweet", p.is_retweet},
             {"retweet_count", p.retweet_count},
             {"hashtags", p.hashtags},
             {"urls", p.urls},
             {"mentions", p.mentions}};
    posts << obj.dump() << "\n";
  }
}

}  // namespace authlab
