#include "authlab/textproc.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "authlab/errors.hpp"
#include "authlab/parallel.hpp"
#include "authlab/stemmer.hpp"

namespace authlab {

namespace {

const char* kStopwordList[] = {
    "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you",
    "your", "yours", "yourself", "yourselves", "he", "him", "his", "himself",
    "she", "her", "hers", "herself", "it", "its", "itself", "they", "them",
    "their", "theirs", "themselves", "what", "which", "who", "whom", "this",
    "that", "these", "those", "am", "is", "are", "was", "were", "be", "been",
    "being", "have", "has", "had", "having", "do", "does", "did", "doing",
    "a", "an", "the", "and", "but", "if", "or", "because", "as", "until",
    "while", "of", "at", "by", "for", "with", "about", "against", "between",
    "into", "through", "during", "before", "after", "above", "below", "to",
    "from", "up", "down", "in", "out", "on", "off", "over", "under", "again",
    "further", "then", "once", "here", "there", "when", "where", "why",
    "how", "all", "any", "both", "each", "few", "more", "most", "other",
    "some", "such", "no", "nor", "not", "only", "own", "same", "so", "than",
    "too", "very", "s", "t", "can", "will", "just", "don", "should", "now",
    "d", "ll", "m", "o", "re", "ve", "y", "ain", "aren", "couldn", "didn",
    "doesn", "hadn", "hasn", "haven", "isn", "ma", "mightn", "mustn",
    "needn", "shan", "shouldn", "wasn", "weren", "won", "wouldn", "would",
    "could", "ought", "cannot", "also"};

bool is_space_byte(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// ASCII alnum plus any UTF-8 continuation/lead byte counts as word material,
// so non-English words pass through as opaque tokens.
bool is_word_byte(char c) {
  const unsigned char u = static_cast<unsigned char>(c);
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || u >= 0x80;
}

std::string lowercase_ascii(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool starts_with_url_scheme(const std::string& token) {
  return token.rfind("http://", 0) == 0 || token.rfind("https://", 0) == 0;
}

std::string trim_punct(const std::string& token) {
  static const std::string lead = "([{\"'";
  static const std::string trail = ")]}\"'.,!?;:";
  std::size_t b = 0;
  std::size_t e = token.size();
  while (b < e && lead.find(token[b]) != std::string::npos) ++b;
  while (e > b && trail.find(token[e - 1]) != std::string::npos) --e;
  return token.substr(b, e - b);
}

std::vector<std::string> whitespace_split(const std::string& text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space_byte(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space_byte(text[i])) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

}  // namespace

const std::set<std::string>& builtin_stopwords() {
  static const std::set<std::string> words(std::begin(kStopwordList),
                                           std::end(kStopwordList));
  return words;
}

std::set<std::string> load_stopwords_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open stopwords file: " + path);
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (!line.empty()) out.insert(lowercase_ascii(line));
  }
  return out;
}

TextprocConfig default_textproc_config() {
  TextprocConfig config;
  config.stopwords = builtin_stopwords();
  return config;
}

std::string TextprocConfig::cache_key() const {
  std::ostringstream os;
  os << "stemmer=" << stemmer << ";rt=" << strip_retweet_marker
     << ";mentions=" << keep_mentions << ";stopwords=" << stopwords.size();
  for (const auto& w : stopwords) os << "," << w;
  return os.str();
}

EntityScan scan_entities(const std::string& text) {
  EntityScan scan;
  for (const std::string& raw : whitespace_split(text)) {
    const std::string token = trim_punct(raw);
    if (token.empty()) continue;
    if (starts_with_url_scheme(lowercase_ascii(token))) {
      scan.urls.push_back(token);
    } else if (token[0] == '#' && token.size() > 1) {
      scan.hashtags.push_back(token);
    } else if (token[0] == '@' && token.size() > 1) {
      scan.mentions.push_back(token);
    }
  }
  return scan;
}

std::string canonical_key_of(const std::vector<std::string>& tokens) {
  std::vector<std::string> sorted = tokens;
  std::sort(sorted.begin(), sorted.end());
  std::string key;
  for (const auto& t : sorted) {
    key += std::to_string(t.size());
    key += ':';
    key += t;
  }
  return key;
}

NormalizedPost normalize_post(const Post& p, const TextprocConfig& config) {
  if (config.stemmer != "english" && config.stemmer != "none") {
    throw ConfigError("unknown stemmer language tag: " + config.stemmer);
  }
  const bool stem = config.stemmer == "english";

  std::set<std::string> known_urls;
  for (const auto& u : p.urls) known_urls.insert(lowercase_ascii(u));

  NormalizedPost out;
  out.post_id = p.id;

  std::vector<std::string> raw = whitespace_split(lowercase_ascii(p.text));
  std::size_t start = 0;
  if (config.strip_retweet_marker && raw.size() >= 2 && raw[0] == "rt" &&
      raw[1].size() > 1 && raw[1][0] == '@') {
    start = 2;
  }

  for (std::size_t i = start; i < raw.size(); ++i) {
    const std::string token = trim_punct(raw[i]);
    if (token.empty()) continue;
    if (starts_with_url_scheme(token) || known_urls.count(token)) {
      out.tokens.push_back(token);
      continue;
    }
    if (token[0] == '#' && token.size() > 1) {
      out.tokens.push_back(token);
      continue;
    }
    if (token[0] == '@') {
      if (config.keep_mentions && token.size() > 1) out.tokens.push_back(token);
      continue;
    }
    // Plain text: split into word chunks and stem each.
    std::size_t j = 0;
    while (j < token.size()) {
      while (j < token.size() && !is_word_byte(token[j])) ++j;
      std::size_t chunk_start = j;
      while (j < token.size() && is_word_byte(token[j])) ++j;
      if (j == chunk_start) continue;
      std::string word = token.substr(chunk_start, j - chunk_start);
      if (config.stopwords.count(word)) continue;
      out.tokens.push_back(stem ? porter_stem(word) : word);
    }
  }

  out.terms.insert(out.tokens.begin(), out.tokens.end());
  out.canonical_key = canonical_key_of(out.tokens);
  return out;
}

bool posts_equal(const NormalizedPost& a, const NormalizedPost& b) {
  return a.canonical_key == b.canonical_key;
}

const NormalizedPost& NormalizedCorpus::post(const PostId& id) const {
  auto it = posts.find(id);
  if (it == posts.end()) throw NotFoundError("no normalized post: " + id);
  return it->second;
}

NormalizedCorpus normalize_dataset(const Dataset& d,
                                   const TextprocConfig& config, int threads) {
  if (config.stemmer != "english" && config.stemmer != "none") {
    throw ConfigError("unknown stemmer language tag: " + config.stemmer);
  }
  std::vector<const Post*> posts;
  posts.reserve(d.posts.size());
  for (const auto& [id, post] : d.posts) posts.push_back(&post);

  std::vector<NormalizedPost> normalized(posts.size());
  parallel_for(posts.size(), threads, [&](std::size_t i) {
    normalized[i] = normalize_post(*posts[i], config);
  });

  NormalizedCorpus corpus;
  for (auto& np : normalized) {
    PostId id = np.post_id;
    corpus.posts.emplace(std::move(id), std::move(np));
  }
  return corpus;
}

Vocabulary vocabulary_of(const Dataset& d, const NormalizedCorpus& corpus,
                         const AccountId& x) {
  auto it = d.posts_by_author.find(x);
  if (it == d.posts_by_author.end()) {
    throw NotFoundError("unknown account id: " + x);
  }
  Vocabulary vocab;
  vocab.account_id = x;
  for (const PostId& pid : it->second) {
    const NormalizedPost& np = corpus.post(pid);
    vocab.terms.insert(np.terms.begin(), np.terms.end());
  }
  return vocab;
}

}  // namespace authlab
