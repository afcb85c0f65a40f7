#include "authlab/topics.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

#include "authlab/errors.hpp"
#include "authlab/log.hpp"
#include "authlab/parallel.hpp"
#include "authlab/rng.hpp"

namespace authlab {

namespace {

struct GibbsDocs {
  std::vector<std::vector<int>> docs;  // term ids, OOV dropped
};

std::map<std::string, std::int64_t> term_frequencies(
    const NormalizedCorpus& corpus) {
  std::map<std::string, std::int64_t> freq;
  for (const auto& [id, np] : corpus.posts) {
    for (const auto& t : np.tokens) ++freq[t];
  }
  return freq;
}

GibbsDocs build_documents(const Dataset& d, const NormalizedCorpus& corpus,
                          const std::map<std::string, int>& term_index,
                          bool account_documents) {
  GibbsDocs out;
  auto to_ids = [&](const std::vector<std::string>& tokens,
                    std::vector<int>* ids) {
    for (const auto& t : tokens) {
      auto it = term_index.find(t);
      if (it != term_index.end()) ids->push_back(it->second);
    }
  };
  if (account_documents) {
    for (const auto& [aid, post_ids] : d.posts_by_author) {
      std::vector<int> ids;
      for (const PostId& pid : post_ids) to_ids(corpus.post(pid).tokens, &ids);
      if (!ids.empty()) out.docs.push_back(std::move(ids));
    }
  } else {
    for (const auto& [pid, np] : corpus.posts) {
      std::vector<int> ids;
      to_ids(np.tokens, &ids);
      if (!ids.empty()) out.docs.push_back(std::move(ids));
    }
  }
  return out;
}

int sample_from_weights(const std::vector<double>& weights, double total,
                        Rng* rng) {
  const double target = rng->next_double() * total;
  double cum = 0.0;
  const int n = static_cast<int>(weights.size());
  for (int i = 0; i < n; ++i) {
    cum += weights[static_cast<std::size_t>(i)];
    if (target < cum) return i;
  }
  return n - 1;
}

}  // namespace

TopicModel fit_lda(const Dataset& d, const NormalizedCorpus& corpus,
                   const LdaParams& params) {
  if (params.k < 1) throw ConfigError("lda: k must be >= 1");
  if (params.iterations < 1) throw ConfigError("lda: iterations must be >= 1");

  TopicModel model;
  model.k = params.k;
  model.alpha = params.resolved_alpha();
  model.beta = params.beta;
  model.seed = params.seed;
  model.iterations = params.iterations;

  for (const auto& [term, freq] : term_frequencies(corpus)) {
    if (freq >= params.min_term_freq) {
      model.term_index.emplace(term, static_cast<int>(model.vocab.size()));
      model.vocab.push_back(term);
    }
  }
  const int v = static_cast<int>(model.vocab.size());
  if (v == 0) {
    throw DataError("lda: corpus is empty after normalization");
  }
  if (params.k > v) {
    log_warn("lda: k (" + std::to_string(params.k) +
             ") exceeds distinct term count (" + std::to_string(v) +
             "); proceeding");
  }

  GibbsDocs gibbs =
      build_documents(d, corpus, model.term_index, params.account_documents);
  if (gibbs.docs.empty()) {
    throw DataError("lda: corpus is empty after normalization");
  }

  const int k = params.k;
  const double alpha = model.alpha;
  const double beta = model.beta;
  const double v_beta = static_cast<double>(v) * beta;

  std::vector<std::int64_t> n_dk(gibbs.docs.size() * static_cast<std::size_t>(k), 0);
  std::vector<std::int64_t> n_kv(static_cast<std::size_t>(k) * static_cast<std::size_t>(v), 0);
  std::vector<std::int64_t> n_k(static_cast<std::size_t>(k), 0);
  std::vector<std::vector<int>> z(gibbs.docs.size());

  Rng rng(params.seed);
  std::int64_t total_tokens = 0;
  for (std::size_t di = 0; di < gibbs.docs.size(); ++di) {
    const auto& doc = gibbs.docs[di];
    z[di].resize(doc.size());
    for (std::size_t ti = 0; ti < doc.size(); ++ti) {
      const int topic = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k)));
      z[di][ti] = topic;
      ++n_dk[di * static_cast<std::size_t>(k) + static_cast<std::size_t>(topic)];
      ++n_kv[static_cast<std::size_t>(topic) * static_cast<std::size_t>(v) +
             static_cast<std::size_t>(doc[ti])];
      ++n_k[static_cast<std::size_t>(topic)];
      ++total_tokens;
    }
  }

  std::vector<double> weights(static_cast<std::size_t>(k));
  for (int sweep = 0; sweep < params.iterations; ++sweep) {
    for (std::size_t di = 0; di < gibbs.docs.size(); ++di) {
      const auto& doc = gibbs.docs[di];
      std::int64_t* doc_counts = &n_dk[di * static_cast<std::size_t>(k)];
      for (std::size_t ti = 0; ti < doc.size(); ++ti) {
        const int term = doc[ti];
        const int old_topic = z[di][ti];
        --doc_counts[old_topic];
        --n_kv[static_cast<std::size_t>(old_topic) * static_cast<std::size_t>(v) +
               static_cast<std::size_t>(term)];
        --n_k[static_cast<std::size_t>(old_topic)];

        double total = 0.0;
        for (int topic = 0; topic < k; ++topic) {
          const double w =
              (static_cast<double>(doc_counts[topic]) + alpha) *
              (static_cast<double>(
                   n_kv[static_cast<std::size_t>(topic) * static_cast<std::size_t>(v) +
                        static_cast<std::size_t>(term)]) +
               beta) /
              (static_cast<double>(n_k[static_cast<std::size_t>(topic)]) + v_beta);
          weights[static_cast<std::size_t>(topic)] = w;
          total += w;
        }
        const int new_topic = sample_from_weights(weights, total, &rng);
        z[di][ti] = new_topic;
        ++doc_counts[new_topic];
        ++n_kv[static_cast<std::size_t>(new_topic) * static_cast<std::size_t>(v) +
               static_cast<std::size_t>(term)];
        ++n_k[static_cast<std::size_t>(new_topic)];
      }
    }
  }

  model.term_topic.resize(static_cast<std::size_t>(k) * static_cast<std::size_t>(v));
  for (int topic = 0; topic < k; ++topic) {
    const double denom = static_cast<double>(n_k[static_cast<std::size_t>(topic)]) + v_beta;
    for (int term = 0; term < v; ++term) {
      model.term_topic[static_cast<std::size_t>(topic) * static_cast<std::size_t>(v) +
                       static_cast<std::size_t>(term)] =
          (static_cast<double>(
               n_kv[static_cast<std::size_t>(topic) * static_cast<std::size_t>(v) +
                    static_cast<std::size_t>(term)]) +
           beta) /
          denom;
    }
  }
  model.topic_token_counts = n_k;
  model.total_tokens = total_tokens;
  return model;
}

PostTopicDistribution infer_post_topics(const TopicModel& m,
                                        const NormalizedPost& p,
                                        int fold_in_iterations,
                                        std::uint64_t seed) {
  PostTopicDistribution dist;
  dist.post_id = p.post_id;
  const int k = m.k;
  dist.probs.assign(static_cast<std::size_t>(k), 0.0);

  std::vector<int> ids;
  for (const auto& t : p.tokens) {
    auto it = m.term_index.find(t);
    if (it != m.term_index.end()) ids.push_back(it->second);
  }
  if (ids.empty()) {
    const double u = 1.0 / static_cast<double>(k);
    for (auto& x : dist.probs) x = u;
    return dist;
  }

  Rng rng(seed);
  std::vector<std::int64_t> local(static_cast<std::size_t>(k), 0);
  std::vector<int> z(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const int topic = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k)));
    z[i] = topic;
    ++local[static_cast<std::size_t>(topic)];
  }
  std::vector<double> weights(static_cast<std::size_t>(k));
  for (int sweep = 0; sweep < fold_in_iterations; ++sweep) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const int term = ids[i];
      --local[static_cast<std::size_t>(z[i])];
      double total = 0.0;
      for (int topic = 0; topic < k; ++topic) {
        const double w = m.phi(topic, term) *
                         (static_cast<double>(local[static_cast<std::size_t>(topic)]) +
                          m.alpha);
        weights[static_cast<std::size_t>(topic)] = w;
        total += w;
      }
      const int new_topic = sample_from_weights(weights, total, &rng);
      z[i] = new_topic;
      ++local[static_cast<std::size_t>(new_topic)];
    }
  }
  const double denom =
      static_cast<double>(ids.size()) + static_cast<double>(k) * m.alpha;
  for (int topic = 0; topic < k; ++topic) {
    dist.probs[static_cast<std::size_t>(topic)] =
        (static_cast<double>(local[static_cast<std::size_t>(topic)]) + m.alpha) /
        denom;
  }
  return dist;
}

std::map<PostId, PostTopicDistribution> infer_all_posts(
    const TopicModel& m, const NormalizedCorpus& corpus,
    int fold_in_iterations, std::uint64_t seed, int threads) {
  std::vector<const NormalizedPost*> posts;
  posts.reserve(corpus.posts.size());
  for (const auto& [id, np] : corpus.posts) posts.push_back(&np);

  std::vector<PostTopicDistribution> dists(posts.size());
  parallel_for(posts.size(), threads, [&](std::size_t i) {
    dists[i] = infer_post_topics(m, *posts[i], fold_in_iterations,
                                 derive_seed(seed, posts[i]->post_id));
  });
  std::map<PostId, PostTopicDistribution> out;
  for (auto& dist : dists) {
    PostId id = dist.post_id;
    out.emplace(std::move(id), std::move(dist));
  }
  return out;
}

AccountTopicVector account_topic_vector(
    const Dataset& d, const std::map<PostId, PostTopicDistribution>& dists,
    int k, const AccountId& x) {
  auto it = d.posts_by_author.find(x);
  if (it == d.posts_by_author.end()) {
    throw NotFoundError("unknown account id: " + x);
  }
  if (it->second.empty()) {
    throw DataError("account '" + x +
                    "' has no posts; filter the dataset before computing "
                    "topic vectors");
  }
  AccountTopicVector vec;
  vec.account_id = x;
  vec.probs.assign(static_cast<std::size_t>(k), 0.0);
  for (const PostId& pid : it->second) {
    auto dit = dists.find(pid);
    if (dit == dists.end()) {
      throw DataError("no topic distribution for post '" + pid + "'");
    }
    for (int i = 0; i < k; ++i) {
      vec.probs[static_cast<std::size_t>(i)] +=
          dit->second.probs[static_cast<std::size_t>(i)];
    }
  }
  const double n = static_cast<double>(it->second.size());
  for (auto& p : vec.probs) p /= n;
  return vec;
}

namespace {

constexpr char kModelMagic[8] = {'A', 'L', 'D', 'A', 'M', 'D', 'L', '1'};

template <typename T>
void write_pod(std::ofstream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
bool read_pod(std::ifstream& in, T* value) {
  in.read(reinterpret_cast<char*>(value), sizeof(T));
  return in.good();
}

void write_string(std::ofstream& out, const std::string& s) {
  write_pod(out, static_cast<std::uint64_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

bool read_string(std::ifstream& in, std::string* s) {
  std::uint64_t len = 0;
  if (!read_pod(in, &len)) return false;
  if (len > (1ull << 32)) return false;
  s->resize(len);
  in.read(s->data(), static_cast<std::streamsize>(len));
  return in.good();
}

}  // namespace

void save_topic_model(const TopicModel& m, const std::string& path,
                      std::uint64_t config_hash) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write model file: " + path);
  out.write(kModelMagic, sizeof(kModelMagic));
  write_pod(out, config_hash);
  write_pod(out, static_cast<std::int64_t>(m.k));
  write_pod(out, m.alpha);
  write_pod(out, m.beta);
  write_pod(out, m.seed);
  write_pod(out, static_cast<std::int64_t>(m.iterations));
  write_pod(out, static_cast<std::uint64_t>(m.vocab.size()));
  for (const auto& term : m.vocab) write_string(out, term);
  out.write(reinterpret_cast<const char*>(m.term_topic.data()),
            static_cast<std::streamsize>(m.term_topic.size() * sizeof(double)));
  for (std::int64_t c : m.topic_token_counts) write_pod(out, c);
  write_pod(out, m.total_tokens);
  if (!out) throw DataError("failed writing model file: " + path);
}

bool load_topic_model(const std::string& path, std::uint64_t expected_hash,
                      TopicModel* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in.good() || std::memcmp(magic, kModelMagic, sizeof(magic)) != 0)
    return false;
  std::uint64_t hash = 0;
  if (!read_pod(in, &hash) || hash != expected_hash) return false;

  TopicModel m;
  std::int64_t k = 0;
  std::int64_t iterations = 0;
  std::uint64_t vocab_size = 0;
  if (!read_pod(in, &k) || !read_pod(in, &m.alpha) || !read_pod(in, &m.beta) ||
      !read_pod(in, &m.seed) || !read_pod(in, &iterations) ||
      !read_pod(in, &vocab_size)) {
    return false;
  }
  if (k < 1 || vocab_size == 0 || vocab_size > (1ull << 32)) return false;
  m.k = static_cast<int>(k);
  m.iterations = static_cast<int>(iterations);
  m.vocab.reserve(vocab_size);
  for (std::uint64_t i = 0; i < vocab_size; ++i) {
    std::string term;
    if (!read_string(in, &term)) return false;
    m.term_index.emplace(term, static_cast<int>(i));
    m.vocab.push_back(std::move(term));
  }
  m.term_topic.resize(static_cast<std::size_t>(m.k) * m.vocab.size());
  in.read(reinterpret_cast<char*>(m.term_topic.data()),
          static_cast<std::streamsize>(m.term_topic.size() * sizeof(double)));
  if (!in.good()) return false;
  m.topic_token_counts.resize(static_cast<std::size_t>(m.k));
  for (auto& c : m.topic_token_counts) {
    if (!read_pod(in, &c)) return false;
  }
  if (!read_pod(in, &m.total_tokens)) return false;
  *out = std::move(m);
  return true;
}

}  // namespace authlab
