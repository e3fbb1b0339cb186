#include "emm/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "emm/errors.hpp"
#include "emm/log.hpp"
#include "emm/rng.hpp"
#include "emm/textio.hpp"

namespace emm {

using nlohmann::json;
using nlohmann::ordered_json;

Instance Instance::from_counts(std::vector<std::pair<int, int>> c) {
    std::sort(c.begin(), c.end());
    Instance inst;
    inst.counts = std::move(c);
    for (std::size_t i = 0; i < inst.counts.size(); ++i) {
        if (inst.counts[i].second < 1)
            throw data_error("instance count must be >= 1");
        if (i > 0 && inst.counts[i].first == inst.counts[i - 1].first)
            throw data_error("duplicate feature index " + std::to_string(inst.counts[i].first) +
                             " within one instance");
        inst.total += inst.counts[i].second;
    }
    return inst;
}

void Corpus::validate() const {
    if (num_tags < 0 || num_features < 0)
        throw dimension_error("corpus dimensions must be nonnegative");
    for (const auto& ex : examples) {
        if (ex.instances.empty())
            throw dimension_error("example '" + ex.id + "' has no instances");
        for (int lbl : ex.labels)
            if (lbl < 0 || lbl >= num_tags)
                throw dimension_error("example '" + ex.id + "': label index " +
                                      std::to_string(lbl) + " out of range [0," +
                                      std::to_string(num_tags) + ")");
        for (const auto& inst : ex.instances)
            for (auto [d, x] : inst.counts) {
                if (d < 0 || d >= num_features)
                    throw dimension_error("example '" + ex.id + "': feature index " +
                                          std::to_string(d) + " out of range [0," +
                                          std::to_string(num_features) + ")");
                if (x < 1) throw data_error("example '" + ex.id + "': count must be >= 1");
            }
    }
}

void SynthConfig::validate() const {
    if (num_tags < 1 || num_features < 1 || num_examples < 1)
        throw data_error("synth: dimensions must be positive");
    if (m_min < 1 || m_max < m_min) throw data_error("synth: bad instance range");
    if (k_min < 0 || k_max < k_min) throw data_error("synth: bad count range");
    if (static_cast<int>(true_lambda.size()) != num_tags)
        throw dimension_error("synth: true_lambda length != num_tags");
    if (static_cast<int>(w_true.size()) != num_tags)
        throw dimension_error("synth: w_true length != num_tags");
    for (double l : true_lambda)
        if (!(l > 0.0)) throw data_error("synth: rates must be positive");
    if (!(beta_concentration > 0.0)) throw data_error("synth: beta concentration must be positive");
}

// ------------------------------------------------------------------ file I/O

namespace {

// Parses one line, rejecting duplicate object keys anywhere in the record.
json parse_line_strict(const std::string& line, int lineno) {
    std::vector<std::set<std::string>> stack;
    bool duplicate = false;
    std::string dup_key;
    json::parser_callback_t cb = [&](int, json::parse_event_t event, json& parsed) {
        if (event == json::parse_event_t::object_start) {
            stack.emplace_back();
        } else if (event == json::parse_event_t::object_end) {
            stack.pop_back();
        } else if (event == json::parse_event_t::key) {
            const auto key = parsed.get<std::string>();
            if (!stack.empty() && !stack.back().insert(key).second) {
                duplicate = true;
                dup_key = key;
            }
        }
        return true;
    };
    json j;
    try {
        j = json::parse(line, cb);
    } catch (const json::exception& e) {
        throw data_error("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (duplicate)
        throw data_error("line " + std::to_string(lineno) + ": duplicate key '" + dup_key + "'");
    return j;
}

int key_to_feature(const std::string& key, int lineno) {
    if (key.empty()) throw data_error("line " + std::to_string(lineno) + ": empty feature key");
    for (char c : key)
        if (c < '0' || c > '9')
            throw data_error("line " + std::to_string(lineno) + ": feature key '" + key +
                             "' is not a decimal index");
    return static_cast<int>(parse_int(key));
}

} // namespace

Corpus read_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open corpus file '" + path + "'");

    Corpus corpus;
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw data_error("corpus file '" + path + "' is empty");
    ++lineno;
    json header = parse_line_strict(line, lineno);
    if (!header.is_object() || !header.contains("version") || !header.contains("num_tags") ||
        !header.contains("num_features"))
        throw data_error("line 1: bad corpus header");
    if (header["version"].get<int>() != 1)
        throw data_error("unsupported corpus version " + header["version"].dump());
    corpus.num_tags = header["num_tags"].get<int>();
    corpus.num_features = header["num_features"].get<int>();

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json rec = parse_line_strict(line, lineno);
        if (!rec.is_object() || !rec.contains("id") || !rec.contains("labels") ||
            !rec.contains("instances"))
            throw data_error("line " + std::to_string(lineno) + ": bad example record");
        Example ex;
        ex.id = rec["id"].get<std::string>();
        for (const auto& l : rec["labels"]) ex.labels.push_back(l.get<int>());
        std::sort(ex.labels.begin(), ex.labels.end());
        ex.labels.erase(std::unique(ex.labels.begin(), ex.labels.end()), ex.labels.end());
        for (const auto& obj : rec["instances"]) {
            if (!obj.is_object())
                throw data_error("line " + std::to_string(lineno) + ": instance must be an object");
            std::vector<std::pair<int, int>> counts;
            for (auto it = obj.begin(); it != obj.end(); ++it)
                counts.emplace_back(key_to_feature(it.key(), lineno), it.value().get<int>());
            try {
                ex.instances.push_back(Instance::from_counts(std::move(counts)));
            } catch (const data_error& e) {
                throw data_error("line " + std::to_string(lineno) + " (example '" + ex.id +
                                 "'): " + e.what());
            }
        }
        corpus.examples.push_back(std::move(ex));
    }
    corpus.validate();
    return corpus;
}

void write_corpus(const Corpus& corpus, const std::string& path) {
    corpus.validate();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("cannot open '" + path + "' for writing");
    ordered_json header;
    header["version"] = 1;
    header["num_tags"] = corpus.num_tags;
    header["num_features"] = corpus.num_features;
    out << header.dump() << "\n";
    for (const auto& ex : corpus.examples) {
        ordered_json rec;
        rec["id"] = ex.id;
        auto labels = ex.labels;
        std::sort(labels.begin(), labels.end());
        rec["labels"] = labels;
        ordered_json arr = ordered_json::array();
        for (const auto& inst : ex.instances) {
            ordered_json o = ordered_json::object();
            for (auto [d, x] : inst.counts) o[std::to_string(d)] = x;  // counts kept sorted
            arr.push_back(std::move(o));
        }
        rec["instances"] = std::move(arr);
        out << rec.dump() << "\n";
    }
    if (!out) throw data_error("write failed for '" + path + "'");
}

std::map<int, std::string> read_vocab(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open vocabulary file '" + path + "'");
    std::map<int, std::string> names;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw data_error(path + " line " + std::to_string(lineno) + ": expected index<TAB>name");
        names[static_cast<int>(parse_int(line.substr(0, tab)))] = line.substr(tab + 1);
    }
    return names;
}

void write_vocab(const std::map<int, std::string>& names, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("cannot open '" + path + "' for writing");
    for (const auto& [idx, name] : names) out << idx << "\t" << name << "\n";
}

void write_true_params(const TrueParams& tp, const std::string& path) {
    ordered_json j;
    j["lambda"] = tp.lambda;
    j["w"] = tp.w;
    ordered_json beta = ordered_json::array();
    for (std::size_t c = 0; c < tp.beta.rows; ++c)
        beta.push_back(std::vector<double>(tp.beta.row(c), tp.beta.row(c) + tp.beta.cols));
    j["beta"] = std::move(beta);
    ordered_json theta = ordered_json::array();
    for (std::size_t n = 0; n < tp.theta.rows; ++n)
        theta.push_back(std::vector<double>(tp.theta.row(n), tp.theta.row(n) + tp.theta.cols));
    j["theta"] = std::move(theta);
    j["z"] = tp.z;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("cannot open '" + path + "' for writing");
    out << j.dump() << "\n";
}

TrueParams read_true_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw data_error(std::string("bad true-params file: ") + e.what());
    }
    TrueParams tp;
    tp.lambda = j.at("lambda").get<Vec>();
    tp.w = j.at("w").get<Vec>();
    const auto& beta = j.at("beta");
    tp.beta = Mat(beta.size(), beta.empty() ? 0 : beta[0].size());
    for (std::size_t c = 0; c < tp.beta.rows; ++c)
        for (std::size_t d = 0; d < tp.beta.cols; ++d) tp.beta(c, d) = beta[c][d].get<double>();
    const auto& theta = j.at("theta");
    tp.theta = Mat(theta.size(), theta.empty() ? 0 : theta[0].size());
    for (std::size_t n = 0; n < tp.theta.rows; ++n)
        for (std::size_t c = 0; c < tp.theta.cols; ++c) tp.theta(n, c) = theta[n][c].get<double>();
    tp.z = j.at("z").get<std::vector<std::vector<int>>>();
    return tp;
}

// ----------------------------------------------------------------- generator

std::pair<Corpus, TrueParams> synthesize_corpus(const SynthConfig& config, const Mat& beta) {
    config.validate();
    const int C = config.num_tags, D = config.num_features, N = config.num_examples;
    if (beta.rows != static_cast<std::size_t>(C) || beta.cols != static_cast<std::size_t>(D))
        throw dimension_error("synth: beta must be C x D");

    Rng rng(config.seed);
    Corpus corpus;
    corpus.num_tags = C;
    corpus.num_features = D;
    corpus.examples.reserve(N);

    TrueParams tp;
    tp.lambda = config.true_lambda;
    tp.w = config.w_true;
    tp.beta = beta;
    tp.theta = Mat(N, C);
    tp.z.resize(N);

    Vec theta(C), zbar(C);
    std::vector<int> feat_count(D);
    for (int n = 0; n < N; ++n) {
        for (int c = 0; c < C; ++c) {
            theta[c] = rng.exponential(config.true_lambda[c]);
            tp.theta(n, c) = theta[c];
        }
        Example ex;
        ex.id = "e" + std::to_string(n);
        const int M = static_cast<int>(rng.uniform_range(config.m_min, config.m_max));
        std::fill(zbar.begin(), zbar.end(), 0.0);
        for (int m = 0; m < M; ++m) {
            const int z = static_cast<int>(rng.categorical(theta.data(), C));
            tp.z[n].push_back(z);
            zbar[z] += 1.0;
            const int K = static_cast<int>(rng.uniform_range(config.k_min, config.k_max));
            std::fill(feat_count.begin(), feat_count.end(), 0);
            for (int k = 0; k < K; ++k)
                ++feat_count[rng.categorical(beta.row(z), D)];
            std::vector<std::pair<int, int>> counts;
            for (int d = 0; d < D; ++d)
                if (feat_count[d] > 0) counts.emplace_back(d, feat_count[d]);
            ex.instances.push_back(Instance::from_counts(std::move(counts)));
        }
        for (int c = 0; c < C; ++c) zbar[c] /= M;
        // per-class label draw for tags with instance support; a tag no
        // instance voted for cannot label the example
        for (int c = 0; c < C; ++c) {
            if (zbar[c] <= 0.0) continue;
            const double p = 1.0 / (1.0 + std::exp(-config.w_true[c] * zbar[c]));
            if (rng.uniform() < p) ex.labels.push_back(c);
        }
        if (ex.labels.empty()) {
            int best = 0;
            for (int c = 1; c < C; ++c)
                if (zbar[c] > zbar[best]) best = c;
            ex.labels.push_back(best);
        }
        corpus.examples.push_back(std::move(ex));
    }
    return {std::move(corpus), std::move(tp)};
}

std::pair<Corpus, TrueParams> synthesize_corpus(const SynthConfig& config) {
    config.validate();
    // beta rows come from a derived stream so the per-example draws do not
    // move when only beta_concentration changes
    std::uint64_t beta_seed = config.seed ^ 0x6d616b655f62657461ull;
    splitmix64(beta_seed);
    Rng beta_rng(beta_seed);
    Mat beta(config.num_tags, config.num_features);
    for (int c = 0; c < config.num_tags; ++c)
        beta_rng.dirichlet_symmetric(config.beta_concentration, config.num_features, beta.row(c));
    return synthesize_corpus(config, beta);
}

// --------------------------------------------------------------------- folds

Split split_corpus(const Corpus& corpus, int folds, std::uint64_t seed) {
    const int n = static_cast<int>(corpus.examples.size());
    if (folds < 2) throw data_error("split: folds must be >= 2");
    if (n < folds)
        throw data_error("split: need at least " + std::to_string(folds) + " examples, have " +
                         std::to_string(n));
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    Rng rng(seed);
    for (int i = n - 1; i > 0; --i)
        std::swap(idx[i], idx[rng.uniform_int(static_cast<std::uint64_t>(i) + 1)]);

    Split split;
    split.n = n;
    split.folds.resize(folds);
    const int base = n / folds, extra = n % folds;
    int pos = 0;
    for (int f = 0; f < folds; ++f) {
        const int size = base + (f < extra ? 1 : 0);
        split.folds[f].assign(idx.begin() + pos, idx.begin() + pos + size);
        std::sort(split.folds[f].begin(), split.folds[f].end());
        pos += size;
    }
    return split;
}

namespace {
Corpus subset(const Corpus& corpus, const std::vector<int>& keep) {
    Corpus out;
    out.num_tags = corpus.num_tags;
    out.num_features = corpus.num_features;
    out.tag_names = corpus.tag_names;
    out.feature_names = corpus.feature_names;
    for (int i : keep) out.examples.push_back(corpus.examples[i]);
    return out;
}
} // namespace

Corpus Split::test_of(const Corpus& corpus, int fold) const {
    return subset(corpus, folds.at(fold));
}

Corpus Split::train_of(const Corpus& corpus, int fold) const {
    std::vector<char> in_test(n, 0);
    for (int i : folds.at(fold)) in_test[i] = 1;
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (!in_test[i]) keep.push_back(i);
    return subset(corpus, keep);
}

} // namespace emm
