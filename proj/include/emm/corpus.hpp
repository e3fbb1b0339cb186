#ifndef EMM_CORPUS_HPP
#define EMM_CORPUS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "emm/mat.hpp"

namespace emm {

// One region/segment: sparse feature counts, kept sorted by feature index.
struct Instance {
    std::vector<std::pair<int, int>> counts;  // (feature d, count >= 1)
    int total = 0;                            // sum of counts

    static Instance from_counts(std::vector<std::pair<int, int>> c);
};

struct Example {
    std::string id;
    std::vector<Instance> instances;   // M >= 1
    std::vector<int> labels;           // sorted tag indices; may be empty for test data
};

struct Corpus {
    int num_tags = 0;      // C
    int num_features = 0;  // D
    std::vector<Example> examples;
    std::map<int, std::string> tag_names;      // optional
    std::map<int, std::string> feature_names;  // optional

    void validate() const;  // throws dimension_error on inconsistency
};

struct SynthConfig {
    int num_tags = 0;      // C
    int num_features = 0;  // D
    int num_examples = 0;  // N
    int m_min = 1, m_max = 1;
    int k_min = 1, k_max = 1;
    Vec true_lambda;           // length C, rates
    double beta_concentration = 1.0;
    Vec w_true;                // length C
    std::uint64_t seed = 0;

    void validate() const;
};

// Ground truth retained for recovery experiments.
struct TrueParams {
    Vec lambda;
    Mat beta;                          // C x D rows on the simplex
    Vec w;
    Mat theta;                         // N x C raw draws
    std::vector<std::vector<int>> z;   // per example, per instance true tag
};

Corpus read_corpus(const std::string& path);
void write_corpus(const Corpus& corpus, const std::string& path);

// index<TAB>name per line
std::map<int, std::string> read_vocab(const std::string& path);
void write_vocab(const std::map<int, std::string>& names, const std::string& path);

void write_true_params(const TrueParams& tp, const std::string& path);
TrueParams read_true_params(const std::string& path);

// Samples the generative process: theta_c ~ Exp(lambda_c), instance tags from
// the normalized theta, features from the drawn tag's beta row, example labels
// from per-class Bernoulli(sigmoid(w_c * zbar_c)) over classes with zbar_c > 0
// (with a forced majority label when all draws come up empty).
std::pair<Corpus, TrueParams> synthesize_corpus(const SynthConfig& config);

// Same process with caller-supplied beta rows (must be C x D, rows on the simplex).
std::pair<Corpus, TrueParams> synthesize_corpus(const SynthConfig& config, const Mat& beta);

// Disjoint shuffled fold partitions, sizes differing by at most one.
struct Split {
    std::vector<std::vector<int>> folds;  // test indices per fold
    int n = 0;

    Corpus train_of(const Corpus& corpus, int fold) const;
    Corpus test_of(const Corpus& corpus, int fold) const;
};

Split split_corpus(const Corpus& corpus, int folds, std::uint64_t seed);

} // namespace emm

#endif
