#include "autolab/taskgen.hpp"

#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>

namespace autolab {

std::vector<Sequence> all_sequences(int alphabet_size, int max_len) {
  if (alphabet_size < 1) throw std::invalid_argument("all_sequences: alphabet_size must be >= 1");
  if (max_len < 1) throw std::invalid_argument("all_sequences: max_len must be >= 1");

  std::vector<Sequence> out;
  std::vector<Sequence> current{Sequence{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Sequence> next;
    next.reserve(current.size() * alphabet_size);
    for (const auto& prefix : current) {
      for (int c = 0; c < alphabet_size; ++c) {
        Sequence s = prefix;
        s.push_back(c);
        next.push_back(std::move(s));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    current = std::move(next);
  }
  return out;
}

Dataset make_dataset(const Dfa& task, const std::vector<Sequence>& sequences) {
  Dataset dataset;
  dataset.task = task;
  dataset.encoding_dim = std::max(task.alphabet_size, task.num_output_symbols());
  dataset.examples.reserve(sequences.size());

  std::set<Sequence> seen;
  for (const auto& seq : sequences) {
    if (!seen.insert(seq).second)
      throw std::invalid_argument("make_dataset: duplicate sequence");
    dataset.examples.push_back({seq, eval_final(task, seq)});
  }
  return dataset;
}

Eigen::VectorXd one_hot(int index, int dim) {
  if (index < 0 || index >= dim) throw std::invalid_argument("one_hot: index out of range");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  v[index] = 1.0;
  return v;
}

Dataset sample_validation(const Dfa& task, int length, int count, Rng& rng) {
  if (length < 1) throw std::invalid_argument("sample_validation: length must be >= 1");
  if (count < 1) throw std::invalid_argument("sample_validation: count must be >= 1");
  double space = std::pow(static_cast<double>(task.alphabet_size), length);
  if (length < 64 && static_cast<double>(count) > space)
    throw std::invalid_argument("sample_validation: count exceeds distinct strings");

  std::set<Sequence> seen;
  std::vector<Sequence> sequences;
  while (static_cast<int>(sequences.size()) < count) {
    Sequence s(length);
    for (int i = 0; i < length; ++i)
      s[i] = static_cast<int>(rng.uniform_int(task.alphabet_size));
    if (seen.insert(s).second) sequences.push_back(std::move(s));
  }
  return make_dataset(task, sequences);
}

std::string sequence_to_string(const Sequence& sequence) {
  std::string s;
  s.reserve(sequence.size());
  for (int c : sequence) {
    if (c < 10)
      s.push_back(static_cast<char>('0' + c));
    else
      s += "[" + std::to_string(c) + "]";
  }
  return s;
}

void write_dataset_csv(const Dataset& dataset, std::ostream& os) {
  os << "sequence,target\n";
  for (const auto& ex : dataset.examples)
    os << sequence_to_string(ex.sequence) << "," << ex.target << "\n";
}

}  // namespace autolab
