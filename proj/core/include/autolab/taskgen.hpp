#pragma once

// Dataset construction for regular-language tasks: symbol sequences with
// targets produced by a task DFA, plus the one-hot encodings fed to models.

#include <Eigen/Core>
#include <iosfwd>
#include <vector>

#include "autolab/dfa.hpp"
#include "autolab/rng.hpp"

namespace autolab {

using Sequence = std::vector<int>;

struct Example {
  Sequence sequence;
  int target = 0;  // task output after the full sequence
};

struct Dataset {
  std::vector<Example> examples;
  int encoding_dim = 0;  // one-hot width for inputs and outputs
  Dfa task;

  std::size_t size() const { return examples.size(); }
};

// Every sequence of length 1..max_len over {0..alphabet_size-1}, in
// length-then-lexicographic order. Count is sum_{l=1..max_len} k^l.
std::vector<Sequence> all_sequences(int alphabet_size, int max_len);

// Targets are the task's final output per sequence. Throws on duplicate
// sequences or symbols outside the task alphabet.
Dataset make_dataset(const Dfa& task, const std::vector<Sequence>& sequences);

// Unit basis vector: 1.0 at index, 0.0 elsewhere. Throws if index >= dim.
Eigen::VectorXd one_hot(int index, int dim);

// `count` distinct sequences of exactly `length`, drawn uniformly with
// replacement and re-drawn on duplicates. Throws if count exceeds the number
// of distinct strings of that length.
Dataset sample_validation(const Dfa& task, int length, int count, Rng& rng);

// CSV dump with header `sequence,target`; sequences rendered as digit runs.
void write_dataset_csv(const Dataset& dataset, std::ostream& os);

std::string sequence_to_string(const Sequence& sequence);

}  // namespace autolab
