#pragma once

// Deterministic finite automata in Moore form: every state carries an output
// symbol instead of a binary accept flag. Transition tables are total.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "autolab/rng.hpp"

namespace autolab {

struct Dfa {
  int num_states = 0;
  int alphabet_size = 0;
  // Row-major table: transitions[state * alphabet_size + symbol].
  std::vector<int> transitions;
  int initial = 0;
  // Output symbol per state; output alphabet is {0, .., max(outputs)}.
  std::vector<int> outputs;

  int next(int state, int symbol) const {
    return transitions[static_cast<std::size_t>(state) * alphabet_size + symbol];
  }

  int num_output_symbols() const;

  // Throws std::invalid_argument if the table is not total, indices are out
  // of range, or some state is unreachable from the initial state.
  void validate() const;
};

// Disjoint blocks of state indices covering all states.
struct Partition {
  std::vector<std::vector<int>> blocks;
};

// Output after every prefix: result[0] is the initial state's output,
// result[k] the output after consuming the first k symbols.
std::vector<int> eval(const Dfa& dfa, std::span<const int> sequence);

// Output after consuming the whole sequence.
int eval_final(const Dfa& dfa, std::span<const int> sequence);

// Two-state machine for streaming parity: symbol 1 swaps the states,
// symbol 0 self-loops; outputs are 0 and 1, initial state outputs 0.
Dfa parity_dfa();

// Drops states not reachable from the initial state, renumbering the
// survivors in increasing original-index order.
Dfa prune_unreachable(const Dfa& dfa);

// Coarsest partition of the (reachable) states such that states in a block
// agree on outputs and map into common blocks under every symbol.
Partition hopcroft_partition(const Dfa& dfa);

// Unique minimal equivalent machine. The initial partition has one block per
// output symbol; worklist is processed in insertion order; minimized states
// are numbered by the smallest original state index in their block.
Dfa hopcroft_minimize(const Dfa& dfa);

// True iff the machines produce identical output sequences on every input.
// Breadth-first search of the product automaton. Throws on alphabet mismatch.
bool equivalent(const Dfa& a, const Dfa& b);

// Random reachable machine: states are processed in creation order and each
// unassigned transition goes to a fresh state with probability p_new while
// fewer than max_states states exist, otherwise to a uniformly drawn existing
// state. Outputs are drawn uniformly over {0,1} after all transitions.
Dfa random_regular_task(int max_states, double p_new, int alphabet_size, Rng& rng);

// minimal_distinguishing_length(p, q): length of the shortest string (the
// empty string counts, length 0) on which states p and q produce different
// outputs, or unreachable_distinguishing_length if the states are equivalent.
// With min_length_one, the empty string is excluded from consideration.
inline constexpr int unreachable_distinguishing_length = 1 << 29;
std::vector<std::vector<int>> distinguishing_lengths(const Dfa& dfa, bool min_length_one = false);

// Graphviz rendering: one node per state labelled with its output symbol
// (initial state drawn with a doubled border), one edge per (state, symbol).
std::string to_dot(const Dfa& dfa);

// Line-based text format:
//   states <k> alphabet <m> initial <i>
//   outputs <o>            (one line per state, in state order)
//   <from> <symbol> <to>   (one line per transition)
std::string to_text(const Dfa& dfa);
Dfa dfa_from_text(const std::string& text);
Dfa dfa_from_stream(std::istream& in);

}  // namespace autolab
