#include "autolab/dfa.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace autolab {

int Dfa::num_output_symbols() const {
  int m = 0;
  for (int o : outputs) m = std::max(m, o + 1);
  return m;
}

namespace {

std::vector<bool> reachable_mask(const Dfa& dfa) {
  std::vector<bool> seen(dfa.num_states, false);
  std::deque<int> queue{dfa.initial};
  seen[dfa.initial] = true;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int c = 0; c < dfa.alphabet_size; ++c) {
      int t = dfa.next(s, c);
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return seen;
}

}  // namespace

void Dfa::validate() const {
  if (num_states <= 0) throw std::invalid_argument("Dfa: num_states must be positive");
  if (alphabet_size <= 0) throw std::invalid_argument("Dfa: alphabet_size must be positive");
  if (initial < 0 || initial >= num_states)
    throw std::invalid_argument("Dfa: initial state out of range");
  if (static_cast<int>(transitions.size()) != num_states * alphabet_size)
    throw std::invalid_argument("Dfa: transition table is not total");
  if (static_cast<int>(outputs.size()) != num_states)
    throw std::invalid_argument("Dfa: outputs must cover every state");
  for (int t : transitions)
    if (t < 0 || t >= num_states)
      throw std::invalid_argument("Dfa: transition target out of range");
  for (int o : outputs)
    if (o < 0) throw std::invalid_argument("Dfa: output symbols must be non-negative");
  auto seen = reachable_mask(*this);
  for (int s = 0; s < num_states; ++s)
    if (!seen[s]) throw std::invalid_argument("Dfa: state unreachable from initial");
}

std::vector<int> eval(const Dfa& dfa, std::span<const int> sequence) {
  std::vector<int> out;
  out.reserve(sequence.size() + 1);
  int state = dfa.initial;
  out.push_back(dfa.outputs[state]);
  for (int symbol : sequence) {
    if (symbol < 0 || symbol >= dfa.alphabet_size)
      throw std::invalid_argument("eval: symbol out of range");
    state = dfa.next(state, symbol);
    out.push_back(dfa.outputs[state]);
  }
  return out;
}

int eval_final(const Dfa& dfa, std::span<const int> sequence) {
  int state = dfa.initial;
  for (int symbol : sequence) {
    if (symbol < 0 || symbol >= dfa.alphabet_size)
      throw std::invalid_argument("eval: symbol out of range");
    state = dfa.next(state, symbol);
  }
  return dfa.outputs[state];
}

Dfa parity_dfa() {
  Dfa dfa;
  dfa.num_states = 2;
  dfa.alphabet_size = 2;
  dfa.initial = 0;
  dfa.outputs = {0, 1};
  // symbol 0 self-loops, symbol 1 swaps
  dfa.transitions = {0, 1, 1, 0};
  return dfa;
}

Dfa prune_unreachable(const Dfa& dfa) {
  auto seen = reachable_mask(dfa);
  std::vector<int> remap(dfa.num_states, -1);
  int next_id = 0;
  for (int s = 0; s < dfa.num_states; ++s)
    if (seen[s]) remap[s] = next_id++;

  Dfa out;
  out.num_states = next_id;
  out.alphabet_size = dfa.alphabet_size;
  out.initial = remap[dfa.initial];
  out.outputs.resize(next_id);
  out.transitions.resize(static_cast<std::size_t>(next_id) * dfa.alphabet_size);
  for (int s = 0; s < dfa.num_states; ++s) {
    if (remap[s] < 0) continue;
    out.outputs[remap[s]] = dfa.outputs[s];
    for (int c = 0; c < dfa.alphabet_size; ++c)
      out.transitions[static_cast<std::size_t>(remap[s]) * dfa.alphabet_size + c] =
          remap[dfa.next(s, c)];
  }
  return out;
}

Partition hopcroft_partition(const Dfa& dfa) {
  const int n = dfa.num_states;
  const int k = dfa.alphabet_size;

  // Reverse transitions: rev[t * k + c] lists the sources s with s --c--> t.
  std::vector<std::vector<int>> rev(static_cast<std::size_t>(n) * k);
  for (int s = 0; s < n; ++s)
    for (int c = 0; c < k; ++c) rev[static_cast<std::size_t>(dfa.next(s, c)) * k + c].push_back(s);

  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(n, -1);

  // Initial partition: one block per distinct output symbol, in symbol order.
  {
    int max_out = dfa.num_output_symbols();
    std::vector<int> block_for_output(max_out, -1);
    for (int s = 0; s < n; ++s) {
      int o = dfa.outputs[s];
      if (block_for_output[o] < 0) {
        block_for_output[o] = static_cast<int>(blocks.size());
        blocks.emplace_back();
      }
      block_of[s] = block_for_output[o];
      blocks[block_for_output[o]].push_back(s);
    }
  }

  std::deque<int> worklist;
  std::vector<bool> in_worklist(blocks.size(), false);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    worklist.push_back(b);
    in_worklist[b] = true;
  }

  std::vector<int> touched_count;              // per block, |X ∩ Y|
  std::vector<int> touched_blocks;             // blocks with X ∩ Y nonempty, first-touch order
  touched_count.assign(blocks.size(), 0);

  while (!worklist.empty()) {
    int a = worklist.front();
    worklist.pop_front();
    in_worklist[a] = false;
    std::vector<int> a_members = blocks[a];  // copy: splits below may edit blocks[a]

    for (int c = 0; c < k; ++c) {
      // X: states whose c-transition enters block a.
      touched_blocks.clear();
      std::vector<std::vector<int>> moved(blocks.size());
      for (int t : a_members) {
        for (int s : rev[static_cast<std::size_t>(t) * k + c]) {
          int y = block_of[s];
          if (touched_count[y] == 0) touched_blocks.push_back(y);
          ++touched_count[y];
          moved[y].push_back(s);
        }
      }

      for (int y : touched_blocks) {
        int in_x = touched_count[y];
        touched_count[y] = 0;
        if (in_x == static_cast<int>(blocks[y].size())) continue;  // Y ⊆ X, no split

        // Split Y into X∩Y (new block) and Y∖X (keeps id y).
        int y_new = static_cast<int>(blocks.size());
        blocks.push_back(std::move(moved[y]));
        for (int s : blocks[y_new]) block_of[s] = y_new;
        std::vector<int> remain;
        remain.reserve(blocks[y].size() - in_x);
        for (int s : blocks[y])
          if (block_of[s] == y) remain.push_back(s);
        blocks[y] = std::move(remain);

        touched_count.push_back(0);
        in_worklist.push_back(false);
        if (in_worklist[y]) {
          worklist.push_back(y_new);
          in_worklist[y_new] = true;
        } else if (in_x <= static_cast<int>(blocks[y].size())) {
          worklist.push_back(y_new);
          in_worklist[y_new] = true;
        } else {
          worklist.push_back(y);
          in_worklist[y] = true;
        }
      }
    }
  }

  Partition partition;
  partition.blocks.reserve(blocks.size());
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    partition.blocks.push_back(std::move(b));
  }
  // Canonical block order: by smallest contained state index.
  std::sort(partition.blocks.begin(), partition.blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return partition;
}

Dfa hopcroft_minimize(const Dfa& dfa) {
  Dfa pruned = prune_unreachable(dfa);
  Partition partition = hopcroft_partition(pruned);

  const int m = static_cast<int>(partition.blocks.size());
  std::vector<int> block_of(pruned.num_states, -1);
  for (int b = 0; b < m; ++b)
    for (int s : partition.blocks[b]) block_of[s] = b;

  Dfa out;
  out.num_states = m;
  out.alphabet_size = pruned.alphabet_size;
  out.initial = block_of[pruned.initial];
  out.outputs.resize(m);
  out.transitions.resize(static_cast<std::size_t>(m) * pruned.alphabet_size);
  for (int b = 0; b < m; ++b) {
    int rep = partition.blocks[b].front();
    out.outputs[b] = pruned.outputs[rep];
    for (int c = 0; c < pruned.alphabet_size; ++c)
      out.transitions[static_cast<std::size_t>(b) * pruned.alphabet_size + c] =
          block_of[pruned.next(rep, c)];
  }
  return out;
}

bool equivalent(const Dfa& a, const Dfa& b) {
  if (a.alphabet_size != b.alphabet_size)
    throw std::invalid_argument("equivalent: alphabet sizes differ");
  const int k = a.alphabet_size;
  std::vector<bool> seen(static_cast<std::size_t>(a.num_states) * b.num_states, false);
  std::deque<std::pair<int, int>> queue;
  queue.emplace_back(a.initial, b.initial);
  seen[static_cast<std::size_t>(a.initial) * b.num_states + b.initial] = true;
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    if (a.outputs[p] != b.outputs[q]) return false;
    for (int c = 0; c < k; ++c) {
      int pn = a.next(p, c);
      int qn = b.next(q, c);
      std::size_t idx = static_cast<std::size_t>(pn) * b.num_states + qn;
      if (!seen[idx]) {
        seen[idx] = true;
        queue.emplace_back(pn, qn);
      }
    }
  }
  return true;
}

Dfa random_regular_task(int max_states, double p_new, int alphabet_size, Rng& rng) {
  if (max_states < 1) throw std::invalid_argument("random_regular_task: max_states must be >= 1");
  if (p_new < 0.0 || p_new > 1.0)
    throw std::invalid_argument("random_regular_task: p_new must lie in [0,1]");
  if (alphabet_size < 1)
    throw std::invalid_argument("random_regular_task: alphabet_size must be >= 1");

  std::vector<std::vector<int>> transitions;
  transitions.push_back(std::vector<int>(alphabet_size, -1));

  // Process states in creation order; a draw happens per unassigned
  // transition, and the fresh-state Bernoulli is skipped once at capacity.
  for (std::size_t s = 0; s < transitions.size(); ++s) {
    for (int c = 0; c < alphabet_size; ++c) {
      int target;
      if (static_cast<int>(transitions.size()) < max_states && rng.bernoulli(p_new)) {
        target = static_cast<int>(transitions.size());
        transitions.push_back(std::vector<int>(alphabet_size, -1));
      } else {
        target = static_cast<int>(rng.uniform_int(transitions.size()));
      }
      transitions[s][c] = target;
    }
  }

  Dfa dfa;
  dfa.num_states = static_cast<int>(transitions.size());
  dfa.alphabet_size = alphabet_size;
  dfa.initial = 0;
  dfa.transitions.reserve(static_cast<std::size_t>(dfa.num_states) * alphabet_size);
  for (const auto& row : transitions)
    dfa.transitions.insert(dfa.transitions.end(), row.begin(), row.end());
  dfa.outputs.resize(dfa.num_states);
  for (int s = 0; s < dfa.num_states; ++s)
    dfa.outputs[s] = static_cast<int>(rng.uniform_int(2));
  dfa.validate();
  return dfa;
}

std::vector<std::vector<int>> distinguishing_lengths(const Dfa& dfa, bool min_length_one) {
  const int n = dfa.num_states;
  const int k = dfa.alphabet_size;
  std::vector<std::vector<int>> depth(n, std::vector<int>(n, unreachable_distinguishing_length));

  if (!min_length_one) {
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (dfa.outputs[p] != dfa.outputs[q]) depth[p][q] = 0;
  } else {
    // Length-1 base case: some symbol leads to states with differing outputs.
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int c = 0; c < k; ++c)
          if (dfa.outputs[dfa.next(p, c)] != dfa.outputs[dfa.next(q, c)]) {
            depth[p][q] = 1;
            break;
          }
  }

  // Bellman iteration: depth(p,q) = 1 + min_c depth(δ(p,c), δ(q,c)).
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        int best = depth[p][q];
        for (int c = 0; c < k; ++c) {
          int d = depth[dfa.next(p, c)][dfa.next(q, c)];
          if (d + 1 < best) best = d + 1;
        }
        if (best < depth[p][q]) {
          depth[p][q] = best;
          changed = true;
        }
      }
  }
  return depth;
}

std::string to_dot(const Dfa& dfa) {
  std::ostringstream os;
  os << "digraph dfa {\n";
  os << "  rankdir=LR;\n";
  for (int s = 0; s < dfa.num_states; ++s) {
    os << "  q" << s << " [shape=circle, label=\"" << dfa.outputs[s] << "\"";
    if (s == dfa.initial) os << ", peripheries=2";
    os << "];\n";
  }
  for (int s = 0; s < dfa.num_states; ++s)
    for (int c = 0; c < dfa.alphabet_size; ++c)
      os << "  q" << s << " -> q" << dfa.next(s, c) << " [label=\"" << c << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_text(const Dfa& dfa) {
  std::ostringstream os;
  os << "states " << dfa.num_states << " alphabet " << dfa.alphabet_size << " initial "
     << dfa.initial << "\n";
  for (int s = 0; s < dfa.num_states; ++s) os << "outputs " << dfa.outputs[s] << "\n";
  for (int s = 0; s < dfa.num_states; ++s)
    for (int c = 0; c < dfa.alphabet_size; ++c)
      os << s << " " << c << " " << dfa.next(s, c) << "\n";
  return os.str();
}

Dfa dfa_from_stream(std::istream& in) {
  std::string kw_states, kw_alphabet, kw_initial;
  Dfa dfa;
  if (!(in >> kw_states >> dfa.num_states >> kw_alphabet >> dfa.alphabet_size >> kw_initial >>
        dfa.initial) ||
      kw_states != "states" || kw_alphabet != "alphabet" || kw_initial != "initial")
    throw std::invalid_argument("dfa_from_stream: malformed header");
  if (dfa.num_states <= 0 || dfa.alphabet_size <= 0)
    throw std::invalid_argument("dfa_from_stream: non-positive sizes");

  dfa.outputs.resize(dfa.num_states);
  for (int s = 0; s < dfa.num_states; ++s) {
    std::string kw;
    if (!(in >> kw >> dfa.outputs[s]) || kw != "outputs")
      throw std::invalid_argument("dfa_from_stream: malformed outputs line");
  }

  dfa.transitions.assign(static_cast<std::size_t>(dfa.num_states) * dfa.alphabet_size, -1);
  for (int i = 0; i < dfa.num_states * dfa.alphabet_size; ++i) {
    int from, symbol, to;
    if (!(in >> from >> symbol >> to))
      throw std::invalid_argument("dfa_from_stream: malformed transition line");
    if (from < 0 || from >= dfa.num_states || symbol < 0 || symbol >= dfa.alphabet_size)
      throw std::invalid_argument("dfa_from_stream: transition indices out of range");
    dfa.transitions[static_cast<std::size_t>(from) * dfa.alphabet_size + symbol] = to;
  }
  dfa.validate();
  return dfa;
}

Dfa dfa_from_text(const std::string& text) {
  std::istringstream in(text);
  return dfa_from_stream(in);
}

}  // namespace autolab
