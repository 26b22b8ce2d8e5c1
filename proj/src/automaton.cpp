#include "phirep/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace phirep {

Symbol encode_symbol(const std::vector<int>& digits) {
  Symbol a = 0;
  for (int d : digits) a = (a << 1) | static_cast<Symbol>(d & 1);
  return a;
}

int symbol_digit(Symbol a, int track, int tracks) { return static_cast<int>((a >> (tracks - 1 - track)) & 1u); }

Word make_word(const std::vector<std::string>& tracks) {
  std::size_t len = 0;
  for (const auto& t : tracks) len = std::max(len, t.size());
  Word w(len, 0);
  const int k = static_cast<int>(tracks.size());
  for (int j = 0; j < k; ++j) {
    const auto& t = tracks[static_cast<std::size_t>(j)];
    const std::size_t off = len - t.size();
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] != '0' && t[i] != '1') throw std::invalid_argument("make_word: not a binary digit string: " + t);
      if (t[i] == '1') w[off + i] |= Symbol{1} << (k - 1 - j);
    }
  }
  return w;
}

std::vector<std::string> split_word(const Word& w, int tracks) {
  std::vector<std::string> out(static_cast<std::size_t>(tracks));
  for (Symbol a : w)
    for (int j = 0; j < tracks; ++j) out[static_cast<std::size_t>(j)].push_back(char('0' + symbol_digit(a, j, tracks)));
  return out;
}

// ------------------------------------------------------------------- Dfa

Dfa::Dfa(int k) : tracks(k) {
  if (k < 1 || k > kMaxTracks) throw std::invalid_argument("Dfa: unsupported track count");
}

Dfa Dfa::empty(int k) {
  Dfa d(k);
  d.add_state(false);
  return d;
}

Dfa Dfa::universal(int k) {
  Dfa d(k);
  d.add_state(true);
  for (int a = 0; a < d.alphabet_size(); ++a) d.set(0, static_cast<Symbol>(a), 0);
  return d;
}

int Dfa::add_state(bool accept) {
  accepting.push_back(accept ? 1 : 0);
  delta.resize(delta.size() + static_cast<std::size_t>(alphabet_size()), kNoState);
  return state_count() - 1;
}

int Dfa::run(const Word& w) const {
  int s = initial;
  for (Symbol a : w) {
    if (s == kNoState) return s;
    s = next(s, a);
  }
  return s;
}

int Nfa::add_state(bool accept) {
  accepting.push_back(accept ? 1 : 0);
  edges.emplace_back();
  eps.emplace_back();
  return state_count() - 1;
}

// --------------------------------------------------------- determinize

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

void eps_close(const Nfa& n, std::vector<int>& set, std::vector<char>& mark) {
  std::vector<int> stack(set.begin(), set.end());
  for (int s : set) mark[static_cast<std::size_t>(s)] = 1;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int t : n.eps[static_cast<std::size_t>(s)]) {
      if (!mark[static_cast<std::size_t>(t)]) {
        mark[static_cast<std::size_t>(t)] = 1;
        set.push_back(t);
        stack.push_back(t);
      }
    }
  }
  for (int s : set) mark[static_cast<std::size_t>(s)] = 0;
  std::sort(set.begin(), set.end());
}

}  // namespace

Dfa determinize(const Nfa& n, std::size_t cap) {
  Dfa d(n.tracks);
  const int A = d.alphabet_size();
  std::vector<char> mark(static_cast<std::size_t>(n.state_count()), 0);
  std::unordered_map<std::vector<int>, int, VecHash> index;
  std::vector<std::vector<int>> subsets;

  auto intern = [&](std::vector<int> set) -> int {
    auto it = index.find(set);
    if (it != index.end()) return it->second;
    if (subsets.size() >= cap)
      throw SubsetLimitError("determinize: more than " + std::to_string(cap) + " subset states");
    bool acc = false;
    for (int s : set) acc = acc || n.accepting[static_cast<std::size_t>(s)];
    int id = d.add_state(acc);
    index.emplace(set, id);
    subsets.push_back(std::move(set));
    return id;
  };

  std::vector<int> start(n.initial.begin(), n.initial.end());
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());
  eps_close(n, start, mark);
  d.initial = intern(std::move(start));

  std::vector<std::vector<int>> succ(static_cast<std::size_t>(A));
  for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
    for (auto& v : succ) v.clear();
    for (int s : subsets[cur])
      for (auto [a, t] : n.edges[static_cast<std::size_t>(s)]) succ[a].push_back(t);
    for (int a = 0; a < A; ++a) {
      auto& set = succ[static_cast<std::size_t>(a)];
      if (set.empty()) continue;
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      eps_close(n, set, mark);
      int t = intern(set);
      d.set(static_cast<int>(cur), static_cast<Symbol>(a), t);
    }
  }
  return d;
}

// ------------------------------------------------------------ Hopcroft

std::vector<int> refine_partition(int n, int A, const std::vector<int>& delta, const std::vector<int>& label) {
  // Inverse transitions in CSR form, per symbol.
  std::vector<int> inv_start(static_cast<std::size_t>(A) * (n + 1), 0);
  std::vector<int> inv(static_cast<std::size_t>(A) * n);
  for (int a = 0; a < A; ++a) {
    int* start = &inv_start[static_cast<std::size_t>(a) * (n + 1)];
    for (int s = 0; s < n; ++s) ++start[delta[static_cast<std::size_t>(s) * A + a] + 1];
    for (int t = 0; t < n; ++t) start[t + 1] += start[t];
    std::vector<int> fill(start, start + n);
    int* base = &inv[static_cast<std::size_t>(a) * n];
    for (int s = 0; s < n; ++s) base[fill[static_cast<std::size_t>(delta[static_cast<std::size_t>(s) * A + a])]++] = s;
  }

  // Refinable partition: elems is a permutation grouped by block.
  std::vector<int> elems(static_cast<std::size_t>(n));
  std::iota(elems.begin(), elems.end(), 0);
  std::stable_sort(elems.begin(), elems.end(),
                   [&](int x, int y) { return label[static_cast<std::size_t>(x)] < label[static_cast<std::size_t>(y)]; });
  std::vector<int> loc(static_cast<std::size_t>(n)), block(static_cast<std::size_t>(n));
  std::vector<int> first, end, marked;
  for (int i = 0; i < n; ++i) {
    int s = elems[static_cast<std::size_t>(i)];
    loc[static_cast<std::size_t>(s)] = i;
    if (i == 0 || label[static_cast<std::size_t>(s)] != label[static_cast<std::size_t>(elems[static_cast<std::size_t>(i - 1)])]) {
      first.push_back(i);
      end.push_back(i);
      marked.push_back(0);
    }
    block[static_cast<std::size_t>(s)] = static_cast<int>(first.size()) - 1;
    end.back() = i + 1;
  }

  std::vector<char> waiting;
  std::vector<std::pair<int, int>> work;
  auto push = [&](int b, int a) {
    std::size_t key = static_cast<std::size_t>(b) * A + a;
    if (waiting.size() <= key) waiting.resize((static_cast<std::size_t>(b) + 1) * A, 0);
    if (!waiting[key]) {
      waiting[key] = 1;
      work.push_back({b, a});
    }
  };
  {
    int largest = 0;
    for (int b = 1; b < static_cast<int>(first.size()); ++b)
      if (end[b] - first[b] > end[largest] - first[largest]) largest = b;
    for (int b = 0; b < static_cast<int>(first.size()); ++b)
      if (b != largest)
        for (int a = 0; a < A; ++a) push(b, a);
  }

  std::vector<int> preimage, touched;
  while (!work.empty()) {
    auto [b, a] = work.back();
    work.pop_back();
    waiting[static_cast<std::size_t>(b) * A + a] = 0;
    preimage.clear();
    const int* start = &inv_start[static_cast<std::size_t>(a) * (n + 1)];
    const int* base = &inv[static_cast<std::size_t>(a) * n];
    for (int i = first[b]; i < end[b]; ++i) {
      int t = elems[static_cast<std::size_t>(i)];
      for (int j = start[t]; j < start[t + 1]; ++j) preimage.push_back(base[j]);
    }
    touched.clear();
    for (int s : preimage) {
      int c = block[static_cast<std::size_t>(s)];
      int pos = loc[static_cast<std::size_t>(s)];
      int target = first[c] + marked[c];
      if (pos < target) continue;  // already marked
      if (marked[c] == 0) touched.push_back(c);
      int other = elems[static_cast<std::size_t>(target)];
      std::swap(elems[static_cast<std::size_t>(pos)], elems[static_cast<std::size_t>(target)]);
      loc[static_cast<std::size_t>(other)] = pos;
      loc[static_cast<std::size_t>(s)] = target;
      ++marked[c];
    }
    for (int c : touched) {
      int size = end[c] - first[c];
      int m = marked[c];
      marked[c] = 0;
      if (m == size) continue;
      int nb = static_cast<int>(first.size());
      first.push_back(first[c]);
      end.push_back(first[c] + m);
      marked.push_back(0);
      first[c] += m;
      for (int i = first[nb]; i < end[nb]; ++i) block[static_cast<std::size_t>(elems[static_cast<std::size_t>(i)])] = nb;
      for (int x = 0; x < A; ++x) {
        std::size_t key = static_cast<std::size_t>(c) * A + x;
        if (key < waiting.size() && waiting[key])
          push(nb, x);
        else if (m <= size - m)
          push(nb, x);
        else
          push(c, x);
      }
    }
  }
  return block;
}

Dfa minimize(const Dfa& a) {
  const int A = a.alphabet_size();
  // Reachable part, completed with a sink.
  std::vector<int> id(static_cast<std::size_t>(a.state_count()), -1);
  std::vector<int> order;
  id[static_cast<std::size_t>(a.initial)] = 0;
  order.push_back(a.initial);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int x = 0; x < A; ++x) {
      int t = a.next(order[i], static_cast<Symbol>(x));
      if (t != kNoState && id[static_cast<std::size_t>(t)] < 0) {
        id[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  const int n = static_cast<int>(order.size()) + 1;
  const int sink = n - 1;
  std::vector<int> delta(static_cast<std::size_t>(n) * A, sink);
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  for (int i = 0; i + 1 < n; ++i) {
    int s = order[static_cast<std::size_t>(i)];
    label[static_cast<std::size_t>(i)] = a.accepting[static_cast<std::size_t>(s)] ? 1 : 0;
    for (int x = 0; x < A; ++x) {
      int t = a.next(s, static_cast<Symbol>(x));
      if (t != kNoState) delta[static_cast<std::size_t>(i) * A + x] = id[static_cast<std::size_t>(t)];
    }
  }
  auto block = refine_partition(n, A, delta, label);
  const int dead = block[static_cast<std::size_t>(sink)];

  Dfa out(a.tracks);
  out.names = a.names;
  if (block[0] == dead) {
    out.add_state(false);
    return out;
  }
  int nblocks = *std::max_element(block.begin(), block.end()) + 1;
  std::vector<int> rep(static_cast<std::size_t>(nblocks), -1);
  for (int s = n - 1; s >= 0; --s) rep[static_cast<std::size_t>(block[static_cast<std::size_t>(s)])] = s;
  std::vector<int> newid(static_cast<std::size_t>(nblocks), -1);
  std::vector<int> queue{block[0]};
  newid[static_cast<std::size_t>(block[0])] = out.add_state(label[static_cast<std::size_t>(rep[static_cast<std::size_t>(block[0])])]);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int b = queue[i];
    int s = rep[static_cast<std::size_t>(b)];
    for (int x = 0; x < A; ++x) {
      int tb = block[static_cast<std::size_t>(delta[static_cast<std::size_t>(s) * A + x])];
      if (tb == dead) continue;
      if (newid[static_cast<std::size_t>(tb)] < 0) {
        newid[static_cast<std::size_t>(tb)] = out.add_state(label[static_cast<std::size_t>(rep[static_cast<std::size_t>(tb)])]);
        queue.push_back(tb);
      }
      out.set(newid[static_cast<std::size_t>(b)], static_cast<Symbol>(x), newid[static_cast<std::size_t>(tb)]);
    }
  }
  out.initial = 0;
  return out;
}

Dfao minimize(const Dfao& a) {
  const int A = a.alphabet_size();
  std::vector<int> id(static_cast<std::size_t>(a.state_count()), -1);
  std::vector<int> order{a.initial};
  id[static_cast<std::size_t>(a.initial)] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int x = 0; x < A; ++x) {
      int t = a.next(order[i], static_cast<Symbol>(x));
      if (id[static_cast<std::size_t>(t)] < 0) {
        id[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  const int n = static_cast<int>(order.size());
  std::vector<int> delta(static_cast<std::size_t>(n) * A);
  std::map<long long, int> outs;
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int s = order[static_cast<std::size_t>(i)];
    label[static_cast<std::size_t>(i)] = outs.emplace(a.output[static_cast<std::size_t>(s)], static_cast<int>(outs.size())).first->second;
    for (int x = 0; x < A; ++x) delta[static_cast<std::size_t>(i) * A + x] = id[static_cast<std::size_t>(a.next(s, static_cast<Symbol>(x)))];
  }
  auto block = refine_partition(n, A, delta, label);
  int nblocks = *std::max_element(block.begin(), block.end()) + 1;
  std::vector<int> rep(static_cast<std::size_t>(nblocks), -1);
  for (int s = n - 1; s >= 0; --s) rep[static_cast<std::size_t>(block[static_cast<std::size_t>(s)])] = s;
  Dfao out;
  out.tracks = a.tracks;
  std::vector<int> newid(static_cast<std::size_t>(nblocks), -1);
  std::vector<int> queue{block[0]};
  newid[static_cast<std::size_t>(block[0])] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int b = queue[i];
    int s = rep[static_cast<std::size_t>(b)];
    out.output.push_back(a.output[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])]);
    for (int x = 0; x < A; ++x) {
      int tb = block[static_cast<std::size_t>(delta[static_cast<std::size_t>(s) * A + x])];
      if (newid[static_cast<std::size_t>(tb)] < 0) {
        newid[static_cast<std::size_t>(tb)] = static_cast<int>(queue.size());
        queue.push_back(tb);
      }
      out.delta.push_back(newid[static_cast<std::size_t>(tb)]);
    }
  }
  return out;
}

long long Dfao::eval(const Word& w) const {
  int s = initial;
  for (Symbol a : w) s = next(s, a);
  return output[static_cast<std::size_t>(s)];
}

// ----------------------------------------------------------- products

Dfa product(const Dfa& a, const Dfa& b, BoolOp op) {
  if (a.tracks != b.tracks) throw std::invalid_argument("product: track counts differ");
  const int A = a.alphabet_size();
  Dfa out(a.tracks);
  out.names = a.names;
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> pairs;
  auto acc = [&](int x, int y) {
    bool ax = x != kNoState && a.accepting[static_cast<std::size_t>(x)];
    bool by = y != kNoState && b.accepting[static_cast<std::size_t>(y)];
    switch (op) {
      case BoolOp::And: return ax && by;
      case BoolOp::Or: return ax || by;
      case BoolOp::Diff: return ax && !by;
    }
    return false;
  };
  auto intern = [&](int x, int y) {
    auto [it, fresh] = index.emplace(std::make_pair(x, y), out.state_count());
    if (fresh) {
      out.add_state(acc(x, y));
      pairs.push_back({x, y});
    }
    return it->second;
  };
  intern(a.initial, b.initial);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [x, y] = pairs[i];
    for (int s = 0; s < A; ++s) {
      int tx = x == kNoState ? kNoState : a.next(x, static_cast<Symbol>(s));
      int ty = y == kNoState ? kNoState : b.next(y, static_cast<Symbol>(s));
      if (tx == kNoState && (op != BoolOp::Or || ty == kNoState)) continue;
      if (op == BoolOp::And && ty == kNoState) continue;
      out.set(static_cast<int>(i), static_cast<Symbol>(s), intern(tx, ty));
    }
  }
  return minimize(out);
}

Dfa complement(const Dfa& a) {
  Dfa u = Dfa::universal(a.tracks);
  u.names = a.names;
  return product(u, a, BoolOp::Diff);
}

// -------------------------------------------------- projection & padding

Dfa project(const Dfa& a, const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("project: no tracks kept");
  const int k = a.tracks;
  for (int j : keep)
    if (j < 0 || j >= k) throw std::invalid_argument("project: track index out of range");
  const int A = a.alphabet_size();
  const int kk = static_cast<int>(keep.size());
  std::vector<Symbol> restrict_to(static_cast<std::size_t>(A));
  for (int s = 0; s < A; ++s) {
    Symbol r = 0;
    for (int j : keep) r = (r << 1) | static_cast<Symbol>(symbol_digit(static_cast<Symbol>(s), j, k));
    restrict_to[static_cast<std::size_t>(s)] = r;
  }

  // States reachable from the start through symbols that are zero on all
  // kept tracks.
  std::vector<char> in_z(static_cast<std::size_t>(a.state_count()), 0);
  std::vector<int> zset{a.initial};
  in_z[static_cast<std::size_t>(a.initial)] = 1;
  for (std::size_t i = 0; i < zset.size(); ++i)
    for (int s = 0; s < A; ++s) {
      if (restrict_to[static_cast<std::size_t>(s)] != 0) continue;
      int t = a.next(zset[i], static_cast<Symbol>(s));
      if (t != kNoState && !in_z[static_cast<std::size_t>(t)]) {
        in_z[static_cast<std::size_t>(t)] = 1;
        zset.push_back(t);
      }
    }

  Nfa n(kk);
  for (int s = 0; s < a.state_count(); ++s) n.add_state(a.accepting[static_cast<std::size_t>(s)]);
  for (int s = 0; s < a.state_count(); ++s)
    for (int x = 0; x < A; ++x) {
      int t = a.next(s, static_cast<Symbol>(x));
      if (t != kNoState) n.add_edge(s, restrict_to[static_cast<std::size_t>(x)], t);
    }
  // Fresh start looping on the zero tuple, then entering the closure.
  int start = n.add_state(false);
  n.add_edge(start, 0, start);
  for (int z : zset) n.add_eps(start, z);
  n.initial = {start};
  Dfa out = minimize(determinize(n));
  if (!a.names.empty()) {
    out.names.clear();
    for (int j : keep) out.names.push_back(a.names[static_cast<std::size_t>(j)]);
  }
  return out;
}

Dfa fix_leading_zeros(const Dfa& a) {
  std::vector<int> all(static_cast<std::size_t>(a.tracks));
  std::iota(all.begin(), all.end(), 0);
  return project(a, all);
}

Dfa remap_tracks(const Dfa& a, int new_tracks, const std::vector<int>& where) {
  if (static_cast<int>(where.size()) != a.tracks) throw std::invalid_argument("remap_tracks: mapping size mismatch");
  Dfa out(new_tracks);
  const int A = out.alphabet_size();
  std::vector<Symbol> old_symbol(static_cast<std::size_t>(A));
  for (int s = 0; s < A; ++s) {
    Symbol r = 0;
    for (int j = 0; j < a.tracks; ++j)
      r = (r << 1) | static_cast<Symbol>(symbol_digit(static_cast<Symbol>(s), where[static_cast<std::size_t>(j)], new_tracks));
    old_symbol[static_cast<std::size_t>(s)] = r;
  }
  for (int q = 0; q < a.state_count(); ++q) {
    out.add_state(a.accepting[static_cast<std::size_t>(q)]);
    for (int s = 0; s < A; ++s) out.set(q, static_cast<Symbol>(s), a.next(q, old_symbol[static_cast<std::size_t>(s)]));
  }
  out.initial = a.initial;
  return out;
}

// -------------------------------------------------------------- queries

bool accepts(const Dfa& a, const Word& w) {
  int s = a.run(w);
  return s != kNoState && a.accepting[static_cast<std::size_t>(s)];
}

bool accepts(const Dfa& a, const std::vector<std::string>& tracks) {
  if (static_cast<int>(tracks.size()) != a.tracks) throw std::invalid_argument("accepts: track count mismatch");
  return accepts(a, make_word(tracks));
}

bool equivalent(const Dfa& a, const Dfa& b) {
  if (a.tracks != b.tracks) throw std::invalid_argument("equivalent: track counts differ");
  const int A = a.alphabet_size();
  std::map<std::pair<int, int>, char> seen;
  std::deque<std::pair<int, int>> queue{{a.initial, b.initial}};
  seen[{a.initial, b.initial}] = 1;
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    bool ax = x != kNoState && a.accepting[static_cast<std::size_t>(x)];
    bool by = y != kNoState && b.accepting[static_cast<std::size_t>(y)];
    if (ax != by) return false;
    if (x == kNoState && y == kNoState) continue;
    for (int s = 0; s < A; ++s) {
      int tx = x == kNoState ? kNoState : a.next(x, static_cast<Symbol>(s));
      int ty = y == kNoState ? kNoState : b.next(y, static_cast<Symbol>(s));
      if (seen.emplace(std::make_pair(tx, ty), 1).second) queue.push_back({tx, ty});
    }
  }
  return true;
}

bool is_empty(const Dfa& a) {
  const int A = a.alphabet_size();
  std::vector<char> seen(static_cast<std::size_t>(a.state_count()), 0);
  std::vector<int> stack{a.initial};
  seen[static_cast<std::size_t>(a.initial)] = 1;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    if (a.accepting[static_cast<std::size_t>(s)]) return false;
    for (int x = 0; x < A; ++x) {
      int t = a.next(s, static_cast<Symbol>(x));
      if (t != kNoState && !seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = 1;
        stack.push_back(t);
      }
    }
  }
  return true;
}

std::vector<Word> enumerate_accepted(const Dfa& a, int max_len) {
  std::vector<Word> out;
  const int A = a.alphabet_size();
  std::vector<std::pair<int, Word>> layer{{a.initial, {}}};
  for (int len = 0; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::pair<int, Word>> nxt;
    for (auto& [s, w] : layer) {
      if (a.accepting[static_cast<std::size_t>(s)]) out.push_back(w);
      if (len == max_len) continue;
      for (int x = 0; x < A; ++x) {
        int t = a.next(s, static_cast<Symbol>(x));
        if (t == kNoState) continue;
        Word v = w;
        v.push_back(static_cast<Symbol>(x));
        nxt.push_back({t, std::move(v)});
      }
    }
    layer = std::move(nxt);
  }
  return out;
}

// ------------------------------------------------------------------ DOT

namespace {

std::string symbol_label(Symbol a, int tracks) {
  std::string s = "[";
  for (int j = 0; j < tracks; ++j) {
    if (j) s += ",";
    s += char('0' + symbol_digit(a, j, tracks));
  }
  return s + "]";
}

template <class Aut, class StateAttr>
std::string dot_common(const Aut& a, const std::string& name, StateAttr attr, bool partial) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=LR;\n  \"init\" [shape=point];\n";
  for (int s = 0; s < a.state_count(); ++s) os << "  \"" << s << "\" [" << attr(s) << "];\n";
  os << "  \"init\" -> \"" << a.initial << "\";\n";
  const int A = a.alphabet_size();
  for (int s = 0; s < a.state_count(); ++s) {
    std::map<int, std::string> labels;
    for (int x = 0; x < A; ++x) {
      int t = a.next(s, static_cast<Symbol>(x));
      if (partial && t == kNoState) continue;
      auto& l = labels[t];
      if (!l.empty()) l += ", ";
      l += symbol_label(static_cast<Symbol>(x), a.tracks);
    }
    for (auto& [t, l] : labels) os << "  \"" << s << "\" -> \"" << t << "\" [label=\"" << l << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string to_dot(const Dfa& a, const std::string& name) {
  return dot_common(
      a, name,
      [&](int s) {
        return std::string("shape=") + (a.accepting[static_cast<std::size_t>(s)] ? "doublecircle" : "circle") +
               ", label=\"" + std::to_string(s) + "\"";
      },
      true);
}

std::string to_dot(const Dfao& a, const std::string& name) {
  return dot_common(
      a, name,
      [&](int s) {
        return "shape=circle, label=\"" + std::to_string(s) + "/" + std::to_string(a.output[static_cast<std::size_t>(s)]) +
               "\"";
      },
      false);
}

}  // namespace phirep
